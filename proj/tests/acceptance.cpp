// Acceptance suite: one pass/fail line per criterion, every tolerance pinned
// in code.  Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <vector>

#include "gamma14/case_tables.hpp"
#include "gamma14/cascade.hpp"
#include "gamma14/covers.hpp"
#include "gamma14/lemmas.hpp"
#include "gamma14/oracle.hpp"
#include "gamma14/parallel.hpp"
#include "support.hpp"

using namespace gamma14;
using gamma14::testsupport::random_zero_instance;

namespace {

const std::string kData = GAMMA14_DATA_DIR;
int g_failures = 0;

std::uint64_t seed() {
    if (const char* s = std::getenv("GAMMA14_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240817ULL;
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void report(int n, const std::string& name, bool pass, const std::string& detail) {
    std::cout << "[" << n << "] " << name << " ... " << (pass ? "PASS" : "FAIL") << " ("
              << detail << ")\n"
              << std::flush;
    if (!pass) ++g_failures;
}

// ---- criterion 1: critical-form equality certificates ----------------------

void criterion1() {
    Timer t;
    int certified = 0;
    std::ostringstream detail;
    for (auto id : {CriticalForm::Q1, CriticalForm::Q2, CriticalForm::Q3, CriticalForm::Q4,
                    CriticalForm::Q5, CriticalForm::Q6}) {
        EqualityCertificate cert = certify_critical(id, 6);
        bool ok = cert.ok();
        if (ok) ++certified;
        detail << critical_name(id) << (ok ? " ok" : " FAILED") << "; ";
    }
    bool pass = certified == 6 && t.secs() < 30.0;
    std::ostringstream d;
    d << certified << "/6 certified in " << std::fixed << std::setprecision(1) << t.secs()
      << " s";
    if (certified == 5) {
        ShiftedInstance q4 = critical_instance(CriticalForm::Q4);
        d << "; the fourth catalogued form is not equality-critical as printed: its value at "
             "(0,2,1,0,0) is "
          << rat_str(q4.value_at({Int(0), Int(2), Int(1), Int(0), Int(0)}))
          << ", strictly inside (0, d) with d = 1, and its mod-8 congruence fails on even x2 "
             "(an x2 = +-1-only case analysis misses this); see the repository notes";
    }
    report(1, "critical-form equality certificates", pass, d.str());
}

// ---- criteria 2 and 3: cover-table certification ---------------------------

struct TableOutcome {
    TableReport rep;
    double secs = 0;
};

TableOutcome run_table(const std::string& csv, const std::string& scenario_id, int jobs) {
    auto scenarios = load_scenarios(kData + "/scenarios.json");
    Scenario sc = find_scenario(scenarios, scenario_id);
    auto entries = load_cover_csv(kData + "/" + csv);
    Timer t;
    TableOutcome out;
    out.rep = verify_table(entries, sc, 40, jobs);
    out.secs = t.secs();
    return out;
}

std::string table_stats(const TableReport& r) {
    std::ostringstream os;
    os << r.certified << " certified, " << r.boundary << " boundary, " << r.counterexamples
       << " counterexamples, " << r.undecided << " undecided of " << r.total << " rows ("
       << r.tbd_rows.size() << " tbd)";
    return os.str();
}

void criterion2() {
    Timer t;
    TableOutcome t1 = run_table("tableI.csv", "mk11_lemma5", 8);
    TableOutcome t2 = run_table("tableII.csv", "mk11_lemma6", 8);
    auto ok = [](const TableOutcome& o, size_t rows, size_t tbd) {
        size_t non_tbd = rows - tbd;
        return o.rep.total == rows && o.rep.tbd_rows.size() == tbd &&
               o.rep.counterexamples == 0 && o.rep.undecided == 0 &&
               o.rep.certified * 100 >= non_tbd * 95 && o.rep.chain_contiguous;
    };
    bool pass = ok(t1, 1775, 114) && ok(t2, 1346, 89) && t.secs() < 300.0;
    std::ostringstream d;
    d << "table I: " << table_stats(t1.rep) << "; table II: " << table_stats(t2.rep) << "; "
      << std::fixed << std::setprecision(1) << t.secs() << " s";
    report(2, "full interval-cover tables (first and second Macbeath conditions)", pass,
           d.str());
}

void criterion3() {
    TableOutcome t53 = run_table("cover_mk23_L4.csv", "mk23_L4", 4);
    TableOutcome t6 = run_table("cover_m3K1_a.csv", "m3K1_a", 1);
    const std::vector<long> expect53{2, 7, 10, 12, 17, 26, 30, 40, 52};
    const std::vector<long> expect6{1, 3, 5};
    bool pass = t53.rep.total == 53 && t53.rep.certified == 53 &&
                t53.rep.tbd_rows == expect53 && t6.rep.total == 6 && t6.rep.certified == 6 &&
                t6.rep.tbd_rows == expect6;
    std::ostringstream d;
    d << "53-row cover: " << table_stats(t53.rep) << "; 6-row cover: " << table_stats(t6.rep)
      << "; tbd lists match the printed remarks: "
      << ((t53.rep.tbd_rows == expect53 && t6.rep.tbd_rows == expect6) ? "yes" : "NO");
    report(3, "smaller cover tables and printed tbd lists", pass, d.str());
}

void criterion4() {
    auto scenarios = load_scenarios(kData + "/scenarios.json");
    Timer t;
    Scenario sc53 = find_scenario(scenarios, "mk23_L4");
    auto cover53 = generate_cover(sc53, 340, 100000000L);
    auto rep53 = verify_table(cover53, sc53, 40, 8);
    Scenario scI = find_scenario(scenarios, "mk11_lemma5");
    auto coverI = generate_cover(scI, 700, 100000000L);
    auto repI = verify_table(coverI, scI, 40, 8);
    bool pass = cover53.size() <= static_cast<size_t>(1.6 * 53) &&
                rep53.certified == rep53.total && rep53.undecided == 0 &&
                coverI.size() <= static_cast<size_t>(1.6 * 1775) &&
                repI.certified == repI.total && repI.undecided == 0;
    std::ostringstream d;
    d << "re-covered [0.1047, 0.121] with " << cover53.size() << " entries (<= 84) and "
      << "[0.195965, 0.44445] with " << coverI.size() << " entries (<= 2840), all self-verified; "
      << std::fixed << std::setprecision(1) << t.secs() << " s";
    report(4, "cover generator closure", pass, d.str());
}

// ---- criteria 5 and 6: solver totality ------------------------------------

void criteria5and6() {
    Rng rng(seed());
    std::vector<double> times;
    int solved = 0;
    int c2_nonint = 0, c2_nonint_strict = 0, c2_equality = 0;
    std::map<std::string, int> routes;
    const int runs = 1000;
    for (int i = 0; i < runs; ++i) {
        ShiftedInstance inst = random_zero_instance(rng, Rat(32, 3));
        Timer t;
        SolveResult r = solve_instance(inst);
        times.push_back(t.secs() * 1000.0);
        if (!r.witness) continue;
        Witness w = Witness::checked(inst, r.witness->x);  // throws on a bad witness
        (void)w;
        if (r.trace.label.branch == CaseLabel::Branch::Unclassified) continue;  // counts as unsolved
        ++solved;
        for (const auto& st : r.trace.steps)
            if (st.route != "squeeze") {
                ++routes[st.stage + "/" + st.route];
                break;
            }
        if (!is_integer(inst.shift[1])) {
            ++c2_nonint;
            ShiftedInstance g8(inst.form, inst.shift, Rat(8));
            SolveResult r8 = solve_instance(g8);
            if (r8.witness && cmp_to_bound(r8.witness->value, g8) == Ordering::Less)
                ++c2_nonint_strict;
            else
                ++c2_equality;
        }
    }
    std::sort(times.begin(), times.end());
    double median = times[times.size() / 2];
    bool pass5 = solved == runs && median < 100.0;
    std::ostringstream d5;
    d5 << solved << "/" << runs << " verified witnesses, median " << std::fixed
       << std::setprecision(2) << median << " ms, p99 " << times[990] << " ms; routes:";
    for (const auto& [k, v] : routes) d5 << " " << k << " x" << v;
    report(5, "solver totality at gamma = 32/3", pass5, d5.str());

    bool pass6 = c2_nonint >= 300 && c2_nonint_strict == c2_nonint;
    std::ostringstream d6;
    d6 << c2_nonint << " instances with non-integral c2, " << c2_nonint_strict
       << " strict at gamma = 8, " << c2_equality << " equality-only";
    report(6, "strictness in the non-integral-c2 regime", pass6, d6.str());
}

// ---- criterion 7: lemma property suites ------------------------------------

void criterion7() {
    Rng rng(seed() ^ 0x5eedULL);
    int squeeze_ok = 0, jackson_ok = 0, macbeath_ok = 0, trivial_ok = 0, lattice_agree = 0;
    const int runs = 1000;

    for (int i = 0; i < runs; ++i) {
        Rat gamma = rng.uniform_rat(Rat(11, 10), Rat(4), 16);
        Int m = ceil_rat(gamma) - 1;
        if (Rat(m) == gamma) m -= 1;
        Rat beta = rng.uniform_rat(Rat(26, 100), gamma + Rat(m * m) / 4, 24);
        SqueezeProblem p{rng.uniform_rat(Rat(-2), Rat(2), 12), beta, gamma,
                         rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 12)};
        auto w = squeeze_solve(p);
        if (w.value == beta - (w.x + p.alpha) * (w.x + p.alpha) && w.value > 0 &&
            w.value <= gamma && is_integer(w.x - p.x0))
            ++squeeze_ok;
    }

    QForm hyp(2, {{Rat(0), Rat(1, 2)}, {Rat(1, 2), Rat(0)}});
    for (int i = 0; i < runs; ++i) {
        Rat alpha = rng.uniform_rat(Rat(-2), Rat(2), 12);
        Rat beta = alpha + rng.uniform_rat(Rat(1), Rat(3), 12);
        RatVec c{rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 10),
                 rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 10)};
        auto w = jackson_solve(hyp, alpha, beta, c, 8);
        Rat v = (Rat(w.x[0]) + c[0]) * (Rat(w.x[1]) + c[1]);
        if (v == w.value && v > alpha && v <= beta) ++jackson_ok;
    }

    int macbeath_total = 0;
    for (int i = 0; macbeath_total < runs; ++i) {
        MacbeathProblem p;
        p.alpha = rng.uniform_rat(Rat(1, 8), Rat(3), 12);
        p.gamma = rng.uniform_rat(Rat(6, 10), Rat(3), 10);
        p.beta = rng.uniform_rat(Rat(-2), Rat(2), 12);
        p.nu = rng.uniform_rat(Rat(-2), Rat(2), 12);
        p.k = rng.uniform(1, 4);
        p.h = Rat(floor_rat(2 * p.alpha * p.k * p.k + Rat(1, 2)), 2);
        p.h.canonicalize();
        p.sign_alpha = rng.uniform(0, 1) ? 1 : -1;
        p.sign_x = rng.uniform(0, 1) ? 1 : -1;
        if (macbeath1_check(p) != MacbeathStatus::StrictOK) continue;
        ++macbeath_total;
        long y_bound = static_cast<long>(
            ceil_rat(4 * Rat(p.k) * (p.gamma + abs_rat(p.nu) + 1)).get_si());
        auto w = macbeath1_solve(p, y_bound);
        Rat v = Rat(p.sign_x) * Rat(w.x) + p.beta * Rat(w.y) +
                Rat(p.sign_alpha) * p.alpha * Rat(w.y) * Rat(w.y) + p.nu;
        if (v == w.value && v > 0 && v <= p.gamma) ++macbeath_ok;
    }

    for (int i = 0; i < runs; ++i) {
        Rat c2 = rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 8);
        Rat delta = is_integer(c2) ? rng.uniform_rat(Rat(1), Rat(3), 8)
                                   : rng.uniform_rat(Rat(1, 2), Rat(3), 8);
        Rat alpha = rng.uniform_rat(Rat(-2), Rat(2), 10);
        Rat nu = rng.uniform_rat(Rat(-2), Rat(2), 10);
        Rat beta = rng.uniform_rat(Rat(-3), Rat(3), 10);
        Rat c1 = rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 10);
        auto w = trivial_solve(alpha, nu, beta, delta, c1, c2);
        Rat v = (w.x1 + alpha * w.x2 + nu) * w.x2 + beta;
        if (v == w.value && v > 0 && v <= delta && is_integer(w.x1 - c1) &&
            is_integer(w.x2 - c2))
            ++trivial_ok;
    }

    // exceptional-pair detection vs brute-force membership of beta - h/k in
    // the lattice <1/k, 2 alpha>, denominators <= 24
    int lattice_total = 0;
    for (int i = 0; lattice_total < runs; ++i) {
        long k = rng.uniform(1, 4);
        Rat h = rat(rng.uniform(-8, 8), 2);
        if (h == 0) continue;
        Rat alpha = abs_rat(h) / Rat(k * k);
        Rat beta = rng.uniform_rat(Rat(-2), Rat(2), 24);
        MacbeathProblem p;
        p.alpha = alpha;
        p.h = abs_rat(h);
        p.k = k;
        p.gamma = Rat(1, 2) + Rat(1, 100);
        p.beta = beta;
        ++lattice_total;
        bool member = false;
        Rat diff = beta - p.h / Rat(k);
        for (long u = -96; u <= 96 && !member; ++u)
            for (long v = -96; v <= 96 && !member; ++v)
                if (diff == Rat(u) / Rat(k) + Rat(2 * v) * alpha) member = true;
        bool flagged = macbeath1_check(p) == MacbeathStatus::ExceptionalPair;
        // the brute window always covers denominators <= 24 here
        if (member == flagged) ++lattice_agree;
    }

    bool pass = squeeze_ok == runs && jackson_ok == runs && macbeath_ok == runs &&
                trivial_ok == runs && lattice_agree == runs;
    std::ostringstream d;
    d << "squeeze " << squeeze_ok << "/1000, window " << jackson_ok << "/1000, macbeath "
      << macbeath_ok << "/1000, product " << trivial_ok << "/1000, lattice agreement "
      << lattice_agree << "/1000";
    report(7, "lemma engine property suites", pass, d.str());
}

// ---- criterion 8: case-table sampling --------------------------------------

void criterion8() {
    auto tables = load_case_tables(kData + "/case_tables.json");
    std::vector<TableRunReport> reps(tables.size());
    Timer t;
    parallel_for(tables.size(), 8, [&](size_t i) {
        reps[i] = verify_case_table(tables[i], 10000, seed());
    });
    long falsified = 0, gaps = 0, overlaps = 0, checks = 0;
    for (const auto& r : reps) {
        falsified += static_cast<long>(r.falsified.size());
        gaps += r.gap_samples;
        overlaps += r.overlap_samples;
        checks += r.checks;
        for (const auto& f : r.falsified)
            std::cout << "    falsified: " << f.table_id << " row " << f.row_index << ": "
                      << f.reason << " at " << f.params << "\n";
    }
    bool pass = falsified == 0;
    std::ostringstream d;
    d << tables.size() << " tables x 10000 trials, " << checks << " row checks, " << falsified
      << " falsified; coverage audit: " << gaps << " gap samples, " << overlaps
      << " overlap samples (warnings only); " << std::fixed << std::setprecision(1) << t.secs()
      << " s";
    report(8, "per-case solution tables under exact sampling", pass, d.str());
}

}  // namespace

int main() {
    std::cout << "acceptance suite (seed " << seed() << ")\n";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criteria5and6();
    criterion7();
    criterion8();
    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures;
}
