#include "gamma14/covers.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gamma14/parallel.hpp"

namespace gamma14 {

namespace {

// margin enclosure of the scenario condition over an interval:
// condition holds at x iff margin(x) > 0 (strict) / >= 0 (non-strict)
Enclosure margin_enclosure(const CoverEntry& e, const Scenario& sc, const Enclosure& x,
                           const Rat& root_width) {
    Enclosure lhs = abs_enc(Enclosure(e.h) - Rat(e.k) * Rat(e.k) * x);
    Enclosure b = enclosure_eval(sc.bound, x, root_width);
    if (sc.condition == Scenario::Condition::MacbeathFirst) {
        return b - (lhs + Rat(1, 2));
    }
    Enclosure b3 = b * b * b;  // b >= 0 for all catalogued bounds
    return Rat(1, 8) * b3 - lhs;
}

// exact sign of the margin at a rational point: -1, 0, +1
int margin_sign_at(const CoverEntry& e, const Scenario& sc, const Rat& x, Rat* out_abs_hi) {
    Rat w(1, 1L << 20);
    for (int iter = 0; iter < 40; ++iter, w /= 64) {
        Enclosure m = margin_enclosure(e, sc, Enclosure(x), w);
        if (out_abs_hi) *out_abs_hi = std::max(abs_rat(m.lo), abs_rat(m.hi));
        if (m.lo > 0) return 1;
        if (m.hi < 0) return -1;
        if (m.is_point()) return m.lo == 0 ? 0 : (m.lo > 0 ? 1 : -1);
    }
    throw std::runtime_error("margin_sign_at: could not separate margin from zero");
}

bool holds_at(const CoverEntry& e, const Scenario& sc, const Rat& x) {
    int s = margin_sign_at(e, sc, x, nullptr);
    return sc.strict ? s > 0 : s >= 0;
}

struct CertifyState {
    const CoverEntry* e;
    const Scenario* sc;
    int max_depth;
    int depth_used = 0;
    bool undecided = false;
    Rat gap;
    std::optional<Rat> counterexample;
    Rat failure_margin;
};

void certify_rec(CertifyState& st, const Rat& lo, const Rat& hi, int depth) {
    if (st.counterexample) return;
    st.depth_used = std::max(st.depth_used, depth);
    Rat width = hi - lo;
    Rat rw = width / 16 + Rat(1, Int(1) << 72);
    Enclosure m = margin_enclosure(*st.e, *st.sc, Enclosure(lo, hi), rw);
    if (st.sc->strict ? m.lo > 0 : m.lo >= 0) return;  // certified on this piece
    // check the endpoints and midpoint exactly before splitting
    Rat mid = (lo + hi) / 2;
    for (const Rat& pt : {lo, mid, hi}) {
        Rat abs_hi;
        int s = margin_sign_at(*st.e, *st.sc, pt, &abs_hi);
        bool ok = st.sc->strict ? s > 0 : s >= 0;
        if (!ok) {
            st.counterexample = pt;
            st.failure_margin = abs_hi;  // |margin| at the violating point
            return;
        }
    }
    if (depth >= st.max_depth) {
        st.undecided = true;
        if (st.gap < m.width()) st.gap = m.width();
        return;
    }
    certify_rec(st, lo, mid, depth + 1);
    certify_rec(st, mid, hi, depth + 1);
}

}  // namespace

EntryReport verify_entry(const CoverEntry& e, const Rat& upto, const Scenario& sc,
                         int max_depth) {
    if (e.lambda >= upto) throw std::invalid_argument("verify_entry: empty interval");
    EntryReport rep;
    rep.n = e.n;
    CertifyState st{};
    st.e = &e;
    st.sc = &sc;
    st.max_depth = max_depth;
    certify_rec(st, e.lambda, upto, 0);
    rep.depth_used = st.depth_used;
    if (st.counterexample) {
        rep.status = EntryStatus::Counterexample;
        rep.witness_point = *st.counterexample;
        rep.failure_margin = st.failure_margin;
        rep.boundary = st.failure_margin < Rat(1, 10000);
    } else if (st.undecided) {
        rep.status = EntryStatus::Undecided;
        rep.gap = st.gap;
    } else {
        rep.status = EntryStatus::Certified;
    }

    // remark audit
    Rat center = e.h / Rat(e.k * e.k);
    bool center_inside = (e.lambda <= center && center <= upto);
    if (e.remark == CoverEntry::Remark::NA) {
        rep.remark_checked = true;
        rep.remark_consistent = !center_inside;
        if (!rep.remark_consistent) rep.note = "declared na but h/k^2 lies in the interval";
    } else if (e.remark == CoverEntry::Remark::Alternate) {
        rep.remark_checked = true;
        if (!center_inside) {
            rep.note = "alternate pair given but h/k^2 is outside the interval";
            rep.remark_consistent = true;
        } else {
            // the alternate pair must satisfy the first Macbeath condition
            // strictly at the exceptional point for some admissible d, i.e.
            // at the upper end of the d-range (the gate is monotone in d)
            CoverEntry alt;
            alt.h = e.alt_h;
            alt.k = e.alt_k;
            Scenario sc1 = sc;
            sc1.condition = Scenario::Condition::MacbeathFirst;
            sc1.strict = true;
            sc1.bound = sc.alt_bound ? sc.alt_bound : sc.bound;
            rep.remark_consistent = holds_at(alt, sc1, center);
            if (!rep.remark_consistent) {
                rep.note = "alternate pair fails at h/k^2 for every admissible d";
            } else {
                // also record whether it works across the whole d-range
                Scenario sc2 = sc1;
                sc2.bound = sc.bound;
                if (!holds_at(alt, sc2, center))
                    rep.note = "alternate pair applies only for part of the d-range";
            }
        }
    }
    return rep;
}

TableReport verify_table(const std::vector<CoverEntry>& entries, const Scenario& sc,
                         int max_depth, int jobs) {
    if (entries.empty()) throw std::invalid_argument("verify_table: empty table");
    TableReport rep;
    rep.scenario_id = sc.id;
    rep.total = entries.size();
    for (size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i + 1].lambda >= entries[i].lambda)
            throw std::invalid_argument("verify_table: non-monotone lambda chain at row " +
                                        std::to_string(entries[i + 1].n));
    if (entries.front().lambda >= sc.hi || entries.back().lambda < sc.lo)
        rep.chain_contiguous = false;

    std::vector<EntryReport> reports(entries.size());
    parallel_for(entries.size(), jobs, [&](size_t i) {
        Rat upto = i == 0 ? sc.hi : entries[i - 1].lambda;
        reports[i] = verify_entry(entries[i], upto, sc, max_depth);
    });
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& r = reports[i];
        if (entries[i].remark == CoverEntry::Remark::TBD) rep.tbd_rows.push_back(entries[i].n);
        switch (r.status) {
            case EntryStatus::Certified: ++rep.certified; break;
            case EntryStatus::Undecided:
                ++rep.undecided;
                rep.entries.push_back(r);
                break;
            case EntryStatus::Counterexample:
                if (r.boundary)
                    ++rep.boundary;
                else
                    ++rep.counterexamples;
                rep.entries.push_back(r);
                break;
        }
        if (r.remark_checked && !r.remark_consistent) rep.remark_mismatches.push_back(entries[i].n);
    }
    return rep;
}

namespace {

Rat round_up_to(const Rat& x, long denominator_cap) {
    Rat r(ceil_rat(x * denominator_cap), denominator_cap);
    r.canonicalize();
    return r;
}
Rat round_down_to(const Rat& x, long denominator_cap) {
    Rat r(floor_rat(x * denominator_cap), denominator_cap);
    r.canonicalize();
    return r;
}

}  // namespace

std::vector<CoverEntry> generate_cover(const Scenario& sc, long k_max, long denominator_cap) {
    std::vector<CoverEntry> out;
    Rat top = sc.hi;
    bool first_lemma = sc.condition == Scenario::Condition::MacbeathFirst;
    Rat h_step = first_lemma ? Rat(1, 2) : Rat(1);
    const Rat rw(1, denominator_cap);

    long n = 1;
    while (top > sc.lo) {
        Enclosure b_top = enclosure_eval(sc.bound, Enclosure(top), rw);
        Rat w_top = first_lemma ? Rat(b_top.lo - Rat(1, 2)) : Rat(b_top.lo * b_top.lo * b_top.lo / 8);

        struct Candidate {
            Rat reach, h;
            long k;
        };
        std::optional<Candidate> best;
        for (long k = 1; k <= k_max; ++k) {
            Rat k2(k * k);
            Rat center = top * k2;
            // smallest admissible h > center - w_top on the h grid
            Rat h = Rat(ceil_rat((center - w_top) / h_step), 1) * h_step;
            while (h <= center - w_top) h += h_step;
            if (h >= center + w_top) continue;  // no admissible h at the top
            // predicted downward reach: fixed-point of the crossing equation
            Rat t = top;
            for (int it = 0; it < 12; ++it) {
                Enclosure b = enclosure_eval(sc.bound, Enclosure(t), rw);
                Rat wt = first_lemma ? Rat(b.lo - Rat(1, 2)) : Rat(b.lo * b.lo * b.lo / 8);
                if (wt <= 0) break;
                Rat next = round_down_to((h - wt) / k2, denominator_cap);
                if (next >= t) break;
                t = next < sc.lo ? round_down_to(sc.lo, denominator_cap) : next;
                if (t <= sc.lo) break;
            }
            if (!best || t < best->reach ||
                (t == best->reach && (k < best->k))) {
                best = Candidate{t, h, k};
            }
        }
        if (!best || best->reach >= top) throw CoverageStuck(top);

        CoverEntry e;
        e.n = n;
        e.h = best->h;
        e.k = best->k;
        Rat lam = round_up_to(best->reach, denominator_cap);
        if (lam <= sc.lo) lam = sc.lo;
        // verify; if the predicted reach was too optimistic, back off geometrically
        bool ok = false;
        for (int attempt = 0; attempt < 24 && !ok; ++attempt) {
            if (lam >= top) break;
            e.lambda = lam;
            EntryReport r = verify_entry(e, top, sc, 36);
            ok = r.status == EntryStatus::Certified;
            if (!ok) lam = round_up_to(lam + (top - lam) / 4, denominator_cap);
        }
        if (!ok) throw CoverageStuck(top);

        // remark: exceptional point inside the covered range?
        Rat center = e.h / Rat(e.k * e.k);
        if (center < e.lambda || center > top) {
            e.remark = CoverEntry::Remark::NA;
        } else {
            e.remark = CoverEntry::Remark::TBD;
            // try to discharge it with an alternate pair (strict first condition)
            for (long k2 = 1; k2 <= k_max && e.remark == CoverEntry::Remark::TBD; ++k2) {
                if (k2 == e.k) continue;
                Rat cc = center * Rat(k2 * k2);
                for (Rat h2 = Rat(floor_rat(cc / h_step)) * h_step - h_step;
                     h2 <= cc + 2 * h_step; h2 += h_step) {
                    if (h2 == e.h && k2 == e.k) continue;
                    CoverEntry alt;
                    alt.h = h2;
                    alt.k = k2;
                    Scenario sc1 = sc;
                    sc1.condition = Scenario::Condition::MacbeathFirst;
                    sc1.strict = true;
                    if (h2 / Rat(k2 * k2) != center && holds_at(alt, sc1, center)) {
                        e.remark = CoverEntry::Remark::Alternate;
                        e.alt_h = h2;
                        e.alt_k = k2;
                        break;
                    }
                }
            }
        }
        out.push_back(e);
        top = e.lambda;
        ++n;
        if (n > 100000) throw CoverageStuck(top);
    }
    return out;
}

std::vector<CoverEntry> load_cover_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_cover_csv: cannot open " + path);
    std::vector<CoverEntry> out;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            header = false;
            if (line.rfind("n,", 0) == 0) continue;  // header row
        }
        std::stringstream ss(line);
        std::string f[5];
        for (int i = 0; i < 5; ++i)
            if (!std::getline(ss, f[i], ',') && i < 4)
                throw std::runtime_error("load_cover_csv: malformed row: " + line);
        CoverEntry e;
        e.n = std::stol(f[0]);
        e.h = parse_rat(f[1]);
        e.k = std::stol(f[2]);
        e.lambda = parse_rat(f[3]);
        std::string rem = f[4];
        if (rem == "na")
            e.remark = CoverEntry::Remark::NA;
        else if (rem == "tbd")
            e.remark = CoverEntry::Remark::TBD;
        else if (rem.rfind("alt:", 0) == 0) {
            e.remark = CoverEntry::Remark::Alternate;
            auto p1 = rem.find(':'), p2 = rem.rfind(':');
            if (p2 == p1) throw std::runtime_error("load_cover_csv: bad alt remark: " + rem);
            e.alt_h = parse_rat(rem.substr(p1 + 1, p2 - p1 - 1));
            e.alt_k = std::stol(rem.substr(p2 + 1));
        } else
            e.remark = CoverEntry::Remark::None;
        out.push_back(e);
    }
    if (out.empty()) throw std::runtime_error("load_cover_csv: empty table " + path);
    return out;
}

void write_cover_csv(const std::string& path, const std::vector<CoverEntry>& entries) {
    std::ofstream outp(path);
    if (!outp) throw std::runtime_error("write_cover_csv: cannot open " + path);
    outp << "n,h,k,lambda,remark\n";
    for (const auto& e : entries) {
        outp << e.n << "," << rat_str(e.h) << "," << e.k << "," << rat_str(e.lambda) << ",";
        switch (e.remark) {
            case CoverEntry::Remark::NA: outp << "na"; break;
            case CoverEntry::Remark::TBD: outp << "tbd"; break;
            case CoverEntry::Remark::Alternate:
                outp << "alt:" << rat_str(e.alt_h) << ":" << e.alt_k;
                break;
            case CoverEntry::Remark::None: outp << "-"; break;
        }
        outp << "\n";
    }
}

std::vector<Scenario> load_scenarios(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_scenarios: cannot open " + path);
    nlohmann::json j;
    in >> j;
    std::vector<Scenario> out;
    for (auto& [id, sj] : j.at("scenarios").items()) {
        Scenario sc;
        sc.id = id;
        sc.variable = sj.at("variable").get<std::string>();
        sc.lo = parse_rat(sj.at("interval")[0].get<std::string>());
        sc.hi = parse_rat(sj.at("interval")[1].get<std::string>());
        sc.bound = parse_expr(sj.at("bound").get<std::string>());
        if (sj.contains("alt_bound"))
            sc.alt_bound = parse_expr(sj.at("alt_bound").get<std::string>());
        std::string cond = sj.at("condition").get<std::string>();
        if (cond == "macbeath1")
            sc.condition = Scenario::Condition::MacbeathFirst;
        else if (cond == "macbeath2")
            sc.condition = Scenario::Condition::MacbeathSecond;
        else
            throw std::runtime_error("load_scenarios: unknown condition " + cond);
        sc.strict = sj.at("strict").get<bool>();
        out.push_back(std::move(sc));
    }
    return out;
}

Scenario find_scenario(const std::vector<Scenario>& all, const std::string& id) {
    for (const auto& sc : all)
        if (sc.id == id) return sc;
    throw std::runtime_error("unknown scenario: " + id);
}

}  // namespace gamma14
