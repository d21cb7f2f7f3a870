// Command-line surface: reduce / solve / verify-cover / gen-cover /
// verify-critical / verify-case-tables / oracle.
// Exit codes: 0 ok, 1 usage, 2 equality-only, 3 no witness, 4 verification falsified.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "gamma14/case_tables.hpp"
#include "gamma14/cascade.hpp"
#include "gamma14/covers.hpp"
#include "gamma14/json_io.hpp"
#include "gamma14/oracle.hpp"
#include "gamma14/parallel.hpp"

using namespace gamma14;
using nlohmann::json;

namespace {

std::uint64_t env_seed(std::uint64_t fallback = 20240817ULL) {
    if (const char* s = std::getenv("GAMMA14_SEED")) return std::strtoull(s, nullptr, 10);
    return fallback;
}

Rat parse_gamma(const std::string& s) {
    if (s == "8.486") return rat(8486, 1000);
    return parse_rat(s);
}

int cmd_reduce(const std::string& form_file, const std::string& out_file) {
    ShiftedInstance inst = load_instance(form_file);
    IntVec iso = find_isotropic(inst.form);
    BirchForm bf = birch_reduce(inst.form, iso);
    CaseParams cp8 = case_params(bf, Rat(8));
    IntMat uinv = mat_inverse_unimodular(bf.U);
    RatVec uc = mat_vec(uinv, inst.shift);
    RatVec s(5);
    for (int i = 0; i < 5; ++i) s[i] = centered_mod1(uc[i]);
    CaseLabel lbl = classify(cp8, bf, s);
    json out{{"input", instance_to_json(inst)},
             {"isotropic", json::array()},
             {"birch", birch_to_json(bf)},
             {"params", case_params_to_json(inst.gamma == Rat(8) ? cp8
                                                                 : case_params(bf, inst.gamma))},
             {"branch", branch_name(lbl.branch)},
             {"gamma_recommended", rat_str(lbl.gamma_used)}};
    for (const auto& e : iso) out["isotropic"].push_back(e.get_str());
    json shift = json::array();
    for (const auto& e : s) shift.push_back(rat_str(e));
    out["birch_shift"] = shift;
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!out_file.empty()) {
        f.open(out_file);
        os = &f;
    }
    *os << out.dump(2) << "\n";
    return 0;
}

int cmd_solve(const std::string& form_file, const std::string& gamma_flag,
              const std::string& trace_file) {
    ShiftedInstance inst = load_instance(form_file);
    if (!gamma_flag.empty()) {
        Rat g = gamma_flag == "auto" ? recommended_gamma(inst) : parse_gamma(gamma_flag);
        inst = ShiftedInstance(inst.form, inst.shift, g);
    }
    SolveResult res = solve_instance(inst);
    json out{{"gamma", rat_str(inst.gamma)},
             {"branch", branch_name(res.trace.label.branch)}};
    if (res.witness)
        out["witness"] = witness_to_json(res.witness->x, res.witness->value,
                                         res.witness->equality);
    json steps = json::array();
    for (const auto& st : res.trace.steps)
        steps.push_back(json{{"stage", st.stage}, {"route", st.route}, {"detail", st.detail}});
    out["trace"] = steps;
    std::cout << out.dump(2) << "\n";
    if (!trace_file.empty()) {
        std::ofstream f(trace_file);
        f << out.dump(2) << "\n";
    }
    switch (res.outcome) {
        case SolveOutcome::Strict: return 0;
        case SolveOutcome::Equality: return 2;
        case SolveOutcome::NoWitnessInBox: return 3;
    }
    return 3;
}

int cmd_verify_cover(const std::string& table_file, const std::string& scenario_id,
                     const std::string& scen_file, int jobs, int max_depth) {
    auto scenarios = load_scenarios(scen_file);
    Scenario sc = find_scenario(scenarios, scenario_id);
    auto entries = load_cover_csv(table_file);
    TableReport rep = verify_table(entries, sc, max_depth, jobs);
    json out{{"scenario", rep.scenario_id},
             {"rows", rep.total},
             {"certified", rep.certified},
             {"boundary", rep.boundary},
             {"counterexamples", rep.counterexamples},
             {"undecided", rep.undecided},
             {"chain_contiguous", rep.chain_contiguous},
             {"tbd_rows", rep.tbd_rows},
             {"remark_mismatches", rep.remark_mismatches}};
    json details = json::array();
    for (const auto& e : rep.entries) {
        json d{{"n", e.n}};
        if (e.status == EntryStatus::Counterexample) {
            d["status"] = e.boundary ? "boundary" : "counterexample";
            d["at"] = rat_str(e.witness_point);
            d["failure_margin"] = rat_decimal(e.failure_margin, 6);
        } else {
            d["status"] = "undecided";
            d["gap"] = rat_decimal(e.gap, 6);
        }
        details.push_back(d);
    }
    out["flagged"] = details;
    std::cout << out.dump(2) << "\n";
    return rep.counterexamples == 0 ? 0 : 4;
}

int cmd_gen_cover(const std::string& scenario_id, const std::string& scen_file, long k_max,
                  long denom_cap, const std::string& out_file) {
    auto scenarios = load_scenarios(scen_file);
    Scenario sc = find_scenario(scenarios, scenario_id);
    auto cover = generate_cover(sc, k_max, denom_cap);
    if (!out_file.empty())
        write_cover_csv(out_file, cover);
    json out{{"scenario", scenario_id}, {"entries", cover.size()}};
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_verify_critical() {
    bool all_ok = true;
    json out = json::array();
    for (auto id : {CriticalForm::Q1, CriticalForm::Q2, CriticalForm::Q3, CriticalForm::Q4,
                    CriticalForm::Q5, CriticalForm::Q6}) {
        EqualityCertificate cert = certify_critical(id);
        all_ok = all_ok && cert.ok();
        json c{{"form", critical_name(id)},
               {"d", rat_str(cert.d)},
               {"residue_sweeps_pass", cert.sweeps_pass},
               {"classes_covered", cert.classes_covered},
               {"lattice_bound_reaches_d", cert.lattice_bound_reaches_d},
               {"classes_checked", cert.classes_checked},
               {"certified", cert.ok()}};
        if (cert.witness)
            c["witness"] = witness_to_json(cert.witness->x, cert.witness->value, true);
        out.push_back(c);
        std::cout << critical_name(id) << ": " << (cert.ok() ? "certified" : "FAILED")
                  << " (d = " << rat_str(cert.d) << ")\n";
    }
    return all_ok ? 0 : 4;
}

int cmd_verify_case_tables(const std::string& tables_file, long trials, int jobs) {
    auto tables = load_case_tables(tables_file);
    std::vector<TableRunReport> reports(tables.size());
    std::uint64_t seed = env_seed();
    parallel_for(tables.size(), jobs, [&](size_t i) {
        reports[i] = verify_case_table(tables[i], trials, seed);
    });
    bool falsified = false;
    for (const auto& rep : reports) {
        std::cout << rep.table_id << ": trials " << rep.trials << ", checks " << rep.checks
                  << ", gaps " << rep.gap_samples << ", overlaps " << rep.overlap_samples;
        if (!rep.unrealizable_rows.empty()) {
            std::cout << ", unrealizable rows:";
            for (auto i : rep.unrealizable_rows) std::cout << " " << i;
        }
        if (!rep.falsified.empty()) {
            falsified = true;
            std::cout << ", FALSIFIED " << rep.falsified.size();
            for (const auto& f : rep.falsified)
                std::cout << "\n    row " << f.row_index << ": " << f.reason << " at "
                          << f.params;
        }
        std::cout << "\n";
    }
    return falsified ? 4 : 0;
}

int cmd_oracle(const std::string& form_file, long box) {
    ShiftedInstance inst = load_instance(form_file);
    BruteResult br = brute_search(inst, SearchBox::cube(inst.form.n, box));
    json out{{"box", box}, {"points_scanned", br.points_scanned}};
    if (br.min_positive) {
        out["min_positive"] = rat_str(*br.min_positive);
        out["min_positive_decimal"] = rat_decimal(*br.min_positive, 10);
        json arg = json::array();
        for (const auto& v : br.argmins) {
            json w = json::array();
            for (const auto& e : v) w.push_back(e.get_str());
            arg.push_back(w);
        }
        out["argmins"] = arg;
        Ordering o = cmp_to_bound(*br.min_positive, inst);
        out["within_bound"] = o != Ordering::Greater;
        out["equality"] = o == Ordering::Equal;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and certificate verifier for shifted type-(1,4) quadratic forms"};
    app.require_subcommand(1);
    std::string data_dir = "data";
    app.add_option("--data", data_dir, "data directory (tables, scenarios)");

    auto* reduce = app.add_subcommand("reduce", "normal-shape reduction and constant chain");
    std::string reduce_form, reduce_out;
    reduce->add_option("form", reduce_form, "form JSON file")->required();
    reduce->add_option("-o,--out", reduce_out, "write the report to a file");

    auto* solve = app.add_subcommand("solve", "find a verified witness");
    std::string solve_form, solve_gamma = "", solve_trace;
    solve->add_option("form", solve_form, "form JSON file")->required();
    solve->add_option("--gamma", solve_gamma, "8 | 8.486 | 32/3 | auto (default: from file)");
    solve->add_option("--trace", solve_trace, "write the trace JSON here");

    auto* vc = app.add_subcommand("verify-cover", "certify a Macbeath cover table");
    std::string vc_table, vc_scenario;
    int vc_jobs = 1, vc_depth = 40;
    vc->add_option("--table", vc_table, "cover CSV")->required();
    vc->add_option("--scenario", vc_scenario, "scenario id")->required();
    vc->add_option("--jobs", vc_jobs, "parallel rows");
    vc->add_option("--max-depth", vc_depth, "subdivision depth limit");

    auto* gc = app.add_subcommand("gen-cover", "generate a fresh cover for a scenario");
    std::string gc_scenario, gc_out;
    long gc_kmax = 400, gc_cap = 100000000L;
    gc->add_option("--scenario", gc_scenario)->required();
    gc->add_option("--k-max", gc_kmax, "largest k to try");
    gc->add_option("--denominator-cap", gc_cap, "lambda rounding denominator");
    gc->add_option("-o,--out", gc_out, "write the cover CSV here");

    auto* vcrit = app.add_subcommand("verify-critical", "equality certificates for Q1..Q6");

    auto* vct = app.add_subcommand("verify-case-tables", "sample-check the solution tables");
    long vct_trials = 10000;
    int vct_jobs = 1;
    std::string vct_file;
    vct->add_option("--tables", vct_file, "case tables JSON (default: <data>/case_tables.json)");
    vct->add_option("--trials", vct_trials, "trials per table");
    vct->add_option("--jobs", vct_jobs, "parallel tables");

    auto* orc = app.add_subcommand("oracle", "exhaustive shifted minimum over a box");
    std::string orc_form;
    long orc_box = 10;
    orc->add_option("form", orc_form, "form JSON file")->required();
    orc->add_option("--box", orc_box, "sup-norm radius");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) return cmd_reduce(reduce_form, reduce_out);
        if (*solve) return cmd_solve(solve_form, solve_gamma, solve_trace);
        if (*vc) return cmd_verify_cover(vc_table, vc_scenario, data_dir + "/scenarios.json",
                                         vc_jobs, vc_depth);
        if (*gc) return cmd_gen_cover(gc_scenario, data_dir + "/scenarios.json", gc_kmax,
                                      gc_cap, gc_out);
        if (*vcrit) return cmd_verify_critical();
        if (*vct)
            return cmd_verify_case_tables(
                vct_file.empty() ? data_dir + "/case_tables.json" : vct_file, vct_trials,
                vct_jobs);
        if (*orc) return cmd_oracle(orc_form, orc_box);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
