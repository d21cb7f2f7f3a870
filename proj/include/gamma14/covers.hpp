#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma14/expr.hpp"

namespace gamma14 {

// One row of a Macbeath cover table: pair (h, k) declared to handle the
// parameter interval [lambda, previous lambda].
struct CoverEntry {
    long n = 0;
    Rat h;        // integer or half-integer
    long k = 1;
    Rat lambda;
    enum class Remark { None, NA, TBD, Alternate } remark = Remark::None;
    Rat alt_h;
    long alt_k = 0;
};

// What must hold over the interval: |h - k^2 x| + 1/2 REL B(x)  (first
// Macbeath condition) or |h - k^2 x| REL B(x)^3 / 8 (second), REL being
// < or <= per `strict`.
struct Scenario {
    std::string id;
    std::string variable;
    Rat lo, hi;
    ExprPtr bound;      // worst-case (smallest) admissible d as a function of x
    ExprPtr alt_bound;  // largest admissible d; used for the alternate-pair audit
    enum class Condition { MacbeathFirst, MacbeathSecond } condition;
    bool strict = true;
};

enum class EntryStatus { Certified, Counterexample, Undecided };

struct EntryReport {
    long n = 0;
    EntryStatus status = EntryStatus::Undecided;
    Rat witness_point;     // counterexample location (exact rational)
    Rat failure_margin;    // how far below the bound the condition fails (>= 0)
    Rat gap;               // undecided: width of the unresolved margin enclosure
    int depth_used = 0;
    bool boundary = false;  // counterexample with margin < 1e-4
    // remark audit
    bool remark_checked = false;
    bool remark_consistent = true;
    std::string note;
};

EntryReport verify_entry(const CoverEntry& e, const Rat& upto, const Scenario& sc,
                         int max_depth = 40);

struct TableReport {
    std::string scenario_id;
    size_t total = 0, certified = 0, boundary = 0, counterexamples = 0, undecided = 0;
    bool chain_contiguous = true;
    std::vector<long> tbd_rows;
    std::vector<EntryReport> entries;  // rows needing attention (boundary/counterexample/undecided)
    std::vector<long> remark_mismatches;
};

TableReport verify_table(const std::vector<CoverEntry>& entries, const Scenario& sc,
                         int max_depth = 40, int jobs = 1);

struct CoverageStuck : std::runtime_error {
    Rat at;
    explicit CoverageStuck(const Rat& t)
        : std::runtime_error("generate_cover: no admissible pair extends coverage at " +
                             rat_str(t)),
          at(t) {}
};

// Greedy cover of [sc.lo, sc.hi] from the top down; every emitted entry is
// re-verified with verify_entry.  Lambda values are rounded up to multiples
// of 1/denominator_cap.
std::vector<CoverEntry> generate_cover(const Scenario& sc, long k_max, long denominator_cap);

// CSV rows: n,h,k,lambda,remark with remark in {na, tbd, alt:h:k, -}.
std::vector<CoverEntry> load_cover_csv(const std::string& path);
void write_cover_csv(const std::string& path, const std::vector<CoverEntry>& entries);

// Scenario catalogue (JSON file shipped under data/).
std::vector<Scenario> load_scenarios(const std::string& path);
Scenario find_scenario(const std::vector<Scenario>& all, const std::string& id);

}  // namespace gamma14
