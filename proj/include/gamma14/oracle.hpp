#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma14/forms.hpp"

namespace gamma14 {

// Finite search region enumerated lexicographically (equivalent to sup-norm
// shells for min-taking; deterministic either way).
struct SearchBox {
    std::vector<long> lo, hi;

    static SearchBox cube(int n, long radius) {
        SearchBox b;
        b.lo.assign(n, -radius);
        b.hi.assign(n, radius);
        return b;
    }
};

struct BruteResult {
    std::optional<Rat> min_positive;
    std::vector<IntVec> argmins;  // all attaining vectors, lexicographic order
    unsigned long long points_scanned = 0;
};

// Exact minimum of the positive values of Q(x + c) over the box.
BruteResult brute_search(const ShiftedInstance& inst, const SearchBox& box);

// ---- range quantities f_n, g_n, p_n, q_n ----------------------------------

enum class RangeKind { F, G, P, Q };
// f_n = n|c1| + n^2 a2v, g_n = -n|c1| + n^2 a2v, p_n = n c1 + n^2 a2v,
// q_n = -n c1 + n^2 a2v  (a2v is whichever a2-variant the context uses)
Rat range_quantity(RangeKind kind, int n, const Rat& c1, const Rat& a2v);

// ---- critical forms --------------------------------------------------------

enum class CriticalForm { Q1, Q2, Q3, Q4, Q5, Q6 };

ShiftedInstance critical_instance(CriticalForm id);  // built-in form + equality shift
std::string critical_name(CriticalForm id);

// One residue sweep: on classes x mod R restricted by `allowed` (empty list
// means every residue), the integer polynomial P(x) = scale * Q(x + c) is
// congruent to `residue` modulo `mod`.  Verified by (a) integrality of P,
// (b) 2 R^2 scale G_ij = 0 (mod `mod`) so P mod `mod` is R-periodic, and
// (c) exhausting the R^n representatives together with their +R*e_i shifts.
struct ResidueSweep {
    long R = 2;
    Int scale, mod, residue;
    std::vector<std::vector<int>> allowed;  // per coordinate; empty = all classes

    // smallest positive value the sweep permits for Q(x+c) on its classes
    Rat value_lower_bound() const {
        return residue == 0 ? Rat(mod) / Rat(scale) : Rat(residue) / Rat(scale);
    }
};

struct EqualityCertificate {
    CriticalForm id;
    ShiftedInstance instance;
    Rat d;                      // (8|D|)^(1/5), rational for all six forms
    std::vector<ResidueSweep> sweeps;
    bool sweeps_pass = false;
    bool classes_covered = false;
    bool lattice_bound_reaches_d = false;
    std::optional<Witness> witness;  // value exactly d
    unsigned long long classes_checked = 0;

    bool ok() const {
        return sweeps_pass && classes_covered && lattice_bound_reaches_d && witness &&
               witness->value == d;
    }
};

// Residue proof plus a brute-force witness with value exactly d.
EqualityCertificate certify_critical(CriticalForm id, long witness_box = 6);

// Runs one sweep; returns false (with a diagnostic) if any class breaks it.
bool run_residue_sweep(const ShiftedInstance& inst, const ResidueSweep& sweep,
                       std::string* diagnostic = nullptr,
                       unsigned long long* classes_checked = nullptr);

}  // namespace gamma14
