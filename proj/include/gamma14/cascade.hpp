#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gamma14/lemmas.hpp"
#include "gamma14/oracle.hpp"
#include "gamma14/reduction.hpp"

namespace gamma14 {

struct CaseLabel {
    enum class Branch { C2NonIntegral, AEq1, AHalf, MK, Exceptional821, Unclassified };
    Branch branch = Branch::Unclassified;
    int m = 0, K = 0;     // meaningful for MK / Exceptional821
    Rat gamma_used;       // 8, 8486/1000 or 32/3
    bool boundary_a_plus_d = false;  // a + d = 1 exactly: both adjacent routes eligible
};

std::string branch_name(CaseLabel::Branch b);

// Deterministic label; parameters must come from case_params(bf, 8).
CaseLabel classify(const CaseParams& params8, const BirchForm& bf, const RatVec& birch_shift);

struct TraceStep {
    std::string stage;   // Q | F | G | G* | H | oracle
    std::string route;   // trivial | squeeze | macbeath1 | jackson | brute
    std::string detail;
};

struct CascadeTrace {
    CaseLabel label;
    std::vector<TraceStep> steps;
};

enum class SolveOutcome { Strict, Equality, NoWitnessInBox };

struct SolveResult {
    SolveOutcome outcome = SolveOutcome::NoWitnessInBox;
    std::optional<Witness> witness;
    CascadeTrace trace;
};

// End-to-end solver: reduce, classify, walk the lemma routes innermost-first,
// lift outward, verify exactly against the original instance; falls back to
// brute force.  Never returns an unverified witness.
SolveResult solve_instance(const ShiftedInstance& inst);

// The gamma the classifier attaches to the instance's branch.
Rat recommended_gamma(const ShiftedInstance& inst);

}  // namespace gamma14
