#pragma once

#include <optional>
#include <vector>

#include "gamma14/forms.hpp"
#include "gamma14/reduction.hpp"

namespace gamma14 {

struct HypothesisFails : std::runtime_error {
    explicit HypothesisFails(const std::string& m) : std::runtime_error(m) {}
};
struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& m) : std::runtime_error(m) {}
};

// gcd of two positive rationals: generator of the group <p, q> in (Q, +).
Rat rat_gcd(const Rat& p, const Rat& q);

// ---- squeeze (one-variable completion of the square) --------------------

// Find x = x0 (mod 1) with 0 < -(x + alpha)^2 + beta <= gamma, gamma > 1.
// Soluble whenever 1/4 < beta <= gamma + m^2/4 with m < gamma <= m+1; strict
// inequality in the hypothesis yields a strict witness.
struct SqueezeProblem {
    Rat alpha, beta, gamma, x0;
};
struct SqueezeWitness {
    Rat x;
    Rat value;
    bool strict;
};
SqueezeWitness squeeze_solve(const SqueezeProblem& p);

// Same engine with the interval top given as gq + gr * d (d = irrational
// fifth root); mbound plays the role of m (mbound < gamma <= mbound + 1).
SqueezeWitness squeeze_solve_rootbound(const Rat& alpha, const Rat& beta, const Rat& x0,
                                       const Rat& gq, const Rat& gr, const DRoot& d,
                                       int mbound);

// ---- window solver for zero forms ----------------------------------------

// Find integer x with alpha < Q(x + shift) <= beta for a zero form Q,
// guaranteed when beta - alpha >= 2 |D|^(1/n); searched over escalating
// sup-norm boxes (4 doublings), deterministic order.
struct JacksonWitness {
    IntVec x;
    Rat value;
    bool strict;
};
JacksonWitness jackson_solve(const QForm& form, const Rat& alpha, const Rat& beta,
                             const RatVec& shift, long box);

// ---- Macbeath (first lemma) ----------------------------------------------

struct MacbeathProblem {
    Rat alpha;   // > 0
    Rat beta;
    Rat gamma;   // > 0
    Rat nu = Rat(0);
    Rat h;       // 2h integral
    long k = 1;  // >= 1
    int sign_x = +1;      // sign on x in  +-x + beta y +- alpha y^2 + nu
    int sign_alpha = -1;  // sign on alpha y^2
};

enum class MacbeathStatus { StrictOK, NonStrictOK, ExceptionalPair, HypothesisFails };

// |h - k^2 alpha| + 1/2 <= gamma gate plus the exceptional-pair test
// (alpha = h/k^2 and beta = h/k modulo the group generated by 1/k and 2 alpha).
MacbeathStatus macbeath1_check(const MacbeathProblem& p);

struct MacbeathWitness {
    Int x, y;
    Rat value;
    bool strict;
};
// Requires macbeath1_check(p) in {StrictOK, NonStrictOK}; scans |y| <= y_bound,
// x forced by a ceiling computation; first witness in (|y|, y, x) order.
MacbeathWitness macbeath1_solve(const MacbeathProblem& p, long y_bound);

// ---- Macbeath (second lemma) gate ----------------------------------------

enum class Macbeath2Status { OK, ExceptionalRational, HypothesisFails };

// |h - k^2 t| <= (d/2)^3 gate; exceptional when t = h/k^2 and beta is p/q
// with q <= 2/d.  h, k integers, k >= 1.
Macbeath2Status macbeath2_check(const Rat& t, const Rat& beta, const Rat& d, const Int& h,
                                long k);

// ---- two-variable product window (trivial lemma) --------------------------

// Find x1 = c1, x2 = c2 (mod 1) with 0 < (x1 + alpha x2 + nu) x2 + beta <= delta.
// Soluble for delta >= 1/2 when c2 is not an integer, delta >= 1 otherwise.
struct TrivialWitness {
    Rat x1, x2;
    Rat value;
    bool strict;
};
TrivialWitness trivial_solve(const Rat& alpha, const Rat& nu, const Rat& beta,
                             const Rat& delta, const Rat& c1, const Rat& c2);

// Same with the window top delta = dq + dr * d.
TrivialWitness trivial_solve_rootbound(const Rat& alpha, const Rat& nu, const Rat& beta,
                                       const Rat& dq, const Rat& dr, const DRoot& d,
                                       const Rat& c1, const Rat& c2);

// ---- residue candidate enumeration ----------------------------------------

// Candidate (b, c) pairs left to discuss when the Macbeath pair is
// exceptional at alpha = r/2s (lowest terms), h/k with k | s.  The variant
// restricts the case (ii) progression to the x2 = +-1 usage.
struct ResidueCandidate {
    Rat b, c;
};
enum class ResidueVariant { General, GWithX2PM1 };
std::vector<ResidueCandidate> residue_candidates(const Rat& t_or_A, const Rat& h, long k,
                                                 ResidueVariant variant);

// membership re-check: some sign of b satisfies
//   +-b - 2 alpha c = h/k  (mod gcd(1/k, 2 alpha))
bool residue_candidate_valid(const Rat& t_or_A, const Rat& h, long k,
                             const ResidueCandidate& cand);

// ---- rewrite completing x5 first (the alternate inner stage) ---------------

struct GStarData {
    Rat a2star, a4star;
    Rat inner_coef;       // A t / C
    Rat C;                // A lambda^2 + t
    int M = 0;            // M < delta_m / C <= M + 1 (0 if below threshold)
    Rat delta_star_off;   // delta*_{m,M} = delta_star_off + d
};
GStarData gstar_transform(const Rat& a2p, const Rat& a4p, const Rat& a5p, const Rat& A,
                          const Rat& lambda, const Rat& t, const Rat& delta_m_off,
                          const DRoot& d);

}  // namespace gamma14
