#pragma once

#include <optional>

#include "gamma14/forms.hpp"

namespace gamma14 {

// Normal shape (x1 + a2 x2 + a3 x3 + a4 x4 + a5 x5) x2 - phi(x3,x4,x5),
// phi = a (x3 + h4 x4 + h5 x5)^2 + A (x4 + lambda x5)^2 + t x5^2, together
// with the unimodular change of basis and positive scale linking it to the
// input form: rho * Q(U y) = value of the normal shape at y.
struct BirchForm {
    Rat a2, a3, a4, a5;      // linear coefficients, in (-1/2, 1/2]
    Rat a;                   // ternary minimum, > 0
    Rat h4, h5;              // in (-1/2, 1/2]
    Rat A, B, C, lambda, t;  // reduced binary part: 0 <= B <= A <= C
    QForm phi;               // positive definite ternary (in the new basis)
    QForm psi;               // reduced binary part
    IntMat U;                // 5x5, |det| = 1
    Rat rho;                 // positive scale

    QForm to_qform() const;            // the 5-variable normal shape itself
    Rat abs_det() const;               // |det| of the normal shape's gram
    Rat evaluate(const RatVec& y) const;
};

// d and every affine-in-d quantity of the constant chain.  d itself is
// (gamma*|D|)^(1/5) given by its exact fifth power; comparisons against
// affine expressions q + r*d are decided by powering.
struct DRoot {
    Rat pow5;       // d^5, exact
    Enclosure enc;  // rational enclosure of d

    Ordering cmp(const Rat& v, const Rat& q, const Rat& r) const {
        return cmp_affine_root(v, q, r, 5, pow5);
    }
};

struct CaseParams {
    DRoot d;
    Rat gamma;
    int m = 0, K = 0, L = 0, M = 0;  // 0 means "below the defining threshold"
    Rat delta_m_off, delta_mK_off, delta_mKL_off, delta_star_mM_off;  // value = off + d
    Enclosure delta_m, delta_mK, delta_mKL, delta_star_mM;
    Rat a2p, a4p, a5p;  // normalized into (-1/2, 1/2] (reporting, case dispatch)
    Rat a2pp, a5pp;
    Rat a2ppp;          // derived completion coefficient (squared numerator)
    Rat a2ppp_printed;  // the linear-numerator variant, reported alongside
    Rat a2star, a4star;
    // the same chain without the mod-1 normalization: these make the
    // stage-to-stage completion identities exact, which the solver's lifts
    // rely on (the normalized values differ by integers that would shift the
    // effective congruence class of x1 by multiples of the other shifts)
    Rat a2p_raw, a4p_raw, a5p_raw;
    Rat a2pp_raw, a5pp_raw;
    Rat a2ppp_raw;
    Rat a2star_raw, a4star_raw;
    Rat Cval;           // C = A*lambda^2 + t
    bool gamma8_regime = true;  // which determinant relation governs checks
};

// Primitive integer vector v with Q(v) = 0, found by quick algebraic paths
// and then exhaustive sup-norm shells up to search_radius.
struct IsotropicNotFound : std::runtime_error {
    explicit IsotropicNotFound(const std::string& m) : std::runtime_error(m) {}
};
IntVec find_isotropic(const QForm& f, long search_radius = 25);

// Birch reduction of a rational type-(1,4) form along a primitive isotropic
// vector.  The returned shape satisfies rho * Q(U y) = shape(y) identically.
BirchForm birch_reduce(const QForm& f, const IntVec& iso);

// Minimum of a positive definite ternary form over nonzero integer vectors,
// with a lexicographically canonical attaining vector.  Exhaustive.
std::pair<Rat, IntVec> ternary_minimum(const QForm& phi);

// phi -> a (x + h4 y + h5 z)^2 + psi(y,z) after moving the given primitive
// minimum vector to the first basis vector; h's normalized into (-1/2,1/2].
struct PhiNormal {
    Rat a, h4, h5;
    QForm psi;
    IntMat basis;  // 3x3 unimodular, column 1 = v
};
PhiNormal normalize_phi(const QForm& phi, const IntVec& v);

// Gauss reduction of a positive definite binary form.
struct BinaryReduced {
    Rat A, B, C, lambda, t;
    IntMat basis;  // 2x2 unimodular
};
BinaryReduced binary_reduce(const QForm& psi);

// The full constant chain for a Birch form at the given gamma (8 or 32/3 or
// anything positive; the regime flag records which determinant relation
// applies to consistency checks).
CaseParams case_params(const BirchForm& bf, const Rat& gamma);

// Content (gcd of entries); vector is primitive iff content == 1.
Int content(const IntVec& v);

// Unimodular matrix whose first column is the given primitive vector.
IntMat complete_primitive(const IntVec& v);

}  // namespace gamma14
