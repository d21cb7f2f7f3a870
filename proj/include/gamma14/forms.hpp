#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gamma14/enclosure.hpp"

namespace gamma14 {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<std::vector<Int>>;

// Quadratic form Q(x) = x^T G x with G symmetric rational, 2 <= n <= 5.
struct QForm {
    int n = 0;
    RatMat gram;

    QForm() = default;
    QForm(int dim, RatMat g);

    Rat evaluate(const RatVec& point) const;
    Rat evaluate_int(const IntVec& point) const;
};

// Q built from the shape (x1 + a2 x2 + ... + an xn) x2 - (quadratic in x3..xn).
// `linear` holds a2..an; `tail` is the (n-2)x(n-2) gram of the subtracted form.
QForm make_split_form(const RatVec& linear, const RatMat& tail);

Rat determinant(const QForm& f);

// (positives, negatives) by exact rational congruence diagonalization.
std::pair<int, int> signature(const QForm& f);

bool is_positive_definite(const QForm& f);

Int det_int(const IntMat& m);
IntMat identity_int(int n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec(const IntMat& m, const IntVec& v);
RatVec mat_vec(const IntMat& m, const RatVec& v);
IntMat mat_inverse_unimodular(const IntMat& u);  // exact inverse, |det| = 1

// Gram of x -> f(Ux); requires |det U| = 1.
QForm apply_unimodular(const QForm& f, const IntMat& u);

struct ShiftedInstance {
    QForm form;
    RatVec shift;  // normalized into (-1/2, 1/2] on construction
    Rat gamma;     // 8, 8486/1000, 32/3, or user supplied

    ShiftedInstance() = default;
    ShiftedInstance(QForm f, RatVec c, Rat g);

    Rat abs_det() const { return abs_rat(determinant(form)); }
    Rat value_at(const IntVec& x) const;  // Q(x + shift)
};

// Enclosure of (gamma * |det|)^(1/5); exact when the fifth root is rational.
Enclosure d_value(const ShiftedInstance& inst, const Rat& width = Rat(1, 1L << 30));

// v ? (gamma * |D|)^(1/n) decided exactly.
Ordering cmp_to_bound(const Rat& v, const ShiftedInstance& inst);

struct Witness {
    IntVec x;
    Rat value;       // Q(x + shift), exact
    bool equality;   // value^n == gamma * |D|

    // Throws std::invalid_argument unless 0 < value and value^n <= gamma*|D|.
    static Witness checked(const ShiftedInstance& inst, const IntVec& x);
};

}  // namespace gamma14
