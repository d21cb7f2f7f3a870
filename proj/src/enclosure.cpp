#include "gamma14/enclosure.hpp"

#include <algorithm>

namespace gamma14 {

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }
Enclosure operator+(const Enclosure& a, const Rat& b) { return {a.lo + b, a.hi + b}; }
Enclosure operator-(const Enclosure& a, const Rat& b) { return {a.lo - b, a.hi - b}; }

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    Rat c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {std::min({c[0], c[1], c[2], c[3]}), std::max({c[0], c[1], c[2], c[3]})};
}
Enclosure operator*(const Rat& b, const Enclosure& a) {
    if (b >= 0) return {b * a.lo, b * a.hi};
    return {b * a.hi, b * a.lo};
}

Enclosure abs_enc(const Enclosure& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}
Enclosure min_enc(const Enclosure& a, const Enclosure& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
Enclosure max_enc(const Enclosure& a, const Enclosure& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Ordering cmp_to_root(const Rat& v, unsigned n, const Rat& radicand) {
    if (radicand < 0) throw std::domain_error("cmp_to_root: negative radicand");
    if (v < 0) return radicand == 0 && v == 0 ? Ordering::Equal : Ordering::Less;
    Rat p = pow_rat(v, static_cast<long>(n));
    int c = cmp(p, radicand);
    if (c < 0) return Ordering::Less;
    if (c > 0) return Ordering::Greater;
    return Ordering::Equal;
}

Ordering cmp_affine_root(const Rat& v, const Rat& q, const Rat& r, unsigned n,
                         const Rat& radicand) {
    // v ? q + r * root
    if (r == 0) {
        int c = cmp(v, q);
        return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
    }
    Rat lhs = (v - q) / r;  // compare lhs ? root  (flipped if r < 0)
    Ordering o = cmp_to_root(lhs, n, radicand);
    if (r > 0) return o;
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

Int floor_root(const Int& r, unsigned n, bool* exact) {
    if (r < 0) throw std::domain_error("floor_root: negative radicand");
    Int out;
    int ex = mpz_root(out.get_mpz_t(), r.get_mpz_t(), n);
    if (exact) *exact = ex != 0;
    return out;
}

Int isqrt_floor(const Rat& r) {
    if (r < 0) throw std::domain_error("isqrt_floor: negative");
    // largest m with m^2 <= p/q  <=>  m <= sqrt(p/q); use floor(sqrt(p*q))/q trick
    Int m = floor_root(floor_rat(r), 2);
    while (Rat((m + 1) * (m + 1)) <= r) m += 1;
    while (m > 0 && Rat(m * m) > r) m -= 1;
    return m;
}

Enclosure root_enclosure(const Rat& radicand, unsigned n, const Rat& width) {
    if (radicand < 0) throw std::domain_error("root_enclosure: negative radicand");
    if (width <= 0) throw std::invalid_argument("root_enclosure: width must be > 0");
    if (radicand == 0) return Enclosure(Rat(0));

    // Exact case: both numerator and denominator perfect n-th powers.
    bool num_ex = false, den_ex = false;
    Int rn = floor_root(radicand.get_num(), n, &num_ex);
    Int rd = floor_root(radicand.get_den(), n, &den_ex);
    if (num_ex && den_ex) {
        Rat v(rn, rd);
        v.canonicalize();
        return Enclosure(v);
    }

    // Dyadic denominator N = 2^k >= 1/width keeps refinements nested.
    Int N = 1;
    while (Rat(1, 1) / Rat(N) > width) N *= 2;

    // lo = floor((radicand * N^n)^(1/n)) / N
    Int Nn;
    mpz_pow_ui(Nn.get_mpz_t(), N.get_mpz_t(), n);
    Rat scaled = radicand * Rat(Nn);
    Int z = floor_rat(scaled);
    bool ex = false;
    Int s = floor_root(z, n, &ex);
    Rat lo(s, N);
    lo.canonicalize();
    if (ex && Rat(z) == scaled) return Enclosure(lo);
    Rat hi(s + 1, N);
    hi.canonicalize();
    return {lo, hi};
}

}  // namespace gamma14
