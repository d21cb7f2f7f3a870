#pragma once

#include "gamma14/rational.hpp"

namespace gamma14 {

enum class Ordering { Less, Equal, Greater };

// Closed rational interval [lo, hi] guaranteed to contain the real value it
// stands for.  Endpoints are exact; all arithmetic rounds outward (here:
// exactly, since endpoints stay rational).
struct Enclosure {
    Rat lo, hi;

    Enclosure() : lo(0), hi(0) {}
    explicit Enclosure(const Rat& x) : lo(x), hi(x) {}
    Enclosure(const Rat& l, const Rat& h) : lo(l), hi(h) {
        if (lo > hi) throw std::invalid_argument("Enclosure: lo > hi");
    }

    bool is_point() const { return lo == hi; }
    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& o) const { return lo <= o.lo && o.hi <= hi; }
};

Enclosure operator+(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a, const Enclosure& b);
Enclosure operator*(const Enclosure& a, const Enclosure& b);
Enclosure operator-(const Enclosure& a);
Enclosure operator+(const Enclosure& a, const Rat& b);
Enclosure operator-(const Enclosure& a, const Rat& b);
Enclosure operator*(const Rat& b, const Enclosure& a);
Enclosure abs_enc(const Enclosure& a);
Enclosure min_enc(const Enclosure& a, const Enclosure& b);
Enclosure max_enc(const Enclosure& a, const Enclosure& b);

// Exact ordering of v against radicand^(1/n), decided by powering.
// Requires radicand >= 0; v may have any sign.
Ordering cmp_to_root(const Rat& v, unsigned n, const Rat& radicand);

// Exact ordering of v against (q + r * root) where root = radicand^(1/n) >= 0.
Ordering cmp_affine_root(const Rat& v, const Rat& q, const Rat& r, unsigned n,
                         const Rat& radicand);

// Enclosure of radicand^(1/n) with hi - lo <= width; exact (point) whenever
// the root is rational.  Halving the width yields a nested enclosure.
Enclosure root_enclosure(const Rat& radicand, unsigned n, const Rat& width);

// floor(r^(1/n)) for integer r >= 0, plus exactness flag.
Int floor_root(const Int& r, unsigned n, bool* exact = nullptr);

// floor(sqrt(r)) over rationals: largest integer m with m^2 <= r (r >= 0).
Int isqrt_floor(const Rat& r);

}  // namespace gamma14
