#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gamma14 {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p/q", "p", or a decimal literal such as "0.42692" / "-1.5".
// Decimals are read as exact rationals (42692/100000), never rounded.
Rat parse_rat(const std::string& s);

std::string rat_str(const Rat& r);

// Decimal rendering for display only.
std::string rat_decimal(const Rat& r, int digits = 12);

inline double rat_approx(const Rat& r) { return r.get_d(); }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

// r^e for integer e (e < 0 requires r != 0).
Rat pow_rat(const Rat& r, long e);

// Representative of r mod 1 lying in (-1/2, 1/2].
Rat centered_mod1(const Rat& r);

// Representative of r mod 1 lying in [0, 1).
Rat mod1(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Rat abs_rat(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// x = p/q in lowest terms; returns q.
inline Int denom_of(const Rat& r) { return r.get_den(); }

// Deterministic splitmix-style generator for reproducible rational sampling.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    // uniform integer in [lo, hi]
    long uniform(long lo, long hi);
    // rational p/q with q in [1, max_den] and value in [lo, hi]
    Rat uniform_rat(const Rat& lo, const Rat& hi, long max_den);

  private:
    std::uint64_t state_;
};

}  // namespace gamma14
