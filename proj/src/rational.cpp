#include "gamma14/rational.hpp"

#include <sstream>

namespace gamma14 {

Rat parse_rat(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("parse_rat: empty string");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
        return r;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        return Rat(Int(s));
    }
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    bool neg = !head.empty() && head[0] == '-';
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) head = head.substr(1);
    if (head.empty()) head = "0";
    if (tail.empty()) tail = "0";
    Int num = Int(head);
    Int den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    num = num * den + Int(tail);
    Rat r(num, den);
    r.canonicalize();
    return neg ? Rat(-r) : r;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r.get_num();
    if (r.get_den() != 1) os << "/" << r.get_den();
    return os.str();
}

std::string rat_decimal(const Rat& r, int digits) {
    mpf_class f(0, 256);
    f = r;
    mp_exp_t exp;
    std::string m = f.get_str(exp, 10, digits);
    bool neg = !m.empty() && m[0] == '-';
    if (neg) m = m.substr(1);
    if (m.empty()) return "0";
    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(-exp, '0') + m;
    } else if (static_cast<size_t>(exp) >= m.size()) {
        out = m + std::string(exp - m.size(), '0');
    } else {
        out = m.substr(0, exp) + "." + m.substr(exp);
    }
    return neg ? "-" + out : out;
}

Rat pow_rat(const Rat& r, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long n = inv ? -e : e;
    if (inv && r == 0) throw std::domain_error("pow_rat: 0 to negative power");
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den_mpz_t(), n);
    out.canonicalize();
    if (inv) out = 1 / out;
    return out;
}

Rat centered_mod1(const Rat& r) {
    // r - round_to_nearest(r), tie broken so the result lands in (-1/2, 1/2]
    Rat f = r - Rat(floor_rat(r));  // [0,1)
    if (f > Rat(1, 2)) f -= 1;
    return f;
}

Rat mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

std::uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
}

Rat Rng::uniform_rat(const Rat& lo, const Rat& hi, long max_den) {
    long q = uniform(1, max_den);
    Int plo = ceil_rat(lo * q), phi = floor_rat(hi * q);
    if (phi < plo) {
        // no representable point with this denominator; fall back to a finer one
        q = max_den;
        plo = ceil_rat(lo * q);
        phi = floor_rat(hi * q);
        if (phi < plo) return lo;
    }
    Int span = phi - plo + 1;
    Int off = Int(static_cast<unsigned long>(next() % 0xffffffffULL)) % span;
    Rat r(plo + off, q);
    r.canonicalize();
    return r;
}

}  // namespace gamma14
