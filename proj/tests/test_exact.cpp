#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma14/enclosure.hpp"
#include "gamma14/expr.hpp"

using namespace gamma14;

namespace {

// independent bisection oracle for radicand^(1/n): returns [lo, hi] with
// width <= w by plain interval halving on rationals
Enclosure bisect_root(const Rat& radicand, unsigned n, const Rat& w) {
    Rat lo(0), hi = radicand < 1 ? Rat(1) : radicand;
    while (hi - lo > w) {
        Rat mid = (lo + hi) / 2;
        if (pow_rat(mid, n) <= radicand)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-5/10") == Rat(-1, 2));
    CHECK(parse_rat("0.42692") == rat(42692, 100000));
    CHECK(parse_rat("-1.5") == Rat(-3, 2));
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_str(rat(42692, 100000)) == "10673/25000");
    CHECK(rat_str(Rat(-3)) == "-3");
    CHECK(parse_rat(rat_str(Rat(10673, 25000))) == Rat(10673, 25000));
}

TEST_CASE("centered representative") {
    CHECK(centered_mod1(Rat(3, 4)) == Rat(-1, 4));
    CHECK(centered_mod1(Rat(1, 2)) == Rat(1, 2));
    CHECK(centered_mod1(Rat(-1, 2)) == Rat(1, 2));
    CHECK(centered_mod1(Rat(5)) == Rat(0));
    CHECK(centered_mod1(Rat(-17, 8)) == Rat(-1, 8));
}

TEST_CASE("cmp_to_root agrees with powering") {
    CHECK(cmp_to_root(Rat(1, 2), 5, Rat(1, 32)) == Ordering::Equal);
    CHECK(cmp_to_root(Rat(1), 5, Rat(1, 32)) == Ordering::Greater);
    CHECK(cmp_to_root(Rat(3, 5), 3, Rat(27, 125)) == Ordering::Equal);
    CHECK(cmp_to_root(Rat(7, 5), 2, Rat(2)) == Ordering::Less);

    // property: agreement with sign(v^n - r) on a sweep
    for (long p = 1; p <= 40; ++p)
        for (long q = 1; q <= 8; ++q) {
            Rat v(p, q);
            Rat r(17, 12);
            int sgn = cmp(pow_rat(v, 3), r);
            Ordering o = cmp_to_root(v, 3, r);
            CHECK((sgn < 0) == (o == Ordering::Less));
            CHECK((sgn > 0) == (o == Ordering::Greater));
        }
}

TEST_CASE("root_enclosure basics and exact cases") {
    Enclosure e = root_enclosure(Rat(1, 32), 5, Rat(1, 1000));
    CHECK(e.lo == Rat(1, 2));
    CHECK(e.hi == Rat(1, 2));
    CHECK(root_enclosure(Rat(0), 3, Rat(1, 10)).is_point());

    Enclosure s2 = root_enclosure(Rat(2), 2, Rat(1, 100));
    CHECK(s2.width() <= Rat(1, 100));
    CHECK(pow_rat(s2.lo, 2) <= 2);
    CHECK(pow_rat(s2.hi, 2) >= 2);

    // cross-check against the bisection oracle
    Enclosure oracle = bisect_root(Rat(2), 2, Rat(1, 1000));
    CHECK(s2.lo <= oracle.hi);
    CHECK(s2.hi >= oracle.lo);
}

TEST_CASE("root_enclosure refinement is nested") {
    Rat r(7, 3);
    Enclosure wide = root_enclosure(r, 3, Rat(1, 64));
    Enclosure tight = root_enclosure(r, 3, Rat(1, 128));
    CHECK(wide.contains(tight));
    Enclosure tighter = root_enclosure(r, 3, Rat(1, 1024));
    CHECK(tight.contains(tighter));
}

TEST_CASE("expression parsing round-trips structure") {
    auto e = parse_expr("max(1/2, (2*t/3)^(1/3))");
    CHECK(e->kind == Expr::Kind::Max);
    auto f = parse_expr("(15/8) * (5*t/24)^(1/3)");
    CHECK(f->kind == Expr::Kind::Mul);
    CHECK_THROWS(parse_expr("t +"));
    CHECK_THROWS(parse_expr("t ^ (1/9)"));  // exponent denominators stop at 6
}

TEST_CASE("enclosure_eval identity and endpoint cases") {
    auto id = parse_expr("t");
    Enclosure in(Rat(1, 4), Rat(1, 2));
    Enclosure out = enclosure_eval(id, in, Rat(1, 100));
    CHECK(out.lo == Rat(1, 4));
    CHECK(out.hi == Rat(1, 2));
}

TEST_CASE("enclosure_eval of max(1/2,(2t/3)^(1/3)) at a point") {
    auto b = parse_expr("max(1/2, (2*t/3)^(1/3))");
    Rat t(27, 128);  // 2t/3 = 9/64
    Enclosure out = enclosure_eval(b, Enclosure(t), Rat(1, 1 << 20));
    Enclosure oracle = bisect_root(Rat(9, 64), 3, Rat(1, 1 << 20));
    CHECK(out.lo <= oracle.hi);
    CHECK(out.hi >= oracle.lo);
    CHECK(out.lo > Rat(1, 2));  // the root branch wins here
    CHECK(out.width() <= Rat(1, 1 << 18));
}

TEST_CASE("enclosure_eval |4 - 9t| + 1/2 over the first cover interval") {
    auto e = parse_expr("abs(4 - 9*t) + 1/2");
    Enclosure in(parse_rat("0.42692"), parse_rat("0.44445"));
    Enclosure out = enclosure_eval(e, in, Rat(1, 1000000));
    // |4 - 9t| is monotone decreasing here; endpoint arithmetic gives the range
    Rat at_lo = abs_rat(Rat(4) - 9 * in.lo) + Rat(1, 2);
    Rat at_hi = abs_rat(Rat(4) - 9 * in.hi) + Rat(1, 2);
    CHECK(out.contains(at_lo));
    CHECK(out.contains(at_hi));
    CHECK(out.hi - at_lo <= Rat(1, 10000));  // within 1e-4 slack of the true range
    CHECK(at_hi - out.lo <= Rat(1, 10000));
}

TEST_CASE("enclosure_eval is inclusion monotone") {
    auto e = parse_expr("max(1/2, (2*t/3)^(1/3)) - abs(1 - 4*t) * t");
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Rat a = rng.uniform_rat(Rat(1, 100), Rat(2), 97);
        Rat b = a + rng.uniform_rat(Rat(1, 100), Rat(1, 2), 89);
        Rat a2 = a + (b - a) / 7, b2 = b - (b - a) / 9;
        Enclosure big = enclosure_eval(e, Enclosure(a, b), Rat(1, 1 << 16));
        Enclosure small = enclosure_eval(e, Enclosure(a2, b2), Rat(1, 1 << 16));
        CHECK(big.contains(small));
    }
}

TEST_CASE("fractional power domain error") {
    auto e = parse_expr("t^(1/2)");
    CHECK_THROWS_AS(enclosure_eval(e, Enclosure(Rat(-1), Rat(1)), Rat(1, 100)),
                    std::domain_error);
}

TEST_CASE("cmp_expr_at separates rational-vs-root comparisons") {
    auto b = parse_expr("max(1/2, (2*t/3)^(1/3))");
    // at t = 3/2: (2t/3)^(1/3) = 1 exactly
    CHECK(cmp_expr_at(b, Rat(3, 2), Rat(1)) == Ordering::Equal);
    CHECK(cmp_expr_at(b, Rat(3, 2), Rat(9, 10)) == Ordering::Greater);
    CHECK(cmp_expr_at(b, Rat(3, 2), Rat(11, 10)) == Ordering::Less);
    // at t = 0.42692 the bound is irrational and exceeds 0.65772
    CHECK(cmp_expr_at(b, parse_rat("0.42692"), parse_rat("0.65772")) == Ordering::Greater);
}
