#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma14/oracle.hpp"

using namespace gamma14;

TEST_CASE("brute_search: critical-form minima") {
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    BruteResult r1 = brute_search(q1, SearchBox::cube(5, 6));
    REQUIRE(r1.min_positive.has_value());
    CHECK(*r1.min_positive == Rat(1, 2));
    IntVec e1{Int(1), Int(0), Int(0), Int(0), Int(0)};
    CHECK(std::find(r1.argmins.begin(), r1.argmins.end(), e1) != r1.argmins.end());

    ShiftedInstance q2 = critical_instance(CriticalForm::Q2);
    BruteResult r2 = brute_search(q2, SearchBox::cube(5, 4));
    REQUIRE(r2.min_positive.has_value());
    CHECK(*r2.min_positive == Rat(1));
}

TEST_CASE("brute_search: two-variable sanity and determinism") {
    QForm hyp(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}});
    ShiftedInstance inst(hyp, {Rat(0), Rat(0)}, Rat(8));
    BruteResult r = brute_search(inst, SearchBox::cube(2, 3));
    REQUIRE(r.min_positive.has_value());
    CHECK(*r.min_positive == Rat(1));
    BruteResult r2 = brute_search(inst, SearchBox::cube(2, 3));
    CHECK(r.argmins == r2.argmins);
    CHECK(r.points_scanned == 49);
}

TEST_CASE("brute_search: int64 path agrees with the big-integer path") {
    // same instance, one box small enough for the fast path and a forced
    // big-int run via huge shift denominators
    ShiftedInstance q6 = critical_instance(CriticalForm::Q6);
    BruteResult fast = brute_search(q6, SearchBox::cube(5, 3));
    // shift denominators do not change the fast-path eligibility here, so
    // cross-check against direct evaluation instead
    REQUIRE(fast.min_positive.has_value());
    for (const auto& v : fast.argmins) CHECK(q6.value_at(v) == *fast.min_positive);
    Rat best(0);
    bool have = false;
    IntVec x(5);
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            for (long c = -3; c <= 3; ++c)
                for (long d = -3; d <= 3; ++d)
                    for (long e = -3; e <= 3; ++e) {
                        x = {Int(a), Int(b), Int(c), Int(d), Int(e)};
                        Rat v = q6.value_at(x);
                        if (v > 0 && (!have || v < best)) {
                            best = v;
                            have = true;
                        }
                    }
    CHECK(have);
    CHECK(*fast.min_positive == best);
}

TEST_CASE("range quantities and their admissible windows") {
    CHECK(range_quantity(RangeKind::F, 1, Rat(-1, 4), Rat(1, 8)) == Rat(3, 8));
    CHECK(range_quantity(RangeKind::G, 2, Rat(1, 4), Rat(1, 8)) == Rat(0));
    CHECK(range_quantity(RangeKind::P, 1, Rat(-1, 4), Rat(1, 8)) == Rat(-1, 8));
    CHECK(range_quantity(RangeKind::Q, 1, Rat(-1, 4), Rat(1, 8)) == Rat(3, 8));

    // exhaustive over the grid with denominator 64: -1/2 < f1 <= 1, -1 < g1 <= 1/2,
    // -1 < p1, q1 <= 1
    for (long i = -31; i <= 32; ++i)
        for (long j = -31; j <= 32; ++j) {
            Rat c1(i, 64), a2(j, 64);
            c1.canonicalize();
            a2.canonicalize();
            Rat f1 = range_quantity(RangeKind::F, 1, c1, a2);
            Rat g1 = range_quantity(RangeKind::G, 1, c1, a2);
            Rat p1 = range_quantity(RangeKind::P, 1, c1, a2);
            Rat q1 = range_quantity(RangeKind::Q, 1, c1, a2);
            CHECK(f1 > Rat(-1, 2));
            CHECK(f1 <= Rat(1));
            CHECK(g1 > Rat(-1));
            CHECK(g1 <= Rat(1, 2));
            CHECK(p1 > Rat(-1));
            CHECK(p1 <= Rat(1));
            CHECK(q1 > Rat(-1));
            CHECK(q1 <= Rat(1));
            CHECK(g1 <= f1);
        }
}

TEST_CASE("residue sweeps: five of the six catalogued certificates hold") {
    for (auto id : {CriticalForm::Q1, CriticalForm::Q2, CriticalForm::Q3, CriticalForm::Q5,
                    CriticalForm::Q6}) {
        CAPTURE(critical_name(id));
        EqualityCertificate cert = certify_critical(id);
        CHECK(cert.sweeps_pass);
        CHECK(cert.classes_covered);
        CHECK(cert.lattice_bound_reaches_d);
        REQUIRE(cert.witness.has_value());
        CHECK(cert.witness->value == cert.d);
        CHECK(cert.ok());
        // d is rational for every catalogued form: 1/2 once, 1 otherwise
        CHECK((cert.d == Rat(1, 2) || cert.d == Rat(1)));
    }
}

TEST_CASE("the fourth catalogued form is detected as non-critical") {
    // (x1 + x3/2 + x4/2) x2 - x3^2/2 - x4^2/2 - 2 x5^2 takes the value 1/2 at
    // (0,2,1,0,0), strictly inside (0, d) with d = 1, so no equality
    // certificate can exist; the certifier must say so rather than pass it.
    ShiftedInstance q4 = critical_instance(CriticalForm::Q4);
    CHECK(q4.value_at({Int(0), Int(2), Int(1), Int(0), Int(0)}) == Rat(1, 2));
    EqualityCertificate cert = certify_critical(CriticalForm::Q4);
    CHECK(cert.d == Rat(1));
    CHECK_FALSE(cert.sweeps_pass);       // the mod-8 congruence breaks on even x2
    CHECK_FALSE(cert.witness.has_value());  // brute minimum is 1/2, not d
    CHECK_FALSE(cert.ok());
    BruteResult br = brute_search(q4, SearchBox::cube(5, 6));
    REQUIRE(br.min_positive.has_value());
    CHECK(*br.min_positive == Rat(1, 2));
}

TEST_CASE("residue sweep catches a wrong certificate") {
    // claiming modulus 16 for the first critical form must fail
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    ResidueSweep sweep{2, Int(16), Int(16), Int(0), {}};
    std::string diag;
    CHECK_FALSE(run_residue_sweep(q1, sweep, &diag));
    CHECK(!diag.empty());
}

TEST_CASE("certified minimum is attained exactly at d") {
    EqualityCertificate c1 = certify_critical(CriticalForm::Q1);
    CHECK(c1.d == Rat(1, 2));
    EqualityCertificate c6 = certify_critical(CriticalForm::Q6);
    CHECK(c6.d == Rat(1));
    // the witness really is a witness of the original instance
    Witness w = Witness::checked(c6.instance, c6.witness->x);
    CHECK(w.equality);
}
