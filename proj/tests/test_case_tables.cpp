#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma14/case_tables.hpp"

using namespace gamma14;

namespace {

const std::string kTables = std::string(GAMMA14_DATA_DIR) + "/case_tables.json";

TableEnv env_for(const Rat& c1, const Rat& a2v, const Rat& a, const Rat& A, const Rat& t,
                 const Rat& d5) {
    TableEnv env;
    env.d.pow5 = d5;
    env.d.enc = root_enclosure(d5, 5, Rat(1, Int(1) << 40));
    env.vars["c1"] = AffD::constant(c1);
    env.vars["a2v"] = AffD::constant(a2v);
    env.vars["a"] = AffD::constant(a);
    env.vars["A"] = AffD::constant(A);
    env.vars["t"] = AffD::constant(t);
    env.vars["d"] = AffD(Rat(0), Rat(1));
    env.vars["sgn"] = AffD::constant(c1 >= 0 ? Rat(1) : Rat(-1));
    for (int n = 1; n <= 4; ++n) {
        std::string ns = std::to_string(n);
        env.vars["f" + ns] = AffD::constant(Rat(n) * abs_rat(c1) + Rat(n * n) * a2v);
        env.vars["g" + ns] = AffD::constant(-Rat(n) * abs_rat(c1) + Rat(n * n) * a2v);
        env.vars["p" + ns] = AffD::constant(Rat(n) * c1 + Rat(n * n) * a2v);
        env.vars["q" + ns] = AffD::constant(-Rat(n) * c1 + Rat(n * n) * a2v);
    }
    return env;
}

}  // namespace

TEST_CASE("affine-in-d arithmetic and comparisons") {
    DRoot d;
    d.pow5 = Rat(3, 4);  // d = (3/4)^(1/5), about 0.944
    d.enc = root_enclosure(d.pow5, 5, Rat(1, 1 << 20));
    AffD dd(Rat(0), Rat(1));
    CHECK(cmp_affd(dd, AffD::constant(Rat(9, 10)), d) == Ordering::Greater);
    CHECK(cmp_affd(dd, AffD::constant(Rat(19, 20)), d) == Ordering::Less);
    CHECK(cmp_affd(dd + AffD::constant(Rat(1, 4)), dd, d) == Ordering::Greater);
    CHECK_THROWS(dd * dd);  // products of two d-carrying values stay out of scope
}

TEST_CASE("table expression evaluation") {
    TableEnv env = env_for(Rat(3, 10), Rat(-1, 5), Rat(1, 2), Rat(1, 2), Rat(3, 2), Rat(3, 4));
    CHECK(eval_affd("f1 - 1/4", env).q == Rat(3, 10) - Rat(1, 5) - Rat(1, 4));
    CHECK(eval_affd("(a+A)/4", env).q == Rat(1, 4));
    CHECK(eval_affd("d - 3/4", env).r == Rat(1));
    CHECK(eval_affd("3*sgn/2", env).q == Rat(3, 2));
    CHECK(eval_cond("f1 < d - 3/4", env));  // 0.1 < 0.944 - 0.75
    CHECK_FALSE(eval_cond("f1 > d - 3/4", env));
}

TEST_CASE("bundled case tables load with the expected shapes") {
    auto tables = load_case_tables(kTables);
    CHECK(tables.size() == 18);
    int unrealizable = 0;
    for (const auto& t : tables) {
        CHECK(!t.rows.empty());
        for (const auto& r : t.rows)
            if (r.unrealizable) ++unrealizable;
    }
    CHECK(unrealizable == 1);  // one printed row admits no integer assignment
}

TEST_CASE("a hand-checked row: first table, first row") {
    auto tables = load_case_tables(kTables);
    const CaseTable* t = nullptr;
    for (const auto& tt : tables)
        if (tt.id == "L12_case1") t = &tt;
    REQUIRE(t != nullptr);
    // c1 = 0.3, a2v = 0.1: f1 = 0.4 lies in (1/4, 1]; value f1 - 1/4 = 0.15
    TableEnv env = env_for(Rat(3, 10), Rat(1, 10), Rat(1, 2), Rat(1, 2), Rat(3, 2), Rat(3, 4));
    for (const auto& c : t->rows[0].cond) CHECK(eval_cond(c, env));
    CHECK(eval_affd(t->rows[0].value, env).q == Rat(3, 20));
    // and the assignment really evaluates to the claimed value: the stage form
    // is (x1 + a2v x2 + x5/2) x2 - (3/2) x5^2 - 1/4 at (c1, sgn, 0)
    Rat x1(3, 10), x2(1), x5(0);
    Rat value = (x1 + Rat(1, 10) * x2 + Rat(1, 2) * x5) * x2 - Rat(3, 2) * x5 * x5 - Rat(1, 4);
    CHECK(value == Rat(3, 20));
}

TEST_CASE("every bundled table passes 400 exact-rational trials") {
    auto tables = load_case_tables(kTables);
    for (const auto& t : tables) {
        CAPTURE(t.id);
        TableRunReport rep = verify_case_table(t, 400, 20240817ULL);
        CHECK(rep.trials == 400);
        CHECK(rep.checks > 0);
        for (const auto& f : rep.falsified) {
            CAPTURE(f.row_index);
            CAPTURE(f.reason);
            CAPTURE(f.params);
            CHECK(false);
        }
    }
}

TEST_CASE("verification is deterministic for a fixed seed") {
    auto tables = load_case_tables(kTables);
    TableRunReport a = verify_case_table(tables[0], 100, 7);
    TableRunReport b = verify_case_table(tables[0], 100, 7);
    CHECK(a.row_hits == b.row_hits);
    CHECK(a.gap_samples == b.gap_samples);
}

TEST_CASE("a doctored row is falsified with a concrete counterexample") {
    auto tables = load_case_tables(kTables);
    CaseTable t = tables[0];
    t.rows[0].value = "f1 - 1/8";  // wrong closed form
    TableRunReport rep = verify_case_table(t, 200, 3);
    CHECK(!rep.falsified.empty());
    CHECK(rep.falsified.front().row_index == 0);
}
