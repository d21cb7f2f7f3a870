#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gamma14/forms.hpp"
#include "gamma14/oracle.hpp"

using namespace gamma14;

namespace {

// independent determinant oracle: Laplace cofactor expansion
Rat cofactor_det(const RatMat& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Rat acc(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        RatMat minor(n - 1, RatVec(n - 1));
        for (size_t r = 1; r < n; ++r)
            for (size_t c = 0, cc = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        Rat term = m[0][j] * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

QForm diag_form(const RatVec& d) {
    int n = static_cast<int>(d.size());
    RatMat g(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) g[i][i] = d[i];
    return QForm(n, g);
}

RatVec halves() { return RatVec(5, Rat(1, 2)); }

IntMat random_unimodular(Rng& rng, int n) {
    // product of elementary shears and swaps
    IntMat u = identity_int(n);
    for (int step = 0; step < 8; ++step) {
        int i = static_cast<int>(rng.uniform(0, n - 1));
        int j = static_cast<int>(rng.uniform(0, n - 1));
        if (i == j) continue;
        long k = rng.uniform(-2, 2);
        IntMat s = identity_int(n);
        s[i][j] = k;
        u = mat_mul(u, s);
    }
    return u;
}

}  // namespace

TEST_CASE("evaluate: split-form values") {
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    CHECK(q1.form.evaluate(halves()) == Rat(0));
    CHECK(q1.form.evaluate({Rat(3, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)}) ==
          Rat(1, 2));
    CHECK(q1.form.evaluate(RatVec(5, Rat(0))) == Rat(0));
    CHECK_THROWS(q1.form.evaluate(RatVec(4, Rat(0))));
}

TEST_CASE("determinant matches the cofactor oracle") {
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    ShiftedInstance q2 = critical_instance(CriticalForm::Q2);
    CHECK(determinant(q1.form) == Rat(1, 256));
    CHECK(determinant(q2.form) == Rat(1, 8));
    CHECK(cofactor_det(q1.form.gram) == Rat(1, 256));
    CHECK(cofactor_det(q2.form.gram) == Rat(1, 8));
    QForm d5 = diag_form({Rat(1), Rat(-1), Rat(-1), Rat(-1), Rat(-1)});
    CHECK(determinant(d5) == Rat(1));

    Rng rng(11);
    for (int i = 0; i < 40; ++i) {
        RatMat g(4, RatVec(4));
        for (int r = 0; r < 4; ++r)
            for (int c = r; c < 4; ++c) g[r][c] = g[c][r] = rng.uniform_rat(Rat(-3), Rat(3), 6);
        QForm f(4, g);
        CHECK(determinant(f) == cofactor_det(g));
    }
}

TEST_CASE("signature by congruence diagonalization") {
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    CHECK(signature(q1.form) == std::pair<int, int>{1, 4});
    CHECK(signature(diag_form({Rat(1), Rat(-1)})) == std::pair<int, int>{1, 1});
    QForm neg = diag_form({Rat(1), Rat(-1)});
    RatMat ng = q1.form.gram;
    for (auto& row : ng)
        for (auto& e : row) e = -e;
    CHECK(signature(QForm(5, ng)) == std::pair<int, int>{4, 1});
    for (auto id : {CriticalForm::Q2, CriticalForm::Q3, CriticalForm::Q4, CriticalForm::Q5,
                    CriticalForm::Q6})
        CHECK(signature(critical_instance(id).form) == std::pair<int, int>{1, 4});
    CHECK_THROWS(signature(diag_form({Rat(1), Rat(0)})));
}

TEST_CASE("malformed gram matrices are rejected") {
    CHECK_THROWS(QForm(2, RatMat{{Rat(1), Rat(2)}, {Rat(1), Rat(1)}}));  // asymmetric
    CHECK_THROWS(QForm(2, RatMat{{Rat(1), Rat(0)}}));                    // ragged
    CHECK_THROWS(QForm(6, RatMat(6, RatVec(6, Rat(0)))));                // out of range
}

TEST_CASE("signature: zero-diagonal pivot with a cancelling cross term") {
    // regression: the pivot repair must not cancel itself when the borrowed
    // row's diagonal equals -2x the cross term
    auto q = [](long n, long d) {
        Rat r(n, d);
        r.canonicalize();
        return r;
    };
    RatMat g{{q(0, 1), q(-1, 2), q(-7, 8), q(-1, 2), q(1, 2)},
             {q(-1, 2), q(1, 1), q(11, 8), q(1, 2), q(-1, 2)},
             {q(-7, 8), q(11, 8), q(-2, 1), q(3, 2), q(17, 4)},
             {q(-1, 2), q(1, 2), q(3, 2), q(-13, 4), q(-1, 3)},
             {q(1, 2), q(-1, 2), q(17, 4), q(-1, 3), q(-35, 4)}};
    QForm f(5, g);
    CHECK(determinant(f) == Rat(437, 64));
    auto sig = signature(f);
    CHECK(sig.first + sig.second == 5);
    CHECK(sig == std::pair<int, int>{1, 4});
}

TEST_CASE("apply_unimodular: explicit shear from the first critical form") {
    // x2 -> x2 + 2 x1 turns (x1 - x2/4) x2 - (x3^2+x4^2+x5^2)/4 into
    // x1^2 - (x2^2+x3^2+x4^2+x5^2)/4
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    IntMat u = identity_int(5);
    u[1][0] = 2;  // column 0 gains 2 * e2: y1-direction maps to x1 + 2 x2... (columns are images)
    QForm g = apply_unimodular(q1.form, u);
    QForm expected = diag_form({Rat(1), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4), Rat(-1, 4)});
    CHECK(g.gram == expected.gram);
}

TEST_CASE("apply_unimodular preserves determinant and signature") {
    Rng rng(23);
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    for (int i = 0; i < 1000; ++i) {
        IntMat u = random_unimodular(rng, 5);
        QForm g = apply_unimodular(q1.form, u);
        CHECK(determinant(g) == determinant(q1.form));
        if (i % 50 == 0) CHECK(signature(g) == std::pair<int, int>{1, 4});
    }
}

TEST_CASE("apply_unimodular transforms values the right way") {
    Rng rng(31);
    ShiftedInstance q2 = critical_instance(CriticalForm::Q2);
    for (int i = 0; i < 200; ++i) {
        IntMat u = random_unimodular(rng, 5);
        QForm g = apply_unimodular(q2.form, u);
        IntVec x(5);
        for (auto& e : x) e = rng.uniform(-4, 4);
        // g(x) = f(Ux)
        CHECK(g.evaluate_int(x) == q2.form.evaluate_int(mat_vec(u, x)));
    }
}

TEST_CASE("permutation preserves the diagonal multiset") {
    QForm d = diag_form({Rat(2), Rat(-3), Rat(5), Rat(-7)});
    IntMat p(4, IntVec(4, Int(0)));
    p[0][2] = p[2][0] = p[1][1] = p[3][3] = 1;
    QForm g = apply_unimodular(d, p);
    std::multiset<Rat> before, after;
    for (int i = 0; i < 4; ++i) {
        before.insert(d.gram[i][i]);
        after.insert(g.gram[i][i]);
    }
    CHECK(before == after);
}

TEST_CASE("d_value exact and enclosed cases") {
    ShiftedInstance q1 = critical_instance(CriticalForm::Q1);
    Enclosure d1 = d_value(q1);
    CHECK(d1.is_point());
    CHECK(d1.lo == Rat(1, 2));

    ShiftedInstance q2 = critical_instance(CriticalForm::Q2);
    Enclosure d2 = d_value(q2);
    CHECK(d2.is_point());
    CHECK(d2.lo == Rat(1));

    ShiftedInstance q1g(q1.form, q1.shift, Rat(32, 3));
    Enclosure d3 = d_value(q1g);
    // (32/3 * 1/256)^(1/5) = (1/24)^(1/5), irrational: check by powering
    CHECK(pow_rat(d3.lo, 5) <= Rat(1, 24));
    CHECK(pow_rat(d3.hi, 5) >= Rat(1, 24));
    CHECK(d3.width() <= Rat(1, 1 << 24));
}

TEST_CASE("witness exact re-check") {
    ShiftedInstance q2 = critical_instance(CriticalForm::Q2);
    Witness w = Witness::checked(q2, {Int(1), Int(1), Int(0), Int(0), Int(0)});
    CHECK(w.value == Rat(1));
    CHECK(w.equality);  // 1^5 == 8 * (1/8)
    CHECK_THROWS(Witness::checked(q2, {Int(0), Int(0), Int(0), Int(0), Int(0)}));
    CHECK_THROWS(Witness::checked(q2, {Int(2), Int(1), Int(0), Int(0), Int(0)}));
}

TEST_CASE("shift normalization into (-1/2, 1/2]") {
    ShiftedInstance inst(critical_instance(CriticalForm::Q2).form,
                         {Rat(3, 4), Rat(-1, 2), Rat(7, 2), Rat(0), Rat(1, 2)}, Rat(8));
    CHECK(inst.shift[0] == Rat(-1, 4));
    CHECK(inst.shift[1] == Rat(1, 2));
    CHECK(inst.shift[2] == Rat(1, 2));
    CHECK(inst.shift[3] == Rat(0));
    CHECK(inst.shift[4] == Rat(1, 2));
}
