#pragma once

// shared helpers for the test and acceptance suites

#include "gamma14/cascade.hpp"

namespace gamma14::testsupport {

// Random rational zero form of type (1,4): built in the split shape (so an
// isotropic vector exists by construction), entries p/q with |p| <= 4 and
// q <= 4, then scrambled by a unimodular change of basis; shifts have
// denominator <= 12.
inline ShiftedInstance random_zero_instance(Rng& rng, const Rat& gamma) {
    for (;;) {
        RatVec lin(4);
        for (auto& e : lin) e = rng.uniform_rat(Rat(-1), Rat(1), 4);
        RatMat tail(3, RatVec(3, Rat(0)));
        for (int i = 0; i < 3; ++i)
            for (int j = i; j < 3; ++j)
                tail[i][j] = tail[j][i] = i == j
                                              ? rng.uniform_rat(Rat(1, 4), Rat(4), 4)
                                              : rng.uniform_rat(Rat(-1), Rat(1), 4);
        QForm f = make_split_form(lin, tail);
        if (!is_positive_definite(QForm(3, tail))) continue;
        IntMat u = identity_int(5);
        for (int step = 0; step < 6; ++step) {
            int i = static_cast<int>(rng.uniform(0, 4));
            int j = static_cast<int>(rng.uniform(0, 4));
            if (i == j) continue;
            IntMat s = identity_int(5);
            s[i][j] = rng.uniform(-1, 1);
            u = mat_mul(u, s);
        }
        f = apply_unimodular(f, u);
        RatVec shift(5);
        for (auto& c : shift) c = rng.uniform_rat(Rat(-1, 2), Rat(1, 2), 12);
        return ShiftedInstance(f, shift, gamma);
    }
}

}  // namespace gamma14::testsupport
