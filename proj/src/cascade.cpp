#include "gamma14/cascade.hpp"

#include <algorithm>
#include <sstream>

namespace gamma14 {

std::string branch_name(CaseLabel::Branch b) {
    switch (b) {
        case CaseLabel::Branch::C2NonIntegral: return "c2-nonintegral";
        case CaseLabel::Branch::AEq1: return "a-eq-1";
        case CaseLabel::Branch::AHalf: return "a-half";
        case CaseLabel::Branch::MK: return "mk";
        case CaseLabel::Branch::Exceptional821: return "mk21-exceptional";
        case CaseLabel::Branch::Unclassified: return "unclassified";
    }
    return "?";
}

CaseLabel classify(const CaseParams& cp, const BirchForm& bf, const RatVec& s) {
    CaseLabel lbl;
    lbl.gamma_used = Rat(8);
    if (cp.gamma != Rat(8)) throw std::invalid_argument("classify: params must be taken at gamma = 8");
    if (centered_mod1(s[1]) != 0) {
        lbl.branch = CaseLabel::Branch::C2NonIntegral;
        return lbl;
    }
    // a + d = 1 sits on the boundary between the a >= 1/2 branches and the m,K cascade
    lbl.boundary_a_plus_d = (cp.d.cmp(Rat(1) - bf.a, Rat(0), Rat(1)) == Ordering::Equal);
    if (bf.a >= Rat(1, 2)) {
        if (bf.a == 1 && cp.d.pow5 == 1)
            lbl.branch = CaseLabel::Branch::AEq1;
        else
            lbl.branch = CaseLabel::Branch::AHalf;
        return lbl;
    }
    lbl.m = cp.m;
    lbl.K = cp.K;
    lbl.branch = CaseLabel::Branch::MK;
    if (cp.m >= 3 || (cp.m == 2 && cp.K >= 3)) {
        return lbl;  // gamma 8
    }
    if (cp.m == 2 && cp.K == 1) {
        bool shape = bf.A == Rat(1, 3) && bf.t == Rat(1, 4) && bf.lambda == Rat(1, 2) &&
                     cp.a5pp == 0 && centered_mod1(s[4]) == 0;
        // d + 6 d^5 <= 2/3  <=>  d <= 2/3 - 6 d^5
        bool small_d = shape && cp.d.cmp(Rat(2, 3) - 6 * cp.d.pow5, Rat(0), Rat(1)) !=
                                    Ordering::Less;
        if (small_d) {
            lbl.branch = CaseLabel::Branch::Exceptional821;
            lbl.gamma_used = rat(8486, 1000);
        }
        return lbl;
    }
    if ((cp.m == 2 && cp.K == 2) || (cp.m == 1 && (cp.K == 1 || cp.K == 2))) {
        lbl.gamma_used = Rat(32, 3);
        return lbl;
    }
    lbl.branch = CaseLabel::Branch::Unclassified;
    return lbl;
}

namespace {

struct Ctx {
    const ShiftedInstance* orig;
    BirchForm bf;
    RatVec s;          // birch-coordinate shift, centered
    IntVec n0;         // U^{-1} c = s + n0
    CaseParams cp;
    CascadeTrace trace;

    void step(const std::string& stage, const std::string& route, const std::string& detail) {
        trace.steps.push_back({stage, route, detail});
    }
};

// map a birch-coordinate point y (= s mod 1) back to original integer coords
IntVec map_back(const Ctx& cx, const RatVec& y) {
    IntVec z(5);
    for (int i = 0; i < 5; ++i) {
        Rat diff = y[i] - cx.s[i];
        if (!is_integer(diff)) throw std::logic_error("map_back: non-congruent witness");
        z[i] = diff.get_num() - cx.n0[i];
    }
    return mat_vec(cx.bf.U, z);
}

std::optional<Witness> finish(Ctx& cx, const RatVec& y, const std::string& stage,
                              const std::string& route) {
    IntVec x = map_back(cx, y);
    Rat v = cx.orig->value_at(x);
    if (v <= 0) return std::nullopt;
    Ordering o = cmp_to_bound(v, *cx.orig);
    if (o == Ordering::Greater) return std::nullopt;
    std::ostringstream os;
    os << "value " << rat_str(v) << (o == Ordering::Equal ? " (equality)" : "");
    cx.step(stage, route, os.str());
    return Witness{x, v, o == Ordering::Equal};
}

Rat phi_eval(const Ctx& cx, const Rat& y3, const Rat& y4, const Rat& y5) {
    return cx.bf.phi.evaluate({y3, y4, y5});
}

// ---- lift chain -------------------------------------------------------------

// given (y1, y2) solving the H window, recover y5, y4, y3 by squeezes
std::optional<RatVec> lift_from_H(Ctx& cx, const Rat& y1, const Rat& y2) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    try {
        // y5: G = -t (y5 - a5'' y2 / 2t)^2 + (y1 + a2''' y2) y2 - (a+A)/4
        Rat w = (y1 + cp.a2ppp_raw * y2) * y2;
        Rat beta5 = (w - (bf.a + bf.A) / 4) / bf.t;
        Rat alpha5 = -cp.a5pp_raw * y2 / (2 * bf.t);
        auto s5 = squeeze_solve_rootbound(alpha5, beta5, cx.s[4], cp.delta_mK_off / bf.t,
                                          Rat(1) / bf.t, cp.d, cp.L);
        Rat y5 = s5.x;
        cx.step("G", "squeeze", "x5 = " + rat_str(y5));
        // y4: F = -A (y4 - a4' y2/2A + lambda y5)^2 + (y1 + a2'' y2 + a5'' y5) y2 - t y5^2 - a/4
        Rat w2 = (y1 + cp.a2pp_raw * y2 + cp.a5pp_raw * y5) * y2 - bf.t * y5 * y5;
        Rat beta4 = (w2 - bf.a / 4) / bf.A;
        Rat alpha4 = -cp.a4p_raw * y2 / (2 * bf.A) + bf.lambda * y5;
        auto s4 = squeeze_solve_rootbound(alpha4, beta4, cx.s[3], cp.delta_m_off / bf.A,
                                          Rat(1) / bf.A, cp.d, cp.K);
        Rat y4 = s4.x;
        cx.step("F", "squeeze", "x4 = " + rat_str(y4));
        // y3: Q = -a (y3 - a3 y2/2a + h4 y4 + h5 y5)^2 + (y1 + a2' y2 + a4' y4 + a5' y5) y2
        //          - A (y4 + lambda y5)^2 - t y5^2
        Rat w3 = (y1 + cp.a2p_raw * y2 + cp.a4p_raw * y4 + cp.a5p_raw * y5) * y2 -
                 bf.A * (y4 + bf.lambda * y5) * (y4 + bf.lambda * y5) - bf.t * y5 * y5;
        Rat beta3 = w3 / bf.a;
        Rat alpha3 = -bf.a3 * y2 / (2 * bf.a) + bf.h4 * y4 + bf.h5 * y5;
        auto s3 = squeeze_solve_rootbound(alpha3, beta3, cx.s[2], Rat(0), Rat(1) / bf.a, cp.d,
                                          cp.m);
        cx.step("Q", "squeeze", "x3 = " + rat_str(s3.x));
        return RatVec{y1, y2, s3.x, y4, y5};
    } catch (const HypothesisFails&) {
        return std::nullopt;
    }
}

// given (y1, y2, y5) solving the G window, recover y4, y3
std::optional<RatVec> lift_from_G(Ctx& cx, const Rat& y1, const Rat& y2, const Rat& y5) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    try {
        Rat w2 = (y1 + cp.a2pp_raw * y2 + cp.a5pp_raw * y5) * y2 - bf.t * y5 * y5;
        Rat beta4 = (w2 - bf.a / 4) / bf.A;
        Rat alpha4 = -cp.a4p_raw * y2 / (2 * bf.A) + bf.lambda * y5;
        auto s4 = squeeze_solve_rootbound(alpha4, beta4, cx.s[3], cp.delta_m_off / bf.A,
                                          Rat(1) / bf.A, cp.d, cp.K);
        Rat y4 = s4.x;
        cx.step("F", "squeeze", "x4 = " + rat_str(y4));
        Rat w3 = (y1 + cp.a2p_raw * y2 + cp.a4p_raw * y4 + cp.a5p_raw * y5) * y2 -
                 bf.A * (y4 + bf.lambda * y5) * (y4 + bf.lambda * y5) - bf.t * y5 * y5;
        Rat beta3 = w3 / bf.a;
        Rat alpha3 = -bf.a3 * y2 / (2 * bf.a) + bf.h4 * y4 + bf.h5 * y5;
        auto s3 = squeeze_solve_rootbound(alpha3, beta3, cx.s[2], Rat(0), Rat(1) / bf.a, cp.d,
                                          cp.m);
        cx.step("Q", "squeeze", "x3 = " + rat_str(s3.x));
        return RatVec{y1, y2, s3.x, y4, y5};
    } catch (const HypothesisFails&) {
        return std::nullopt;
    }
}

// given (y1, y2, y4) solving the G* window, recover y5 (via C, M) then y3
std::optional<RatVec> lift_from_Gstar(Ctx& cx, const Rat& y1, const Rat& y2, const Rat& y4) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    if (cp.M < 1) return std::nullopt;
    try {
        // F = -C (y5 + A lambda y4 / C - a5' y2 / 2C)^2 + (y1 + a2* y2 + a4* y4) y2
        //      - (A t / C) y4^2 - a/4
        Rat w = (y1 + cp.a2star_raw * y2 + cp.a4star_raw * y4) * y2 -
                bf.A * bf.t / cp.Cval * y4 * y4;
        Rat beta5 = (w - bf.a / 4) / cp.Cval;
        Rat alpha5 = bf.A * bf.lambda * y4 / cp.Cval - cp.a5p_raw * y2 / (2 * cp.Cval);
        auto s5 = squeeze_solve_rootbound(alpha5, beta5, cx.s[4], cp.delta_m_off / cp.Cval,
                                          Rat(1) / cp.Cval, cp.d, cp.M);
        Rat y5 = s5.x;
        cx.step("F", "squeeze", "x5 = " + rat_str(y5) + " (via C-completion)");
        Rat w3 = (y1 + cp.a2p_raw * y2 + cp.a4p_raw * y4 + cp.a5p_raw * y5) * y2 -
                 bf.A * (y4 + bf.lambda * y5) * (y4 + bf.lambda * y5) - bf.t * y5 * y5;
        Rat beta3 = w3 / bf.a;
        Rat alpha3 = -bf.a3 * y2 / (2 * bf.a) + bf.h4 * y4 + bf.h5 * y5;
        auto s3 = squeeze_solve_rootbound(alpha3, beta3, cx.s[2], Rat(0), Rat(1) / bf.a, cp.d,
                                          cp.m);
        cx.step("Q", "squeeze", "x3 = " + rat_str(s3.x));
        return RatVec{y1, y2, s3.x, y4, y5};
    } catch (const HypothesisFails&) {
        return std::nullopt;
    }
}

// ---- stage routes -----------------------------------------------------------

// Route: whole form through the product window (x3, x4, x5 pinned to shifts).
std::optional<Witness> route_trivial_Q(Ctx& cx) {
    const auto& bf = cx.bf;
    Rat w = bf.a3 * cx.s[2] + bf.a4 * cx.s[3] + bf.a5 * cx.s[4];
    Rat phi0 = phi_eval(cx, cx.s[2], cx.s[3], cx.s[4]);
    try {
        auto tw = trivial_solve_rootbound(bf.a2, w, -phi0, Rat(0), Rat(1), cx.cp.d, cx.s[0],
                                          cx.s[1]);
        cx.step("Q", "trivial", "x2 = " + rat_str(tw.x2));
        RatVec y{tw.x1, tw.x2, cx.s[2], cx.s[3], cx.s[4]};
        return finish(cx, y, "Q", "trivial");
    } catch (const HypothesisFails&) {
        return std::nullopt;
    }
}

// Route: innermost two-variable window, then three squeezes outward.
std::optional<Witness> route_H(Ctx& cx) {
    const auto& cp = cx.cp;
    if (cp.m < 1 || cp.K < 1 || cp.L < 1) return std::nullopt;
    try {
        auto tw = trivial_solve_rootbound(cp.a2ppp, Rat(0), -(cx.bf.a + cx.bf.A + cx.bf.t) / 4,
                                          cp.delta_mKL_off, Rat(1), cp.d, cx.s[0], cx.s[1]);
        cx.step("H", "trivial", "H value " + rat_str(tw.value));
        auto y = lift_from_H(cx, tw.x1, tw.x2);
        if (!y) return std::nullopt;
        return finish(cx, *y, "H", "trivial+squeeze");
    } catch (const HypothesisFails&) {
        return std::nullopt;
    }
}

// candidate x2 values congruent to the shift: +-1 when integral, else the two
// smallest representatives
std::vector<Rat> x2_candidates(const Rat& s2) {
    Rat c = centered_mod1(s2);
    if (c == 0) return {Rat(1), Rat(-1)};
    return {c, c - 1, c + 1};
}

// Macbeath pair search: smallest k whose best half-integer h passes the gate
struct PairChoice {
    Rat h;
    long k;
};
std::optional<PairChoice> find_pair(const Rat& alpha, const Rat& gamma_lo, long k_cap) {
    for (long k = 1; k <= k_cap; ++k) {
        Rat target = alpha * Rat(k) * Rat(k);
        // nearest half-integer
        Rat h(floor_rat(2 * target + Rat(1, 2)), 2);
        h.canonicalize();
        for (const Rat& hh : {h, Rat(h + Rat(1, 2)), Rat(h - Rat(1, 2))}) {
            if (abs_rat(hh - target) + Rat(1, 2) < gamma_lo) return PairChoice{hh, k};
        }
    }
    return std::nullopt;
}

// Route: Macbeath on the G stage (y = x5), lifting x4, x3 afterwards.
// For x2 fixed at v the scaled stage value is
//   G(x + s1, v, y + s5)/|v| = sgn(v) x + beta y - alpha y^2 + nu
// with alpha = t/|v|, beta = sgn(v) a5'' - 2 t s5 / |v|, nu = G(s1, v, s5)/|v|.
std::optional<Witness> route_G_macbeath(Ctx& cx) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    if (cp.m < 1 || cp.K < 1) return std::nullopt;
    for (const Rat& v : x2_candidates(cx.s[1])) {
        if (v == 0) continue;
        Rat av = abs_rat(v);
        Rat sgn = v > 0 ? Rat(1) : Rat(-1);
        MacbeathProblem p;
        p.alpha = bf.t / av;
        p.gamma = cp.delta_mK.lo / av;  // rational lower bound of the true window
        auto pair = find_pair(p.alpha, p.gamma, 64);
        if (!pair) continue;
        p.h = pair->h;
        p.k = pair->k;
        p.sign_alpha = -1;
        p.sign_x = 1;  // x runs over all integers; the v-sign is folded in below
        p.beta = sgn * cp.a5pp_raw - 2 * bf.t * cx.s[4] / av;
        Rat g0 = (cx.s[0] + cp.a2pp_raw * v + cp.a5pp_raw * cx.s[4]) * v - bf.t * cx.s[4] * cx.s[4] -
                 (bf.a + bf.A) / 4;
        p.nu = g0 / av;
        auto st = macbeath1_check(p);
        if (st != MacbeathStatus::StrictOK && st != MacbeathStatus::NonStrictOK) continue;
        long y_bound =
            static_cast<long>(ceil_rat(4 * Rat(p.k) * (p.gamma + abs_rat(p.nu) + 1)).get_si());
        try {
            auto mw = macbeath1_solve(p, y_bound);
            Rat y1 = cx.s[0] + Rat(mw.x) * sgn;
            Rat y5 = cx.s[4] + Rat(mw.y);
            cx.step("G", "macbeath1",
                    "pair (" + rat_str(p.h) + "," + std::to_string(p.k) + ") x2 = " + rat_str(v));
            auto y = lift_from_G(cx, y1, v, y5);
            if (!y) continue;
            auto w = finish(cx, *y, "G", "macbeath1");
            if (w) return w;
        } catch (const HypothesisFails&) {
            continue;
        } catch (const SearchExhausted&) {
            continue;
        }
    }
    return std::nullopt;
}

// Route: Macbeath on the G* stage (y = x4) for lambda != 0 blockers.
std::optional<Witness> route_Gstar_macbeath(Ctx& cx) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    if (cp.m < 1 || cp.M < 1) return std::nullopt;
    Rat coef = bf.A * bf.t / cp.Cval;
    for (const Rat& v : x2_candidates(cx.s[1])) {
        if (v == 0) continue;
        Rat av = abs_rat(v);
        Rat sgn = v > 0 ? Rat(1) : Rat(-1);
        Rat alpha = coef / av;
        Rat gamma_lo = cp.delta_star_mM.lo / av;
        auto pair = find_pair(alpha, gamma_lo, 64);
        if (!pair) continue;
        MacbeathProblem p;
        p.alpha = alpha;
        p.gamma = gamma_lo;
        p.h = pair->h;
        p.k = pair->k;
        p.sign_alpha = -1;
        p.sign_x = 1;
        p.beta = sgn * cp.a4star_raw - 2 * coef * cx.s[3] / av;
        Rat g0 = (cx.s[0] + cp.a2star_raw * v + cp.a4star_raw * cx.s[3]) * v -
                 coef * cx.s[3] * cx.s[3] - bf.a / 4 - cp.Cval / 4;
        p.nu = g0 / av;
        auto st = macbeath1_check(p);
        if (st != MacbeathStatus::StrictOK && st != MacbeathStatus::NonStrictOK) continue;
        long y_bound =
            static_cast<long>(ceil_rat(4 * Rat(p.k) * (p.gamma + abs_rat(p.nu) + 1)).get_si());
        try {
            auto mw = macbeath1_solve(p, y_bound);
            Rat y1 = cx.s[0] + Rat(mw.x) * sgn;
            Rat y4 = cx.s[3] + Rat(mw.y);
            cx.step("G*", "macbeath1",
                    "pair (" + rat_str(p.h) + "," + std::to_string(p.k) + ") x2 = " + rat_str(v));
            auto y = lift_from_Gstar(cx, y1, v, y4);
            if (!y) continue;
            auto w = finish(cx, *y, "G*", "macbeath1");
            if (w) return w;
        } catch (const HypothesisFails&) {
            continue;
        } catch (const SearchExhausted&) {
            continue;
        }
    }
    return std::nullopt;
}

// Route: Jackson window on the G stage followed by lifts.
std::optional<Witness> route_G_jackson(Ctx& cx) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    if (cp.m < 1 || cp.K < 1) return std::nullopt;
    // G form (y1, y2, y5): (y1 + a2'' y2 + a5'' y5) y2 - t y5^2, |det| = t/4
    RatMat g(3, RatVec(3, Rat(0)));
    g[0][1] = g[1][0] = Rat(1, 2);
    g[1][1] = cp.a2pp_raw;
    g[1][2] = g[2][1] = cp.a5pp_raw / 2;
    g[2][2] = -bf.t;
    QForm gform(3, g);
    Rat lo = (bf.a + bf.A) / 4;
    Rat hi = lo + cp.delta_mK.lo;
    try {
        auto jw = jackson_solve(gform, lo, hi, {cx.s[0], cx.s[1], cx.s[4]}, 3);
        Rat y1 = cx.s[0] + Rat(jw.x[0]);
        Rat y2 = cx.s[1] + Rat(jw.x[1]);
        Rat y5 = cx.s[4] + Rat(jw.x[2]);
        cx.step("G", "jackson", "window (" + rat_str(lo) + ", " + rat_str(hi) + "]");
        auto y = lift_from_G(cx, y1, y2, y5);
        if (!y) return std::nullopt;
        return finish(cx, *y, "G", "jackson");
    } catch (const HypothesisFails&) {
        return std::nullopt;
    } catch (const SearchExhausted&) {
        return std::nullopt;
    }
}

// Route: Macbeath at the Q stage on y3 (x4, x5 pinned to their shifts).
std::optional<Witness> route_Q_macbeath(Ctx& cx) {
    const auto& bf = cx.bf;
    const auto& cp = cx.cp;
    Rat y4 = cx.s[3], y5 = cx.s[4];
    for (const Rat& v : x2_candidates(cx.s[1])) {
        if (v == 0) continue;
        Rat av = abs_rat(v);
        Rat sgn = v > 0 ? Rat(1) : Rat(-1);
        Rat alpha = bf.a / av;
        Rat gamma_lo = cp.d.enc.lo / av;
        auto pair = find_pair(alpha, gamma_lo, 64);
        if (!pair) continue;
        MacbeathProblem p;
        p.alpha = alpha;
        p.gamma = gamma_lo;
        p.h = pair->h;
        p.k = pair->k;
        p.sign_alpha = -1;
        p.sign_x = 1;
        p.beta = sgn * bf.a3 - 2 * bf.a * (cx.s[2] + bf.h4 * y4 + bf.h5 * y5) / av;
        // at x = y = 0 the scaled value is Q(s1, v, s3, y4, y5)/|v|
        Rat q0 = (cx.s[0] + bf.a2 * v + bf.a3 * cx.s[2] + bf.a4 * y4 + bf.a5 * y5) * v -
                 phi_eval(cx, cx.s[2], y4, y5);
        p.nu = q0 / av;
        auto st = macbeath1_check(p);
        if (st != MacbeathStatus::StrictOK && st != MacbeathStatus::NonStrictOK) continue;
        long y_bound =
            static_cast<long>(ceil_rat(4 * Rat(p.k) * (p.gamma + abs_rat(p.nu) + 1)).get_si());
        try {
            auto mw = macbeath1_solve(p, y_bound);
            RatVec y{cx.s[0] + Rat(mw.x) * sgn, v, cx.s[2] + Rat(mw.y), y4, y5};
            cx.step("Q", "macbeath1",
                    "pair (" + rat_str(p.h) + "," + std::to_string(p.k) + ") x2 = " + rat_str(v));
            auto w = finish(cx, y, "Q", "macbeath1");
            if (w) return w;
        } catch (const HypothesisFails&) {
            continue;
        } catch (const SearchExhausted&) {
            continue;
        }
    }
    return std::nullopt;
}

std::optional<Witness> route_oracle(Ctx& cx) {
    for (long box : {3L, 5L, 8L, 10L}) {
        BruteResult br = brute_search(*cx.orig, SearchBox::cube(5, box));
        if (!br.min_positive) continue;
        Ordering o = cmp_to_bound(*br.min_positive, *cx.orig);
        if (o == Ordering::Greater) continue;
        cx.step("oracle", "brute", "box " + std::to_string(box) + " min " +
                                       rat_str(*br.min_positive));
        return Witness{br.argmins.front(), *br.min_positive, o == Ordering::Equal};
    }
    return std::nullopt;
}

}  // namespace

Rat recommended_gamma(const ShiftedInstance& inst) {
    IntVec iso = find_isotropic(inst.form);
    BirchForm bf = birch_reduce(inst.form, iso);
    IntMat uinv = mat_inverse_unimodular(bf.U);
    RatVec uc = mat_vec(uinv, inst.shift);
    RatVec s(5);
    for (int i = 0; i < 5; ++i) s[i] = centered_mod1(uc[i]);
    CaseParams cp8 = case_params(bf, Rat(8));
    return classify(cp8, bf, s).gamma_used;
}

SolveResult solve_instance(const ShiftedInstance& inst) {
    if (inst.form.n != 5) throw std::invalid_argument("solve_instance: needs a 5-variable form");
    Rat det = determinant(inst.form);
    if (det == 0) throw std::invalid_argument("solve_instance: singular form");
    auto sig = signature(inst.form);
    if (sig.first != 1 || sig.second != 4)
        throw std::invalid_argument("solve_instance: form is not of type (1,4)");

    SolveResult res;
    Ctx cx;
    cx.orig = &inst;
    IntVec iso;
    try {
        iso = find_isotropic(inst.form, 25);
    } catch (const IsotropicNotFound&) {
        // rational zero form guaranteed in theory; fall back to pure brute force
        for (long box : {5L, 8L, 10L}) {
            BruteResult br = brute_search(inst, SearchBox::cube(5, box));
            if (br.min_positive && cmp_to_bound(*br.min_positive, inst) != Ordering::Greater) {
                Ordering o = cmp_to_bound(*br.min_positive, inst);
                res.witness = Witness{br.argmins.front(), *br.min_positive, o == Ordering::Equal};
                res.outcome = o == Ordering::Equal ? SolveOutcome::Equality : SolveOutcome::Strict;
                res.trace.steps.push_back({"oracle", "brute", "isotropic search exhausted"});
                return res;
            }
        }
        res.outcome = SolveOutcome::NoWitnessInBox;
        return res;
    }

    cx.bf = birch_reduce(inst.form, iso);
    IntMat uinv = mat_inverse_unimodular(cx.bf.U);
    RatVec uc = mat_vec(uinv, inst.shift);
    cx.s.resize(5);
    cx.n0.resize(5);
    for (int i = 0; i < 5; ++i) {
        cx.s[i] = centered_mod1(uc[i]);
        cx.n0[i] = Rat(uc[i] - cx.s[i]).get_num();
    }
    CaseParams cp8 = case_params(cx.bf, Rat(8));
    cx.trace.label = classify(cp8, cx.bf, cx.s);
    cx.cp = inst.gamma == Rat(8) ? cp8 : case_params(cx.bf, inst.gamma);

    std::optional<Witness> w;
    if (!w) w = route_trivial_Q(cx);
    if (!w) w = route_H(cx);
    if (!w) w = route_G_macbeath(cx);
    if (!w) w = route_Gstar_macbeath(cx);
    if (!w) w = route_Q_macbeath(cx);
    if (!w) w = route_G_jackson(cx);
    if (!w) w = route_oracle(cx);

    res.trace = cx.trace;
    if (!w) {
        res.outcome = SolveOutcome::NoWitnessInBox;
        return res;
    }
    res.witness = w;
    res.outcome = w->equality ? SolveOutcome::Equality : SolveOutcome::Strict;
    return res;
}

}  // namespace gamma14
