#include "gamma14/lemmas.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gamma14 {

Rat rat_gcd(const Rat& p, const Rat& q) {
    if (p <= 0 || q <= 0) throw std::invalid_argument("rat_gcd: needs positive arguments");
    Int num;
    mpz_gcd(num.get_mpz_t(), Int(p.get_num() * q.get_den()).get_mpz_t(),
            Int(q.get_num() * p.get_den()).get_mpz_t());
    Rat g(num, p.get_den() * q.get_den());
    g.canonicalize();
    return g;
}

namespace {

// generic squeeze: value(x) = beta - (x + alpha)^2 must land in (0, top]
// where "v <= top" is decided by cmp(v) != Greater and "v < top" by Less.
SqueezeWitness squeeze_core(const Rat& alpha, const Rat& beta, const Rat& x0,
                            const std::function<Ordering(const Rat&)>& cmp_top,
                            const char* what) {
    if (beta <= Rat(1, 4)) throw HypothesisFails(std::string(what) + ": beta <= 1/4");
    // candidates: x = x0 + j with (x + alpha)^2 < beta
    Rat c = x0 + alpha;  // need (c + j)^2 < beta
    Int r = isqrt_floor(beta);
    Int jlo = ceil_rat(-c - Rat(r)) - 1, jhi = floor_rat(-c + Rat(r)) + 1;
    std::optional<SqueezeWitness> nonstrict;
    std::vector<Int> js;
    for (Int j = jlo; j <= jhi; ++j) js.push_back(j);
    std::sort(js.begin(), js.end(), [&](const Int& a, const Int& b) {
        Rat da = abs_rat(c + Rat(a)), db = abs_rat(c + Rat(b));
        if (da != db) return da > db;  // larger |x+alpha| first => smaller value...
        return a < b;
    });
    // we want the value in (0, top]; prefer strict (value < top): try candidates
    // in order of decreasing |x+alpha| (increasing value) and return the first fit.
    for (const Int& j : js) {
        Rat x = x0 + Rat(j);
        Rat val = beta - (x + alpha) * (x + alpha);
        if (val <= 0) continue;
        Ordering o = cmp_top(val);
        if (o == Ordering::Less) return SqueezeWitness{x, val, true};
        if (o == Ordering::Equal && !nonstrict) nonstrict = SqueezeWitness{x, val, false};
    }
    if (nonstrict) return *nonstrict;
    throw HypothesisFails(std::string(what) + ": no representative fits the window");
}

}  // namespace

SqueezeWitness squeeze_solve(const SqueezeProblem& p) {
    if (p.gamma < 1) throw std::invalid_argument("squeeze_solve: gamma must be at least 1");
    Int m = ceil_rat(p.gamma) - 1;  // m < gamma <= m+1
    if (Rat(m) == p.gamma) m -= 1;
    if (m < 1) m = 1;  // gamma = 1 boundary: treated as the m = 1 window
    if (p.beta > p.gamma + Rat(m * m) / 4)
        throw HypothesisFails("squeeze_solve: beta > gamma + m^2/4");
    return squeeze_core(p.alpha, p.beta, p.x0,
                        [&](const Rat& v) {
                            int c = cmp(v, p.gamma);
                            return c < 0 ? Ordering::Less
                                         : c > 0 ? Ordering::Greater : Ordering::Equal;
                        },
                        "squeeze_solve");
}

SqueezeWitness squeeze_solve_rootbound(const Rat& alpha, const Rat& beta, const Rat& x0,
                                       const Rat& gq, const Rat& gr, const DRoot& d,
                                       int mbound) {
    if (mbound < 1) throw std::invalid_argument("squeeze_solve_rootbound: m must be >= 1");
    // hypothesis beta <= (gq + gr d) + m^2/4 decided exactly
    if (d.cmp(beta - Rat(mbound * mbound) / 4, gq, gr) == Ordering::Greater)
        throw HypothesisFails("squeeze_solve_rootbound: beta > gamma + m^2/4");
    return squeeze_core(alpha, beta, x0,
                        [&](const Rat& v) { return d.cmp(v, gq, gr); },
                        "squeeze_solve_rootbound");
}

JacksonWitness jackson_solve(const QForm& form, const Rat& alpha, const Rat& beta,
                             const RatVec& shift, long box) {
    Rat absd = abs_rat(determinant(form));
    Rat half_window = (beta - alpha) / 2;
    if (half_window <= 0 ||
        cmp_to_root(half_window, static_cast<unsigned>(form.n), absd) == Ordering::Less)
        throw HypothesisFails("jackson_solve: beta - alpha < 2 |D|^(1/n)");
    int n = form.n;
    IntVec x(n, Int(0));
    std::optional<JacksonWitness> nonstrict;
    long b = box;
    for (int esc = 0; esc <= 4; ++esc, b *= 2) {
        std::optional<JacksonWitness> found;
        std::function<bool(int)> rec = [&](int pos) -> bool {
            if (pos == n) {
                RatVec p(n);
                for (int i = 0; i < n; ++i) p[i] = Rat(x[i]) + shift[i];
                Rat v = form.evaluate(p);
                if (v <= alpha) return false;
                if (v < beta) {
                    found = JacksonWitness{x, v, true};
                    return true;
                }
                if (v == beta && !nonstrict) nonstrict = JacksonWitness{x, v, false};
                return false;
            }
            for (long c = -b; c <= b; ++c) {
                x[pos] = c;
                if (rec(pos + 1)) return true;
            }
            return false;
        };
        if (rec(0)) return *found;
        if (nonstrict) return *nonstrict;
    }
    throw SearchExhausted("jackson_solve: no witness within escalated box " + std::to_string(b / 2));
}

MacbeathStatus macbeath1_check(const MacbeathProblem& p) {
    if (p.alpha <= 0 || p.gamma <= 0)
        throw std::invalid_argument("macbeath1_check: needs alpha > 0, gamma > 0");
    if (!is_integer(2 * p.h)) throw std::invalid_argument("macbeath1_check: 2h must be integral");
    if (p.k < 1) throw std::invalid_argument("macbeath1_check: k must be >= 1");
    Rat cond = abs_rat(p.h - Rat(p.k) * Rat(p.k) * p.alpha) + Rat(1, 2);
    if (cond > p.gamma) return MacbeathStatus::HypothesisFails;
    bool alpha_matches = (p.alpha == p.h / Rat(p.k * p.k));
    if (alpha_matches) {
        Rat g = rat_gcd(Rat(1, p.k), 2 * p.alpha);
        Rat diff = p.beta - p.h / Rat(p.k);
        if (is_integer(diff / g)) return MacbeathStatus::ExceptionalPair;
    }
    return cond < p.gamma ? MacbeathStatus::StrictOK : MacbeathStatus::NonStrictOK;
}

MacbeathWitness macbeath1_solve(const MacbeathProblem& p, long y_bound) {
    MacbeathStatus st = macbeath1_check(p);
    if (st == MacbeathStatus::HypothesisFails)
        throw HypothesisFails("macbeath1_solve: |h - k^2 alpha| + 1/2 > gamma");
    if (st == MacbeathStatus::ExceptionalPair)
        throw HypothesisFails("macbeath1_solve: exceptional pair");
    std::optional<MacbeathWitness> nonstrict;
    for (long ay = 0; ay <= y_bound; ++ay) {
        for (int sy = (ay == 0 ? 1 : 0); sy < 2; ++sy) {
            Int y = sy == 0 ? Int(-ay) : Int(ay);
            Rat w = p.beta * Rat(y) + Rat(p.sign_alpha) * p.alpha * Rat(y) * Rat(y) + p.nu;
            // need sign_x * x in (-w, gamma - w]; x integer
            // equivalently u in (-w, gamma - w], u = sign_x * x
            Int ulo = floor_rat(-w) + 1;           // smallest integer > -w
            Int uhi = floor_rat(p.gamma - w);      // largest integer <= gamma - w
            for (Int u = ulo; u <= uhi; ++u) {
                Rat val = Rat(u) + w;
                if (val <= 0) continue;
                Int x = p.sign_x > 0 ? u : Int(-u);
                if (val < p.gamma) return MacbeathWitness{x, y, val, true};
                if (!nonstrict) nonstrict = MacbeathWitness{x, y, val, false};
            }
        }
    }
    if (nonstrict) return *nonstrict;
    throw SearchExhausted("macbeath1_solve: no witness with |y| <= " + std::to_string(y_bound));
}

Macbeath2Status macbeath2_check(const Rat& t, const Rat& beta, const Rat& d, const Int& h,
                                long k) {
    if (t <= 0 || d <= 0) throw std::invalid_argument("macbeath2_check: needs t > 0, d > 0");
    if (k < 1) throw std::invalid_argument("macbeath2_check: k must be >= 1");
    Rat half_d = d / 2;
    if (abs_rat(Rat(h) - Rat(k) * Rat(k) * t) > half_d * half_d * half_d)
        return Macbeath2Status::HypothesisFails;
    if (t == Rat(h) / Rat(k * k)) {
        // beta = p/q with q <= 2/d?
        if (Rat(beta.get_den()) <= 2 / d) return Macbeath2Status::ExceptionalRational;
    }
    return Macbeath2Status::OK;
}

namespace {

TrivialWitness trivial_core(const Rat& alpha, const Rat& nu, const Rat& beta, const Rat& c1,
                            const Rat& c2, const std::function<Ordering(const Rat&)>& cmp_top,
                            const char* what) {
    // pick x2 = c2 (mod 1), smallest nonzero magnitude
    Rat x2 = centered_mod1(c2);
    if (x2 == 0) x2 = Rat(1);
    // value(x1) = (x1 + alpha x2 + nu) x2 + beta, steps of |x2| as x1 runs over c1 + Z
    Rat base = (alpha * x2 + nu) * x2 + beta;
    Rat step = x2;  // value = x1 * x2 + base
    // smallest value > 0: x1 * step > -base
    Rat j0 = (-base - c1 * step) / abs_rat(step);  // j such that value > 0 boundary
    Int j = floor_rat(j0) + 1;  // value strictly positive from here on (step sign folded below)
    // iterate a few representatives upward in value
    for (int it = 0; it < 4; ++it, ++j) {
        Rat x1 = step > 0 ? Rat(c1 + Rat(j)) : Rat(c1 - Rat(j));
        Rat val = x1 * step + base;
        if (val <= 0) continue;
        Ordering o = cmp_top(val);
        if (o != Ordering::Greater)
            return TrivialWitness{x1, x2, val, o == Ordering::Less};
    }
    throw HypothesisFails(std::string(what) + ": window shorter than the step");
}

}  // namespace

TrivialWitness trivial_solve(const Rat& alpha, const Rat& nu, const Rat& beta,
                             const Rat& delta, const Rat& c1, const Rat& c2) {
    bool c2_integral = is_integer(c2);
    if ((c2_integral && delta < 1) || (!c2_integral && delta < Rat(1, 2)))
        throw HypothesisFails("trivial_solve: delta below the solubility threshold");
    return trivial_core(alpha, nu, beta, c1, c2,
                        [&](const Rat& v) {
                            int c = cmp(v, delta);
                            return c < 0 ? Ordering::Less
                                         : c > 0 ? Ordering::Greater : Ordering::Equal;
                        },
                        "trivial_solve");
}

TrivialWitness trivial_solve_rootbound(const Rat& alpha, const Rat& nu, const Rat& beta,
                                       const Rat& dq, const Rat& dr, const DRoot& d,
                                       const Rat& c1, const Rat& c2) {
    bool c2_integral = is_integer(c2);
    Rat threshold = c2_integral ? Rat(1) : Rat(1, 2);
    // hypothesis: dq + dr d >= threshold
    if (d.cmp(threshold, dq, dr) == Ordering::Greater)
        throw HypothesisFails("trivial_solve_rootbound: delta below the solubility threshold");
    return trivial_core(alpha, nu, beta, c1, c2,
                        [&](const Rat& v) { return d.cmp(v, dq, dr); },
                        "trivial_solve_rootbound");
}

namespace {

// alpha = r/2s in lowest terms with r, s positive coprime
std::pair<Int, Int> split_r_2s(const Rat& alpha) {
    if (alpha <= 0) throw std::invalid_argument("residue_candidates: alpha must be positive");
    Int num = alpha.get_num(), den = alpha.get_den();
    if (den % 2 == 0) return {num, den / 2};
    return {2 * num, den};
}

std::vector<Rat> progression_classes(const Rat& start, const Rat& step) {
    // distinct classes mod 1 of start + i*step, folded to |centered| form;
    // they cycle with period den(step)
    std::set<Rat> seen;
    std::vector<Rat> out;
    unsigned long period = mpz_get_ui(step.get_den_mpz_t());
    for (unsigned long i = 0; i < period; ++i) {
        Rat folded = abs_rat(centered_mod1(start + Rat(static_cast<long>(i)) * step));
        if (seen.insert(folded).second) out.push_back(folded);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ResidueCandidate> residue_candidates(const Rat& t_or_A, const Rat& h, long k,
                                                 ResidueVariant variant) {
    auto [r, s] = split_r_2s(t_or_A);
    if (k < 1 || s % k != 0)
        throw std::invalid_argument("residue_candidates: k must be a positive divisor of s");
    if (!is_integer(2 * h)) throw std::invalid_argument("residue_candidates: 2h must be integral");
    Rat v2 = 2 * Rat(s) * h / Rat(k);
    if (!is_integer(v2))
        throw std::invalid_argument("residue_candidates: s h / k not half-integral");
    bool sh_over_k_integral = mpz_even_p(Int(v2.get_num()).get_mpz_t()) != 0;

    Rat inv_r = Rat(1) / Rat(r), half_inv_r = Rat(1) / (2 * Rat(r));
    std::vector<ResidueCandidate> out;
    // case (i): b = 0
    {
        Rat start = sh_over_k_integral ? Rat(0) : half_inv_r;
        for (const Rat& c : progression_classes(start, inv_r))
            out.push_back({Rat(0), c});
    }
    // case (ii): b = 1/2s
    {
        Rat b(1);
        b /= 2 * Rat(s);
        std::vector<Rat> cs;
        if (variant == ResidueVariant::General) {
            Rat start = sh_over_k_integral ? half_inv_r : Rat(0);
            cs = progression_classes(start, inv_r);
        } else {
            // x2 = +-1 only: sparser progressions with step 2/r
            Rat start = sh_over_k_integral ? half_inv_r : inv_r;
            cs = progression_classes(start, 2 * inv_r);
        }
        for (const Rat& c : cs) out.push_back({b, c});
    }
    return out;
}

bool residue_candidate_valid(const Rat& t_or_A, const Rat& h, long k,
                             const ResidueCandidate& cand) {
    Rat g = rat_gcd(Rat(1, k), 2 * t_or_A);
    for (int sign = -1; sign <= 1; sign += 2) {
        Rat diff = Rat(sign) * cand.b - 2 * t_or_A * cand.c - h / Rat(k);
        if (is_integer(diff / g)) return true;
    }
    return false;
}

GStarData gstar_transform(const Rat& a2p, const Rat& a4p, const Rat& a5p, const Rat& A,
                          const Rat& lambda, const Rat& t, const Rat& delta_m_off,
                          const DRoot& d) {
    GStarData g;
    g.C = A * lambda * lambda + t;
    if (g.C <= 0) throw std::invalid_argument("gstar_transform: C must be positive");
    g.a2star = centered_mod1(a2p + a5p * a5p / (4 * g.C));
    g.a4star = centered_mod1(a4p - lambda * A * a5p / g.C);
    g.inner_coef = A * t / g.C;
    g.M = 0;
    for (int m1 = 1; m1 <= 64; ++m1) {
        if (d.cmp(Rat(m1) * g.C - delta_m_off, Rat(0), Rat(1)) != Ordering::Less) {
            g.M = m1 - 1;
            break;
        }
    }
    g.delta_star_off = delta_m_off + Rat(g.M * g.M - 1) * g.C / 4;
    return g;
}

}  // namespace gamma14
