#include "gamma14/oracle.hpp"

#include <algorithm>
#include <functional>

namespace gamma14 {

namespace {

// Q(x + c) = (u^T Ghat u) / (den_g * den_c^2) with u = den_c * x + chat.
struct ScaledForm {
    int n;
    std::vector<std::vector<Int>> ghat;
    std::vector<Int> chat;
    Int den_g, den_c;

    explicit ScaledForm(const ShiftedInstance& inst) {
        n = inst.form.n;
        den_g = 1;
        for (const auto& row : inst.form.gram)
            for (const auto& e : row) mpz_lcm(den_g.get_mpz_t(), den_g.get_mpz_t(), e.get_den_mpz_t());
        den_c = 1;
        for (const auto& e : inst.shift) mpz_lcm(den_c.get_mpz_t(), den_c.get_mpz_t(), e.get_den_mpz_t());
        ghat.assign(n, std::vector<Int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) ghat[i][j] = Rat(inst.form.gram[i][j] * Rat(den_g)).get_num();
        chat.assign(n, Int(0));
        for (int i = 0; i < n; ++i) chat[i] = Rat(inst.shift[i] * Rat(den_c)).get_num();
    }

    Rat denominator() const { return Rat(den_g * den_c * den_c); }
};

bool fits_int64(const ScaledForm& sf, const SearchBox& box) {
    Int umax(0);
    for (int i = 0; i < sf.n; ++i) {
        Int m = std::max(abs(sf.den_c * box.hi[i] + sf.chat[i]),
                         abs(sf.den_c * box.lo[i] + sf.chat[i]));
        umax = std::max(umax, m);
    }
    Int gmax(0);
    for (const auto& row : sf.ghat)
        for (const auto& e : row) gmax = std::max(gmax, Int(abs(e)));
    Int bound = Int(sf.n) * Int(sf.n) * gmax * umax * umax;
    return bound < (Int(1) << 62);
}

}  // namespace

BruteResult brute_search(const ShiftedInstance& inst, const SearchBox& box) {
    int n = inst.form.n;
    if (static_cast<int>(box.lo.size()) != n || static_cast<int>(box.hi.size()) != n)
        throw std::invalid_argument("brute_search: box dimension mismatch");
    ScaledForm sf(inst);
    BruteResult res;
    Rat den = sf.denominator();

    if (fits_int64(sf, box)) {
        std::vector<std::vector<long>> g(n, std::vector<long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g[i][j] = static_cast<long>(sf.ghat[i][j].get_si());
        std::vector<long> c(n);
        for (int i = 0; i < n; ++i) c[i] = static_cast<long>(sf.chat[i].get_si());
        long dc = static_cast<long>(sf.den_c.get_si());

        long best = 0;
        bool have = false;
        std::vector<IntVec> argmins;
        std::vector<long> u(n);
        std::vector<std::vector<long>> lin(n + 1, std::vector<long>(n, 0));
        std::vector<long> quad(n + 1, 0);
        std::vector<long> xs(n);
        std::function<void(int)> rec = [&](int pos) {
            if (pos == n - 1) {
                long base_q = quad[pos];
                const std::vector<long>& lp = lin[pos];
                long gnn = g[pos][pos];
                for (long x = box.lo[pos]; x <= box.hi[pos]; ++x) {
                    long un = dc * x + c[pos];
                    long v = base_q + (2 * lp[pos] + gnn * un) * un;
                    ++res.points_scanned;
                    if (v <= 0) continue;
                    if (!have || v < best) {
                        best = v;
                        have = true;
                        argmins.clear();
                    }
                    if (v == best) {
                        xs[pos] = x;
                        IntVec w(n);
                        for (int i = 0; i < n; ++i) w[i] = xs[i];
                        argmins.push_back(w);
                    }
                }
                return;
            }
            for (long x = box.lo[pos]; x <= box.hi[pos]; ++x) {
                long up = dc * x + c[pos];
                u[pos] = up;
                xs[pos] = x;
                quad[pos + 1] = quad[pos] + (2 * lin[pos][pos] + g[pos][pos] * up) * up;
                for (int j = 0; j < n; ++j) lin[pos + 1][j] = lin[pos][j] + g[pos][j] * up;
                rec(pos + 1);
            }
        };
        rec(0);
        if (have) {
            res.min_positive = Rat(best) / den;
            res.min_positive->canonicalize();
            std::sort(argmins.begin(), argmins.end());
            res.argmins = std::move(argmins);
        }
        return res;
    }

    // big-integer fallback
    std::optional<Int> best;
    std::vector<IntVec> argmins;
    IntVec xs(n, Int(0));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == n) {
            IntVec u(n);
            for (int i = 0; i < n; ++i) u[i] = sf.den_c * xs[i] + sf.chat[i];
            Int v(0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) v += sf.ghat[i][j] * u[i] * u[j];
            ++res.points_scanned;
            if (v <= 0) return;
            if (!best || v < *best) {
                best = v;
                argmins.clear();
            }
            if (v == *best) argmins.push_back(xs);
            return;
        }
        for (long x = box.lo[pos]; x <= box.hi[pos]; ++x) {
            xs[pos] = x;
            rec(pos + 1);
        }
    };
    rec(0);
    if (best) {
        res.min_positive = Rat(*best) / den;
        res.min_positive->canonicalize();
        std::sort(argmins.begin(), argmins.end());
        res.argmins = std::move(argmins);
    }
    return res;
}

Rat range_quantity(RangeKind kind, int n, const Rat& c1, const Rat& a2v) {
    Rat n2 = Rat(n) * Rat(n);
    switch (kind) {
        case RangeKind::F: return Rat(n) * abs_rat(c1) + n2 * a2v;
        case RangeKind::G: return -Rat(n) * abs_rat(c1) + n2 * a2v;
        case RangeKind::P: return Rat(n) * c1 + n2 * a2v;
        case RangeKind::Q: return -Rat(n) * c1 + n2 * a2v;
    }
    throw std::logic_error("range_quantity: bad kind");
}

namespace {

QForm critical_form(CriticalForm id) {
    auto q = [](long n, long d) { return Rat(n, d); };
    switch (id) {
        case CriticalForm::Q1:
            // (x1 - 1/4 x2) x2 - 1/4 (x3^2 + x4^2 + x5^2)
            return make_split_form({q(-1, 4), 0, 0, 0},
                                   {{q(1, 4), 0, 0}, {0, q(1, 4), 0}, {0, 0, q(1, 4)}});
        case CriticalForm::Q2:
            // x1 x2 - (x3^2+x4^2+x5^2) - (x3 x4 + x3 x5 + x4 x5)
            return make_split_form({0, 0, 0, 0},
                                   {{1, q(1, 2), q(1, 2)}, {q(1, 2), 1, q(1, 2)}, {q(1, 2), q(1, 2), 1}});
        case CriticalForm::Q3:
            return make_split_form({q(1, 2), 0, 0, 0},
                                   {{1, q(1, 2), q(1, 2)}, {q(1, 2), 1, q(1, 2)}, {q(1, 2), q(1, 2), 1}});
        case CriticalForm::Q4:
            // (x1 + 1/2 x3 + 1/2 x4) x2 - 1/2 x3^2 - 1/2 x4^2 - 2 x5^2
            return make_split_form({0, q(1, 2), q(1, 2), 0},
                                   {{q(1, 2), 0, 0}, {0, q(1, 2), 0}, {0, 0, 2}});
        case CriticalForm::Q5:
            return make_split_form({q(1, 2), q(1, 2), q(1, 2), 0},
                                   {{q(1, 2), 0, 0}, {0, q(1, 2), 0}, {0, 0, 2}});
        case CriticalForm::Q6:
            // (x1 + 1/2 x2 + 1/2 x3) x2 - 1/2 x3^2 - x4^2 - x5^2
            return make_split_form({q(1, 2), q(1, 2), 0, 0},
                                   {{q(1, 2), 0, 0}, {0, 1, 0}, {0, 0, 1}});
    }
    throw std::logic_error("critical_form: bad id");
}

RatVec critical_shift(CriticalForm id) {
    Rat h(1, 2);
    switch (id) {
        case CriticalForm::Q1: return {h, h, h, h, h};
        case CriticalForm::Q2: return {0, 0, 0, 0, 0};
        case CriticalForm::Q3: return {h, 0, 0, 0, 0};
        case CriticalForm::Q4: return {0, 0, 0, 0, 0};
        case CriticalForm::Q5: return {h, 0, 0, 0, 0};
        case CriticalForm::Q6: return {0, 0, 0, h, h};
    }
    throw std::logic_error("critical_shift: bad id");
}

std::vector<ResidueSweep> critical_sweeps(CriticalForm id) {
    auto all = std::vector<int>{};
    auto even = std::vector<int>{0};
    auto odd = std::vector<int>{1};
    switch (id) {
        case CriticalForm::Q1:
            // 16 Q1(x+c) = 0 (mod 8) over every class mod 2
            return {{2, 16, 8, 0, {}}};
        case CriticalForm::Q2:
            // integer values
            return {{1, 1, 1, 0, {}}};
        case CriticalForm::Q3:
        case CriticalForm::Q4:
            return {{2, 8, 8, 0, {}}};
        case CriticalForm::Q5: {
            // x2 odd: integer values (mod-8 sweep); x2 even: 2 Q5(x+c) mod 4
            // depends on the parities of x2/2, x3, x4 and stays >= 1 on each class
            auto e4 = std::vector<int>{0, 2};
            auto o4 = std::vector<int>{1, 3};
            return {{2, 8, 8, 0, {all, odd, all, all, all}},
                    {2, 2, 4, 3, {all, even, odd, even, all}},
                    {2, 2, 4, 3, {all, even, even, odd, all}},
                    {4, 2, 4, 2, {{}, {2}, e4, e4, {}}},
                    {4, 2, 4, 0, {{}, {0}, e4, e4, {}}},
                    {4, 2, 4, 0, {{}, {2}, o4, o4, {}}},
                    {4, 2, 4, 2, {{}, {0}, o4, o4, {}}}};
        }
        case CriticalForm::Q6:
            // (i) x2 odd, (ii) x2 even & x3 odd: integer values;
            // (iii) x2, x3 even: 2 Q6(x+c) = 3 (mod 4), so values lie in 2Z - 1/2
            return {{2, 8, 8, 0, {all, odd, all, all, all}},
                    {2, 8, 8, 0, {all, even, odd, all, all}},
                    {2, 2, 4, 3, {all, even, even, all, all}}};
    }
    throw std::logic_error("critical_sweeps: bad id");
}

}  // namespace

ShiftedInstance critical_instance(CriticalForm id) {
    return ShiftedInstance(critical_form(id), critical_shift(id), Rat(8));
}

std::string critical_name(CriticalForm id) {
    switch (id) {
        case CriticalForm::Q1: return "Q1";
        case CriticalForm::Q2: return "Q2";
        case CriticalForm::Q3: return "Q3";
        case CriticalForm::Q4: return "Q4";
        case CriticalForm::Q5: return "Q5";
        case CriticalForm::Q6: return "Q6";
    }
    return "?";
}

bool run_residue_sweep(const ShiftedInstance& inst, const ResidueSweep& sweep,
                       std::string* diagnostic, unsigned long long* classes_checked) {
    int n = inst.form.n;
    auto fail = [&](const std::string& msg) {
        if (diagnostic) *diagnostic = msg;
        return false;
    };
    // polynomial P(x) = scale * Q(x + c): check integrality of coefficients
    // constant scale*Q(c); linear 2*scale*(G c)_i; quadratic scale*G_ij (2x off-diagonal)
    RatVec gc(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gc[i] += inst.form.gram[i][j] * inst.shift[j];
    Rat s(sweep.scale);
    if (!is_integer(s * inst.form.evaluate(inst.shift)))
        return fail("constant coefficient not integral");
    for (int i = 0; i < n; ++i)
        if (!is_integer(2 * s * gc[i])) return fail("linear coefficient not integral");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat cij = (i == j ? s : 2 * s) * inst.form.gram[i][j];
            if (!is_integer(cij)) return fail("quadratic coefficient not integral");
        }
    // R-periodicity of P mod M: 2 R^2 scale G_ij = 0 (mod M) for all i, j
    Rat r2(sweep.R * sweep.R);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = 2 * r2 * s * inst.form.gram[i][j];
            if (!is_integer(v) || v.get_num() % sweep.mod != 0)
                return fail("periodicity condition fails");
        }
    // sweep representatives and their +R e_i shifts
    std::vector<int> idx(n, 0);
    IntVec x(n, Int(0));
    std::function<bool(int)> rec = [&](int pos) -> bool {
        if (pos == n) {
            auto value_mod = [&](const IntVec& p) {
                Rat v = s * inst.value_at(p);
                if (!is_integer(v)) return Int(-1);
                Int m = v.get_num() % sweep.mod;
                if (m < 0) m += sweep.mod;
                return m;
            };
            if (classes_checked) ++*classes_checked;
            Int base = value_mod(x);
            if (base != sweep.residue) return false;
            for (int i = 0; i < n; ++i) {
                IntVec y = x;
                y[i] += sweep.R;
                if (value_mod(y) != sweep.residue) return false;
            }
            return true;
        }
        const auto& allowed = sweep.allowed.empty() ? std::vector<int>{} : sweep.allowed[pos];
        if (allowed.empty()) {
            for (int c = 0; c < sweep.R; ++c) {
                x[pos] = c;
                if (!rec(pos + 1)) return false;
            }
        } else {
            for (int c : allowed) {
                x[pos] = c;
                if (!rec(pos + 1)) return false;
            }
        }
        return true;
    };
    if (!rec(0)) {
        if (diagnostic && diagnostic->empty()) *diagnostic = "class congruence fails";
        return false;
    }
    return true;
}

EqualityCertificate certify_critical(CriticalForm id, long witness_box) {
    EqualityCertificate cert;
    cert.id = id;
    cert.instance = critical_instance(id);
    Enclosure de = d_value(cert.instance);
    if (!de.is_point()) throw std::logic_error("certify_critical: d not rational");
    cert.d = de.lo;
    cert.sweeps = critical_sweeps(id);

    cert.sweeps_pass = true;
    for (const auto& sw : cert.sweeps) {
        std::string diag;
        if (!run_residue_sweep(cert.instance, sw, &diag, &cert.classes_checked)) {
            cert.sweeps_pass = false;
            break;
        }
    }

    // the sweeps' class predicates must cover every residue class
    long R = 0;
    for (const auto& sw : cert.sweeps) R = std::max(R, sw.R);
    long total = 1;
    int n = cert.instance.form.n;
    for (int i = 0; i < n; ++i) total *= R;
    std::vector<bool> covered(total, false);
    for (const auto& sw : cert.sweeps) {
        // iterate classes mod R; a class is covered if its reduction mod sw.R is allowed
        for (long code = 0; code < total; ++code) {
            long c = code;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) {
                int cls = static_cast<int>(c % R);
                c /= R;
                int cls_sw = cls % static_cast<int>(sw.R);
                const auto& allowed =
                    sw.allowed.empty() ? std::vector<int>{} : sw.allowed[i];
                if (!allowed.empty() &&
                    std::find(allowed.begin(), allowed.end(), cls_sw) == allowed.end())
                    ok = false;
            }
            if (ok) covered[code] = true;
        }
    }
    cert.classes_covered = std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });

    Rat bound = cert.sweeps.front().value_lower_bound();
    for (const auto& sw : cert.sweeps) bound = std::min(bound, sw.value_lower_bound());
    cert.lattice_bound_reaches_d = bound >= cert.d;

    BruteResult br = brute_search(cert.instance, SearchBox::cube(n, witness_box));
    if (br.min_positive && *br.min_positive == cert.d)
        cert.witness = Witness{br.argmins.front(), *br.min_positive, true};
    return cert;
}

}  // namespace gamma14
