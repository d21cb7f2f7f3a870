#include "gamma14/reduction.hpp"

#include <algorithm>
#include <functional>

namespace gamma14 {

Int content(const IntVec& v) {
    Int g(0);
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    return g;
}

IntMat complete_primitive(const IntVec& v) {
    int n = static_cast<int>(v.size());
    if (content(v) != 1) throw std::invalid_argument("complete_primitive: vector not primitive");
    // T unimodular with T v = e1; answer is T^{-1}.
    IntMat t = identity_int(n);
    IntVec w = v;
    for (int i = 1; i < n; ++i) {
        if (w[i] == 0) continue;
        Int g, s, u;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), w[0].get_mpz_t(),
                   w[i].get_mpz_t());
        Int a = w[0] / g, b = w[i] / g;
        for (int j = 0; j < n; ++j) {
            Int r0 = t[0][j], ri = t[i][j];
            t[0][j] = s * r0 + u * ri;
            t[i][j] = -b * r0 + a * ri;
        }
        w[0] = g;
        w[i] = 0;
    }
    if (w[0] == -1) {
        for (int j = 0; j < n; ++j) t[0][j] = -t[0][j];
        w[0] = 1;
    }
    if (w[0] != 1) throw std::logic_error("complete_primitive: gcd != 1");
    return mat_inverse_unimodular(t);
}

namespace {

// integer k with v + k in (-1/2, 1/2]
Int center_shift(const Rat& v) {
    Int k = -floor_rat(v + Rat(1, 2));
    if (v + Rat(k) == Rat(-1, 2)) k += 1;
    return k;
}

// exact rational square root if it exists
std::optional<Rat> rat_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    bool nex = false, dex = false;
    Int sn = floor_root(r.get_num(), 2, &nex);
    Int sd = floor_root(r.get_den(), 2, &dex);
    if (!nex || !dex) return std::nullopt;
    Rat out(sn, sd);
    out.canonicalize();
    return out;
}

IntVec normalize_sign_lex(IntVec v) {
    for (const auto& e : v) {
        if (e > 0) break;
        if (e < 0) {
            for (auto& x : v) x = -x;
            break;
        }
    }
    return v;
}

}  // namespace

namespace {

// shell search with the gram scaled to int64 when it fits; returns the first
// (lexicographically within each shell) isotropic vector with sup-norm in
// [rlo, rhi], or nullopt
std::optional<IntVec> isotropic_shells(const QForm& f, long rlo, long rhi) {
    int n = f.n;
    Int den(1);
    for (const auto& row : f.gram)
        for (const auto& e : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), e.get_den_mpz_t());
    Int gmax(0);
    std::vector<std::vector<Int>> gi(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            gi[i][j] = Rat(f.gram[i][j] * Rat(den)).get_num();
            gmax = std::max(gmax, Int(abs(gi[i][j])));
        }
    bool fast = Int(n) * Int(n) * gmax * rhi * rhi < (Int(1) << 62);

    IntVec x(n, Int(0));
    std::vector<long> xl(n, 0);
    std::vector<std::vector<long>> g64;
    if (fast) {
        g64.assign(n, std::vector<long>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g64[i][j] = static_cast<long>(gi[i][j].get_si());
    }
    for (long r = std::max(rlo, 1L); r <= rhi; ++r) {
        std::function<bool(int, bool)> rec = [&](int pos, bool boundary) -> bool {
            if (pos == n) {
                if (!boundary) return false;
                if (fast) {
                    long acc = 0;
                    for (int i = 0; i < n; ++i) {
                        long row = 0;
                        for (int j = 0; j < n; ++j) row += g64[i][j] * xl[j];
                        acc += xl[i] * row;
                    }
                    return acc == 0;
                }
                for (int i = 0; i < n; ++i) x[i] = xl[i];
                return f.evaluate_int(x) == 0;
            }
            for (long c = -r; c <= r; ++c) {
                xl[pos] = c;
                if (rec(pos + 1, boundary || c == r || c == -r)) return true;
            }
            return false;
        };
        if (rec(0, false)) {
            IntVec out(n);
            for (int i = 0; i < n; ++i) out[i] = xl[i];
            Int g = content(out);
            for (auto& e : out) e /= g;
            return normalize_sign_lex(out);
        }
    }
    return std::nullopt;
}

}  // namespace

IntVec find_isotropic(const QForm& f, long search_radius) {
    int n = f.n;
    for (int i = 0; i < n; ++i)
        if (f.gram[i][i] == 0) {
            IntVec v(n, Int(0));
            v[i] = 1;
            return v;
        }
    // small vectors first: they keep the downstream reduction well-scaled
    if (auto v = isotropic_shells(f, 1, std::min(search_radius, 3L))) return *v;
    // two-variable planes: a u^2 + 2b uv + c v^2 = 0 soluble iff b^2 - ac is a square
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat a = f.gram[i][i], b = f.gram[i][j], c = f.gram[j][j];
            auto s = rat_sqrt(b * b - a * c);
            if (!s) continue;
            for (int sign = 0; sign < 2; ++sign) {
                Rat ratio = (sign ? Rat(-b - *s) : Rat(-b + *s)) / a;  // u/v
                IntVec v(n, Int(0));
                v[i] = ratio.get_num();
                v[j] = ratio.get_den();
                if (f.evaluate_int(v) == 0) {
                    Int g = content(v);
                    for (auto& e : v) e /= g;
                    return normalize_sign_lex(v);
                }
            }
        }
    if (search_radius > 3)
        if (auto v = isotropic_shells(f, 4, search_radius)) return *v;
    throw IsotropicNotFound("no isotropic vector with sup-norm <= " +
                            std::to_string(search_radius));
}

namespace {

// greedy pair reduction: repeatedly shorten basis vectors against each other
// until no single shear improves a diagonal entry; keeps the gram
// well-conditioned so the minimum enumeration stays tiny
std::pair<QForm, IntMat> greedy_reduce3(const QForm& phi) {
    QForm p = phi;
    IntMat basis = identity_int(3);
    for (int guard = 0; guard < 512; ++guard) {
        bool changed = false;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                // minimize p(e_i + k e_j) over integer k
                Rat ratio = -p.gram[i][j] / p.gram[j][j];
                Int k = floor_rat(ratio + Rat(1, 2));
                if (k == 0) continue;
                Rat newdiag =
                    p.gram[i][i] + 2 * Rat(k) * p.gram[i][j] + Rat(k * k) * p.gram[j][j];
                if (newdiag >= p.gram[i][i]) continue;
                for (int r = 0; r < 3; ++r) basis[r][i] += k * basis[r][j];
                p = apply_unimodular(phi, basis);
                changed = true;
            }
        if (!changed) break;
    }
    return {p, basis};
}

}  // namespace

std::pair<Rat, IntVec> ternary_minimum(const QForm& phi) {
    if (phi.n != 3 || !is_positive_definite(phi))
        throw std::invalid_argument("ternary_minimum: needs a positive definite ternary form");
    auto [red, basis] = greedy_reduce3(phi);

    // LDL of the reduced form: red = d1 (x + m12 y + m13 z)^2 + d2 (y + m23 z)^2 + d3 z^2
    Rat d1 = red.gram[0][0];
    Rat m12 = red.gram[0][1] / d1, m13 = red.gram[0][2] / d1;
    Rat d2 = red.gram[1][1] - d1 * m12 * m12;
    Rat m23 = (red.gram[1][2] - d1 * m12 * m13) / d2;
    Rat d3 = red.gram[2][2] - d1 * m13 * m13 - d2 * m23 * m23;

    Rat best = std::min({red.gram[0][0], red.gram[1][1], red.gram[2][2]});
    std::vector<IntVec> argmins;  // minimizers in reduced coordinates
    auto consider = [&](const IntVec& v) {
        Rat val = red.evaluate_int(v);
        if (val > best) return;
        if (val < best) {
            best = val;
            argmins.clear();
        }
        argmins.push_back(v);
    };
    for (long x = -2; x <= 2; ++x)
        for (long y = -2; y <= 2; ++y)
            for (long z = -2; z <= 2; ++z)
                if (x || y || z) consider({Int(x), Int(y), Int(z)});

    Int zmax = isqrt_floor(best / d3);
    for (Int z = -zmax; z <= zmax; ++z) {
        Rat rz = best - d3 * Rat(z) * Rat(z);
        if (rz < 0) continue;
        Rat ycenter = -m23 * Rat(z);
        Int yr = isqrt_floor(rz / d2);
        for (Int y = ceil_rat(ycenter) - yr - 1; y <= floor_rat(ycenter) + yr + 1; ++y) {
            Rat ry = rz - d2 * (Rat(y) + m23 * Rat(z)) * (Rat(y) + m23 * Rat(z));
            if (ry < 0) continue;
            Rat xcenter = -m12 * Rat(y) - m13 * Rat(z);
            Int xr = isqrt_floor(ry / d1);
            for (Int x = ceil_rat(xcenter) - xr - 1; x <= floor_rat(xcenter) + xr + 1; ++x) {
                if (x == 0 && y == 0 && z == 0) continue;
                consider({x, y, z});
            }
        }
    }

    // map the complete minimizer set back and take the lexicographically
    // least representative (the enumeration above is exhaustive for the
    // reduced form, so this is the true lexicographic minimum)
    IntVec bestv;
    for (const auto& v : argmins) {
        IntVec mapped = normalize_sign_lex(mat_vec(basis, v));
        if (bestv.empty() ||
            std::lexicographical_compare(mapped.begin(), mapped.end(), bestv.begin(),
                                         bestv.end()))
            bestv = mapped;
    }
    return {best, bestv};
}

PhiNormal normalize_phi(const QForm& phi, const IntVec& v) {
    if (content(v) != 1) throw std::invalid_argument("normalize_phi: v not primitive");
    IntMat basis = complete_primitive(v);
    QForm p = apply_unimodular(phi, basis);
    Rat a = p.gram[0][0];
    if (a <= 0) throw std::invalid_argument("normalize_phi: form not positive on v");
    for (int j = 1; j <= 2; ++j) {
        Int k = center_shift(p.gram[0][j] / a);
        if (k != 0) {
            for (int r = 0; r < 3; ++r) basis[r][j] += k * basis[r][0];
            p = apply_unimodular(phi, basis);
        }
    }
    Rat h4 = p.gram[0][1] / a, h5 = p.gram[0][2] / a;
    RatMat psi_g(2, RatVec(2));
    psi_g[0][0] = p.gram[1][1] - a * h4 * h4;
    psi_g[0][1] = psi_g[1][0] = p.gram[1][2] - a * h4 * h5;
    psi_g[1][1] = p.gram[2][2] - a * h5 * h5;
    return PhiNormal{a, h4, h5, QForm(2, psi_g), basis};
}

BinaryReduced binary_reduce(const QForm& psi) {
    if (psi.n != 2 || !is_positive_definite(psi))
        throw std::invalid_argument("binary_reduce: needs a positive definite binary form");
    Rat A = psi.gram[0][0], Bh = psi.gram[0][1], C = psi.gram[1][1];
    IntMat u = identity_int(2);
    for (int guard = 0;; ++guard) {
        if (guard > 256) throw std::logic_error("binary_reduce: did not terminate");
        if (A > C) {
            std::swap(A, C);
            for (int r = 0; r < 2; ++r) std::swap(u[r][0], u[r][1]);
        }
        Int k = center_shift(Bh / A);  // Bh + kA in (-A/2, A/2]
        if (k != 0) {
            // y -> y + k x
            C = C + 2 * Rat(k) * Bh + Rat(k * k) * A;
            Bh = Bh + Rat(k) * A;
            for (int r = 0; r < 2; ++r) u[r][1] += k * u[r][0];
        }
        if (A > C) continue;
        if (Bh < 0) {
            Bh = -Bh;
            for (int r = 0; r < 2; ++r) u[r][1] = -u[r][1];
        }
        if (2 * Bh <= A && A <= C) break;
    }
    Rat det = A * C - Bh * Bh;
    return BinaryReduced{A, 2 * Bh, C, Bh / A, det / A, u};
}

QForm BirchForm::to_qform() const {
    RatMat tail(3, RatVec(3, Rat(0)));
    tail[0][0] = a;
    tail[0][1] = tail[1][0] = a * h4;
    tail[0][2] = tail[2][0] = a * h5;
    tail[1][1] = a * h4 * h4 + A;
    tail[1][2] = tail[2][1] = a * h4 * h5 + A * lambda;
    tail[2][2] = a * h5 * h5 + A * lambda * lambda + t;
    return make_split_form(RatVec{a2, a3, a4, a5}, tail);
}

Rat BirchForm::abs_det() const { return abs_rat(determinant(to_qform())); }

Rat BirchForm::evaluate(const RatVec& y) const { return to_qform().evaluate(y); }

BirchForm birch_reduce(const QForm& f, const IntVec& iso) {
    if (f.n != 5) throw std::invalid_argument("birch_reduce: needs a 5-variable form");
    if (f.evaluate_int(iso) != 0) throw std::invalid_argument("birch_reduce: vector not isotropic");
    IntVec v = iso;
    Int g = content(v);
    if (g == 0) throw std::invalid_argument("birch_reduce: zero vector");
    for (auto& e : v) e /= g;

    // primitive integer functional r with  B(v, x) = mu * (r . x),  mu > 0
    RatVec gv(5, Rat(0));
    for (int j = 0; j < 5; ++j)
        for (int i = 0; i < 5; ++i) gv[j] += Rat(v[i]) * f.gram[i][j];
    Int den_lcm(1);
    for (auto& e : gv) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den_mpz_t());
    IntVec r(5);
    for (int j = 0; j < 5; ++j) r[j] = Rat(gv[j] * Rat(den_lcm)).get_num();
    Int c = content(r);
    if (c == 0) throw std::logic_error("birch_reduce: degenerate functional");
    for (auto& e : r) e /= c;

    // W unimodular with r . col0(W) = 1 and r . colj(W) = 0 for j >= 1:
    // take T with T r = e1 (rows), then W = T^T has r^T W = e1^T.
    IntMat M = complete_primitive(r);        // M e1 = r
    IntMat T = mat_inverse_unimodular(M);    // T r = e1
    IntMat W(5, IntVec(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) W[i][j] = T[j][i];

    // v lies in ker(r .), i.e. in the span of columns 1..4 of W
    IntMat Winv = mat_inverse_unimodular(W);
    IntVec coords = mat_vec(Winv, v);
    if (coords[0] != 0) throw std::logic_error("birch_reduce: isotropic vector not in kernel");
    IntVec z{coords[1], coords[2], coords[3], coords[4]};
    if (content(z) != 1) throw std::logic_error("birch_reduce: kernel coordinates not primitive");
    IntMat Z = complete_primitive(z);

    // basis: u1 = v, u2 = W col0, u3..u5 = W * (0, Z col_j)
    IntMat U(5, IntVec(5, Int(0)));
    for (int i = 0; i < 5; ++i) U[i][0] = v[i];
    for (int i = 0; i < 5; ++i) U[i][1] = W[i][0];
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 5; ++i) {
            Int acc(0);
            for (int k = 0; k < 4; ++k) acc += W[i][k + 1] * Z[k][j + 1];
            U[i][j + 2] = acc;
        }
    Int du = det_int(U);
    if (du != 1 && du != -1) throw std::logic_error("birch_reduce: basis not unimodular");

    QForm q = apply_unimodular(f, U);
    Rat b = q.gram[0][1];
    if (b == 0) throw std::logic_error("birch_reduce: zero pairing");
    if (b < 0) {
        for (int i = 0; i < 5; ++i) U[i][1] = -U[i][1];
        q = apply_unimodular(f, U);
        b = q.gram[0][1];
    }
    for (int j = 2; j < 5; ++j)
        if (q.gram[0][j] != 0) throw std::logic_error("birch_reduce: kernel pairing nonzero");
    Rat rho = Rat(1, 2) / b;

    // ternary part; reduce it (minimum first, then Gauss on the binary tail)
    RatMat phi_g(3, RatVec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) phi_g[i][j] = -rho * q.gram[i + 2][j + 2];
    QForm phi(3, phi_g);
    if (!is_positive_definite(phi))
        throw std::invalid_argument(
            "birch_reduce: ternary part not positive definite (form not of type (1,4))");
    auto [amin, vmin] = ternary_minimum(phi);
    PhiNormal pn = normalize_phi(phi, vmin);
    BinaryReduced br = binary_reduce(pn.psi);

    IntMat P = identity_int(5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) P[i + 2][j + 2] = pn.basis[i][j];
    U = mat_mul(U, P);
    IntMat P2 = identity_int(5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) P2[i + 3][j + 3] = br.basis[i][j];
    U = mat_mul(U, P2);
    q = apply_unimodular(f, U);

    // re-center h4, h5 (the binary basis change shifted them): col_j += k * col_2
    for (int j = 3; j <= 4; ++j) {
        Rat h = q.gram[2][j] / q.gram[2][2];
        Int k = center_shift(h);
        if (k != 0) {
            IntMat Sh = identity_int(5);
            Sh[2][j] = k;
            U = mat_mul(U, Sh);
            q = apply_unimodular(f, U);
        }
    }

    // center the linear coefficients a2..a5 by shears on x1: col_j += k * col_0
    {
        IntMat Sh = identity_int(5);
        bool any = false;
        for (int j = 1; j < 5; ++j) {
            Rat aj = rho * q.gram[1][j] * (j == 1 ? Rat(1) : Rat(2));
            Int k = center_shift(aj);
            if (k != 0) {
                Sh[0][j] = k;
                any = true;
            }
        }
        if (any) {
            U = mat_mul(U, Sh);
            q = apply_unimodular(f, U);
        }
    }

    BirchForm bf;
    bf.rho = rho;
    bf.U = U;
    bf.a2 = rho * q.gram[1][1];
    bf.a3 = 2 * rho * q.gram[1][2];
    bf.a4 = 2 * rho * q.gram[1][3];
    bf.a5 = 2 * rho * q.gram[1][4];
    RatMat phi2(3, RatVec(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) phi2[i][j] = -rho * q.gram[i + 2][j + 2];
    bf.phi = QForm(3, phi2);
    bf.a = bf.phi.gram[0][0];
    if (bf.a != amin) throw std::logic_error("birch_reduce: minimum moved");
    bf.h4 = bf.phi.gram[0][1] / bf.a;
    bf.h5 = bf.phi.gram[0][2] / bf.a;
    RatMat psi_g(2, RatVec(2));
    psi_g[0][0] = bf.phi.gram[1][1] - bf.a * bf.h4 * bf.h4;
    psi_g[0][1] = psi_g[1][0] = bf.phi.gram[1][2] - bf.a * bf.h4 * bf.h5;
    psi_g[1][1] = bf.phi.gram[2][2] - bf.a * bf.h5 * bf.h5;
    bf.psi = QForm(2, psi_g);
    bf.A = bf.psi.gram[0][0];
    bf.B = 2 * bf.psi.gram[0][1];
    bf.C = bf.psi.gram[1][1];
    if (!(Rat(0) <= bf.B && bf.B <= bf.A && bf.A <= bf.C))
        throw std::logic_error("birch_reduce: binary part not reduced");
    bf.lambda = bf.B / (2 * bf.A);
    bf.t = (bf.A * bf.C - bf.B * bf.B / 4) / bf.A;

    QForm shape = bf.to_qform();
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            if (shape.gram[i][j] != rho * q.gram[i][j])
                throw std::logic_error("birch_reduce: shape mismatch");
    return bf;
}

CaseParams case_params(const BirchForm& bf, const Rat& gamma) {
    CaseParams cp;
    cp.gamma = gamma;
    Rat absd = bf.abs_det();
    cp.d.pow5 = gamma * absd;
    cp.d.enc = root_enclosure(cp.d.pow5, 5, Rat(1, Int(1) << 40));
    cp.gamma8_regime = (gamma == Rat(8));

    Rat detphi = determinant(bf.phi);
    if (bf.t * bf.a * bf.A != detphi)
        throw std::invalid_argument("case_params: inconsistent invariants (t*a*A != det phi)");
    if (detphi != 4 * absd) throw std::invalid_argument("case_params: det phi != 4|D|");

    auto first_reaching = [&](const Rat& step, const Rat& off) {
        // smallest positive integer M1 with off + d <= M1 * step, minus one
        for (int m1 = 1; m1 <= 64; ++m1) {
            if (cp.d.cmp(Rat(m1) * step - off, Rat(0), Rat(1)) != Ordering::Less) return m1 - 1;
        }
        throw std::runtime_error("case_params: integer parameter out of range");
    };
    cp.m = first_reaching(bf.a, Rat(0));
    cp.delta_m_off = Rat(cp.m * cp.m - 1) * bf.a / 4;
    cp.delta_m = cp.d.enc + cp.delta_m_off;
    cp.K = first_reaching(bf.A, cp.delta_m_off);
    cp.delta_mK_off = cp.delta_m_off + Rat(cp.K * cp.K - 1) * bf.A / 4;
    cp.delta_mK = cp.d.enc + cp.delta_mK_off;
    cp.L = first_reaching(bf.t, cp.delta_mK_off);
    cp.delta_mKL_off = cp.delta_mK_off + Rat(cp.L * cp.L - 1) * bf.t / 4;
    cp.delta_mKL = cp.d.enc + cp.delta_mKL_off;

    cp.Cval = bf.A * bf.lambda * bf.lambda + bf.t;
    if (cp.Cval != bf.C) throw std::invalid_argument("case_params: C != A lambda^2 + t");
    cp.M = first_reaching(cp.Cval, cp.delta_m_off);
    cp.delta_star_mM_off = cp.delta_m_off + Rat(cp.M * cp.M - 1) * cp.Cval / 4;
    cp.delta_star_mM = cp.d.enc + cp.delta_star_mM_off;

    cp.a2p_raw = bf.a2 + bf.a3 * bf.a3 / (4 * bf.a);
    cp.a4p_raw = bf.a4 - bf.a3 * bf.h4;
    cp.a5p_raw = bf.a5 - bf.a3 * bf.h5;
    cp.a2pp_raw = cp.a2p_raw + cp.a4p_raw * cp.a4p_raw / (4 * bf.A);
    cp.a5pp_raw = cp.a5p_raw - bf.lambda * cp.a4p_raw;
    cp.a2ppp_raw = cp.a2pp_raw + cp.a5pp_raw * cp.a5pp_raw / (4 * bf.t);
    cp.a2star_raw = cp.a2p_raw + cp.a5p_raw * cp.a5p_raw / (4 * cp.Cval);
    cp.a4star_raw = cp.a4p_raw - bf.lambda * bf.A * cp.a5p_raw / cp.Cval;
    cp.a2p = centered_mod1(cp.a2p_raw);
    cp.a4p = centered_mod1(cp.a4p_raw);
    cp.a5p = centered_mod1(cp.a5p_raw);
    cp.a2pp = centered_mod1(cp.a2p + cp.a4p * cp.a4p / (4 * bf.A));
    cp.a5pp = centered_mod1(cp.a5p - bf.lambda * cp.a4p);
    cp.a2ppp = centered_mod1(cp.a2pp + cp.a5pp * cp.a5pp / (4 * bf.t));
    cp.a2ppp_printed = centered_mod1(cp.a2pp + cp.a5pp / (4 * bf.t));
    cp.a2star = centered_mod1(cp.a2p + cp.a5p * cp.a5p / (4 * cp.Cval));
    cp.a4star = centered_mod1(cp.a4p - bf.lambda * bf.A * cp.a5p / cp.Cval);
    return cp;
}

}  // namespace gamma14
