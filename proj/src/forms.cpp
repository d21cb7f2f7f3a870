#include "gamma14/forms.hpp"

#include <algorithm>

namespace gamma14 {

QForm::QForm(int dim, RatMat g) : n(dim), gram(std::move(g)) {
    if (n < 2 || n > 5) throw std::invalid_argument("QForm: dimension must be 2..5");
    if (static_cast<int>(gram.size()) != n)
        throw std::invalid_argument("QForm: gram size mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(gram[i].size()) != n)
            throw std::invalid_argument("QForm: gram row size mismatch");
        for (int j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i]) throw std::invalid_argument("QForm: gram not symmetric");
    }
}

Rat QForm::evaluate(const RatVec& point) const {
    if (static_cast<int>(point.size()) != n)
        throw std::invalid_argument("QForm::evaluate: dimension mismatch");
    Rat acc(0);
    for (int i = 0; i < n; ++i) {
        Rat row(0);
        for (int j = 0; j < n; ++j) row += gram[i][j] * point[j];
        acc += point[i] * row;
    }
    return acc;
}

Rat QForm::evaluate_int(const IntVec& point) const {
    RatVec p(point.size());
    for (size_t i = 0; i < point.size(); ++i) p[i] = Rat(point[i]);
    return evaluate(p);
}

QForm make_split_form(const RatVec& linear, const RatMat& tail) {
    int n = static_cast<int>(linear.size()) + 1;
    RatMat g(n, RatVec(n, Rat(0)));
    // (x1 + a2 x2 + ... + an xn) x2 expands to x1 x2 + a2 x2^2 + sum_{j>=3} aj xj x2
    g[0][1] = g[1][0] = Rat(1, 2);
    g[1][1] = linear[0];
    for (int j = 2; j < n; ++j) g[1][j] = g[j][1] = linear[j - 1] / 2;
    for (int i = 2; i < n; ++i)
        for (int j = 2; j < n; ++j) g[i][j] -= tail[i - 2][j - 2];
    return QForm(n, g);
}

Rat determinant(const QForm& f) {
    RatMat m = f.gram;
    int n = f.n;
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != c) {
            std::swap(m[pivot], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat t = m[r][c] / m[c][c];
            for (int k = c; k < n; ++k) m[r][k] -= t * m[c][k];
        }
    }
    return det;
}

std::pair<int, int> signature(const QForm& f) {
    if (determinant(f) == 0) throw std::invalid_argument("signature: singular form");
    RatMat m = f.gram;
    int n = f.n, pos = 0, neg = 0;
    // symmetric congruence reduction
    for (int c = 0; c < n; ++c) {
        if (m[c][c] == 0) {
            // prefer swapping in a later variable with a nonzero diagonal
            int k = -1;
            for (int r = c + 1; r < n; ++r)
                if (m[r][r] != 0) {
                    k = r;
                    break;
                }
            if (k >= 0) {
                std::swap(m[c], m[k]);
                for (int i = 0; i < n; ++i) std::swap(m[i][c], m[i][k]);
            } else {
                // all residual diagonals vanish: any nonzero cross term gives
                // (e_c + e_k)^T M (e_c + e_k) = 2 M_ck != 0
                for (int r = c + 1; r < n; ++r)
                    if (m[c][r] != 0) {
                        k = r;
                        break;
                    }
                if (k < 0) continue;  // residual block is zero (singular input)
                for (int j = 0; j < n; ++j) m[c][j] += m[k][j];
                for (int i = 0; i < n; ++i) m[i][c] += m[i][k];
            }
        }
        Rat d = m[c][c];
        if (d > 0)
            ++pos;
        else if (d < 0)
            ++neg;
        else
            continue;
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            Rat t = m[r][c] / d;
            for (int j = 0; j < n; ++j) m[r][j] -= t * m[c][j];
            for (int i = 0; i < n; ++i) m[i][r] = m[r][i];
        }
        for (int r = c + 1; r < n; ++r) m[c][r] = m[r][c] = Rat(0);
    }
    return {pos, neg};
}

bool is_positive_definite(const QForm& f) {
    // leading principal minors all positive
    for (int k = 1; k <= f.n; ++k) {
        RatMat sub(k, RatVec(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub[i][j] = f.gram[i][j];
        // reuse determinant via a temporary QForm only for k >= 2
        Rat d;
        if (k == 1)
            d = sub[0][0];
        else {
            RatMat m = sub;
            d = Rat(1);
            for (int c = 0; c < k; ++c) {
                int pivot = -1;
                for (int r = c; r < k; ++r)
                    if (m[r][c] != 0) {
                        pivot = r;
                        break;
                    }
                if (pivot < 0) return false;
                if (pivot != c) {
                    std::swap(m[pivot], m[c]);
                    d = -d;
                }
                d *= m[c][c];
                for (int r = c + 1; r < k; ++r) {
                    if (m[r][c] == 0) continue;
                    Rat t = m[r][c] / m[c][c];
                    for (int j = c; j < k; ++j) m[r][j] -= t * m[c][j];
                }
            }
        }
        if (d <= 0) return false;
    }
    return true;
}

Int det_int(const IntMat& m0) {
    // fraction-free Bareiss
    int n = static_cast<int>(m0.size());
    IntMat m = m0;
    Int prev(1);
    int sign = 1;
    for (int c = 0; c < n - 1; ++c) {
        if (m[c][c] == 0) {
            int pivot = -1;
            for (int r = c + 1; r < n; ++r)
                if (m[r][c] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return Int(0);
            std::swap(m[pivot], m[c]);
            sign = -sign;
        }
        for (int r = c + 1; r < n; ++r)
            for (int j = c + 1; j < n; ++j)
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
        prev = m[c][c];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

IntMat identity_int(int n) {
    IntMat m(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size()), p = static_cast<int>(b[0].size()),
        k = static_cast<int>(b.size());
    IntMat c(n, IntVec(p, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < p; ++j)
            for (int t = 0; t < k; ++t) c[i][j] += a[i][t] * b[t][j];
    return c;
}

IntVec mat_vec(const IntMat& m, const IntVec& v) {
    int n = static_cast<int>(m.size());
    IntVec out(n, Int(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(v.size()); ++j) out[i] += m[i][j] * v[j];
    return out;
}

RatVec mat_vec(const IntMat& m, const RatVec& v) {
    int n = static_cast<int>(m.size());
    RatVec out(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < static_cast<int>(v.size()); ++j) out[i] += Rat(m[i][j]) * v[j];
    return out;
}

IntMat mat_inverse_unimodular(const IntMat& u) {
    int n = static_cast<int>(u.size());
    Int d = det_int(u);
    if (d != 1 && d != -1) throw std::invalid_argument("mat_inverse_unimodular: |det| != 1");
    // adjugate via rational elimination would do; for n <= 5 use cofactors
    IntMat adj(n, IntVec(n, Int(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntMat minor(n - 1, IntVec(n - 1));
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor[rr][cc] = u[r][c];
                    ++cc;
                }
                ++rr;
            }
            Int cof = (n == 1) ? Int(1) : det_int(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = cof;
        }
    if (d == -1)
        for (auto& row : adj)
            for (auto& e : row) e = -e;
    return adj;
}

QForm apply_unimodular(const QForm& f, const IntMat& u) {
    Int d = det_int(u);
    if (d != 1 && d != -1) throw std::invalid_argument("apply_unimodular: |det U| != 1");
    int n = f.n;
    RatMat out(n, RatVec(n, Rat(0)));
    // out = U^T G U
    RatMat gu(n, RatVec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) gu[i][j] += f.gram[i][k] * Rat(u[k][j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out[i][j] += Rat(u[k][i]) * gu[k][j];
    return QForm(n, out);
}

ShiftedInstance::ShiftedInstance(QForm f, RatVec c, Rat g)
    : form(std::move(f)), shift(std::move(c)), gamma(std::move(g)) {
    if (static_cast<int>(shift.size()) != form.n)
        throw std::invalid_argument("ShiftedInstance: shift dimension mismatch");
    if (gamma <= 0) throw std::invalid_argument("ShiftedInstance: gamma must be positive");
    for (auto& ci : shift) ci = centered_mod1(ci);
}

Rat ShiftedInstance::value_at(const IntVec& x) const {
    RatVec p(shift.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = Rat(x[i]) + shift[i];
    return form.evaluate(p);
}

Enclosure d_value(const ShiftedInstance& inst, const Rat& width) {
    return root_enclosure(inst.gamma * inst.abs_det(), static_cast<unsigned>(inst.form.n), width);
}

Ordering cmp_to_bound(const Rat& v, const ShiftedInstance& inst) {
    return cmp_to_root(v, static_cast<unsigned>(inst.form.n), inst.gamma * inst.abs_det());
}

Witness Witness::checked(const ShiftedInstance& inst, const IntVec& x) {
    Rat v = inst.value_at(x);
    if (v <= 0) throw std::invalid_argument("Witness: value not positive");
    Ordering o = cmp_to_bound(v, inst);
    if (o == Ordering::Greater) throw std::invalid_argument("Witness: value exceeds bound");
    return Witness{x, v, o == Ordering::Equal};
}

}  // namespace gamma14
