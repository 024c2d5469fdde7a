#include "toric/linalg.hpp"

namespace toric {

QMat to_rational(const IMat& m) {
    QMat q(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        q[i].assign(m[i].begin(), m[i].end());
    return q;
}

QVec to_rational(const IVec& v) { return QVec(v.begin(), v.end()); }

std::optional<QVec> solve_linear(QMat a, QVec rhs) {
    std::size_t n = a.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[k], a[p]);
        std::swap(rhs[k], rhs[p]);
        Rational piv = a[k][k];
        for (std::size_t j = k; j < n; ++j) a[k][j] /= piv;
        rhs[k] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rational f = a[i][k];
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    return rhs;
}

std::optional<QMat> inverse(const QMat& a) {
    std::size_t n = a.size();
    QMat work = a;
    QMat inv = identity_matrix<Rational>(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && work[p][k] == 0) ++p;
        if (p == n) return std::nullopt;
        std::swap(work[k], work[p]);
        std::swap(inv[k], inv[p]);
        Rational piv = work[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            work[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || work[i][k] == 0) continue;
            Rational f = work[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                work[i][j] -= f * work[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

namespace {

// Row-echelon reduction; returns pivot columns, leaves a in reduced form.
std::vector<std::size_t> rref(QMat& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        Rational piv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<QVec> kernel_basis(const QMat& a) {
    if (a.empty()) return {};
    QMat work = a;
    std::vector<std::size_t> pivots = rref(work);
    std::size_t cols = a[0].size();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            x[pivots[r]] = -work[r][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::size_t rank(QMat a) { return rref(a).size(); }

namespace {

void add_row(IMat& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void add_col(IMat& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

void swap_cols(IMat& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.size(); ++i) std::swap(m[i][a], m[i][b]);
}

void negate_row(IMat& m, std::size_t r) {
    for (auto& x : m[r]) x = -x;
}

}  // namespace

SmithForm smith_normal_form(const IMat& m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    SmithForm f;
    f.d = m;
    f.u = identity_matrix<Integer>(rows);
    f.v = identity_matrix<Integer>(cols);
    IMat& d = f.d;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: entry of least absolute value in the remaining block
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (d[i][j] == 0) continue;
                if (!found || abs_int(d[i][j]) < abs_int(d[pi][pj])) {
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        std::swap(d[t], d[pi]);
        std::swap(f.u[t], f.u[pi]);
        swap_cols(d, t, pj);
        swap_cols(f.v, t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0) continue;
                Integer q = d[i][t] / d[t][t];
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(f.u, i, t, -q);
                }
                if (d[i][t] != 0) {  // remainder smaller than the pivot: promote it
                    std::swap(d[t], d[i]);
                    std::swap(f.u[t], f.u[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0) continue;
                Integer q = d[t][j] / d[t][t];
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(f.v, j, t, -q);
                }
                if (d[t][j] != 0) {
                    swap_cols(d, t, j);
                    swap_cols(f.v, t, j);
                    clean = false;
                }
            }
        }

        // enforce d_t | everything below-right; otherwise fold the offending
        // row into row t and redo this pivot
        bool divides_all = true;
        for (std::size_t i = t + 1; i < rows && divides_all; ++i)
            for (std::size_t j = t + 1; j < cols && divides_all; ++j)
                if (d[i][j] % d[t][t] != 0) {
                    add_row(d, t, i, Integer(1));
                    add_row(f.u, t, i, Integer(1));
                    divides_all = false;
                }
        if (!divides_all) continue;

        if (d[t][t] < 0) {
            negate_row(d, t);
            negate_row(f.u, t);
        }
        ++t;
    }
    f.rank = t;
    return f;
}

std::vector<IVec> integer_kernel(const IMat& m) {
    if (m.empty()) return {};
    std::size_t cols = m[0].size();
    SmithForm f = smith_normal_form(m);
    std::vector<IVec> basis;
    for (std::size_t j = f.rank; j < cols; ++j) {
        IVec col(cols);
        for (std::size_t i = 0; i < cols; ++i) col[i] = f.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

bool in_row_lattice(const std::vector<IVec>& rows, const IVec& target) {
    if (rows.empty()) {
        for (const auto& x : target)
            if (x != 0) return false;
        return true;
    }
    // columns of `gens` are the generators; solve gens * x = target over Z
    IMat gens = transpose(rows);
    SmithForm f = smith_normal_form(gens);
    IVec ut = mat_vec(f.u, target);
    for (std::size_t i = 0; i < ut.size(); ++i) {
        if (i < f.rank) {
            if (ut[i] % f.d[i][i] != 0) return false;
        } else if (ut[i] != 0) {
            return false;
        }
    }
    return true;
}

bool is_unimodular(const IMat& m) {
    if (m.empty()) return false;
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return abs_int(det(m)) == 1;
}

}  // namespace toric
