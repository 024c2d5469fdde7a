#pragma once

#include "toric/numbers.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace toric {

using IVec = std::vector<Integer>;
using IMat = std::vector<IVec>;  // row-major
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

template <typename T>
std::vector<std::vector<T>> identity_matrix(std::size_t n) {
    std::vector<std::vector<T>> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <typename T>
std::vector<std::vector<T>> transpose(const std::vector<std::vector<T>>& a) {
    if (a.empty()) return {};
    std::vector<std::vector<T>> t(a[0].size(), std::vector<T>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

template <typename T>
std::vector<std::vector<T>> mat_mul(const std::vector<std::vector<T>>& a,
                                    const std::vector<std::vector<T>>& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    std::vector<std::vector<T>> c(n, std::vector<T>(m, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

template <typename T>
std::vector<T> mat_vec(const std::vector<std::vector<T>>& a, const std::vector<T>& x) {
    std::vector<T> y(a.size(), T(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
    return y;
}

template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Fraction-free Bareiss elimination; exact over Z and over Q.
template <typename T>
T det(std::vector<std::vector<T>> m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    if (n == 0) return T(1);
    T prev(1);
    int sgn = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return T(0);
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return sgn < 0 ? T(-d) : d;
}

QMat to_rational(const IMat& m);
QVec to_rational(const IVec& v);

// Unique solution of a nonsingular square system; nullopt when singular.
std::optional<QVec> solve_linear(QMat a, QVec rhs);

std::optional<QMat> inverse(const QMat& a);

// Basis of the rational nullspace {x : a x = 0}.
std::vector<QVec> kernel_basis(const QMat& a);

std::size_t rank(QMat a);

struct SmithForm {
    IMat u;  // rows x rows, unimodular
    IMat d;  // rows x cols, diagonal with d_i | d_{i+1}
    IMat v;  // cols x cols, unimodular
    std::size_t rank = 0;
};

// u * m * v = d
SmithForm smith_normal_form(const IMat& m);

// Basis of the saturated lattice {x in Z^cols : m x = 0}.
std::vector<IVec> integer_kernel(const IMat& m);

// Does target lie in the lattice spanned (over Z) by the given rows?
bool in_row_lattice(const std::vector<IVec>& rows, const IVec& target);

bool is_unimodular(const IMat& m);

}  // namespace toric
