#pragma once

// Slow reference implementations used only to cross-check the library.

#include "toric/linalg.hpp"
#include "toric/polynomial.hpp"

#include <random>
#include <vector>

namespace oracle {

using toric::Integer;
using toric::Rational;

// Laplace expansion; exponential, fine for n <= 6.
template <typename T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j] == 0) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(row);
        }
        const T term = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

// Signed area of a polygon given in arbitrary vertex order is wrong; callers
// must pass vertices sorted around the centroid (see sort_ccw).
inline Rational shoelace(const std::vector<std::vector<Rational>>& pts) {
    Rational acc(0);
    const std::size_t k = pts.size();
    for (std::size_t i = 0; i < k; ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % k];
        acc += a[0] * b[1] - b[0] * a[1];
    }
    acc /= 2;
    return acc < 0 ? Rational(-acc) : acc;
}

// counterclockwise order around the vertex centroid (2d, exact comparisons)
inline std::vector<std::vector<Rational>> sort_ccw(std::vector<std::vector<Rational>> pts) {
    Rational cx(0), cy(0);
    for (const auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= Rational(pts.size());
    cy /= Rational(pts.size());
    const auto half = [&](const std::vector<Rational>& p) {
        const Rational dx = p[0] - cx, dy = p[1] - cy;
        return (dy < 0 || (dy == 0 && dx < 0)) ? 1 : 0;  // lower half after upper
    };
    std::sort(pts.begin(), pts.end(),
              [&](const std::vector<Rational>& p, const std::vector<Rational>& q) {
                  const int hp = half(p), hq = half(q);
                  if (hp != hq) return hp < hq;
                  const Rational cross = (p[0] - cx) * (q[1] - cy) - (q[0] - cx) * (p[1] - cy);
                  if (cross != 0) return cross > 0;
                  const Rational dp = (p[0] - cx) * (p[0] - cx) + (p[1] - cy) * (p[1] - cy);
                  const Rational dq = (q[0] - cx) * (q[0] - cx) + (q[1] - cy) * (q[1] - cy);
                  return dp < dq;
              });
    return pts;
}

// Number of sign changes of p over a uniform grid; every change brackets at
// least one root, so this is a lower bound on (and for well-separated simple
// roots equal to) the real root count.
inline std::size_t grid_sign_changes(const toric::Poly& p, const Rational& lo,
                                     const Rational& hi, int steps) {
    std::size_t changes = 0;
    int prev = 0;
    for (int i = 0; i <= steps; ++i) {
        const Rational x = lo + (hi - lo) * Rational(i, steps);
        const int s = toric::sign(p(x));
        if (s != 0 && prev != 0 && s != prev) ++changes;
        if (s != 0) prev = s;
    }
    return changes;
}

inline Rational rand_rational(std::mt19937_64& rng, int num_range, int den_range) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(rng), den(rng));
}

// random unimodular matrix: product of elementary row operations
inline toric::IMat rand_unimodular(std::mt19937_64& rng, std::size_t n, int ops) {
    toric::IMat m = toric::identity_matrix<Integer>(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    for (int t = 0; t < ops; ++t) {
        const std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        if (i == j) j = (j + 1) % n;
        switch (kind(rng)) {
            case 0: {
                const Integer k(coef(rng));
                for (std::size_t c = 0; c < n; ++c) m[i][c] += k * m[j][c];
                break;
            }
            case 1:
                std::swap(m[i], m[j]);
                break;
            default:
                for (std::size_t c = 0; c < n; ++c) m[i][c] = -m[i][c];
                break;
        }
    }
    return m;
}

}  // namespace oracle
