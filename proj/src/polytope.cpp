#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

// next k-subset of {0..n-1} in lexicographic order
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return idx;
}

void check_shape(const HPolytope& h) {
    if (h.dim == 0) throw degenerate_error("polytope: dimension zero");
    if (h.normals.size() != h.offsets.size())
        throw std::invalid_argument("polytope: normals/offsets size mismatch");
    if (h.normals.size() < h.dim)
        throw degenerate_error("polytope: fewer inequalities than dimension");
    for (const auto& row : h.normals) {
        if (row.size() != h.dim) throw std::invalid_argument("polytope: bad normal length");
        bool zero = true;
        for (const auto& x : row) zero = zero && x == 0;
        if (zero) throw std::invalid_argument("polytope: zero normal");
    }
}

// unbounded <=> the recession cone {d : <d, a_i> >= 0} is nontrivial
bool has_recession_direction(const HPolytope& h) {
    std::size_t n = h.dim, k = h.normals.size();
    if (rank(h.normals) < n) return true;  // lineality direction exists
    // extreme rays of the pointed cone are tight on n-1 independent normals
    auto idx = first_subset(n - 1);
    if (n == 1) {
        // cone in R^1: direction +-1 feasible?
        for (int s : {1, -1}) {
            bool ok = true;
            for (std::size_t i = 0; i < k; ++i)
                if (sign(h.normals[i][0]) * s < 0) ok = false;
            if (ok) return true;
        }
        return false;
    }
    do {
        QMat sub;
        for (auto i : idx) sub.push_back(h.normals[i]);
        auto null = kernel_basis(sub);
        if (null.size() != 1) continue;
        for (int s : {1, -1}) {
            bool feasible = true;
            for (std::size_t i = 0; i < k && feasible; ++i) {
                Rational d = dot(h.normals[i], null[0]) * s;
                if (d < 0) feasible = false;
            }
            if (feasible) return true;
        }
    } while (next_subset(idx, k));
    return false;
}

}  // namespace

std::size_t affine_rank(const std::vector<QVec>& points) {
    if (points.size() <= 1) return 0;
    QMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        QVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return rank(diffs);
}

VRep enumerate_vertices(const HPolytope& h) {
    check_shape(h);
    if (has_recession_direction(h))
        throw degenerate_error("polytope: feasible set unbounded");

    std::size_t n = h.dim, k = h.normals.size();
    VRep rep;
    auto idx = first_subset(n);
    do {
        QMat sub;
        QVec rhs;
        for (auto i : idx) {
            sub.push_back(h.normals[i]);
            rhs.push_back(-h.offsets[i]);
        }
        auto x = solve_linear(std::move(sub), std::move(rhs));
        if (!x) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < k && feasible; ++i)
            if (dot(h.normals[i], *x) < -h.offsets[i]) feasible = false;
        if (!feasible) continue;
        if (std::find(rep.vertices.begin(), rep.vertices.end(), *x) == rep.vertices.end())
            rep.vertices.push_back(std::move(*x));
    } while (next_subset(idx, k));

    if (rep.vertices.empty())
        throw degenerate_error("polytope: feasible set empty or pointless");
    if (affine_rank(rep.vertices) < n)
        throw degenerate_error("polytope: feasible set not full-dimensional");

    rep.incidence.resize(rep.vertices.size());
    for (std::size_t v = 0; v < rep.vertices.size(); ++v)
        for (std::size_t i = 0; i < k; ++i)
            if (dot(h.normals[i], rep.vertices[v]) == -h.offsets[i])
                rep.incidence[v].push_back(i);

    rep.facet_active.assign(k, false);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<QVec> tight;
        for (std::size_t v = 0; v < rep.vertices.size(); ++v)
            if (std::binary_search(rep.incidence[v].begin(), rep.incidence[v].end(), i))
                tight.push_back(rep.vertices[v]);
        if (!tight.empty() && affine_rank(tight) == n - 1) rep.facet_active[i] = true;
    }
    return rep;
}

bool is_reflexive(const HPolytope& h, const VRep& v) {
    for (const auto& b : h.offsets)
        if (b != 1) throw input_error("reflexivity check needs all offsets equal to 1");
    for (const auto& row : h.normals) {
        Integer g(0);
        for (const auto& x : row) {
            if (den(x) != 1) throw input_error("reflexivity check needs integer normals");
            g = gcd_int(g, num(x));
        }
        if (g != 1) throw input_error("reflexivity check needs primitive normals");
    }
    for (const auto& vert : v.vertices)
        for (const auto& coord : vert)
            if (den(coord) != 1) return false;
    return true;
}

bool is_delzant(const HPolytope& h, const VRep& v) {
    for (std::size_t i = 0; i < v.vertices.size(); ++i) {
        if (v.incidence[i].size() != h.dim) return false;
        IMat tight;
        for (auto j : v.incidence[i]) {
            IVec row;
            for (const auto& x : h.normals[j]) {
                if (den(x) != 1) return false;
                row.push_back(num(x));
            }
            tight.push_back(std::move(row));
        }
        if (abs_int(det(tight)) != 1) return false;
    }
    return true;
}

namespace {

bool lex_less(const QVec& a, const QVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

using IndexSet = std::vector<std::size_t>;  // sorted vertex indices of a face

// simplices as vertex-index tuples
void pull_triangulate(const VRep& rep, const IndexSet& face, std::size_t d,
                      Anchor anchor, std::vector<IndexSet>& out) {
    if (d == 0) {
        out.push_back(face);  // a single vertex
        return;
    }
    std::size_t apex = face[0];
    for (auto vi : face) {
        bool better = anchor == Anchor::LexMin ? lex_less(rep.vertices[vi], rep.vertices[apex])
                                               : lex_less(rep.vertices[apex], rep.vertices[vi]);
        if (better) apex = vi;
    }

    // proper (d-1)-subfaces not containing the apex, keyed by vertex set
    std::set<IndexSet> subfaces;
    std::size_t ineq_count = rep.facet_active.size();
    for (std::size_t j = 0; j < ineq_count; ++j) {
        IndexSet tight;
        bool apex_tight = false;
        for (auto vi : face) {
            if (std::binary_search(rep.incidence[vi].begin(), rep.incidence[vi].end(), j)) {
                tight.push_back(vi);
                if (vi == apex) apex_tight = true;
            }
        }
        if (apex_tight || tight.empty()) continue;
        std::vector<QVec> pts;
        for (auto vi : tight) pts.push_back(rep.vertices[vi]);
        if (affine_rank(pts) == d - 1) subfaces.insert(tight);
    }

    for (const auto& g : subfaces) {
        std::vector<IndexSet> lower;
        pull_triangulate(rep, g, d - 1, anchor, lower);
        for (auto& s : lower) {
            s.push_back(apex);
            out.push_back(std::move(s));
        }
    }
}

}  // namespace

std::vector<std::vector<QVec>> triangulate(const HPolytope& h, const VRep& v, Anchor anchor) {
    IndexSet all(v.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    std::vector<IndexSet> tuples;
    pull_triangulate(v, all, h.dim, anchor, tuples);
    std::vector<std::vector<QVec>> simplices;
    simplices.reserve(tuples.size());
    for (const auto& t : tuples) {
        std::vector<QVec> s;
        for (auto vi : t) s.push_back(v.vertices[vi]);
        simplices.push_back(std::move(s));
    }
    return simplices;
}

MomentData moments(const HPolytope& h, const VRep& v, Anchor anchor) {
    std::size_t n = h.dim;
    Integer factorial(1);
    for (std::size_t i = 2; i <= n; ++i) factorial *= Integer(i);

    MomentData m;
    m.volume = 0;
    m.first_moments.assign(n, Rational(0));
    for (const auto& s : triangulate(h, v, anchor)) {
        QMat edges;
        for (std::size_t i = 1; i < s.size(); ++i) {
            QVec e(n);
            for (std::size_t j = 0; j < n; ++j) e[j] = s[i][j] - s[0][j];
            edges.push_back(std::move(e));
        }
        Rational vol = det(edges) / Rational(factorial);
        if (vol < 0) vol = -vol;
        if (vol == 0) continue;
        m.volume += vol;
        // integral of a linear function over a simplex: volume times vertex mean
        for (std::size_t j = 0; j < n; ++j) {
            Rational mean(0);
            for (const auto& p : s) mean += p[j];
            mean /= Rational(Integer(n + 1));
            m.first_moments[j] += vol * mean;
        }
    }
    if (m.volume == 0) throw degenerate_error("polytope: zero volume");
    m.barycenter.resize(n);
    for (std::size_t j = 0; j < n; ++j) m.barycenter[j] = m.first_moments[j] / m.volume;
    return m;
}

bool is_ke(const MomentData& m) {
    for (const auto& b : m.barycenter)
        if (b != 0) return false;
    return true;
}

}  // namespace toric
