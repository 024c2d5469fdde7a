#include "toric/fan.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace toric {

std::vector<std::string> validate(const Fan& f) {
    std::vector<std::string> bad;
    if (f.dim == 0) {
        bad.push_back("dimension must be positive");
        return bad;
    }
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& v = f.rays[i];
        std::string name = "ray " + std::to_string(i + 1);
        if (v.size() != f.dim) {
            bad.push_back(name + ": wrong length");
            continue;
        }
        Integer g(0);
        for (const auto& x : v) g = gcd_int(g, x);
        if (g == 0)
            bad.push_back(name + ": zero vector");
        else if (g != 1)
            bad.push_back(name + ": not primitive (content " + to_string(g) + ")");
        for (std::size_t j = i + 1; j < f.rays.size(); ++j)
            if (f.rays[j] == v)
                bad.push_back(name + " duplicates ray " + std::to_string(j + 1));
    }
    if (f.rays.size() < f.dim + 1)
        bad.push_back("a complete fan needs at least dim+1 rays");
    else {
        IMat m(f.rays.begin(), f.rays.end());
        bool shapes_ok = true;
        for (const auto& v : f.rays) shapes_ok = shapes_ok && v.size() == f.dim;
        if (shapes_ok && rank(to_rational(m)) < f.dim)
            bad.push_back("rays do not span the ambient space");
    }
    return bad;
}

Fan make_fan(std::size_t dim, std::vector<IVec> rays, std::string label) {
    Fan f{dim, std::move(rays), std::move(label)};
    auto bad = validate(f);
    if (!bad.empty()) {
        std::string msg = "invalid fan";
        for (const auto& b : bad) msg += "; " + b;
        throw input_error(msg);
    }
    return f;
}

Fan bundle_fan(std::size_t m, std::size_t r) {
    if (m == 0 || r == 0) throw input_error("bundle_fan: factors must be positive");
    std::size_t n = m + r + 1;
    std::vector<IVec> rays;
    for (std::size_t i = 0; i < n; ++i) {
        IVec e(n, Integer(0));
        e[i] = 1;
        rays.push_back(std::move(e));
    }
    IVec base1(n, Integer(0));  // O(-1) direction over CP^m
    for (std::size_t i = 0; i < m; ++i) base1[i] = -1;
    base1[n - 1] = 1;
    rays.push_back(std::move(base1));
    IVec base2(n, Integer(0));  // O(+1) direction over CP^r
    for (std::size_t i = m; i < m + r; ++i) base2[i] = -1;
    base2[n - 1] = -1;
    rays.push_back(std::move(base2));
    IVec fiber(n, Integer(0));
    fiber[n - 1] = -1;
    rays.push_back(std::move(fiber));
    return make_fan(n, std::move(rays),
                    "bundle(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

IVec ray_sum(const Fan& f) {
    IVec s(f.dim, Integer(0));
    for (const auto& v : f.rays)
        for (std::size_t j = 0; j < f.dim; ++j) s[j] += v[j];
    return s;
}

HPolytope anticanonical_polytope(const Fan& f) {
    HPolytope h;
    h.dim = f.dim;
    for (const auto& v : f.rays) {
        h.normals.push_back(to_rational(v));
        h.offsets.emplace_back(1);
    }
    return h;
}

namespace {

// Depth-first scan of the box with partial-sum pruning; pairings fit in int64
// for everything in scope (small coordinates, small ray entries).
struct RootScan {
    std::size_t dim;
    std::vector<std::vector<std::int64_t>> rays;  // ray x coordinate
    std::vector<std::int64_t> lo, hi;
    std::vector<IVec>* out;

    // per inequality, partial pairing so far
    std::vector<std::int64_t> partial;
    // bounds of the remaining contribution for inequality i at depth d
    std::vector<std::vector<std::int64_t>> rest_min, rest_max;
    std::vector<std::int64_t> point;

    void run() {
        std::size_t k = rays.size();
        partial.assign(k, 0);
        point.assign(dim, 0);
        rest_min.assign(dim + 1, std::vector<std::int64_t>(k, 0));
        rest_max = rest_min;
        for (std::size_t d = dim; d-- > 0;) {
            for (std::size_t i = 0; i < k; ++i) {
                std::int64_t a = rays[i][d] * lo[d], b = rays[i][d] * hi[d];
                rest_min[d][i] = rest_min[d + 1][i] + std::min(a, b);
                rest_max[d][i] = rest_max[d + 1][i] + std::max(a, b);
            }
        }
        descend(0);
    }

    void descend(std::size_t d) {
        std::size_t k = rays.size();
        if (d == dim) {
            std::size_t minus_ones = 0;
            for (std::size_t i = 0; i < k; ++i) {
                if (partial[i] == -1)
                    ++minus_ones;
                else if (partial[i] < 0)
                    return;
            }
            if (minus_ones != 1) return;
            IVec m(dim);
            for (std::size_t j = 0; j < dim; ++j) m[j] = point[j];
            out->push_back(std::move(m));
            return;
        }
        for (std::int64_t x = lo[d]; x <= hi[d]; ++x) {
            bool viable = true;
            for (std::size_t i = 0; i < k; ++i) {
                std::int64_t p = partial[i] + rays[i][d] * x;
                if (p + rest_max[d + 1][i] < -1) {  // can never recover past -1
                    viable = false;
                    break;
                }
            }
            if (viable) {
                point[d] = x;
                for (std::size_t i = 0; i < k; ++i) partial[i] += rays[i][d] * x;
                descend(d + 1);
                for (std::size_t i = 0; i < k; ++i) partial[i] -= rays[i][d] * x;
            }
        }
    }
};

}  // namespace

RootSet demazure_roots(const Fan& f) {
    auto bad = validate(f);
    if (!bad.empty()) throw input_error("demazure_roots: invalid fan: " + bad.front());

    // every root lies in the polytope {m : <v, m> >= -1 for all rays v}
    HPolytope region = anticanonical_polytope(f);
    VRep rep;
    try {
        rep = enumerate_vertices(region);
    } catch (const degenerate_error&) {
        throw degenerate_error("demazure_roots: root search region unbounded or empty "
                               "(fan not complete?)");
    }

    RootScan scan;
    scan.dim = f.dim;
    scan.lo.resize(f.dim);
    scan.hi.resize(f.dim);
    for (std::size_t j = 0; j < f.dim; ++j) {
        Rational mn = rep.vertices[0][j], mx = mn;
        for (const auto& v : rep.vertices) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        scan.lo[j] = static_cast<std::int64_t>(floor_rat(mn));
        scan.hi[j] = static_cast<std::int64_t>(ceil_rat(mx));
    }
    for (const auto& v : f.rays) {
        std::vector<std::int64_t> row;
        for (const auto& x : v) row.push_back(static_cast<std::int64_t>(x));
        scan.rays.push_back(std::move(row));
    }

    RootSet roots;
    scan.out = &roots.all;
    scan.run();
    std::sort(roots.all.begin(), roots.all.end());

    std::set<IVec> all_set(roots.all.begin(), roots.all.end());
    for (const auto& m : roots.all) {
        IVec neg(m.size());
        for (std::size_t j = 0; j < m.size(); ++j) neg[j] = -m[j];
        if (all_set.count(neg))
            roots.semisimple.push_back(m);
        else
            roots.unipotent.push_back(m);
        // record the witness ray
        for (std::size_t i = 0; i < f.rays.size(); ++i)
            if (dot(f.rays[i], m) == -1) {
                roots.witness.push_back(i);
                break;
            }
    }
    return roots;
}

ReductivityVerdict reductivity_verdict(const Fan& f) {
    RootSet r = demazure_roots(f);
    ReductivityVerdict v;
    v.roots = r.all.size();
    v.semisimple_roots = r.semisimple.size();
    v.unipotent_roots = r.unipotent.size();
    v.semisimple = r.unipotent.empty();
    IVec s = ray_sum(f);
    v.nill_sufficient = std::all_of(s.begin(), s.end(),
                                    [](const Integer& x) { return x == 0; });
    return v;
}

DivisorClassInfo divisor_classes(const Fan& f) {
    IMat cols = transpose(IMat(f.rays.begin(), f.rays.end()));  // dim x #rays
    if (rank(to_rational(cols)) < f.dim)
        throw input_error("divisor_classes: rays do not span");
    DivisorClassInfo info;
    info.free_rank = static_cast<long>(f.rays.size()) - static_cast<long>(f.dim);
    // relations among divisors = vectors orthogonal to every integer relation
    // among the rays themselves (kernel of the kernel)
    std::vector<IVec> ray_relations = integer_kernel(cols);
    if (ray_relations.empty()) {
        for (std::size_t i = 0; i < f.rays.size(); ++i) {
            IVec e(f.rays.size(), Integer(0));
            e[i] = 1;
            info.relation_basis.push_back(std::move(e));
        }
        return info;
    }
    info.relation_basis = integer_kernel(IMat(ray_relations.begin(), ray_relations.end()));
    return info;
}

bool divisors_equivalent(const DivisorClassInfo& info, std::size_t i, std::size_t j) {
    if (info.relation_basis.empty()) return i == j;
    std::size_t k = info.relation_basis[0].size();
    IVec diff(k, Integer(0));
    diff[i] += 1;
    diff[j] -= 1;
    return in_row_lattice(info.relation_basis, diff);
}

std::vector<std::vector<std::size_t>> divisor_orbits(const Fan& f) {
    DivisorClassInfo info = divisor_classes(f);
    std::size_t k = f.rays.size();
    std::vector<std::size_t> parent(k);
    for (std::size_t i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (find(i) != find(j) && divisors_equivalent(info, i, j))
                parent[find(j)] = find(i);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < k; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> orbits;
    for (auto& [root, members] : groups)
        if (members.size() >= 2) orbits.push_back(std::move(members));
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

Fan apply_transform(const Fan& f, const IMat& a) {
    if (a.size() != f.dim) throw input_error("apply_transform: matrix size mismatch");
    for (const auto& row : a)
        if (row.size() != f.dim) throw input_error("apply_transform: matrix not square");
    if (det(a) == 0) throw input_error("apply_transform: singular matrix");
    Fan g;
    g.dim = f.dim;
    g.label = f.label;
    for (const auto& v : f.rays) g.rays.push_back(mat_vec(a, v));
    return g;
}

namespace {

struct AutoSearch {
    const Fan* fan;
    QMat gram_inv;                        // inverse of sum of v v^T
    std::vector<Rational> self_pairing;   // q(v) = v^T S^-1 v per ray
    std::vector<std::size_t> basis;       // indices of a ray basis
    QMat basis_inv;                       // inverse of the basis-column matrix
    std::vector<std::size_t> image;       // chosen image ray per basis slot
    std::set<IVec> ray_set;
    std::vector<IMat>* out;

    Rational pairing(std::size_t i, std::size_t j) const {
        return dot(to_rational(fan->rays[i]),
                   mat_vec(gram_inv, to_rational(fan->rays[j])));
    }

    void search(std::size_t depth) {
        std::size_t n = fan->dim;
        if (depth == n) {
            emit();
            return;
        }
        for (std::size_t cand = 0; cand < fan->rays.size(); ++cand) {
            if (self_pairing[cand] != self_pairing[basis[depth]]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < depth && ok; ++j)
                if (pairing(cand, image[j]) != pairing(basis[depth], basis[j])) ok = false;
            if (!ok) continue;
            image[depth] = cand;
            search(depth + 1);
        }
    }

    void emit() {
        std::size_t n = fan->dim;
        // g maps basis ray b_j to image ray w_j:  g = W * B^-1
        QMat w_cols(n, QVec(n));
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                w_cols[i][j] = Rational(fan->rays[image[j]][i]);
        QMat g = mat_mul(w_cols, basis_inv);
        IMat gi(n, IVec(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (den(g[i][j]) != 1) return;
                gi[i][j] = num(g[i][j]);
            }
        if (abs_int(det(gi)) != 1) return;
        for (const auto& v : fan->rays)
            if (!ray_set.count(mat_vec(gi, v))) return;
        out->push_back(std::move(gi));
    }
};

}  // namespace

std::vector<IMat> ray_automorphisms(const Fan& f) {
    std::size_t n = f.dim;
    QMat gram(n, QVec(n, Rational(0)));
    for (const auto& v : f.rays)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) gram[i][j] += Rational(v[i] * v[j]);
    auto gram_inv = inverse(gram);
    if (!gram_inv) throw input_error("ray_automorphisms: rays do not span");

    AutoSearch s;
    s.fan = &f;
    s.gram_inv = *gram_inv;
    for (std::size_t i = 0; i < f.rays.size(); ++i)
        s.self_pairing.push_back(s.pairing(i, i));

    // greedy ray basis
    QMat so_far;
    for (std::size_t i = 0; i < f.rays.size() && s.basis.size() < n; ++i) {
        so_far.push_back(to_rational(f.rays[i]));
        if (rank(so_far) == so_far.size())
            s.basis.push_back(i);
        else
            so_far.pop_back();
    }
    QMat b_cols(n, QVec(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            b_cols[i][j] = Rational(f.rays[s.basis[j]][i]);
    s.basis_inv = *inverse(b_cols);
    s.ray_set = std::set<IVec>(f.rays.begin(), f.rays.end());
    s.image.resize(n);

    std::vector<IMat> found;
    s.out = &found;
    s.search(0);
    return found;
}

std::vector<QVec> fixed_subspace(const std::vector<IMat>& gens) {
    if (gens.empty()) throw input_error("fixed_subspace: no generators");
    std::size_t n = gens[0].size();
    QMat stacked;
    for (const auto& g : gens) {
        if (g.size() != n) throw input_error("fixed_subspace: dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) {
            if (g[i].size() != n) throw input_error("fixed_subspace: matrix not square");
            QVec row(n);
            for (std::size_t j = 0; j < n; ++j)
                row[j] = Rational(g[i][j]) - Rational(i == j ? 1 : 0);
            stacked.push_back(std::move(row));
        }
    }
    return kernel_basis(stacked);
}

}  // namespace toric
