#include "toric/parametric.hpp"

#include "toric/linalg.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace toric {

namespace {

bool first_subset(std::vector<std::size_t>& idx, std::size_t k, std::size_t m) {
    if (k > m) return false;
    idx.resize(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return true;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t m) {
    const std::size_t k = idx.size();
    if (k == 0) return false;
    std::size_t i = k;
    while (i-- > 0) {
        if (idx[i] + (k - i) < m) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

Signature make_signature(const VRep& vr) {
    Signature sig;
    sig.incidences = vr.incidence;
    std::sort(sig.incidences.begin(), sig.incidences.end());
    sig.facet_active = vr.facet_active;
    return sig;
}

std::optional<Signature> try_signature(const ParametricFamily& fam, const Rational& c) {
    try {
        return signature_at(fam, c);
    } catch (const degenerate_error&) {
        return std::nullopt;
    }
}

// sample fractions with prime-ish numerators over 97/101: fixed, distinct,
// spread over (0,1)
const long kCertNum[] = {7, 19, 31, 43, 53, 61, 71, 83, 89, 13, 29, 37, 41, 59, 67, 73, 79};
const long kNodeNum[] = {5, 11, 23, 37, 47, 59, 67, 79, 89, 93, 99, 3, 9, 15, 21, 27, 33};

}  // namespace

ParametricFamily family_from_fan(const Fan& f, const std::vector<std::size_t>& parametrized,
                                 const Rational& base_offset) {
    // transformed ray sets may be non-primitive, so only shape is checked here
    if (f.dim == 0) throw input_error("fan has dimension zero");
    for (const auto& v : f.rays) {
        if (v.size() != f.dim) throw input_error("ray length does not match dimension");
        bool zero = true;
        for (const auto& e : v) zero = zero && e == 0;
        if (zero) throw input_error("zero ray");
    }
    if (parametrized.empty()) throw input_error("no parametrized rays given");
    std::set<std::size_t> seen;
    for (std::size_t i : parametrized) {
        if (i >= f.rays.size()) throw input_error("parametrized ray index out of range");
        if (!seen.insert(i).second) throw input_error("parametrized ray index repeated");
    }
    ParametricFamily fam;
    fam.dim = f.dim;
    fam.normals.resize(f.rays.size());
    fam.offset_const.assign(f.rays.size(), base_offset);
    fam.offset_slope.assign(f.rays.size(), Rational(0));
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        fam.normals[i] = to_rational(f.rays[i]);
        if (seen.count(i)) {
            fam.offset_const[i] = Rational(0);
            fam.offset_slope[i] = Rational(1);
        }
    }
    return fam;
}

HPolytope instantiate(const ParametricFamily& fam, const Rational& c) {
    HPolytope h;
    h.dim = fam.dim;
    h.normals = fam.normals;
    h.offsets.resize(fam.offset_const.size());
    for (std::size_t i = 0; i < h.offsets.size(); ++i)
        h.offsets[i] = fam.offset_const[i] + fam.offset_slope[i] * c;
    return h;
}

Signature signature_at(const ParametricFamily& fam, const Rational& c) {
    const HPolytope h = instantiate(fam, c);
    return make_signature(enumerate_vertices(h));
}

std::vector<Rational> chamber_breakpoints(const ParametricFamily& fam, const Rational& lo,
                                          const Rational& hi) {
    if (!(lo < hi)) throw input_error("empty parameter window");
    const std::size_t n = fam.dim;
    const std::size_t m = fam.normals.size();

    // Candidate thresholds: where an off-system inequality becomes tight at
    // the (affine in c) solution of a nonsingular n-subset system.
    std::set<Rational> cand;
    std::vector<std::size_t> idx;
    if (first_subset(idx, n, m)) {
        do {
            QMat mat(n, QVec(n));
            QVec rp(n), rq(n);
            for (std::size_t r = 0; r < n; ++r) {
                mat[r] = fam.normals[idx[r]];
                rp[r] = -fam.offset_const[idx[r]];
                rq[r] = -fam.offset_slope[idx[r]];
            }
            const auto u = solve_linear(mat, rp);
            if (!u) continue;  // singular for every c
            const auto w = solve_linear(mat, rq);
            for (std::size_t j = 0; j < m; ++j) {
                if (std::find(idx.begin(), idx.end(), j) != idx.end()) continue;
                const Rational alpha = dot(*u, fam.normals[j]) + fam.offset_const[j];
                const Rational beta = dot(*w, fam.normals[j]) + fam.offset_slope[j];
                if (beta == 0) continue;
                const Rational root = -alpha / beta;
                if (lo < root && root < hi) cand.insert(root);
            }
        } while (next_subset(idx, m));
    }
    if (cand.empty()) return {};

    // Keep only candidates across which the signature actually changes.
    std::vector<Rational> sorted(cand.begin(), cand.end());
    std::vector<Rational> cuts;
    cuts.push_back(lo);
    cuts.insert(cuts.end(), sorted.begin(), sorted.end());
    cuts.push_back(hi);
    std::vector<std::optional<Signature>> probe(cuts.size() - 1);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
        probe[k] = try_signature(fam, (cuts[k] + cuts[k + 1]) / 2);
    std::vector<Rational> out;
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (!(probe[k] == probe[k + 1])) out.push_back(sorted[k]);
    return out;
}

Chamber certify_chamber(const ParametricFamily& fam, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw input_error("empty chamber interval");
    if (!chamber_breakpoints(fam, lo, hi).empty())
        throw degenerate_error("interval crosses a chamber wall");
    const std::size_t k = fam.dim + 3;
    if (k > sizeof(kCertNum) / sizeof(kCertNum[0]))
        throw input_error("dimension too large for chamber certification");
    Chamber ch;
    ch.lo = lo;
    ch.hi = hi;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational s = lo + (hi - lo) * Rational(kCertNum[i], 97);
        ch.samples.push_back(s);
        const Signature sig = signature_at(fam, s);
        if (i == 0)
            ch.signature = sig;
        else if (!(sig == ch.signature))
            throw degenerate_error("signature mismatch inside chamber");
    }
    return ch;
}

Chamber chamber_around(const ParametricFamily& fam, const Rational& base, const Rational& lo,
                       const Rational& hi) {
    if (!(lo < base && base < hi)) throw input_error("base point outside window");
    const auto walls = chamber_breakpoints(fam, lo, hi);
    Rational a = lo, b = hi;
    for (const Rational& w : walls) {
        if (w == base) throw degenerate_error("base point lies on a chamber wall");
        if (w < base && w > a) a = w;
        if (w > base && w < b) b = w;
    }
    return certify_chamber(fam, a, b);
}

FamilyPolynomials family_polynomials(const ParametricFamily& fam, const Chamber& ch) {
    const std::size_t n = fam.dim;
    const std::size_t k = n + 3;
    if (k > sizeof(kNodeNum) / sizeof(kNodeNum[0]))
        throw input_error("dimension too large for interpolation");

    std::vector<Rational> nodes(k);
    std::vector<MomentData> data(k);
    for (std::size_t i = 0; i < k; ++i) {
        nodes[i] = ch.lo + (ch.hi - ch.lo) * Rational(kNodeNum[i], 101);
        const HPolytope h = instantiate(fam, nodes[i]);
        data[i] = moments(h, enumerate_vertices(h));
    }

    FamilyPolynomials fp;
    fp.chamber = ch;

    // volume: degree <= n, so n+1 nodes determine it; two held-out checks
    {
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i <= n; ++i) pts.emplace_back(nodes[i], data[i].volume);
        fp.volume_poly = interpolate(pts);
        for (std::size_t i = n + 1; i < k; ++i)
            if (fp.volume_poly(nodes[i]) != data[i].volume)
                throw degenerate_error("volume interpolation failed held-out check");
    }

    // coordinate moments: degree <= n+1, so n+2 nodes plus one check
    fp.moment_polys.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i < n + 2; ++i)
            pts.emplace_back(nodes[i], data[i].first_moments[j]);
        fp.moment_polys[j] = interpolate(pts);
        if (fp.moment_polys[j](nodes[n + 2]) != data[n + 2].first_moments[j])
            throw degenerate_error("moment interpolation failed held-out check");
    }
    return fp;
}

}  // namespace toric
