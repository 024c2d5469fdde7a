// Acceptance harness: twelve checks, one PASS/FAIL line each, exit code is
// the number of failures.  Everything is evaluated from the library; no
// stored reports are consulted.

#include "toric/pipeline.hpp"

#include "oracles.hpp"

#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace toric;

namespace {

int g_failures = 0;

void run(int number, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s criterion %2d: %s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
                note.c_str());
    if (!ok) ++g_failures;
}

IMat identity_with_last_row(std::size_t n, const IVec& last) {
    IMat a = identity_matrix<Integer>(n);
    a[n - 1] = last;
    return a;
}

const IMat kA5 = identity_with_last_row(
    5, {Integer(-1), Integer(-1), Integer(-1), Integer(2), Integer(-4)});
const IMat kA6 = identity_with_last_row(
    6, {Integer(-3), Integer(-3), Integer(-3), Integer(4), Integer(4), Integer(-12)});

Fan remark_fan() {
    std::vector<IVec> rays;
    for (int i = 0; i < 5; ++i) {
        IVec e(5, Integer(0));
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back({Integer(-1), Integer(-1), Integer(0), Integer(0), Integer(1)});
    rays.push_back({Integer(0), Integer(0), Integer(-1), Integer(0), Integer(-1)});
    rays.push_back({Integer(0), Integer(0), Integer(0), Integer(-1), Integer(-1)});
    rays.push_back({Integer(0), Integer(0), Integer(0), Integer(0), Integer(-1)});
    return make_fan(5, std::move(rays), "remark-5d");
}

MomentData fan_moments(const Fan& f) {
    const HPolytope h = anticanonical_polytope(f);
    return moments(h, enumerate_vertices(h));
}

FamilyPolynomials certified_family(const Fan& transformed,
                                   const std::vector<std::size_t>& rays,
                                   const Rational& lo, const Rational& hi) {
    const ParametricFamily fam = family_from_fan(transformed, rays, Rational(1, 2));
    return family_polynomials(fam, certify_chamber(fam, lo, hi));
}

QVec scaled(const Rational& s, std::initializer_list<long> entries) {
    QVec v;
    for (long e : entries) v.push_back(s * Rational(e));
    return v;
}

// --- criteria -------------------------------------------------------------

bool criterion1() {
    const Fan f = bundle_fan(3, 1);
    const HPolytope h = anticanonical_polytope(f);
    const VRep v = enumerate_vertices(h);
    const MomentData m = moments(h, v);
    return v.vertices.size() == 16 && m.volume == Rational(599, 15) &&
           m.first_moments == scaled(Rational(13, 18), {1, 1, 1, -2, 4}) &&
           is_reflexive(h, v) && is_delzant(h, v);
}

bool criterion2() {
    const MomentData m = fan_moments(apply_transform(bundle_fan(3, 1), kA5));
    return m.volume == Rational(599, 60) &&
           m.first_moments == QVec{Rational(0), Rational(0), Rational(0), Rational(0),
                                   Rational(-13, 72)};
}

bool criterion3() {
    const Fan t = apply_transform(bundle_fan(3, 1), kA5);
    const FamilyPolynomials fp = certified_family(t, {3, 6}, Rational(1, 4), Rational(3, 4));
    // V(c) = (1360c - 81)/1920, m5(c) = 89/11520 - (27/1280)c
    bool ok = fp.volume_poly == Poly({Rational(-81, 1920), Rational(1360, 1920)});
    ok = ok && fp.moment_polys[4] == Poly({Rational(89, 11520), Rational(-27, 1280)});
    for (std::size_t i = 0; i < 4; ++i) ok = ok && fp.moment_polys[i].is_zero();
    return ok;
}

bool criterion4() {
    const Fan t = apply_transform(bundle_fan(3, 1), kA5);
    const FamilyPolynomials fp = certified_family(t, {3, 6}, Rational(1, 4), Rational(3, 4));
    const Poly n = coupled_equation(fp, 4);
    // roots are 1/2 +- (1/36) sqrt(7787/102): the identity below pins the
    // algebraic numbers exactly, the decimals witness the stated approximations
    const Poly lin({Rational(-18), Rational(36)});
    const Poly reference = lin * lin * Rational(102) - Poly::constant(Rational(7787));
    bool ok = n == poly_from_integers(primitive_integer_form(reference).coeffs);

    const OrbitSolve os = solve_orbit(fp, 4);
    ok = ok && os.win_lo == Rational(1, 4) && os.win_hi == Rational(3, 4);
    ok = ok && os.roots.size() == 2 && os.any_valid && os.decisive;
    if (!ok) return false;
    ok = decimal_string(os.roots[0].interval, 5) == "0.25729" &&
         decimal_string(os.roots[1].interval, 5) == "0.74271";
    return ok && os.roots[0].verdict == KahlerVerdict::Valid &&
           os.roots[1].verdict == KahlerVerdict::Valid;
}

bool criterion5() {
    const Fan f = bundle_fan(3, 2);
    const HPolytope h = anticanonical_polytope(f);
    const VRep v = enumerate_vertices(h);
    const MomentData m = moments(h, v);
    return v.vertices.size() == 24 && m.volume == Rational(4039, 45) &&
           m.first_moments == scaled(Rational(23, 126), {3, 3, 3, -4, -4, 12});
}

bool criterion6() {
    const Fan f = bundle_fan(3, 2);
    const Fan t = apply_transform(f, kA6);
    const MomentData direct = fan_moments(t);
    const Rational by_det = fan_moments(f).volume / abs_rat(Rational(det(kA6)));
    bool ok = direct.volume == by_det && direct.volume == Rational(4039, 540);
    ok = ok && direct.first_moments[5] == Rational(-23, 1512);
    for (std::size_t i = 0; i < 5; ++i) ok = ok && direct.first_moments[i] == 0;
    // a previously circulated value for this volume fails the determinant identity
    return ok && by_det != Rational(4019, 540);
}

bool criterion7() {
    const Fan t = apply_transform(bundle_fan(3, 2), kA6);
    const FamilyPolynomials fp =
        certified_family(t, {3, 4, 7}, Rational(1, 4), Rational(3, 4));
    const Poly vol({Rational(89, 17280), Rational(-729, 17280), Rational(9180, 17280)});
    const Poly mom({Rational(-341, 3870720), Rational(9968, 3870720),
                    Rational(-20412, 3870720)});
    const Poly mom_alt({Rational(-341, 3870720), Rational(89, 34560), Rational(-27, 5120)});
    return fp.volume_poly == vol && fp.moment_polys[5] == mom && mom == mom_alt;
}

bool criterion8() {
    const Fan t = apply_transform(bundle_fan(3, 2), kA6);
    const FamilyPolynomials fp =
        certified_family(t, {3, 4, 7}, Rational(1, 4), Rational(3, 4));
    const OrbitSolve os = solve_orbit(fp, 5);
    if (os.roots.size() != 4) return false;
    bool ok = decimal_string(os.roots[0].interval, 6) == "0.048084" &&
              decimal_string(os.roots[1].interval, 5) == "0.34420" &&
              decimal_string(os.roots[2].interval, 5) == "0.65580" &&
              decimal_string(os.roots[3].interval, 5) == "0.95192";
    ok = ok && os.roots[0].verdict == KahlerVerdict::Invalid &&
         os.roots[1].verdict == KahlerVerdict::Valid &&
         os.roots[2].verdict == KahlerVerdict::Valid &&
         os.roots[3].verdict == KahlerVerdict::Invalid;
    return ok && run_cke(fixture_job("d6")).classification == "cKE-not-KE";
}

bool criterion9() {
    const ReductivityVerdict a = reductivity_verdict(bundle_fan(3, 1));
    const ReductivityVerdict b = reductivity_verdict(bundle_fan(3, 2));
    const ReductivityVerdict c = reductivity_verdict(remark_fan());
    bool ok = a.semisimple && a.unipotent_roots == 0 && a.nill_sufficient;
    ok = ok && b.semisimple && b.unipotent_roots == 0 && b.nill_sufficient;
    // the nine-ray fan stays semisimple although its rays do not sum to zero
    return ok && c.semisimple && c.unipotent_roots == 0 && !c.nill_sufficient;
}

bool criterion10() {
    const DivisorClassInfo d5 = divisor_classes(bundle_fan(3, 1));
    const DivisorClassInfo d6 = divisor_classes(bundle_fan(3, 2));
    bool ok = d5.free_rank == 3 && d6.free_rank == 3;
    // D1 ~ D2 ~ D3 ~ D6, D4 ~ D7, D5 + D6 ~ D7 + D8 on eight divisors
    ok = ok && divisors_equivalent(d5, 0, 1) && divisors_equivalent(d5, 0, 2) &&
         divisors_equivalent(d5, 0, 5) && divisors_equivalent(d5, 3, 6);
    ok = ok && in_row_lattice(d5.relation_basis,
                              {Integer(0), Integer(0), Integer(0), Integer(0), Integer(1),
                               Integer(1), Integer(-1), Integer(-1)});
    // D4 ~ D5 ~ D8, D1 ~ D2 ~ D3 ~ D7, D6 + D7 ~ D8 + D9 on nine divisors
    ok = ok && divisors_equivalent(d6, 3, 4) && divisors_equivalent(d6, 3, 7) &&
         divisors_equivalent(d6, 0, 1) && divisors_equivalent(d6, 0, 2) &&
         divisors_equivalent(d6, 0, 6);
    return ok && in_row_lattice(d6.relation_basis,
                                {Integer(0), Integer(0), Integer(0), Integer(0), Integer(0),
                                 Integer(1), Integer(1), Integer(-1), Integer(-1)});
}

bool covariance_suite(std::mt19937_64& rng) {
    const std::vector<Fan> fans = {bundle_fan(3, 1), bundle_fan(3, 2), bundle_fan(1, 2),
                                   remark_fan()};
    for (const Fan& f : fans) {
        const HPolytope h = anticanonical_polytope(f);
        const VRep v = enumerate_vertices(h);
        const MomentData base = moments(h, v);
        for (int t = 0; t < 20; ++t) {
            const IMat u = oracle::rand_unimodular(rng, f.dim, 6);
            const QMat ut = transpose(to_rational(u));
            HPolytope img;
            img.dim = h.dim;
            img.offsets = h.offsets;
            for (const auto& n : h.normals) {
                const auto sol = solve_linear(ut, n);
                if (!sol) return false;
                img.normals.push_back(*sol);
            }
            const MomentData m = moments(img, enumerate_vertices(img));
            if (m.volume != base.volume) return false;
            const QMat uq = to_rational(u);
            for (std::size_t i = 0; i < f.dim; ++i)
                if (m.first_moments[i] != dot(uq[i], base.first_moments)) return false;
        }
    }
    return true;
}

bool triangulation_suite() {
    for (const Fan& f : {bundle_fan(3, 1), bundle_fan(3, 2), bundle_fan(1, 2),
                         remark_fan()}) {
        const HPolytope h = anticanonical_polytope(f);
        const VRep v = enumerate_vertices(h);
        const MomentData a = moments(h, v, Anchor::LexMin);
        const MomentData b = moments(h, v, Anchor::LexMax);
        if (a.volume != b.volume || a.first_moments != b.first_moments ||
            a.barycenter != b.barycenter)
            return false;
    }
    return true;
}

bool sturm_suite(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> quartic(0, 1);
    std::uniform_int_distribution<int> drop(0, 1);
    const Rational lo(-30), hi(30);
    for (int t = 0; t < 100; ++t) {
        const int degree = 3 + quartic(rng);
        const int quads = drop(rng);  // 0 or 1 rootless quadratic factor
        const int k = degree - 2 * quads;
        std::vector<Rational> roots;
        while (static_cast<int>(roots.size()) < k) {
            const Rational r(num(rng), den(rng));
            bool dup = false;
            for (const auto& s : roots) dup = dup || s == r;
            if (!dup) roots.push_back(r);
        }
        Poly p = Poly::constant(Rational(num(rng) >= 0 ? 3 : -3));
        for (const auto& r : roots) p = p * Poly({-r, Rational(1)});
        for (int q = 0; q < quads; ++q) {
            const Rational a(num(rng), den(rng));
            // (x + a)^2 + positive
            p = p * Poly({a * a + Rational(den(rng)), a * 2, Rational(1)});
        }
        const auto found = isolate_real_roots(p, lo, hi);
        if (found.size() != roots.size()) return false;
        std::sort(roots.begin(), roots.end());
        for (std::size_t i = 0; i < found.size(); ++i)
            if (!found[i].exact || *found[i].exact != roots[i]) return false;
        if (oracle::grid_sign_changes(p, lo, hi, 241) > found.size()) return false;
    }
    return true;
}

bool smith_suite(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> sz(1, 5);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = sz(rng), cols = sz(rng);
        IMat m(rows, IVec(cols));
        for (auto& row : m)
            for (auto& e : row) e = entry(rng);
        const SmithForm s = smith_normal_form(m);
        if (!is_unimodular(s.u) || !is_unimodular(s.v)) return false;
        if (mat_mul(mat_mul(s.u, m), s.v) != s.d) return false;
        Integer prev(0);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const Integer& e = s.d[i][j];
                if (i != j && e != 0) return false;
                if (i == j && e != 0) {
                    ++nonzero;
                    if (e < 0) return false;
                    if (prev != 0 && e % prev != 0) return false;
                    prev = e;
                }
            }
        if (nonzero != s.rank || s.rank != rank(to_rational(m))) return false;
    }
    return true;
}

bool dilation_check() {
    const Fan t = apply_transform(bundle_fan(3, 1), kA5);
    const ParametricFamily all =
        family_from_fan(t, {0, 1, 2, 3, 4, 5, 6, 7}, Rational(1, 2));
    const Chamber ch = chamber_around(all, Rational(1, 2), Rational(0), Rational(1));
    const FamilyPolynomials fp = family_polynomials(all, ch);
    return fp.volume_poly(Rational(1, 2)) == Rational(599, 1920);
}

bool criterion11() {
    std::mt19937_64 rng(20260815);
    return covariance_suite(rng) && triangulation_suite() && sturm_suite(rng) &&
           smith_suite(rng) && dilation_check();
}

bool criterion12() {
    const Fan f = bundle_fan(1, 2);
    const IMat a =
        identity_with_last_row(4, {Integer(3), Integer(-2), Integer(-2), Integer(6)});
    const Fan t = apply_transform(f, a);

    // first orbit: rays 1 and 5 (1-based), chamber (1/4, 1)
    const ParametricFamily fam1 = family_from_fan(t, {0, 4}, Rational(1, 2));
    const Chamber ch1 = chamber_around(fam1, Rational(1, 2), Rational(0), Rational(1));
    bool ok = ch1.lo == Rational(1, 4) && ch1.hi == Rational(1);
    const FamilyPolynomials fp1 = family_polynomials(fam1, ch1);
    ok = ok && fp1.volume_poly == Poly({Rational(-1, 48), Rational(7, 18)});
    ok = ok && fp1.moment_polys[3] == Poly({Rational(1, 360), Rational(-1, 144)});
    const OrbitSolve os1 = solve_orbit(fp1, 3);
    ok = ok && os1.numerator == Poly({Rational(23), Rational(-112), Rational(112)});
    ok = ok && os1.roots.size() == 2 && os1.any_valid && os1.decisive;

    // second orbit: rays 2, 3, 6, chamber (1/6, 1); its quartic has no root in
    // the symmetric window
    const ParametricFamily fam2 = family_from_fan(t, {1, 2, 5}, Rational(1, 2));
    const Chamber ch2 = chamber_around(fam2, Rational(1, 2), Rational(0), Rational(1));
    ok = ok && ch2.lo == Rational(1, 6);
    const FamilyPolynomials fp2 = family_polynomials(fam2, ch2);
    ok = ok && fp2.volume_poly ==
                   Poly({Rational(1, 144), Rational(-1, 24), Rational(3, 4)});
    ok = ok && fp2.moment_polys[3] ==
                   Poly({Rational(1, 5760), Rational(-1, 144), Rational(1, 96)});
    const OrbitSolve os2 = solve_orbit(fp2, 3);
    ok = ok && os2.numerator == Poly({Rational(31), Rational(-1134), Rational(4374),
                                      Rational(-6480), Rational(3240)});
    ok = ok && !os2.any_valid && os2.decisive;
    for (const auto& r : os2.roots) ok = ok && r.verdict == KahlerVerdict::Invalid;

    return ok && run_cke(fixture_job("d19")).classification == "cKE-not-KE";
}

}  // namespace

int main() {
    run(1, "five-dimensional bundle polytope: volume 599/15, moments, 16 vertices,"
           " reflexive, delzant",
        criterion1);
    run(2, "transformed five-dimensional polytope: volume 599/60, moments"
           " (0,0,0,0,-13/72)",
        criterion2);
    run(3, "paired family on the five-dimensional bundle: exact volume and moment"
           " polynomials",
        criterion3);
    run(4, "five-dimensional coupling numerator: exact quadratic identity and both"
           " roots valid",
        criterion4);
    run(5, "six-dimensional bundle polytope: volume 4039/45, moments, 24 vertices",
        criterion5);
    run(6, "six-dimensional transformed volume agrees with the determinant identity"
           " (4039/540)",
        criterion6);
    run(7, "triple family on the six-dimensional bundle: exact volume and moment"
           " polynomials",
        criterion7);
    run(8, "six-dimensional quartic: four real roots, middle pair valid,"
           " classification cKE-not-KE",
        criterion8);
    run(9, "semisimplicity of both bundles and the nine-ray fan; ray-sum criterion"
           " fails only for the latter",
        criterion9);
    run(10, "divisor class free rank 3 and the published linear equivalences",
        criterion10);
    run(11, "property suites: covariance, triangulation anchors, root isolation"
            " oracle, smith identities, dilation",
        criterion11);
    run(12, "four-dimensional bundle regression: exact chamber polynomials and"
            " classification cKE-not-KE",
        criterion12);

    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criteria failed\n", g_failures);
    return g_failures;
}
