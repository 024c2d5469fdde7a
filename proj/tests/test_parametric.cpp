#include "toric/parametric.hpp"

#include <doctest.h>

#include <vector>

using namespace toric;

namespace {

IMat identity_with_last_row(std::size_t n, const IVec& last) {
    IMat a = identity_matrix<Integer>(n);
    a[n - 1] = last;
    return a;
}

// transformed bundle(3,1) fan whose barycenter sits on the last axis
Fan mixed_fan5() {
    return apply_transform(
        bundle_fan(3, 1),
        identity_with_last_row(
            5, {Integer(-1), Integer(-1), Integer(-1), Integer(2), Integer(-4)}));
}

ParametricFamily pair_family5() {
    // rays 4 and 7 (1-based) carry offset c, the rest 1/2
    return family_from_fan(mixed_fan5(), {3, 6}, Rational(1, 2));
}

}  // namespace

TEST_CASE("family construction rejects malformed requests") {
    const Fan f = mixed_fan5();
    CHECK_THROWS_AS(family_from_fan(f, {}, Rational(1, 2)), input_error);
    CHECK_THROWS_AS(family_from_fan(f, {8}, Rational(1, 2)), input_error);
    CHECK_THROWS_AS(family_from_fan(f, {3, 3}, Rational(1, 2)), input_error);

    Fan zero = f;
    zero.rays[0] = IVec(5, Integer(0));
    CHECK_THROWS_AS(family_from_fan(zero, {3}, Rational(1, 2)), input_error);

    // imprimitive rays are fine: this family's fifth normal is -4 e5
    const ParametricFamily fam = pair_family5();
    CHECK(fam.normals[4] == QVec{Rational(0), Rational(0), Rational(0), Rational(0),
                                 Rational(-4)});
    CHECK(fam.offset_slope == QVec{Rational(0), Rational(0), Rational(0), Rational(1),
                                   Rational(0), Rational(0), Rational(1), Rational(0)});
    CHECK(fam.offset_const[3] == 0);
    CHECK(fam.offset_const[0] == Rational(1, 2));
}

TEST_CASE("instantiation matches a hand-built polytope") {
    const ParametricFamily fam = pair_family5();
    const HPolytope h = instantiate(fam, Rational(1, 2));
    // at c = 1/2 every offset equals 1/2: the polytope is half the anticanonical one
    const MomentData m = moments(h, enumerate_vertices(h));
    CHECK(m.volume == Rational(599, 60) / 32);  // (1/2)^5 scaling
    CHECK(m.first_moments[4] == Rational(-13, 72) / 64);
}

TEST_CASE("signatures distinguish combinatorial types") {
    const ParametricFamily fam = pair_family5();
    const Signature a = signature_at(fam, Rational(1, 2));
    const Signature b = signature_at(fam, Rational(3, 5));
    CHECK(a == b);  // same chamber
    const Signature c = signature_at(fam, Rational(1, 5));
    CHECK_FALSE(a == c);  // across the wall at 1/4
}

TEST_CASE("breakpoints of the paired family sit at the true wall") {
    const ParametricFamily fam = pair_family5();
    const auto bps = chamber_breakpoints(fam, Rational(0), Rational(1));
    REQUIRE(bps.size() == 1);
    CHECK(bps[0] == Rational(1, 4));
}

TEST_CASE("chamber certification") {
    const ParametricFamily fam = pair_family5();
    const Chamber ch = chamber_around(fam, Rational(1, 2), Rational(0), Rational(1));
    CHECK(ch.lo == Rational(1, 4));
    CHECK(ch.hi == Rational(1));
    CHECK(ch.samples.size() >= fam.dim + 3);
    for (const auto& s : ch.samples) {
        CHECK(s > ch.lo);
        CHECK(s < ch.hi);
    }

    // certification must refuse a window containing the wall
    CHECK_THROWS_AS(certify_chamber(fam, Rational(1, 8), Rational(7, 8)), degenerate_error);
    // and accept a window strictly inside one chamber
    const Chamber inner = certify_chamber(fam, Rational(1, 4), Rational(3, 4));
    CHECK(inner.signature == ch.signature);

    // base point on the wrong side lands in the other chamber
    const Chamber low = chamber_around(fam, Rational(1, 8), Rational(0), Rational(1));
    CHECK(low.lo == Rational(0));
    CHECK(low.hi == Rational(1, 4));
    CHECK_FALSE(low.signature == ch.signature);
}

TEST_CASE("family polynomials of the paired family") {
    const ParametricFamily fam = pair_family5();
    const Chamber ch = certify_chamber(fam, Rational(1, 4), Rational(3, 4));
    const FamilyPolynomials fp = family_polynomials(fam, ch);

    // V(c) = (1360 c - 81) / 1920
    CHECK(fp.volume_poly == Poly({Rational(-27, 640), Rational(17, 24)}));
    REQUIRE(fp.moment_polys.size() == 5);
    for (std::size_t i = 0; i < 4; ++i) CHECK(fp.moment_polys[i].is_zero());
    // m5(c) = (89 - 243 c) / 11520
    CHECK(fp.moment_polys[4] == Poly({Rational(89, 11520), Rational(-27, 1280)}));

    // interpolation is chamber-local, so the polynomials evaluate to the true
    // moments at a fresh parameter value
    const Rational c(2, 5);
    const HPolytope h = instantiate(fam, c);
    const MomentData m = moments(h, enumerate_vertices(h));
    CHECK(fp.volume_poly(c) == m.volume);
    CHECK(fp.moment_polys[4](c) == m.first_moments[4]);
}

TEST_CASE("dilation family scales volume by c^dim") {
    const ParametricFamily all = family_from_fan(mixed_fan5(), {0, 1, 2, 3, 4, 5, 6, 7},
                                                 Rational(1, 2));
    CHECK(chamber_breakpoints(all, Rational(0), Rational(1)).empty());
    const Chamber ch = chamber_around(all, Rational(1, 2), Rational(0), Rational(1));
    CHECK(ch.lo == Rational(0));
    CHECK(ch.hi == Rational(1));
    const FamilyPolynomials fp = family_polynomials(all, ch);

    Poly expected_vol({Rational(0), Rational(0), Rational(0), Rational(0), Rational(0),
                       Rational(599, 60)});
    CHECK(fp.volume_poly == expected_vol);
    CHECK(fp.volume_poly(Rational(1, 2)) == Rational(599, 1920));
    // the only surviving moment is degree dim+1 on the last axis
    for (std::size_t i = 0; i < 4; ++i) CHECK(fp.moment_polys[i].is_zero());
    CHECK(fp.moment_polys[4].degree() == 6);
    CHECK(fp.moment_polys[4].coeff(6) == Rational(-13, 72));
}

TEST_CASE("degenerate parameter values are rejected inside certification") {
    const ParametricFamily fam = pair_family5();
    // at c = -1 the two parametrized half-spaces force x5 >= 1/2 while the
    // fifth normal caps it at 1/8: the slice is empty
    CHECK_THROWS_AS(signature_at(fam, Rational(-1)), degenerate_error);
    CHECK_THROWS_AS(certify_chamber(fam, Rational(-1), Rational(-1, 2)), degenerate_error);
}
