#pragma once

#include "toric/fan.hpp"
#include "toric/polynomial.hpp"
#include "toric/polytope.hpp"

#include <vector>

namespace toric {

// Polytope family { x : <x, normals[i]> >= -(offset_const[i] + offset_slope[i] c) }
struct ParametricFamily {
    std::size_t dim = 0;
    QMat normals;
    QVec offset_const;
    QVec offset_slope;
};

// b_i(c) = c on the chosen rays, base_offset elsewhere (0-based indices)
ParametricFamily family_from_fan(const Fan& f, const std::vector<std::size_t>& parametrized,
                                 const Rational& base_offset);

HPolytope instantiate(const ParametricFamily& fam, const Rational& c);

// Combinatorial fingerprint: sorted tight-set multiset plus facet activity.
struct Signature {
    std::vector<std::vector<std::size_t>> incidences;
    std::vector<bool> facet_active;
    bool operator==(const Signature&) const = default;
};

Signature signature_at(const ParametricFamily& fam, const Rational& c);

// Parameter values in the open window where the vertex-facet signature
// actually changes (candidate thresholds from every generically nonsingular
// tight system, kept only when the signatures on the two sides differ).
std::vector<Rational> chamber_breakpoints(const ParametricFamily& fam, const Rational& lo,
                                          const Rational& hi);

struct Chamber {
    Rational lo;
    Rational hi;
    std::vector<Rational> samples;  // certification points
    Signature signature;
};

// Certifies that (lo, hi) carries one combinatorial type: no interior
// breakpoint, and identical signatures at dim+3 interior samples.
// Throws degenerate_error on violation.
Chamber certify_chamber(const ParametricFamily& fam, const Rational& lo, const Rational& hi);

// The chamber around a base point: expand to the nearest breakpoints in the
// window, then certify.
Chamber chamber_around(const ParametricFamily& fam, const Rational& base, const Rational& lo,
                       const Rational& hi);

struct FamilyPolynomials {
    Poly volume_poly;               // degree <= dim
    std::vector<Poly> moment_polys; // per coordinate, degree <= dim+1
    Chamber chamber;
};

// Exact interpolation from samples inside the chamber, with held-out
// verification points (throws degenerate_error if a degree bound fails).
FamilyPolynomials family_polynomials(const ParametricFamily& fam, const Chamber& ch);

}  // namespace toric
