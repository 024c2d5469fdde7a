#pragma once

#include "toric/linalg.hpp"
#include "toric/polytope.hpp"

#include <string>
#include <vector>

namespace toric {

struct Fan {
    std::size_t dim = 0;
    std::vector<IVec> rays;  // primitive generators, one per ray
    std::string label;
};

// Empty list means valid; otherwise human-readable violations.
std::vector<std::string> validate(const Fan& f);

Fan make_fan(std::size_t dim, std::vector<IVec> rays, std::string label = "");

// Fan of the CP^1-bundle P(O + O(-1,1)) over CP^m x CP^r, dimension m+r+1.
Fan bundle_fan(std::size_t m, std::size_t r);

IVec ray_sum(const Fan& f);

// P = { x : <x, v> >= -1 for every ray v }
HPolytope anticanonical_polytope(const Fan& f);

struct RootSet {
    std::vector<IVec> all;        // lattice functionals pairing -1 with exactly one ray
    std::vector<IVec> semisimple; // roots whose negative is also a root
    std::vector<IVec> unipotent;  // the rest
    std::vector<std::size_t> witness;  // per root, index of its -1 ray
};

RootSet demazure_roots(const Fan& f);

struct ReductivityVerdict {
    bool semisimple = false;       // no unipotent roots
    bool nill_sufficient = false;  // rays sum to zero (implies semisimple)
    std::size_t roots = 0;
    std::size_t semisimple_roots = 0;
    std::size_t unipotent_roots = 0;
};

ReductivityVerdict reductivity_verdict(const Fan& f);

struct DivisorClassInfo {
    long free_rank = 0;                // #rays - dim for smooth complete fans
    std::vector<IVec> relation_basis;  // lattice of linear equivalences D ~ D'
};

DivisorClassInfo divisor_classes(const Fan& f);

// D_i ~ D_j, i.e. e_i - e_j lies in the relation lattice (0-based indices)
bool divisors_equivalent(const DivisorClassInfo& info, std::size_t i, std::size_t j);

// classes of linearly equivalent divisors with at least two members, sorted
std::vector<std::vector<std::size_t>> divisor_orbits(const Fan& f);

// rays replaced by a * v; requires det(a) != 0
Fan apply_transform(const Fan& f, const IMat& a);

// all g in GL(n, Z) permuting the ray set
std::vector<IMat> ray_automorphisms(const Fan& f);

// basis of the common fixed space  intersection of ker(g - id)
std::vector<QVec> fixed_subspace(const std::vector<IMat>& gens);

}  // namespace toric
