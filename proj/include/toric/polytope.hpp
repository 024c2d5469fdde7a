#pragma once

#include "toric/linalg.hpp"

#include <vector>

namespace toric {

// { x : <x, normals[i]> >= -offsets[i] }
struct HPolytope {
    std::size_t dim = 0;
    QMat normals;
    QVec offsets;
};

struct VRep {
    std::vector<QVec> vertices;
    // per vertex, sorted indices of all tight inequalities
    std::vector<std::vector<std::size_t>> incidence;
    // per inequality, whether it supports an (n-1)-dimensional face
    std::vector<bool> facet_active;
};

struct MomentData {
    Rational volume;
    QVec first_moments;  // integral of each coordinate
    QVec barycenter;     // first_moments / volume
};

// Exhaustive exact vertex enumeration.  Throws degenerate_error when the
// feasible set is unbounded, empty, or not full-dimensional.
VRep enumerate_vertices(const HPolytope& h);

// All vertices integral?  Requires offsets identically 1 and primitive
// integer normals (input_error otherwise).
bool is_reflexive(const HPolytope& h, const VRep& v);

// Every vertex simple with tight normals a lattice basis.
bool is_delzant(const HPolytope& h, const VRep& v);

enum class Anchor { LexMin, LexMax };

// Pulling triangulation; simplices have disjoint interiors covering the
// polytope, each a (dim+1)-tuple of vertices.
std::vector<std::vector<QVec>> triangulate(const HPolytope& h, const VRep& v,
                                           Anchor anchor = Anchor::LexMin);

MomentData moments(const HPolytope& h, const VRep& v, Anchor anchor = Anchor::LexMin);

// barycenter == 0 (Fano KE criterion when h is the anticanonical polytope)
bool is_ke(const MomentData& m);

std::size_t affine_rank(const std::vector<QVec>& points);

}  // namespace toric
