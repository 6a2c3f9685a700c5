#pragma once

#include "polywork/polytope.hpp"

namespace polywork {

// Exact vertex enumeration by the double description method, inserting
// inequalities in input order. Output points are in canonical lexicographic
// order. Throws EmptyPolyhedron / NotBounded.
VPolytope enumerate_vertices(const HPolytope& p);

// Independent route for cross-validation: solve every d-subset of rows with
// nonsingular coefficient matrix and keep the feasible solutions. Also valid
// for unbounded polyhedra (it enumerates the vertex set of the polyhedron).
VPolytope enumerate_vertices_by_bases(const HPolytope& p);

// Facets of conv(points), canonicalized rows. Lower-dimensional input yields
// the facets within the affine hull plus the affine-hull equations as paired
// inequalities.
HPolytope enumerate_facets(const VPolytope& q);

// Decides P = conv(Q). Q <= P by substitution, the converse by checking that
// every enumerated vertex of P appears in Q's point list.
bool verify(const HPolytope& p, const VPolytope& q);

// Decides P <= conv(Q) for bounded P: one hull-membership LP per vertex of P.
bool contains(const HPolytope& p, const VPolytope& q);

}  // namespace polywork
