#pragma once

#include <optional>

#include "polywork/lattice.hpp"

namespace polywork {

// Certificate carrier for equivalence results. Every bijection returned by
// this module has been verified by substitution.
struct Bijection {
  enum class Kind { VertexMap, VertexFacetPair, LatticeMap };
  Kind kind = Kind::VertexMap;
  std::vector<std::size_t> forward;        // vertex/row/node map
  std::vector<std::size_t> facet_forward;  // column map for VertexFacetPair
};

// Row and column permutations transforming A into B, found by backtracking
// with degree/neighborhood invariant pruning.
std::optional<Bijection> incidence_isomorphic(const IncidenceMatrix& a, const IncidenceMatrix& b);

// Rank-preserving Hasse isomorphism, via the atom/coatom incidences.
std::optional<Bijection> lattice_isomorphic(const FaceLattice& l, const FaceLattice& m);

// Anti-automorphism test: can A be transformed into A^T?
std::optional<Bijection> self_dual(const FaceLattice& l);

// Vertex bijection realized by an affine bijection T with T(P) = Q.
std::optional<Bijection> affinely_equivalent(const VPolytope& p, const VPolytope& q);

// Face lattices isomorphic; decided through facet enumeration plus
// incidence isomorphism.
std::optional<Bijection> combinatorially_equivalent(const VPolytope& p, const VPolytope& q);

// Vertex-facet incidences of a V-polytope (rows tight at every vertex, the
// affine-hull equations, are not facets and are dropped).
IncidenceMatrix incidences_of_vpolytope(const VPolytope& q);

}  // namespace polywork
