#pragma once

#include "polywork/budget.hpp"
#include "polywork/graph.hpp"
#include "polywork/polytope.hpp"

namespace polywork {

// Facet vertex-sets of a simple polytope, recovered from its abstract graph
// alone. Enumerates candidate (d-1)-regular connected induced subgraphs and
// keeps those that start some minimum-objective acyclic orientation, the
// objective being sum_v 2^indeg(v) over acyclic orientations (its minimum is
// the face count, attained exactly by the unique-sink orientations).
FacetSystem reconstruct_facets(const AbstractGraph& g, Budget budget = {});

// True iff F equals reconstruct_facets(g) as a set family.
bool verify_facet_system(const AbstractGraph& g, const FacetSystem& f, Budget budget = {});

// Acyclic and unique-sink on every nonempty face; faces are enumerated from
// the facet system through the incidence-lattice machinery.
bool is_AOF(const AbstractGraph& g, const FacetSystem& f, const Orientation& o);

// Extracts an orientation attaining the minimum of sum_v 2^indeg and
// certifies it with is_AOF before returning.
Orientation find_AOF(const AbstractGraph& g, const FacetSystem& f, Budget budget = {});

// Geometric oracle data: the graph of a polytope together with its facet
// vertex-sets, indices consistent with the canonical vertex order.
struct GraphWithFacets {
  AbstractGraph graph;
  FacetSystem facets;
};
GraphWithFacets geometric_graph(const HPolytope& p);

// Orientation along decreasing objective: each edge points to the endpoint
// with smaller weights.vertex value; weights indexed by vertex.
Orientation orientation_by_values(const AbstractGraph& g, const std::vector<Rational>& value);

}  // namespace polywork
