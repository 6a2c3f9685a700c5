#pragma once

#include <optional>

#include "polywork/bitset.hpp"
#include "polywork/budget.hpp"
#include "polywork/smith.hpp"

namespace polywork {

// Finite abstract simplicial complex on vertices 0..n-1, given by its facet
// list (an antichain; subsumed input sets are dropped, duplicates merged).
// The empty face is implicitly a member; the complex {empty} is allowed and
// has dimension -1, but a complex with no faces at all is not.
class SimplicialComplex {
public:
  SimplicialComplex(std::size_t n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex from_bitsets(std::size_t n, std::vector<Bitset> facets);

  std::size_t vertex_count() const { return n_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Bitset>& facets() const { return facets_; }
  int dim() const;
  bool is_pure() const;
  bool has_face(const Bitset& f) const;

private:
  SimplicialComplex() = default;
  std::size_t n_ = 0;
  std::vector<Bitset> facets_;
};

// Every face including the empty one.
std::vector<Bitset> all_faces(const SimplicialComplex& c, Budget budget = {});

// (f_0, ..., f_dim) by explicit enumeration; empty for the {empty} complex.
std::vector<std::size_t> f_vector_complex(const SimplicialComplex& c, Budget budget = {});

// Non-reduced Euler characteristic via the intersection-closure engine:
// closed sets are enumerated lexicographically (NextClosure) and the signed
// face counts recovered by a Moebius sieve over that closure system.
long euler_characteristic(const SimplicialComplex& c);

// Independent engine: direct face enumeration.
long euler_characteristic_direct(const SimplicialComplex& c, Budget budget = {});

// Closed sets of the facet-intersection closure (for diagnostics/tests).
std::vector<Bitset> intersection_closure(const SimplicialComplex& c);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Int> torsion;  // invariant factors >= 2, each dividing the next
};

// Integral simplicial homology in dimension i (H_0 unreduced), through Smith
// normal forms of the boundary matrices.
HomologyGroup homology(const SimplicialComplex& c, std::size_t i, Budget budget = {});

// Boundary matrix d_k: rows = (k-1)-faces, columns = k-faces, entries from
// the ascending-vertex orientation. Exposed for the chain-complex tests.
std::vector<std::vector<Int>> boundary_matrix(const std::vector<Bitset>& lower,
                                              const std::vector<Bitset>& upper);

// CNF formula over variables 1..variables; clauses hold DIMACS literals.
struct CNF {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
};

struct SatComplexes {
  SimplicialComplex delta;  // faces = circuit-free subsets of {t_i, f_i}
  SimplicialComplex dual;   // facets = complements of the circuits
};

// The #P-hardness reduction: vertex 2i is t_{i+1}, vertex 2i+1 is f_{i+1};
// f_{n-1}(delta) equals the number of satisfying assignments and
// f_{n-1}(delta) + f_{n-1}(dual) = binomial(2n, n).
SatComplexes sat_to_complex(const CNF& formula, Budget budget = {});

struct SearchOptions {
  Budget budget = {};
  bool use_fast_paths = true;  // dimension-1 criteria from the graph case
};

// Shelling-order test: each facet must meet the union of its predecessors in
// a nonempty pure complex of codimension one.
bool is_shelling_order(const SimplicialComplex& c, const std::vector<std::size_t>& order);

// A certified shelling order, or nullopt after exhaustive search.
std::optional<std::vector<std::size_t>> shellable(const SimplicialComplex& c, SearchOptions opts = {});

// Disjoint intervals [R(F), F], one per facet, covering every face (empty
// face included).
struct PartitionScheme {
  std::vector<std::pair<Bitset, std::size_t>> intervals;  // (R, facet index)
};

std::optional<PartitionScheme> partitionable(const SimplicialComplex& c, SearchOptions opts = {});

// Pure, every ridge in at most two facets, dual graph connected.
bool is_pseudomanifold(const SimplicialComplex& c);

}  // namespace polywork
