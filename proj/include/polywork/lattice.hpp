#pragma once

#include <cstdint>
#include <optional>

#include "polywork/incidence.hpp"

namespace polywork {

// Hasse diagram of a face lattice, graded from the empty face (dim -1) to
// the whole polytope (dim d). Nodes are identified by their vertex bitsets.
struct FaceNode {
  Bitset vertices;
  int dim = 0;
  std::vector<std::size_t> covers;  // nodes directly below this one
};

class FaceLattice {
public:
  std::vector<FaceNode> nodes;
  std::size_t bottom = 0;  // empty face
  std::size_t top = 0;     // the polytope

  std::size_t phi() const { return nodes.size(); }
  int rank() const { return nodes[top].dim + 1; }

  std::vector<std::size_t> nodes_of_dim(int dim) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].dim == dim) out.push_back(i);
    return out;
  }
  // Atom-coatom incidences (vertex- and facet-order follow node order).
  IncidenceMatrix atom_coatom_incidences() const;
};

// The dimension procedure on vertex-facet incidences: shrink a facet's
// vertex set through maximal proper intersections and count the rounds.
std::size_t dimension_from_incidences(const IncidenceMatrix& a);

struct LatticeBuildStats {
  std::uint64_t word_ops = 0;
};

// Complete Hasse diagram from vertex-facet incidences, built breadth-first
// from the coatoms by meet-closing.
FaceLattice build_lattice(const IncidenceMatrix& a, LatticeBuildStats* stats = nullptr);

// enumerate_vertices + vertex_facet_incidences + build_lattice.
FaceLattice lattice_from_H(const HPolytope& p);

// Hasse diagram restricted to dimensions -1..k, built bottom-up without
// constructing any face of dimension > k.
FaceLattice k_skeleton(const IncidenceMatrix& a, std::size_t k);

// Proper-face counts (f_0, ..., f_{d-1}); with_improper adds f_{-1} = f_d = 1
// as leading and trailing entries.
std::vector<std::size_t> f_vector(const FaceLattice& l, bool with_improper = false);

}  // namespace polywork
