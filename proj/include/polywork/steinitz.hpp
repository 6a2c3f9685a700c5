#pragma once

#include "polywork/poset.hpp"

namespace polywork {

enum class SteinitzAnswer { Yes, No, Unsupported };

struct SteinitzResult {
  SteinitzAnswer answer = SteinitzAnswer::No;
  int candidate_dim = -2;
  std::vector<std::string> reasons;  // failure evidence on No
  // Yes-certificate for d = 3: per coatom, the boundary cycle over atom ids.
  // The checks prove these cycles form a polyhedral sphere map on a
  // 3-connected graph, so they are the face cycles of a plane embedding.
  std::vector<std::vector<std::size_t>> facet_cycles;
};

// Is the poset isomorphic to the face lattice of a polytope? Decidable here
// for candidate dimension <= 3; higher dimensions return Unsupported.
SteinitzResult steinitz_3d(const Poset& lattice);

}  // namespace polywork
