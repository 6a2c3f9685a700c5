#pragma once

#include <vector>

#include "polywork/rational.hpp"

namespace polywork {

struct SmithResult {
  std::vector<Int> diagonal;  // nonnegative, each dividing the next
  std::size_t rank = 0;       // number of nonzero diagonal entries
};

// Smith normal form of an integer matrix under unimodular row and column
// operations; only the diagonal is produced.
SmithResult smith_normal_form(std::vector<std::vector<Int>> m);

}  // namespace polywork
