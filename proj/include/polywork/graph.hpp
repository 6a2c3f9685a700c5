#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "polywork/errors.hpp"

namespace polywork {

// Simple undirected graph with a sorted edge list.
class AbstractGraph {
public:
  AbstractGraph(std::size_t n, std::vector<std::pair<int, int>> edges);

  std::size_t node_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  std::size_t edge_index(int u, int v) const;  // throws if absent

  bool is_connected() const;
  // Degree if regular, -1 otherwise.
  int regularity() const;

private:
  std::size_t n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
};

// Direction bit per edge: true orients edges_[i] from .first to .second.
struct Orientation {
  std::vector<bool> toward_second;

  bool directed_into(const AbstractGraph& g, std::size_t edge, int v) const {
    const auto& e = g.edges()[edge];
    return toward_second[edge] ? e.second == v : e.first == v;
  }
};

// One vertex set per facet.
using FacetSystem = std::vector<std::vector<int>>;

}  // namespace polywork
