#include "polywork/graph.hpp"

#include <algorithm>

namespace polywork {

AbstractGraph::AbstractGraph(std::size_t n, std::vector<std::pair<int, int>> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw InputError("loop edge");
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n_ || static_cast<std::size_t>(v) >= n_)
      throw InputError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InputError("multi-edge");
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool AbstractGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::size_t AbstractGraph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) throw InputError("no such edge");
  return static_cast<std::size_t>(it - edges_.begin());
}

bool AbstractGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : neighbors(u)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++count;
      stack.push_back(w);
    }
  }
  return count == n_;
}

int AbstractGraph::regularity() const {
  if (n_ == 0) return 0;
  std::size_t deg = adj_[0].size();
  for (const auto& a : adj_)
    if (a.size() != deg) return -1;
  return static_cast<int>(deg);
}

}  // namespace polywork
