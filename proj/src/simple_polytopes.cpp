#include "polywork/simple_polytopes.hpp"

#include <algorithm>
#include <bit>

#include "polywork/hull.hpp"
#include "polywork/lattice.hpp"

namespace polywork {

namespace {

constexpr std::uint64_t kNoValue = ~std::uint64_t{0};

struct OrientationDP {
  std::size_t n;
  std::vector<std::uint32_t> adj;
  std::vector<std::uint64_t> prefix;  // min objective over orderings of S placed first
  std::vector<std::uint64_t> suffix;  // min objective over orderings of the rest after S

  std::uint64_t face_count() const { return prefix.back(); }
  // Is S an initial set of some objective-minimal acyclic orientation?
  bool initial_in_optimum(std::uint32_t s) const {
    return prefix[s] + suffix[s] == face_count();
  }
};

OrientationDP orientation_dp(const AbstractGraph& g, const Budget& budget) {
  std::size_t n = g.node_count();
  if (n >= 63) throw SearchBudgetExceeded("orientation DP limited to < 63 nodes");
  BudgetMeter meter(budget);
  meter.require(std::uint64_t{1} << n);

  OrientationDP dp;
  dp.n = n;
  dp.adj.assign(n, 0);
  for (const auto& [u, v] : g.edges()) {
    dp.adj[static_cast<std::size_t>(u)] |= std::uint32_t{1} << v;
    dp.adj[static_cast<std::size_t>(v)] |= std::uint32_t{1} << u;
  }
  std::size_t size = std::size_t{1} << n;
  dp.prefix.assign(size, kNoValue);
  dp.suffix.assign(size, kNoValue);
  dp.prefix[0] = 0;
  for (std::uint32_t s = 1; s < size; ++s) {
    std::uint64_t best = kNoValue;
    for (std::uint32_t rest = s; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      std::uint64_t prev = dp.prefix[s ^ bit];
      std::uint64_t cost = std::uint64_t{1} << std::popcount(dp.adj[static_cast<std::size_t>(v)] & (s ^ bit));
      best = std::min(best, prev + cost);
    }
    dp.prefix[s] = best;
  }
  std::uint32_t full = static_cast<std::uint32_t>(size - 1);
  dp.suffix[full] = 0;
  for (std::uint32_t s = full; s-- > 0;) {
    std::uint64_t best = kNoValue;
    for (std::uint32_t rest = full & ~s; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      std::uint64_t cost = std::uint64_t{1} << std::popcount(dp.adj[static_cast<std::size_t>(v)] & s);
      best = std::min(best, cost + dp.suffix[s | bit]);
    }
    dp.suffix[s] = best;
  }
  return dp;
}

bool connected_mask(const std::vector<std::uint32_t>& adj, std::uint32_t s) {
  if (!s) return false;
  std::uint32_t comp = s & (~s + 1);
  for (;;) {
    std::uint32_t grow = comp;
    for (std::uint32_t rest = comp; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      grow |= adj[static_cast<std::size_t>(std::countr_zero(bit))] & s;
    }
    if (grow == comp) break;
    comp = grow;
  }
  return comp == s;
}

}  // namespace

FacetSystem reconstruct_facets(const AbstractGraph& g, Budget budget) {
  int d = g.regularity();
  if (d < 0) throw NotRegular("graph is not regular");
  if (!g.is_connected()) throw NotRegular("graph is not connected");
  std::size_t n = g.node_count();
  if (n == 1) return {};  // a point has no facets

  OrientationDP dp = orientation_dp(g, budget);
  std::uint32_t full = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);

  FacetSystem facets;
  for (std::uint32_t s = 1; s < full; ++s) {
    bool regular = true;
    for (std::uint32_t rest = s; rest && regular;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      if (std::popcount(dp.adj[static_cast<std::size_t>(v)] & s) != d - 1) regular = false;
    }
    if (!regular || !connected_mask(dp.adj, s)) continue;
    if (!dp.initial_in_optimum(s)) continue;
    std::vector<int> verts;
    for (std::uint32_t rest = s; rest;) {
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      verts.push_back(std::countr_zero(bit));
    }
    facets.push_back(std::move(verts));
  }
  std::sort(facets.begin(), facets.end());

  // A simple d-polytope has every vertex on exactly d facets.
  std::vector<int> cover(n, 0);
  for (const auto& f : facets)
    for (int v : f) ++cover[static_cast<std::size_t>(v)];
  for (int c : cover)
    if (c != d) throw NotRegular("graph is not the graph of a simple polytope");
  return facets;
}

bool verify_facet_system(const AbstractGraph& g, const FacetSystem& f, Budget budget) {
  FacetSystem truth = reconstruct_facets(g, budget);
  FacetSystem given = f;
  for (auto& set : given) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
  }
  std::sort(given.begin(), given.end());
  return given == truth;
}

namespace {

bool unique_sink_on(const AbstractGraph& g, const Orientation& o, const Bitset& face) {
  std::size_t sinks = 0;
  for (int v : face.elements()) {
    bool sink = true;
    for (int w : g.neighbors(v)) {
      if (!face.test(static_cast<std::size_t>(w))) continue;
      if (!o.directed_into(g, g.edge_index(v, w), v)) {
        sink = false;
        break;
      }
    }
    if (sink) ++sinks;
  }
  return sinks == 1;
}

bool acyclic(const AbstractGraph& g, const Orientation& o) {
  std::size_t n = g.node_count();
  std::vector<int> indeg(n, 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    int head = o.toward_second[e] ? g.edges()[e].second : g.edges()[e].first;
    ++indeg[static_cast<std::size_t>(head)];
  }
  std::vector<int> queue;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(static_cast<int>(v));
  std::size_t seen = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    ++seen;
    for (int w : g.neighbors(u)) {
      std::size_t e = g.edge_index(u, w);
      bool u_to_w = o.toward_second[e] ? g.edges()[e].second == w : g.edges()[e].first == w;
      if (!u_to_w) continue;
      if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
  }
  return seen == n;
}

IncidenceMatrix incidences_from_facets(std::size_t n, const FacetSystem& f) {
  IncidenceMatrix inc(n, f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    for (int v : f[j]) inc.set(static_cast<std::size_t>(v), j);
  return inc;
}

}  // namespace

bool is_AOF(const AbstractGraph& g, const FacetSystem& f, const Orientation& o) {
  if (o.toward_second.size() != g.edges().size()) throw InputError("orientation/edge count mismatch");
  if (!acyclic(g, o)) return false;
  FaceLattice l = build_lattice(incidences_from_facets(g.node_count(), f));
  for (const auto& node : l.nodes) {
    if (node.dim < 0) continue;  // skip the empty face
    if (!unique_sink_on(g, o, node.vertices)) return false;
  }
  return true;
}

Orientation find_AOF(const AbstractGraph& g, const FacetSystem& f, Budget budget) {
  int d = g.regularity();
  if (d < 0) throw NotRegular("graph is not regular");
  OrientationDP dp = orientation_dp(g, budget);
  std::size_t n = g.node_count();

  // Reconstruct one minimizing vertex order, earliest vertices first.
  std::vector<int> position(n, -1);
  std::uint32_t s = static_cast<std::uint32_t>((std::size_t{1} << n) - 1);
  for (std::size_t pos = n; pos-- > 0;) {
    for (std::uint32_t rest = s;;) {
      if (!rest) throw std::logic_error("orientation DP reconstruction failed");
      std::uint32_t bit = rest & (~rest + 1);
      rest ^= bit;
      int v = std::countr_zero(bit);
      std::uint64_t cost = std::uint64_t{1} << std::popcount(dp.adj[static_cast<std::size_t>(v)] & (s ^ bit));
      if (dp.prefix[s ^ bit] + cost == dp.prefix[s]) {
        position[static_cast<std::size_t>(v)] = static_cast<int>(pos);
        s ^= bit;
        break;
      }
    }
  }

  Orientation o;
  o.toward_second.resize(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& [u, v] = g.edges()[e];
    o.toward_second[e] = position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)];
  }
  if (!is_AOF(g, f, o))
    throw InputError("facet system is inconsistent with the graph; no certified orientation");
  return o;
}

GraphWithFacets geometric_graph(const HPolytope& p) {
  HPolytope rows = remove_redundancy(p);
  VPolytope verts = enumerate_vertices(p);
  std::size_t n = verts.point_count(), d = p.dim();
  std::vector<Bitset> tight;
  for (const auto& v : verts.points()) {
    Bitset t(rows.row_count());
    QVector slack = rows.slacks(v);
    for (std::size_t i = 0; i < rows.row_count(); ++i)
      if (slack[i].is_zero()) t.set(i);
    tight.push_back(std::move(t));
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Bitset common = tight[i] & tight[j];
      QMatrix mat(std::vector<QVector>{});
      for (int r : common.elements()) mat.append_row(rows.row(static_cast<std::size_t>(r)).a);
      if (rank(mat) == d - 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  FacetSystem facets;
  for (std::size_t f = 0; f < rows.row_count(); ++f) {
    std::vector<int> set;
    for (std::size_t v = 0; v < n; ++v)
      if (tight[v].test(f)) set.push_back(static_cast<int>(v));
    facets.push_back(std::move(set));
  }
  std::sort(facets.begin(), facets.end());
  return {AbstractGraph(n, std::move(edges)), std::move(facets)};
}

Orientation orientation_by_values(const AbstractGraph& g, const std::vector<Rational>& value) {
  Orientation o;
  o.toward_second.resize(g.edges().size());
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& [u, v] = g.edges()[e];
    const Rational& fu = value[static_cast<std::size_t>(u)];
    const Rational& fv = value[static_cast<std::size_t>(v)];
    if (fu == fv) throw DegenerateWeights("objective ties on an edge");
    o.toward_second[e] = fv < fu;
  }
  return o;
}

}  // namespace polywork
