#include "polywork/steinitz.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace polywork {

namespace {

struct Level {
  std::vector<std::size_t> atoms, edges, faces;
  std::map<std::size_t, std::size_t> atom_index;  // poset id -> 0..|A|-1
};

// Connectivity of the atom graph after deleting `removed` (atom indices).
bool connected_without(const std::vector<std::vector<std::size_t>>& adj,
                       const std::set<std::size_t>& removed) {
  std::size_t n = adj.size();
  std::size_t start = n;
  for (std::size_t v = 0; v < n; ++v)
    if (!removed.count(v)) {
      start = v;
      break;
    }
  if (start == n) return true;
  std::vector<bool> seen(n, false);
  seen[start] = true;
  std::vector<std::size_t> stack{start};
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u]) {
      if (seen[w] || removed.count(w)) continue;
      seen[w] = true;
      ++count;
      stack.push_back(w);
    }
  }
  return count == n - removed.size();
}

}  // namespace

SteinitzResult steinitz_3d(const Poset& lattice) {
  LatticeAxiomReport ax = check_lattice_axioms(lattice);
  SteinitzResult res;
  if (!ax.bounded) throw AxiomViolation("input is not a bounded poset: " + ax.detail);
  if (!ax.ranked) {
    res.answer = SteinitzAnswer::No;
    res.reasons.push_back("poset is not ranked");
    return res;
  }
  res.candidate_dim = ax.candidate_dim;
  int d = ax.candidate_dim;
  if (d >= 4) {
    res.answer = SteinitzAnswer::Unsupported;
    return res;
  }
  if (!ax.is_lattice) res.reasons.push_back("not a lattice: " + ax.detail);
  if (!ax.atomic) res.reasons.push_back("not atomic: " + ax.detail);
  if (!ax.coatomic) res.reasons.push_back("not coatomic: " + ax.detail);

  std::size_t n = lattice.size();
  std::size_t bottom = lattice.minimal_elements()[0];
  std::size_t top = lattice.maximal_elements()[0];

  // Elements by rank (rank = |maximal chain| below; recompute from covers).
  std::vector<int> rank(n, -1);
  rank[bottom] = 0;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return lattice.down_set(a).count() < lattice.down_set(b).count();
  });
  for (std::size_t x : order)
    for (std::size_t c : lattice.covered_by(x)) rank[x] = rank[c] + 1;

  auto of_rank = [&](int r) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < n; ++x)
      if (rank[x] == r) out.push_back(x);
    return out;
  };

  if (d <= -1) {
    res.reasons.push_back("rank 0 poset is not a polytope lattice");
    res.answer = SteinitzAnswer::No;
    return res;
  }
  if (d == 0) {
    res.answer = n == 2 && res.reasons.empty() ? SteinitzAnswer::Yes : SteinitzAnswer::No;
    if (res.answer == SteinitzAnswer::No && n != 2) res.reasons.push_back("a point has exactly two faces");
    return res;
  }
  if (d == 1) {
    bool ok = res.reasons.empty() && of_rank(1).size() == 2 && n == 4;
    if (of_rank(1).size() != 2) res.reasons.push_back("a segment has exactly two vertices");
    res.answer = ok ? SteinitzAnswer::Yes : SteinitzAnswer::No;
    return res;
  }

  Level lv;
  lv.atoms = of_rank(1);
  lv.edges = of_rank(2);
  lv.faces = of_rank(d);  // coatoms at rank d = dim-1 faces
  for (std::size_t i = 0; i < lv.atoms.size(); ++i) lv.atom_index[lv.atoms[i]] = i;

  // Every rank-2 element must cover exactly two atoms, and the pairs must be
  // distinct (a simple graph on the atoms).
  std::vector<std::pair<std::size_t, std::size_t>> edge_pairs;
  std::set<std::pair<std::size_t, std::size_t>> seen_pairs;
  bool graph_ok = true;
  for (std::size_t e : lv.edges) {
    std::vector<std::size_t> ends;
    for (std::size_t c : lattice.covered_by(e))
      if (rank[c] == 1) ends.push_back(lv.atom_index.at(c));
    if (lattice.covered_by(e).size() != ends.size() || ends.size() != 2 || ends[0] == ends[1]) {
      res.reasons.push_back("rank-2 element " + std::to_string(e) + " does not join two atoms");
      graph_ok = false;
      continue;
    }
    std::pair<std::size_t, std::size_t> pr{std::min(ends[0], ends[1]), std::max(ends[0], ends[1])};
    if (!seen_pairs.insert(pr).second) {
      res.reasons.push_back("parallel rank-2 elements on the same atom pair");
      graph_ok = false;
    }
    edge_pairs.push_back(pr);
  }

  std::vector<std::vector<std::size_t>> adj(lv.atoms.size());
  if (graph_ok) {
    for (const auto& [u, v] : edge_pairs) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  if (d == 2) {
    // Polygon: the atom graph is one cycle through all atoms.
    std::vector<std::size_t> top_covers = lattice.covered_by(top);
    std::sort(top_covers.begin(), top_covers.end());
    bool ok = graph_ok && res.reasons.empty() && lv.atoms.size() >= 3 &&
              lv.atoms.size() == lv.edges.size() && of_rank(2) == top_covers;
    if (ok) {
      for (const auto& a : adj) ok &= a.size() == 2;
      ok = ok && connected_without(adj, {});
    }
    if (!ok && res.reasons.empty()) res.reasons.push_back("atom graph is not a single polygon cycle");
    res.answer = ok ? SteinitzAnswer::Yes : SteinitzAnswer::No;
    return res;
  }

  // d == 3 from here on.
  if (!graph_ok) {
    res.answer = SteinitzAnswer::No;
    return res;
  }

  // Planar edge bound, a cheap non-planarity witness.
  if (lv.atoms.size() >= 3 && lv.edges.size() > 3 * lv.atoms.size() - 6)
    res.reasons.push_back("atom graph is not planar (E > 3V-6)");

  // Facet boundaries: the rank-2 elements covered by a coatom must form a
  // single cycle spanning exactly the atoms below the coatom.
  std::map<std::size_t, int> edge_face_count;
  for (std::size_t f : lv.faces) {
    std::vector<std::size_t> boundary;
    for (std::size_t c : lattice.covered_by(f))
      if (rank[c] == 2) boundary.push_back(c);
    if (boundary.size() != lattice.covered_by(f).size() || boundary.size() < 3) {
      res.reasons.push_back("coatom " + std::to_string(f) + " has a malformed boundary");
      continue;
    }
    std::map<std::size_t, std::vector<std::size_t>> local;  // atom -> incident boundary edges
    for (std::size_t e : boundary) {
      ++edge_face_count[e];
      for (std::size_t c : lattice.covered_by(e)) local[lv.atom_index.at(c)].push_back(e);
    }
    bool cycle = true;
    for (const auto& [a, es] : local) cycle &= es.size() == 2;
    // Walk the cycle.
    std::vector<std::size_t> cyc;
    if (cycle) {
      std::set<std::size_t> used;
      std::size_t cur = local.begin()->first;
      for (std::size_t steps = 0; steps < local.size(); ++steps) {
        cyc.push_back(cur);
        bool advanced = false;
        for (std::size_t e : local[cur]) {
          if (used.count(e)) continue;
          used.insert(e);
          std::size_t orig = cur;
          for (std::size_t c : lattice.covered_by(e)) {
            std::size_t other = lv.atom_index.at(c);
            if (other != orig) cur = other;
          }
          advanced = cur != orig;
          break;
        }
        if (!advanced) break;
      }
      cycle = cyc.size() == local.size() && used.size() == boundary.size() && cur == cyc.front();
    }
    // Atoms below f must be exactly the cycle atoms.
    if (cycle) {
      std::set<std::size_t> below;
      for (std::size_t a : lv.atoms)
        if (lattice.leq(a, f)) below.insert(lv.atom_index.at(a));
      cycle = below == std::set<std::size_t>(cyc.begin(), cyc.end());
    }
    if (!cycle) {
      res.reasons.push_back("coatom " + std::to_string(f) + " boundary is not a spanning cycle");
      continue;
    }
    res.facet_cycles.push_back(cyc);
  }

  if (res.facet_cycles.size() == lv.faces.size()) {
    // Every edge in exactly two facet boundaries.
    for (std::size_t e : lv.edges)
      if (edge_face_count[e] != 2) {
        res.reasons.push_back("rank-2 element " + std::to_string(e) + " lies in " +
                              std::to_string(edge_face_count[e]) + " coatom boundaries");
        break;
      }

    // Euler formula V - E + F = 2.
    long euler = static_cast<long>(lv.atoms.size()) - static_cast<long>(lv.edges.size()) +
                 static_cast<long>(lv.faces.size());
    if (euler != 2)
      res.reasons.push_back("Euler count V-E+F = " + std::to_string(euler));

    // Vertex links: the facet corners at each atom chain into one cycle.
    for (std::size_t ai = 0; ai < lv.atoms.size(); ++ai) {
      std::map<std::size_t, std::vector<std::size_t>> link;  // neighbor -> shared faces
      for (const auto& cyc : res.facet_cycles) {
        for (std::size_t k = 0; k < cyc.size(); ++k) {
          if (cyc[k] != ai) continue;
          std::size_t prev = cyc[(k + cyc.size() - 1) % cyc.size()];
          std::size_t next = cyc[(k + 1) % cyc.size()];
          link[prev].push_back(next);
          link[next].push_back(prev);
        }
      }
      // link maps each neighbor of ai to the two neighbors adjacent through
      // shared faces; a disk/sphere vertex has a single closed walk.
      bool ok = !link.empty();
      for (const auto& [nb, around] : link) ok &= around.size() == 2;
      if (ok) {
        std::set<std::size_t> visited;
        std::size_t start = link.begin()->first, cur = start, prev = SIZE_MAX;
        for (std::size_t steps = 0; steps < link.size(); ++steps) {
          visited.insert(cur);
          std::size_t nxt = link[cur][0] == prev ? link[cur][1] : link[cur][0];
          prev = cur;
          cur = nxt;
        }
        ok = visited.size() == link.size() && cur == start;
      }
      if (!ok) {
        res.reasons.push_back("vertex link at atom " + std::to_string(ai) + " is not a single cycle");
        break;
      }
    }
  }

  // 3-connectivity by exhaustive 2-cut search.
  if (lv.atoms.size() < 4) {
    res.reasons.push_back("fewer than 4 vertices");
  } else if (!connected_without(adj, {})) {
    res.reasons.push_back("atom graph disconnected");
  } else {
    for (std::size_t u = 0; u < lv.atoms.size(); ++u)
      for (std::size_t v = u + 1; v < lv.atoms.size(); ++v)
        if (!connected_without(adj, {u, v})) {
          res.reasons.push_back("2-cut {" + std::to_string(u) + "," + std::to_string(v) + "}");
          u = lv.atoms.size();
          break;
        }
  }

  res.answer = res.reasons.empty() ? SteinitzAnswer::Yes : SteinitzAnswer::No;
  if (res.answer == SteinitzAnswer::No) res.facet_cycles.clear();
  return res;
}

}  // namespace polywork
