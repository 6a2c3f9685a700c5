#include "polywork/lattice.hpp"

#include <algorithm>
#include <climits>
#include <unordered_map>

namespace polywork {

IncidenceMatrix FaceLattice::atom_coatom_incidences() const {
  auto atoms = nodes_of_dim(0);
  auto coatoms = nodes_of_dim(nodes[top].dim - 1);
  IncidenceMatrix inc(atoms.size(), coatoms.size());
  for (std::size_t f = 0; f < coatoms.size(); ++f)
    for (std::size_t v = 0; v < atoms.size(); ++v)
      if (nodes[atoms[v]].vertices.is_subset_of(nodes[coatoms[f]].vertices)) inc.set(v, f);
  return inc;
}

std::size_t dimension_from_incidences(const IncidenceMatrix& a) {
  std::size_t m = a.facet_count();
  if (m == 0) return 0;
  Bitset s = a.facet_vertices(0);
  for (std::size_t f = 1; f < m; ++f)
    if (Bitset::lex_less(a.facet_vertices(f), s)) s = a.facet_vertices(f);
  std::size_t rounds = 0;
  while (s.any()) {
    std::vector<Bitset> cand;
    for (std::size_t f = 0; f < m; ++f) {
      Bitset cut = s & a.facet_vertices(f);
      if (cut == s) continue;  // not a proper intersection
      if (std::find(cand.begin(), cand.end(), cut) == cand.end()) cand.push_back(std::move(cut));
    }
    if (cand.empty()) break;  // garbage input; result unspecified
    bool have = false;
    Bitset best;
    for (const auto& c : cand) {
      bool maximal = true;
      for (const auto& other : cand)
        if (!(other == c) && c.is_subset_of(other)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (!have || Bitset::lex_less(c, best)) {
        best = c;
        have = true;
      }
    }
    s = best;
    ++rounds;
  }
  return rounds;
}

namespace {

std::size_t words(std::size_t n) { return n / 64 + 1; }

}  // namespace

FaceLattice build_lattice(const IncidenceMatrix& a, LatticeBuildStats* stats) {
  std::size_t n = a.vertex_count(), m = a.facet_count();
  LatticeBuildStats local;
  LatticeBuildStats& st = stats ? *stats : local;

  FaceLattice l;
  std::unordered_map<Bitset, std::size_t> index;
  auto node_of = [&](const Bitset& verts) {
    auto it = index.find(verts);
    if (it != index.end()) return it->second;
    l.nodes.push_back(FaceNode{verts, 0, {}});
    index.emplace(verts, l.nodes.size() - 1);
    return l.nodes.size() - 1;
  };

  std::size_t top = node_of(Bitset::full(n));
  l.top = top;
  std::vector<std::size_t> queue{top};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::size_t cur = queue[head];
    Bitset s = l.nodes[cur].vertices;
    // Children = maximal proper intersections with facet columns.
    std::vector<Bitset> cand;
    for (std::size_t f = 0; f < m; ++f) {
      Bitset cut = s & a.facet_vertices(f);
      st.word_ops += words(n);
      if (cut == s) continue;
      if (std::find(cand.begin(), cand.end(), cut) == cand.end()) cand.push_back(cut);
    }
    for (const auto& c : cand) {
      bool maximal = true;
      for (const auto& other : cand) {
        st.word_ops += words(n);
        if (!(other == c) && c.is_subset_of(other)) {
          maximal = false;
          break;
        }
      }
      if (!maximal) continue;
      bool fresh = index.find(c) == index.end();
      std::size_t child = node_of(c);
      l.nodes[cur].covers.push_back(child);
      if (fresh) queue.push_back(child);
    }
  }
  // The empty face exists even when no intersection produced it (m = 0).
  if (index.find(Bitset(n)) == index.end()) {
    std::size_t bot = node_of(Bitset(n));
    l.nodes[top].covers.push_back(bot);
  }
  l.bottom = index.at(Bitset(n));

  // Grade by longest chain from the bottom.
  std::vector<int> dim(l.nodes.size(), INT_MIN);
  dim[l.bottom] = -1;
  auto eval = [&](auto&& self, std::size_t u) -> int {
    if (dim[u] != INT_MIN) return dim[u];
    int best = -1;
    for (std::size_t c : l.nodes[u].covers) best = std::max(best, self(self, c) + 1);
    dim[u] = best;
    return best;
  };
  for (std::size_t i = 0; i < l.nodes.size(); ++i) l.nodes[i].dim = eval(eval, i);
  return l;
}

FaceLattice lattice_from_H(const HPolytope& p) { return build_lattice(vertex_facet_incidences(p)); }

FaceLattice k_skeleton(const IncidenceMatrix& a, std::size_t k) {
  std::size_t n = a.vertex_count(), m = a.facet_count();
  auto closure = [&](const Bitset& s) {
    Bitset c = Bitset::full(n);
    bool hit = false;
    for (std::size_t f = 0; f < m; ++f) {
      if (s.is_subset_of(a.facet_vertices(f))) {
        c &= a.facet_vertices(f);
        hit = true;
      }
    }
    return hit ? c : Bitset::full(n);
  };

  FaceLattice l;
  std::unordered_map<Bitset, std::size_t> index;
  l.nodes.push_back(FaceNode{Bitset(n), -1, {}});
  index.emplace(Bitset(n), 0);
  l.bottom = 0;
  l.top = 0;

  std::vector<std::size_t> level{0};
  for (int dim = 0; dim <= static_cast<int>(k) && !level.empty(); ++dim) {
    std::vector<std::size_t> next;
    for (std::size_t u : level) {
      const Bitset s = l.nodes[u].vertices;
      std::vector<Bitset> cand;
      for (std::size_t v = 0; v < n; ++v) {
        if (s.test(v)) continue;
        Bitset grow = s;
        grow.set(v);
        Bitset c = closure(grow);
        if (std::find(cand.begin(), cand.end(), c) == cand.end()) cand.push_back(c);
      }
      for (const auto& c : cand) {
        bool minimal = true;
        for (const auto& other : cand) {
          if (!(other == c) && other.is_subset_of(c)) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;
        auto it = index.find(c);
        std::size_t node;
        if (it == index.end()) {
          l.nodes.push_back(FaceNode{c, dim, {}});
          node = l.nodes.size() - 1;
          index.emplace(c, node);
          next.push_back(node);
        } else {
          node = it->second;
        }
        l.nodes[node].covers.push_back(u);
        if (l.nodes[node].dim > l.nodes[l.top].dim) l.top = node;
      }
    }
    level = std::move(next);
  }
  return l;
}

std::vector<std::size_t> f_vector(const FaceLattice& l, bool with_improper) {
  int d = l.nodes[l.top].dim;
  std::vector<std::size_t> f(d > 0 ? static_cast<std::size_t>(d) : 0, 0);
  for (const auto& node : l.nodes) {
    if (node.dim < 0 || node.dim >= d) continue;
    f[static_cast<std::size_t>(node.dim)] += 1;
  }
  if (with_improper) {
    f.insert(f.begin(), 1);
    f.push_back(1);
  }
  return f;
}

}  // namespace polywork
