#include "polywork/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace polywork {

SimplicialComplex SimplicialComplex::from_bitsets(std::size_t n, std::vector<Bitset> facets) {
  if (facets.empty()) throw InputError("a simplicial complex is a non-empty set of faces");
  std::vector<Bitset> keep;
  for (const auto& f : facets) {
    if (f.universe() != n) throw InputError("facet universe mismatch");
    bool maximal = true;
    for (const auto& g : facets)
      if (!(g == f) && f.is_subset_of(g)) {
        maximal = false;
        break;
      }
    if (maximal && std::find(keep.begin(), keep.end(), f) == keep.end()) keep.push_back(f);
  }
  std::sort(keep.begin(), keep.end(), Bitset::lex_less);
  SimplicialComplex c;
  c.n_ = n;
  c.facets_ = std::move(keep);
  return c;
}

SimplicialComplex::SimplicialComplex(std::size_t n, const std::vector<std::vector<int>>& facets) {
  std::vector<Bitset> sets;
  for (const auto& f : facets) {
    Bitset b(n);
    for (int v : f) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) throw InputError("facet vertex out of range");
      b.set(static_cast<std::size_t>(v));
    }
    sets.push_back(std::move(b));
  }
  *this = from_bitsets(n, std::move(sets));
}

int SimplicialComplex::dim() const {
  std::size_t best = 0;
  for (const auto& f : facets_) best = std::max(best, f.count());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::is_pure() const {
  for (const auto& f : facets_)
    if (f.count() != facets_[0].count()) return false;
  return true;
}

bool SimplicialComplex::has_face(const Bitset& f) const {
  for (const auto& g : facets_)
    if (f.is_subset_of(g)) return true;
  return false;
}

std::vector<Bitset> all_faces(const SimplicialComplex& c, Budget budget) {
  BudgetMeter meter(budget);
  std::unordered_set<Bitset> seen;
  std::vector<Bitset> queue;
  auto push = [&](const Bitset& f) {
    if (seen.insert(f).second) {
      meter.tick();
      queue.push_back(f);
    }
  };
  for (const auto& f : c.facets()) push(f);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Bitset f = queue[head];
    for (int v : f.elements()) {
      Bitset sub = f;
      sub.reset(static_cast<std::size_t>(v));
      push(sub);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::size_t> f_vector_complex(const SimplicialComplex& c, Budget budget) {
  int d = c.dim();
  std::vector<std::size_t> f(d >= 0 ? static_cast<std::size_t>(d) + 1 : 0, 0);
  for (const auto& face : all_faces(c, budget)) {
    if (face.none()) continue;
    ++f[face.count() - 1];
  }
  return f;
}

long euler_characteristic_direct(const SimplicialComplex& c, Budget budget) {
  long chi = 0;
  for (const auto& face : all_faces(c, budget)) {
    if (face.none()) continue;
    chi += face.count() % 2 == 1 ? 1 : -1;
  }
  return chi;
}

namespace {

// Closure: intersection of all facets containing s; the full set if none.
Bitset closure_of(const SimplicialComplex& c, const Bitset& s) {
  Bitset out = Bitset::full(c.vertex_count());
  bool hit = false;
  for (const auto& f : c.facets()) {
    if (!s.is_subset_of(f)) continue;
    out &= f;
    hit = true;
  }
  return hit ? out : Bitset::full(c.vertex_count());
}

}  // namespace

std::vector<Bitset> intersection_closure(const SimplicialComplex& c) {
  std::size_t n = c.vertex_count();
  std::vector<Bitset> closed;

  // NextClosure enumeration in lectic order; i is "large" when its index is
  // high, prefix means the elements below i.
  Bitset a = closure_of(c, Bitset(n));
  for (;;) {
    closed.push_back(a);
    bool advanced = false;
    for (std::size_t ii = n; ii-- > 0;) {
      if (a.test(ii)) continue;
      Bitset probe(n);
      for (std::size_t j = 0; j < ii; ++j)
        if (a.test(j)) probe.set(j);
      probe.set(ii);
      Bitset b = closure_of(c, probe);
      // Lectic successor test: no new element below ii.
      bool ok = true;
      for (std::size_t j = 0; j < ii && ok; ++j)
        if (b.test(j) && !a.test(j)) ok = false;
      if (ok) {
        a = b;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  // Keep only genuine facet intersections: the full set qualifies only if it
  // lies inside some facet.
  std::vector<Bitset> out;
  for (const auto& s : closed) {
    if (s.count() == n && !c.has_face(s)) continue;
    out.push_back(s);
  }
  return out;
}

long euler_characteristic(const SimplicialComplex& c) {
  std::vector<Bitset> closed = intersection_closure(c);
  std::sort(closed.begin(), closed.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return Bitset::lex_less(a, b);
  });
  // Moebius sieve: g(V) = chi(2^V minus empty) - sum of g over closed
  // strict subsets; chi of a nonempty full simplex is 1.
  std::vector<long> g(closed.size());
  long chi = 0;
  for (std::size_t i = 0; i < closed.size(); ++i) {
    long h = closed[i].any() ? 1 : 0;
    for (std::size_t j = 0; j < i; ++j)
      if (closed[j].is_subset_of(closed[i]) && !(closed[j] == closed[i])) h -= g[j];
    g[i] = h;
    chi += h;
  }
  return chi;
}

std::vector<std::vector<Int>> boundary_matrix(const std::vector<Bitset>& lower,
                                              const std::vector<Bitset>& upper) {
  std::map<Bitset, std::size_t, bool (*)(const Bitset&, const Bitset&)> index(Bitset::lex_less);
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  std::vector<std::vector<Int>> m(lower.size(), std::vector<Int>(upper.size(), Int(0)));
  for (std::size_t j = 0; j < upper.size(); ++j) {
    auto verts = upper[j].elements();
    for (std::size_t k = 0; k < verts.size(); ++k) {
      Bitset face = upper[j];
      face.reset(static_cast<std::size_t>(verts[k]));
      auto it = index.find(face);
      if (it == index.end()) throw std::logic_error("boundary face missing from enumeration");
      m[it->second][j] = (k % 2 == 0) ? Int(1) : Int(-1);
    }
  }
  return m;
}

HomologyGroup homology(const SimplicialComplex& c, std::size_t i, Budget budget) {
  if (c.dim() < 0 || i > static_cast<std::size_t>(c.dim()))
    throw InputError("homology dimension out of range");
  std::vector<std::vector<Bitset>> by_dim(static_cast<std::size_t>(c.dim()) + 2);
  for (const auto& f : all_faces(c, budget)) {
    if (f.none()) continue;
    by_dim[f.count() - 1].push_back(f);
  }
  for (auto& level : by_dim) std::sort(level.begin(), level.end(), Bitset::lex_less);

  const auto& chains = by_dim[i];
  std::size_t rank_lower = 0;
  if (i > 0) {
    auto d_i = boundary_matrix(by_dim[i - 1], chains);
    rank_lower = smith_normal_form(std::move(d_i)).rank;
  }
  HomologyGroup h;
  std::size_t rank_upper = 0;
  if (i + 1 <= static_cast<std::size_t>(c.dim())) {
    auto d_up = boundary_matrix(chains, by_dim[i + 1]);
    SmithResult s = smith_normal_form(std::move(d_up));
    rank_upper = s.rank;
    for (const auto& x : s.diagonal)
      if (x > 1) h.torsion.push_back(x);
  }
  h.rank = chains.size() - rank_lower - rank_upper;
  return h;
}

SatComplexes sat_to_complex(const CNF& formula, Budget budget) {
  int n = formula.variables;
  if (n < 0 || n > 15) throw UnsupportedParameter("sat_to_complex supports up to 15 variables");
  std::size_t universe = 2 * static_cast<std::size_t>(n);
  BudgetMeter meter(budget);

  std::vector<Bitset> circuits;
  auto add_circuit = [&](const Bitset& c) {
    if (std::find(circuits.begin(), circuits.end(), c) == circuits.end()) circuits.push_back(c);
  };
  for (int v = 0; v < n; ++v) {
    Bitset p(universe);
    p.set(2 * static_cast<std::size_t>(v));
    p.set(2 * static_cast<std::size_t>(v) + 1);
    add_circuit(p);
  }
  for (const auto& clause : formula.clauses) {
    if (clause.empty()) throw InputError("empty clause; the reduction needs nonempty clauses");
    Bitset c(universe);
    for (int lit : clause) {
      int var = std::abs(lit);
      if (var < 1 || var > n) throw InputError("literal out of range");
      // x_j contributes f_j, negated x_j contributes t_j.
      std::size_t vertex = 2 * static_cast<std::size_t>(var - 1) + (lit > 0 ? 1 : 0);
      c.set(vertex);
    }
    add_circuit(c);
  }

  // Part I: faces are the circuit-free sets; enumerate by the choice
  // t / f / neither per variable and keep the maximal ones.
  std::vector<Bitset> free_sets;
  std::vector<int> choice(static_cast<std::size_t>(n), 0);
  auto emit = [&]() {
    meter.tick();
    Bitset s(universe);
    for (int v = 0; v < n; ++v) {
      if (choice[static_cast<std::size_t>(v)] == 1) s.set(2 * static_cast<std::size_t>(v));
      if (choice[static_cast<std::size_t>(v)] == 2) s.set(2 * static_cast<std::size_t>(v) + 1);
    }
    for (const auto& c : circuits)
      if (c.is_subset_of(s)) return;
    free_sets.push_back(std::move(s));
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      emit();
      return;
    }
    for (int k = 0; k < 3; ++k) {
      choice[static_cast<std::size_t>(v)] = k;
      self(self, v + 1);
    }
  };
  rec(rec, 0);

  std::vector<Bitset> dual_facets;
  for (const auto& c : circuits) {
    Bitset comp = Bitset::full(universe);
    for (int e : c.elements()) comp.reset(static_cast<std::size_t>(e));
    dual_facets.push_back(comp);
  }
  return {SimplicialComplex::from_bitsets(universe, std::move(free_sets)),
          SimplicialComplex::from_bitsets(universe, std::move(dual_facets))};
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<std::size_t>& order) {
  if (!c.is_pure()) throw NotPure("shelling orders are defined for pure complexes here");
  std::size_t m = c.facet_count();
  if (order.size() != m) throw InputError("order is not a facet permutation");
  std::vector<bool> seen(m, false);
  for (std::size_t x : order) {
    if (x >= m || seen[x]) throw InputError("order is not a facet permutation");
    seen[x] = true;
  }
  std::size_t facet_size = c.facets()[0].count();
  for (std::size_t j = 1; j < m; ++j) {
    const Bitset& f = c.facets()[order[j]];
    // Maximal intersections with the predecessors.
    std::vector<Bitset> cuts;
    for (std::size_t i = 0; i < j; ++i) {
      Bitset cut = f & c.facets()[order[i]];
      if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
    }
    bool any_nonempty = false;
    for (const auto& cut : cuts) {
      bool maximal = true;
      for (const auto& other : cuts)
        if (!(other == cut) && cut.is_subset_of(other)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (cut.count() + 1 != facet_size) return false;
      any_nonempty = true;
    }
    if (facet_size >= 1 && !any_nonempty) return false;
    if (facet_size == 1) continue;  // points: the empty intersection is fine
  }
  return true;
}

namespace {

// Graph view of a pure 1-dimensional complex.
struct GraphView {
  std::size_t n;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> component;  // by vertex; -1 for isolated-in-complex
  std::size_t component_count = 0;

  explicit GraphView(const SimplicialComplex& c) : n(c.vertex_count()), component(n, -1) {
    for (const auto& f : c.facets()) {
      auto e = f.elements();
      edges.emplace_back(e[0], e[1]);
    }
    // Union-find over the touched vertices.
    std::vector<int> parent(n);
    for (std::size_t v = 0; v < n; ++v) parent[v] = static_cast<int>(v);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (const auto& [u, v] : edges) parent[static_cast<std::size_t>(find(u))] = find(v);
    std::map<int, int> ids;
    for (const auto& [u, v] : edges) {
      for (int x : {u, v}) {
        int root = find(x);
        auto [it, fresh] = ids.emplace(root, static_cast<int>(ids.size()));
        component[static_cast<std::size_t>(x)] = it->second;
      }
    }
    component_count = ids.size();
  }

  std::size_t tree_components() const {
    std::vector<std::size_t> verts(component_count, 0), eds(component_count, 0);
    for (std::size_t v = 0; v < n; ++v)
      if (component[v] >= 0) ++verts[static_cast<std::size_t>(component[v])];
    for (const auto& [u, v] : edges) ++eds[static_cast<std::size_t>(component[static_cast<std::size_t>(u)])];
    std::size_t trees = 0;
    for (std::size_t k = 0; k < component_count; ++k)
      if (eds[k] == verts[k] - 1) ++trees;
    return trees;
  }
};

std::optional<std::vector<std::size_t>> shelling_search(const SimplicialComplex& c, Budget budget) {
  std::size_t m = c.facet_count();
  BudgetMeter meter(budget);
  std::size_t facet_size = c.facets()[0].count();
  std::vector<std::size_t> order;
  std::set<std::vector<bool>> dead;
  std::vector<bool> used(m, false);

  auto extends = [&](std::size_t candidate) {
    if (order.empty()) return true;
    const Bitset& f = c.facets()[candidate];
    std::vector<Bitset> cuts;
    for (std::size_t i : order) {
      Bitset cut = f & c.facets()[i];
      if (std::find(cuts.begin(), cuts.end(), cut) == cuts.end()) cuts.push_back(cut);
    }
    bool any = false;
    for (const auto& cut : cuts) {
      bool maximal = true;
      for (const auto& other : cuts)
        if (!(other == cut) && cut.is_subset_of(other)) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      if (cut.count() + 1 != facet_size) return false;
      any = true;
    }
    return facet_size == 1 || any;
  };

  auto dfs = [&](auto&& self) -> bool {
    if (order.size() == m) return true;
    if (dead.count(used)) return false;
    meter.tick();
    for (std::size_t cand = 0; cand < m; ++cand) {
      if (used[cand] || !extends(cand)) continue;
      used[cand] = true;
      order.push_back(cand);
      if (self(self)) return true;
      order.pop_back();
      used[cand] = false;
    }
    dead.insert(used);
    return false;
  };
  if (dfs(dfs)) return order;
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::size_t>> shellable(const SimplicialComplex& c, SearchOptions opts) {
  if (!c.is_pure()) throw NotPure("shellability requires a pure complex here");
  if (c.dim() < 0) return std::vector<std::size_t>{};
  if (opts.use_fast_paths && c.dim() == 1) {
    // A graph is shellable iff it is connected; a BFS edge order certifies.
    GraphView g(c);
    bool all_touched = true;
    for (std::size_t v = 0; v < g.n; ++v) all_touched &= g.component[v] >= 0;
    if (g.component_count != 1 || !all_touched) return std::nullopt;
    // BFS over facets.
    std::vector<bool> used(c.facet_count(), false);
    std::vector<std::size_t> order;
    Bitset reached(c.vertex_count());
    for (int v : c.facets()[0].elements()) reached.set(static_cast<std::size_t>(v));
    used[0] = true;
    order.push_back(0);
    while (order.size() < c.facet_count()) {
      for (std::size_t f = 0; f < c.facet_count(); ++f) {
        if (used[f]) continue;
        Bitset touch = c.facets()[f] & reached;
        if (touch.none()) continue;
        used[f] = true;
        order.push_back(f);
        reached |= c.facets()[f];
        break;
      }
    }
    if (!is_shelling_order(c, order)) throw std::logic_error("BFS order failed certification");
    return order;
  }
  auto found = shelling_search(c, opts.budget);
  if (found && !is_shelling_order(c, *found)) throw std::logic_error("search order failed certification");
  return found;
}

namespace {

bool partition_scheme_valid(const SimplicialComplex& c, const PartitionScheme& scheme, Budget budget) {
  std::vector<Bitset> faces = all_faces(c, budget);
  std::unordered_set<Bitset> covered;
  for (const auto& [r, fi] : scheme.intervals) {
    const Bitset& top = c.facets()[fi];
    if (!r.is_subset_of(top)) return false;
    // Enumerate [R, F].
    std::vector<int> extra;
    for (int v : top.elements())
      if (!r.test(static_cast<std::size_t>(v))) extra.push_back(v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
      Bitset face = r;
      for (std::size_t k = 0; k < extra.size(); ++k)
        if ((mask >> k) & 1) face.set(static_cast<std::size_t>(extra[k]));
      if (!covered.insert(face).second) return false;  // overlap
    }
  }
  return covered.size() == faces.size();
}

}  // namespace

std::optional<PartitionScheme> partitionable(const SimplicialComplex& c, SearchOptions opts) {
  if (c.dim() < 0) {
    PartitionScheme s;
    s.intervals.emplace_back(Bitset(c.vertex_count()), 0);
    return s;
  }
  if (opts.use_fast_paths && c.dim() == 1 && c.is_pure()) {
    // Partitionable iff at most one connected component is a tree.
    GraphView g(c);
    if (g.tree_components() > 1) return std::nullopt;
    // Certificate still produced by the exact-cover search.
  }

  BudgetMeter meter(opts.budget);
  std::vector<Bitset> faces = all_faces(c, opts.budget);
  std::unordered_map<Bitset, std::size_t> face_id;
  for (std::size_t i = 0; i < faces.size(); ++i) face_id.emplace(faces[i], i);

  // Facets in decreasing size order.
  std::vector<std::size_t> facet_order(c.facet_count());
  for (std::size_t i = 0; i < facet_order.size(); ++i) facet_order[i] = i;
  std::stable_sort(facet_order.begin(), facet_order.end(), [&](std::size_t a, std::size_t b) {
    return c.facets()[a].count() > c.facets()[b].count();
  });

  std::vector<bool> covered(faces.size(), false);
  std::size_t covered_count = 0;
  PartitionScheme scheme;

  // Suffix capacity for pruning.
  std::vector<std::size_t> capacity(facet_order.size() + 1, 0);
  for (std::size_t i = facet_order.size(); i-- > 0;)
    capacity[i] = capacity[i + 1] + (std::size_t{1} << c.facets()[facet_order[i]].count());

  auto interval_faces = [&](const Bitset& r, const Bitset& top, auto&& visit) {
    std::vector<int> extra;
    for (int v : top.elements())
      if (!r.test(static_cast<std::size_t>(v))) extra.push_back(v);
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
      Bitset face = r;
      for (std::size_t k = 0; k < extra.size(); ++k)
        if ((mask >> k) & 1) face.set(static_cast<std::size_t>(extra[k]));
      if (!visit(face)) return false;
    }
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t step) -> bool {
    if (step == facet_order.size()) return covered_count == faces.size();
    if (covered_count + capacity[step] < faces.size()) return false;
    meter.tick();
    std::size_t fi = facet_order[step];
    const Bitset& top = c.facets()[fi];
    // Candidate lower bounds R in increasing popcount (large intervals first).
    std::vector<int> verts = top.elements();
    std::vector<Bitset> candidates;
    for (std::size_t mask = 0; mask < (std::size_t{1} << verts.size()); ++mask) {
      Bitset r(c.vertex_count());
      for (std::size_t k = 0; k < verts.size(); ++k)
        if ((mask >> k) & 1) r.set(static_cast<std::size_t>(verts[k]));
      candidates.push_back(std::move(r));
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
    for (const auto& r : candidates) {
      // Interval must be disjoint from the covered region.
      bool ok = interval_faces(r, top, [&](const Bitset& face) {
        return !covered[face_id.at(face)];
      });
      if (!ok) continue;
      std::vector<std::size_t> marked;
      interval_faces(r, top, [&](const Bitset& face) {
        std::size_t id = face_id.at(face);
        covered[id] = true;
        marked.push_back(id);
        return true;
      });
      covered_count += marked.size();
      scheme.intervals.emplace_back(r, fi);
      if (self(self, step + 1)) return true;
      scheme.intervals.pop_back();
      covered_count -= marked.size();
      for (std::size_t id : marked) covered[id] = false;
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  if (!partition_scheme_valid(c, scheme, opts.budget))
    throw std::logic_error("partition scheme failed certification");
  return scheme;
}

bool is_pseudomanifold(const SimplicialComplex& c) {
  if (!c.is_pure()) throw NotPure("pseudo-manifolds are pure by definition");
  std::size_t m = c.facet_count();
  if (c.dim() < 0) return true;
  std::map<Bitset, std::vector<std::size_t>, bool (*)(const Bitset&, const Bitset&)> ridges(
      Bitset::lex_less);
  for (std::size_t i = 0; i < m; ++i) {
    for (int v : c.facets()[i].elements()) {
      Bitset r = c.facets()[i];
      r.reset(static_cast<std::size_t>(v));
      ridges[r].push_back(i);
    }
  }
  for (const auto& [r, fs] : ridges)
    if (fs.size() > 2) return false;
  // Dual graph connectivity.
  std::vector<std::vector<std::size_t>> adj(m);
  for (const auto& [r, fs] : ridges)
    if (fs.size() == 2) {
      adj[fs[0]].push_back(fs[1]);
      adj[fs[1]].push_back(fs[0]);
    }
  std::vector<bool> seen(m, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[u])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == m;
}

}  // namespace polywork
