#include "polywork/metrics.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

#include "polywork/bitset.hpp"

namespace polywork {

namespace {

// Tight-row bitsets of every vertex against the irredundant rows.
struct VertexFacetData {
  HPolytope rows;
  VPolytope verts;
  std::vector<Bitset> tight;
};

VertexFacetData vertex_facet_data(const HPolytope& p) {
  VertexFacetData out{remove_redundancy(p), enumerate_vertices(p), {}};
  std::size_t m = out.rows.row_count();
  for (const auto& v : out.verts.points()) {
    Bitset t(m);
    QVector s = out.rows.slacks(v);
    for (std::size_t i = 0; i < m; ++i)
      if (s[i].is_zero()) t.set(i);
    out.tight.push_back(std::move(t));
  }
  return out;
}

}  // namespace

bool is_degenerate(const HPolytope& p) {
  if (affine_dimension(p) < static_cast<int>(p.dim()))
    throw LowerDimensional("is_degenerate expects a full-dimensional polytope");
  VertexFacetData data = vertex_facet_data(p);  // enumerate_vertices throws NotBounded
  for (const auto& t : data.tight)
    if (t.count() > p.dim()) return true;
  return false;
}

std::size_t count_vertices(const HPolytope& p) { return enumerate_vertices(p).point_count(); }

bool feasible_basis_extension(const QMatrix& a, const QVector& b, const std::vector<std::size_t>& s) {
  std::size_t m = a.row_count(), cols = a.col_count();
  if (rank(a) < m) throw RankDeficient("constraint matrix must have full row rank");
  for (std::size_t j : s)
    if (j >= cols) throw InputError("basis-extension index out of range");
  if (s.size() > m) return false;
  std::vector<bool> in_s(cols, false);
  for (std::size_t j : s) in_s[j] = true;
  std::vector<std::size_t> base(s.begin(), s.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());

  std::vector<std::size_t> pick = base;
  auto feasible_basis = [&]() {
    QMatrix ab(m, pick.size());
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < pick.size(); ++c) ab.at(r, c) = a.at(r, pick[c]);
    auto x = solve_square(ab, b);
    if (!x) return false;
    for (std::size_t c = 0; c < pick.size(); ++c)
      if ((*x)[c].sign() < 0) return false;
    return true;
  };
  bool found = false;
  auto rec = [&](auto&& self, std::size_t next) -> void {
    if (found) return;
    if (pick.size() == m) {
      if (feasible_basis()) found = true;
      return;
    }
    for (std::size_t j = next; j < cols; ++j) {
      if (in_s[j]) continue;
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
      if (found) return;
    }
  };
  if (pick.size() == m) return feasible_basis();
  rec(rec, 0);
  return found;
}

bool is_integral(const HPolytope& p) {
  VPolytope verts = enumerate_vertices(p);
  for (const auto& v : verts.points())
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_integer()) return false;
  return true;
}

std::size_t diameter(const HPolytope& p) {
  VertexFacetData data = vertex_facet_data(p);
  std::size_t n = data.verts.point_count(), d = p.dim();
  if (n <= 1) return 0;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Bitset common = data.tight[i] & data.tight[j];
      QMatrix rows(std::vector<QVector>{});
      for (int r : common.elements()) rows.append_row(data.rows.row(static_cast<std::size_t>(r)).a);
      if (rank(rows) == d - 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::size_t> dist(n, SIZE_MAX);
    std::vector<std::size_t> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w : adj[u]) {
        if (dist[w] != SIZE_MAX) continue;
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (dist[i] == SIZE_MAX) throw InputError("vertex graph disconnected; invalid polytope data");
      best = std::max(best, dist[i]);
    }
  }
  return best;
}

namespace {

int orientation(const std::vector<QVector>& coords, const std::vector<int>& ridge, int apex) {
  std::size_t k = coords[static_cast<std::size_t>(apex)].size();
  assert(ridge.size() == k);
  QMatrix m(std::vector<QVector>{});
  for (int r : ridge) m.append_row(coords[static_cast<std::size_t>(r)] - coords[static_cast<std::size_t>(apex)]);
  return det(m).sign();
}

}  // namespace

Triangulation triangulate(const VPolytope& q) {
  return placing_triangulation(remove_redundancy(q).sorted());
}

Triangulation placing_triangulation(const VPolytope& verts) {
  std::size_t n = verts.point_count(), d = verts.dim();
  if (n == 0) throw EmptyPolyhedron("triangulate of an empty point set");

  std::vector<QVector> dirs;            // ambient directions of the hull basis
  std::vector<QVector> coords(n);       // hull coordinates of placed points
  std::vector<std::vector<int>> cells{{0}};
  coords[0] = QVector(std::size_t{0});
  std::size_t k = 0;

  auto in_span = [&](const QVector& diff) -> std::optional<QVector> {
    if (k == 0) return diff.is_zero() ? std::optional<QVector>(QVector(std::size_t{0})) : std::nullopt;
    QMatrix m(d, k);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < d; ++i) m.at(i, j) = dirs[j][i];
    return solve_any(m, diff);
  };

  for (std::size_t idx = 1; idx < n; ++idx) {
    QVector diff = verts.point(idx) - verts.point(0);
    auto u = in_span(diff);
    if (!u) {
      // Dimension jump: cone every cell over the new point.
      dirs.push_back(diff);
      ++k;
      for (std::size_t i = 0; i < idx; ++i) {
        std::vector<Rational> ext(k);
        for (std::size_t j = 0; j + 1 < k; ++j) ext[j] = coords[i][j];
        coords[i] = QVector(std::move(ext));
      }
      QVector mine(k);
      mine[k - 1] = Rational(1);
      coords[idx] = std::move(mine);
      for (auto& cell : cells) {
        cell.push_back(static_cast<int>(idx));
        std::sort(cell.begin(), cell.end());
      }
      continue;
    }
    coords[idx] = *u;

    // Boundary ridges: (k-1)-subsets lying in exactly one cell.
    std::map<std::vector<int>, std::pair<int, int>> ridge_info;  // ridge -> (count, apex)
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        std::vector<int> ridge;
        for (std::size_t t = 0; t < cell.size(); ++t)
          if (t != drop) ridge.push_back(cell[t]);
        auto [it, fresh] = ridge_info.try_emplace(ridge, 0, cell[drop]);
        it->second.first += 1;
        if (!fresh) it->second.second = cell[drop];
      }
    }
    std::vector<std::vector<int>> grown;
    for (const auto& [ridge, info] : ridge_info) {
      if (info.first != 1) continue;
      int sign_new = orientation(coords, ridge, static_cast<int>(idx));
      if (sign_new == 0) continue;
      int sign_old = orientation(coords, ridge, info.second);
      assert(sign_old != 0);
      if (sign_new == -sign_old) {
        std::vector<int> cell = ridge;
        cell.push_back(static_cast<int>(idx));
        std::sort(cell.begin(), cell.end());
        grown.push_back(std::move(cell));
      }
    }
    for (auto& g : grown) cells.push_back(std::move(g));
  }

  if (k < d) throw LowerDimensional("triangulate expects a full-dimensional hull");
  return {std::move(verts), std::move(cells)};
}

namespace {

Rational simplex_det(const std::vector<QVector>& verts, const std::vector<int>& cell) {
  QMatrix m(std::vector<QVector>{});
  for (std::size_t t = 1; t < cell.size(); ++t)
    m.append_row(verts[static_cast<std::size_t>(cell[t])] - verts[static_cast<std::size_t>(cell[0])]);
  return det(m);
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rational(static_cast<long>(i));
  return f;
}

}  // namespace

VolumeResult volume(const VPolytope& q) {
  if (affine_dimension(q) < static_cast<int>(q.dim())) return {Rational(0), false};
  Triangulation t = triangulate(q);
  Rational total;
  for (const auto& cell : t.simplices) total += simplex_det(t.vertices.points(), cell).abs();
  return {total / factorial(q.dim()), true};
}

VolumeResult volume(const HPolytope& p) {
  VPolytope v = enumerate_vertices(p);  // throws on empty / unbounded
  return volume(v);
}

bool simplices_meet_in_common_face(const std::vector<QVector>& verts, const std::vector<int>& s1,
                                   const std::vector<int>& s2) {
  std::size_t d = verts.empty() ? 0 : verts[0].size();
  std::vector<int> common;
  for (int a : s1)
    if (std::find(s2.begin(), s2.end(), a) != s2.end()) common.push_back(a);
  // Barycentric variables for both simplices; maximize weight outside the
  // common face. Intersection equals conv(common) iff that maximum is zero.
  std::size_t n1 = s1.size(), n2 = s2.size();
  QMatrix a(d + 2, n1 + n2);
  QVector b(d + 2);
  for (std::size_t j = 0; j < n1; ++j) {
    const QVector& v = verts[static_cast<std::size_t>(s1[j])];
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = v[i];
    a.at(d, j) = Rational(1);
  }
  for (std::size_t j = 0; j < n2; ++j) {
    const QVector& v = verts[static_cast<std::size_t>(s2[j])];
    for (std::size_t i = 0; i < d; ++i) a.at(i, n1 + j) = -v[i];
    a.at(d + 1, n1 + j) = Rational(1);
  }
  b[d] = Rational(1);
  b[d + 1] = Rational(1);
  QVector c(n1 + n2);
  for (std::size_t j = 0; j < n1; ++j)
    if (std::find(common.begin(), common.end(), s1[j]) == common.end()) c[j] = Rational(-1);
  for (std::size_t j = 0; j < n2; ++j)
    if (std::find(common.begin(), common.end(), s2[j]) == common.end()) c[n1 + j] = Rational(-1);
  LPResult r = solve_lp(LinearProgram::standard(a, b, c));
  if (r.status == LPStatus::Infeasible) return true;  // disjoint simplices
  assert(r.status == LPStatus::Optimal);
  return r.value.is_zero();
}

bool min_triangulation(const VPolytope& q, std::size_t k, Budget budget) {
  VPolytope verts = remove_redundancy(q).sorted();
  std::size_t n = verts.point_count(), d = q.dim();
  if (affine_dimension(q) < static_cast<int>(d))
    throw LowerDimensional("min_triangulation expects a full-dimensional hull");
  BudgetMeter meter(budget);

  Rational target;  // d! * volume
  {
    Triangulation t = triangulate(verts);
    for (const auto& cell : t.simplices) target += simplex_det(t.vertices.points(), cell).abs();
  }

  struct Candidate {
    std::vector<int> cell;
    Rational vol;
  };
  std::vector<Candidate> cands;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (pick.size() == d + 1) {
      Rational v = simplex_det(verts.points(), pick).abs();
      if (!v.is_zero()) cands.push_back({pick, v});
      return;
    }
    for (int i = start; i < static_cast<int>(n); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& a, const Candidate& b) { return b.vol < a.vol; });

  std::size_t c = cands.size();
  std::vector<std::vector<bool>> compatible(c, std::vector<bool>(c, false));
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = i + 1; j < c; ++j) {
      meter.tick();
      compatible[i][j] = compatible[j][i] =
          simplices_meet_in_common_face(verts.points(), cands[i].cell, cands[j].cell);
    }
  }

  // Suffix volume sums for pruning.
  std::vector<Rational> suffix(c + 1);
  for (std::size_t i = c; i-- > 0;) suffix[i] = suffix[i + 1] + cands[i].vol;

  std::vector<std::size_t> chosen;
  auto dfs = [&](auto&& self, std::size_t i, Rational covered) -> bool {
    if (covered == target) return true;
    if (i == c || chosen.size() == k) return false;
    meter.tick();
    if (covered + suffix[i] < target) return false;
    // Remaining slots can cover at most (k - chosen) * largest remaining volume.
    Rational cap = Rational(static_cast<long>(k - chosen.size())) * cands[i].vol;
    if (covered + cap < target) return false;
    bool ok = true;
    for (std::size_t j : chosen)
      if (!compatible[i][j]) {
        ok = false;
        break;
      }
    if (ok) {
      chosen.push_back(i);
      if (self(self, i + 1, covered + cands[i].vol)) return true;
      chosen.pop_back();
    }
    return self(self, i + 1, covered);
  };
  return dfs(dfs, 0, Rational(0));
}

OptimalVertexResult optimal_vertex(const HPolytope& p, const QVector& c) {
  VPolytope verts = enumerate_vertices_by_bases(p);  // lexicographically sorted
  if (verts.point_count() == 0) return {false, Rational(0), QVector(p.dim())};
  bool first = true;
  Rational best;
  QVector arg;
  for (const auto& v : verts.points()) {
    Rational val = dot(c, v);
    if (first || val < best) {
      best = val;
      arg = v;
      first = false;
    }
  }
  return {true, best, arg};
}

bool vertex_with_value(const HPolytope& p, const QVector& c, const Rational& value) {
  VPolytope verts = enumerate_vertices_by_bases(p);
  for (const auto& v : verts.points())
    if (dot(c, v) == value) return true;
  return false;
}

}  // namespace polywork
