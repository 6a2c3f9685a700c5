#include "polywork/iso.hpp"

#include <algorithm>
#include <map>

#include "polywork/hull.hpp"

namespace polywork {

namespace {

// Iterated degree refinement on the bipartite row/column graph. Returns
// stable color ids for rows and columns; only equal colors may correspond.
struct Colors {
  std::vector<std::size_t> row, col;
};

Colors refine(const IncidenceMatrix& a) {
  std::size_t n = a.vertex_count(), m = a.facet_count();
  std::vector<std::size_t> row(n, 0), col(m, 0);
  for (int round = 0; round < 4; ++round) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> table;
    std::vector<std::size_t> next_row(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> sig;
      for (std::size_t f = 0; f < m; ++f)
        if (a.test(v, f)) sig.push_back(col[f]);
      std::sort(sig.begin(), sig.end());
      next_row[v] = table.emplace(std::make_pair(row[v], std::move(sig)), table.size()).first->second;
    }
    table.clear();
    std::vector<std::size_t> next_col(m);
    for (std::size_t f = 0; f < m; ++f) {
      std::vector<std::size_t> sig;
      for (std::size_t v = 0; v < n; ++v)
        if (a.test(v, f)) sig.push_back(next_row[v]);
      std::sort(sig.begin(), sig.end());
      next_col[f] = table.emplace(std::make_pair(col[f], std::move(sig)), table.size()).first->second;
    }
    row = std::move(next_row);
    col = std::move(next_col);
  }
  return {row, col};
}

std::vector<std::size_t> color_histogram(const std::vector<std::size_t>& colors) {
  std::vector<std::size_t> h;
  for (std::size_t c : colors) {
    if (c >= h.size()) h.resize(c + 1, 0);
    ++h[c];
  }
  return h;
}

// Joint refinement: colors computed on the disjoint union so that ids are
// comparable across the two matrices.
bool joint_colors(const IncidenceMatrix& a, const IncidenceMatrix& b, Colors& ca, Colors& cb) {
  std::size_t n = a.vertex_count(), m = a.facet_count();
  IncidenceMatrix merged(n + b.vertex_count(), m + b.facet_count());
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t f = 0; f < m; ++f)
      if (a.test(v, f)) merged.set(v, f);
  for (std::size_t v = 0; v < b.vertex_count(); ++v)
    for (std::size_t f = 0; f < b.facet_count(); ++f)
      if (b.test(v, f)) merged.set(n + v, m + f);
  Colors all = refine(merged);
  ca.row.assign(all.row.begin(), all.row.begin() + static_cast<std::ptrdiff_t>(n));
  cb.row.assign(all.row.begin() + static_cast<std::ptrdiff_t>(n), all.row.end());
  ca.col.assign(all.col.begin(), all.col.begin() + static_cast<std::ptrdiff_t>(m));
  cb.col.assign(all.col.begin() + static_cast<std::ptrdiff_t>(m), all.col.end());
  return color_histogram(ca.row) == color_histogram(cb.row) &&
         color_histogram(ca.col) == color_histogram(cb.col);
}

bool verify_incidence_map(const IncidenceMatrix& a, const IncidenceMatrix& b,
                          const std::vector<std::size_t>& rho, const std::vector<std::size_t>& gamma) {
  for (std::size_t v = 0; v < a.vertex_count(); ++v)
    for (std::size_t f = 0; f < a.facet_count(); ++f)
      if (a.test(v, f) != b.test(rho[v], gamma[f])) return false;
  return true;
}

}  // namespace

std::optional<Bijection> incidence_isomorphic(const IncidenceMatrix& a, const IncidenceMatrix& b) {
  std::size_t n = a.vertex_count(), m = a.facet_count();
  if (n != b.vertex_count() || m != b.facet_count()) return std::nullopt;
  Colors ca, cb;
  if (!joint_colors(a, b, ca, cb)) return std::nullopt;

  // Static row order: most constrained color class first.
  auto hist = color_histogram(ca.row);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    auto kx = std::make_pair(hist[ca.row[x]], ca.row[x]);
    auto ky = std::make_pair(hist[ca.row[y]], ca.row[y]);
    return kx != ky ? kx < ky : x < y;
  });

  std::vector<std::size_t> rho(n, SIZE_MAX);
  std::vector<bool> used(n, false);
  // Column candidates as bitsets over B's columns, narrowed per assignment.
  std::vector<Bitset> colcand(m, Bitset(m));
  for (std::size_t f = 0; f < m; ++f)
    for (std::size_t g = 0; g < m; ++g)
      if (ca.col[f] == cb.col[g]) colcand[f].set(g);

  std::vector<std::size_t> gamma(m, SIZE_MAX);
  auto match_columns = [&]() -> bool {
    // Simple augmenting-path bipartite matching over the candidate sets.
    std::vector<std::size_t> match_b(m, SIZE_MAX);
    std::vector<std::size_t> match_a(m, SIZE_MAX);
    for (std::size_t f = 0; f < m; ++f) {
      std::vector<bool> seen(m, false);
      auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (int g : colcand[u].elements()) {
          std::size_t gg = static_cast<std::size_t>(g);
          if (seen[gg]) continue;
          seen[gg] = true;
          if (match_b[gg] == SIZE_MAX || self(self, match_b[gg])) {
            match_b[gg] = u;
            match_a[u] = gg;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, f)) return false;
    }
    gamma = match_a;
    return true;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return match_columns();
    std::size_t v = order[depth];
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || ca.row[v] != cb.row[w]) continue;
      std::vector<Bitset> saved = colcand;
      bool ok = true;
      for (std::size_t f = 0; f < m && ok; ++f) {
        Bitset mask(m);
        for (std::size_t g = 0; g < m; ++g)
          if (b.test(w, g) == a.test(v, f)) mask.set(g);
        colcand[f] &= mask;
        if (colcand[f].none()) ok = false;
      }
      if (ok) {
        rho[v] = w;
        used[w] = true;
        if (self(self, depth + 1)) return true;
        used[w] = false;
        rho[v] = SIZE_MAX;
      }
      colcand = std::move(saved);
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  if (!verify_incidence_map(a, b, rho, gamma)) return std::nullopt;  // checked, never trusted
  return Bijection{Bijection::Kind::VertexFacetPair, rho, gamma};
}

std::optional<Bijection> lattice_isomorphic(const FaceLattice& l, const FaceLattice& m) {
  if (l.nodes[l.top].dim != m.nodes[m.top].dim) return std::nullopt;
  if (l.phi() != m.phi()) return std::nullopt;
  auto la = l.nodes_of_dim(0);
  auto ma = m.nodes_of_dim(0);
  auto inc = incidence_isomorphic(l.atom_coatom_incidences(), m.atom_coatom_incidences());
  if (!inc) return std::nullopt;

  // Lift: node -> atom set -> mapped atom set -> node of m.
  std::map<std::vector<std::size_t>, std::size_t> m_by_atoms;
  auto atoms_below = [](const FaceLattice& lat, const std::vector<std::size_t>& atoms,
                        std::size_t node) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (lat.nodes[atoms[i]].vertices.is_subset_of(lat.nodes[node].vertices)) out.push_back(i);
    return out;
  };
  for (std::size_t u = 0; u < m.phi(); ++u) m_by_atoms[atoms_below(m, ma, u)] = u;

  std::vector<std::size_t> fwd(l.phi(), SIZE_MAX);
  for (std::size_t u = 0; u < l.phi(); ++u) {
    std::vector<std::size_t> img;
    for (std::size_t ai : atoms_below(l, la, u)) img.push_back(inc->forward[ai]);
    std::sort(img.begin(), img.end());
    auto it = m_by_atoms.find(img);
    if (it == m_by_atoms.end()) return std::nullopt;
    std::size_t node = it->second;
    if (l.nodes[u].dim != m.nodes[node].dim) return std::nullopt;
    fwd[u] = node;
  }
  // Bijectivity and Hasse preservation, verified by substitution.
  std::vector<bool> hit(m.phi(), false);
  for (std::size_t x : fwd) {
    if (x == SIZE_MAX || hit[x]) return std::nullopt;
    hit[x] = true;
  }
  for (std::size_t u = 0; u < l.phi(); ++u) {
    std::vector<std::size_t> img;
    for (std::size_t c : l.nodes[u].covers) img.push_back(fwd[c]);
    std::sort(img.begin(), img.end());
    std::vector<std::size_t> want = m.nodes[fwd[u]].covers;
    std::sort(want.begin(), want.end());
    if (img != want) return std::nullopt;
  }
  return Bijection{Bijection::Kind::LatticeMap, fwd, {}};
}

std::optional<Bijection> self_dual(const FaceLattice& l) {
  IncidenceMatrix a = l.atom_coatom_incidences();
  return incidence_isomorphic(a, a.transposed());
}

IncidenceMatrix incidences_of_vpolytope(const VPolytope& q) {
  VPolytope verts = remove_redundancy(q).sorted();
  HPolytope rows = enumerate_facets(verts);
  std::size_t n = verts.point_count();
  std::vector<Bitset> cols;
  for (std::size_t f = 0; f < rows.row_count(); ++f) {
    Bitset c(n);
    for (std::size_t v = 0; v < n; ++v)
      if ((rows.row(f).b + dot(rows.row(f).a, verts.point(v))).is_zero()) c.set(v);
    if (c.count() < n) cols.push_back(c);  // drop affine-hull equations
  }
  IncidenceMatrix inc(n, cols.size());
  for (std::size_t f = 0; f < cols.size(); ++f)
    for (std::size_t v = 0; v < n; ++v)
      if (cols[f].test(v)) inc.set(v, f);
  return inc;
}

std::optional<Bijection> combinatorially_equivalent(const VPolytope& p, const VPolytope& q) {
  return incidence_isomorphic(incidences_of_vpolytope(p), incidences_of_vpolytope(q));
}

std::optional<Bijection> affinely_equivalent(const VPolytope& p, const VPolytope& q) {
  VPolytope vp = remove_redundancy(p).sorted();
  VPolytope vq = remove_redundancy(q).sorted();
  std::size_t n = vp.point_count();
  if (n != vq.point_count()) return std::nullopt;
  int dp = affine_dimension(vp), dq = affine_dimension(vq);
  if (dp != dq) return std::nullopt;
  std::size_t k = static_cast<std::size_t>(dp);

  // Affine basis among P's vertices.
  std::vector<std::size_t> basis{0};
  QMatrix probe(std::vector<QVector>{});
  for (std::size_t i = 1; i < n && basis.size() < k + 1; ++i) {
    probe.append_row(vp.point(i) - vp.point(0));
    if (rank(probe) == basis.size()) {
      basis.push_back(i);
    } else {
      QMatrix keep(std::vector<QVector>{});
      for (std::size_t t = 1; t < basis.size(); ++t) keep.append_row(vp.point(basis[t]) - vp.point(0));
      probe = std::move(keep);
    }
  }

  // Barycentric coordinates of every vertex over that basis.
  QMatrix sys(vp.dim() + 1, k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    for (std::size_t i = 0; i < vp.dim(); ++i) sys.at(i, j) = vp.point(basis[j])[i];
    sys.at(vp.dim(), j) = Rational(1);
  }
  std::vector<QVector> bary;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> rhs;
    for (std::size_t t = 0; t < vp.dim(); ++t) rhs.push_back(vp.point(i)[t]);
    rhs.push_back(Rational(1));
    auto lam = solve_any(sys, QVector(std::move(rhs)));
    if (!lam) return std::nullopt;  // cannot happen for a true affine basis
    bary.push_back(*lam);
  }

  // Try every ordered affinely independent (k+1)-tuple of Q's vertices as
  // the image of the basis.
  std::vector<std::size_t> tuple;
  std::vector<bool> taken(n, false);
  std::optional<Bijection> found;
  auto try_tuple = [&]() -> bool {
    QMatrix diffs(std::vector<QVector>{});
    for (std::size_t t = 1; t <= k; ++t)
      diffs.append_row(vq.point(tuple[t]) - vq.point(tuple[0]));
    if (diffs.row_count() != 0 && rank(diffs) != k) return false;
    std::vector<std::size_t> fwd(n, SIZE_MAX);
    std::vector<bool> hit(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      QVector img(vq.dim());
      for (std::size_t j = 0; j <= k; ++j) img += bary[i][j] * vq.point(tuple[j]);
      auto it = std::lower_bound(vq.points().begin(), vq.points().end(), img);
      if (it == vq.points().end() || !(*it == img)) return false;
      std::size_t idx = static_cast<std::size_t>(it - vq.points().begin());
      if (hit[idx]) return false;
      hit[idx] = true;
      fwd[i] = idx;
    }
    found = Bijection{Bijection::Kind::VertexMap, fwd, {}};
    return true;
  };
  auto rec = [&](auto&& self) -> bool {
    if (tuple.size() == k + 1) return try_tuple();
    for (std::size_t i = 0; i < n; ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      tuple.push_back(i);
      if (self(self)) return true;
      tuple.pop_back();
      taken[i] = false;
    }
    return false;
  };
  rec(rec);
  return found;
}

}  // namespace polywork
