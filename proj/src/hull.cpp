#include "polywork/hull.hpp"

#include <algorithm>
#include <cassert>

#include "polywork/bitset.hpp"

namespace polywork {

namespace {

// A ray of the homogenization cone in R^{1+d}, with the set of already
// processed rows it satisfies with equality.
struct Ray {
  QVector v;
  Bitset tight;
};

// Scale to coprime integer entries; direction is preserved.
void normalize_ray(QVector& v) {
  Int lcm_den = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), v[i].den().get_mpz_t());
  Rational s{lcm_den};
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational scaled = v[i] * s;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), scaled.num().get_mpz_t());
  }
  if (g != 0) s = s / Rational(g);
  v *= s;
}

// Double description on the cone {y in R^{1+d} : H y >= 0}. Returns the
// extreme rays; `lineality` receives a basis of the lineality space.
std::vector<Ray> dd_cone(const std::vector<QVector>& h_rows, std::size_t space_dim,
                         std::vector<QVector>& lineality) {
  std::size_t total = h_rows.size();
  std::vector<QVector> lin;
  for (std::size_t j = 0; j < space_dim; ++j) {
    QVector e(space_dim);
    e[j] = Rational(1);
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < total; ++k) {
    const QVector& h = h_rows[k];
    // Try to consume one lineality direction.
    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i) {
      if (!dot(h, lin[i]).is_zero()) {
        pivot = i;
        break;
      }
    }
    if (pivot != lin.size()) {
      QVector l = lin[pivot];
      lin.erase(lin.begin() + static_cast<std::ptrdiff_t>(pivot));
      Rational hl = dot(h, l);
      if (hl.sign() < 0) {
        l = -l;
        hl = -hl;
      }
      for (auto& other : lin) {
        Rational f = dot(h, other) / hl;
        if (!f.is_zero()) other -= f * l;
      }
      for (auto& r : rays) {
        Rational f = dot(h, r.v) / hl;
        if (!f.is_zero()) r.v -= f * l;
        normalize_ray(r.v);
        r.tight.set(k);  // now on the hyperplane of row k
      }
      Ray fresh{l, Bitset(total)};
      for (std::size_t prev = 0; prev < k; ++prev) fresh.tight.set(prev);
      normalize_ray(fresh.v);
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      int s = dot(h, rays[i].v).sign();
      if (s > 0) plus.push_back(i);
      else if (s < 0) minus.push_back(i);
      else zero.push_back(i);
    }
    if (minus.empty()) {
      for (std::size_t i : zero) rays[i].tight.set(k);
      continue;
    }

    // Adjacency: no third ray's tight set contains the common tight set.
    auto adjacent = [&](std::size_t a, std::size_t b) {
      Bitset common = rays[a].tight & rays[b].tight;
      for (std::size_t c = 0; c < rays.size(); ++c) {
        if (c == a || c == b) continue;
        if (common.is_subset_of(rays[c].tight)) return false;
      }
      return true;
    };

    std::vector<Ray> next;
    for (std::size_t i : plus) next.push_back(rays[i]);
    for (std::size_t i : zero) {
      next.push_back(rays[i]);
      next.back().tight.set(k);
    }
    for (std::size_t p : plus) {
      for (std::size_t m : minus) {
        if (!adjacent(p, m)) continue;
        Ray combo;
        combo.v = dot(h, rays[p].v) * rays[m].v - dot(h, rays[m].v) * rays[p].v;
        normalize_ray(combo.v);
        combo.tight = rays[p].tight & rays[m].tight;
        combo.tight.set(k);
        next.push_back(std::move(combo));
      }
    }
    rays = std::move(next);
  }
  lineality = std::move(lin);
  return rays;
}

QVector homogenize_row(const HRow& r) {
  std::vector<Rational> h;
  h.reserve(r.a.size() + 1);
  h.push_back(r.b);
  for (std::size_t j = 0; j < r.a.size(); ++j) h.push_back(r.a[j]);
  return QVector(std::move(h));
}

}  // namespace

VPolytope enumerate_vertices(const HPolytope& p) {
  if (!inequality_system_feasible(p.coefficient_matrix(), p.offsets()))
    throw EmptyPolyhedron("enumerate_vertices on an infeasible H-description");
  if (!is_bounded(p)) throw NotBounded("enumerate_vertices requires a polytope");

  std::size_t d = p.dim();
  std::vector<QVector> h_rows;
  {
    QVector x0(d + 1);
    x0[0] = Rational(1);
    h_rows.push_back(std::move(x0));  // homogenization halfspace first
  }
  for (const auto& r : p.rows()) h_rows.push_back(homogenize_row(r));

  std::vector<QVector> lineality;
  std::vector<Ray> rays = dd_cone(h_rows, d + 1, lineality);
  assert(lineality.empty());

  std::vector<QVector> verts;
  for (const auto& r : rays) {
    assert(!r.v[0].is_zero());  // recession rays cannot survive the bounded check
    if (r.v[0].is_zero()) continue;
    QVector x(d);
    for (std::size_t j = 0; j < d; ++j) x[j] = r.v[j + 1] / r.v[0];
    verts.push_back(std::move(x));
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return VPolytope(d, std::move(verts));
}

VPolytope enumerate_vertices_by_bases(const HPolytope& p) {
  std::size_t d = p.dim(), m = p.row_count();
  std::vector<QVector> verts;
  std::vector<std::size_t> pick;
  auto consider = [&]() {
    QMatrix a(std::vector<QVector>{});
    QVector b(d);
    for (std::size_t t = 0; t < d; ++t) {
      a.append_row(p.row(pick[t]).a);
      b[t] = -p.row(pick[t]).b;
    }
    auto x = solve_square(a, b);
    if (!x) return;
    if (p.contains(*x)) verts.push_back(*x);
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == d) {
      consider();
      return;
    }
    if (start + (d - pick.size()) > m) return;
    for (std::size_t i = start; i < m; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  if (d == 0) {
    bool feasible = true;
    for (const auto& r : p.rows()) feasible &= r.b.sign() >= 0;
    if (feasible) verts.push_back(QVector(std::size_t{0}));
  } else {
    rec(rec, 0);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return VPolytope(d, std::move(verts));
}

namespace {

QVector barycenter(const std::vector<QVector>& pts, std::size_t d) {
  QVector c(d);
  for (const auto& p : pts) c += p;
  Rational inv(Int(1), Int(static_cast<long>(pts.size())));
  c *= inv;
  return c;
}

// Facets of a full-dimensional hull via the polar dual: vertex y* of
// {y : (q_i - c).y <= 1} maps to the facet (x - c).y* <= 1 of P.
std::vector<HRow> facets_full_dim(const std::vector<QVector>& pts, std::size_t d) {
  QVector center = barycenter(pts, d);
  std::vector<HRow> polar;
  polar.reserve(pts.size());
  for (const auto& q : pts) polar.push_back({Rational(1), center - q});  // 1 - (q-c).y >= 0
  VPolytope dual_vertices = enumerate_vertices(HPolytope(d, std::move(polar)));
  std::vector<HRow> rows;
  for (const auto& y : dual_vertices.points()) {
    rows.push_back(canonicalize_row({Rational(1) + dot(y, center), -y}));
  }
  return rows;
}

}  // namespace

HPolytope enumerate_facets(const VPolytope& q) {
  if (q.point_count() == 0) throw EmptyPolyhedron("enumerate_facets of an empty point set");
  std::size_t d = q.dim();
  int adim = affine_dimension(q);

  if (adim == static_cast<int>(d)) {
    return HPolytope(d, facets_full_dim(q.points(), d));
  }

  const QVector& p0 = q.point(0);

  // Greedily pick difference vectors that raise the rank: a hull basis.
  std::vector<QVector> basis;
  QMatrix probe(std::vector<QVector>{});
  for (std::size_t i = 1; i < q.point_count() && basis.size() < static_cast<std::size_t>(adim); ++i) {
    QVector diff = q.point(i) - p0;
    probe.append_row(diff);
    if (rank(probe) == basis.size() + 1) {
      basis.push_back(diff);
    } else {
      QMatrix keep(std::vector<QVector>{});
      for (const auto& b : basis) keep.append_row(b);
      probe = std::move(keep);
    }
  }

  std::vector<HRow> rows;

  // Affine-hull equations from the null space of the direction span.
  QMatrix span(std::vector<QVector>{});
  for (const auto& b : basis) span.append_row(b);
  if (span.row_count() == 0) span = QMatrix(0, d);
  for (const auto& nu : null_space(span)) {
    Rational c0 = dot(nu, p0);
    rows.push_back(canonicalize_row({-c0, nu}));
    rows.push_back(canonicalize_row({c0, -nu}));
  }
  if (adim <= 0) return HPolytope(d, std::move(rows));

  // Hull coordinates u with x = p0 + U u, read off by W = (U^T U)^{-1} U^T.
  std::size_t k = basis.size();
  QMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram.at(i, j) = dot(basis[i], basis[j]);
  QMatrix w(std::vector<QVector>{});  // k x d
  for (std::size_t i = 0; i < k; ++i) {
    QVector ei(k);
    ei[i] = Rational(1);
    auto col = solve_square(gram, ei);
    assert(col.has_value());
    QVector wrow(d);
    for (std::size_t j = 0; j < k; ++j) wrow += (*col)[j] * basis[j];
    w.append_row(std::move(wrow));
  }

  std::vector<QVector> coords;
  for (const auto& pt : q.points()) coords.push_back(w.apply(pt - p0));
  HPolytope inner = enumerate_facets(VPolytope(k, std::move(coords)));
  for (const auto& r : inner.rows()) {
    // b' + a'.(W (x - p0)) >= 0 lifted to ambient coordinates.
    QVector a(d);
    for (std::size_t i = 0; i < k; ++i) a += r.a[i] * w.row(i);
    rows.push_back(canonicalize_row({r.b - dot(a, p0), a}));
  }
  return HPolytope(d, std::move(rows));
}

bool verify(const HPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("verify needs matching ambient dimensions");
  for (const auto& pt : q.points())
    if (!p.contains(pt)) return false;
  VPolytope pv = [&] {
    try {
      return enumerate_vertices(p);
    } catch (const EmptyPolyhedron&) {
      return VPolytope(p.dim(), {});
    } catch (const NotBounded&) {
      return VPolytope(p.dim(), {});  // unbounded P cannot equal a hull
    }
  }();
  if (pv.point_count() == 0) return q.point_count() == 0 && affine_dimension(p) == -1;
  for (const auto& v : pv.points())
    if (std::find(q.points().begin(), q.points().end(), v) == q.points().end()) return false;
  return true;
}

bool contains(const HPolytope& p, const VPolytope& q) {
  if (p.dim() != q.dim()) throw DimensionMismatch("contains needs matching ambient dimensions");
  VPolytope pv = enumerate_vertices(p);  // throws NotBounded / EmptyPolyhedron
  for (const auto& v : pv.points())
    if (!in_convex_hull(v, q.points())) return false;
  return true;
}

}  // namespace polywork
