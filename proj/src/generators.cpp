#include "polywork/generators.hpp"

#include "polywork/simplicial.hpp"

namespace polywork::gen {

HPolytope cube(std::size_t d) {
  std::vector<HRow> rows;
  for (std::size_t i = 0; i < d; ++i) {
    QVector lo(d), hi(d);
    lo[i] = Rational(1);
    hi[i] = Rational(-1);
    rows.push_back({Rational(0), lo});
    rows.push_back({Rational(1), hi});
  }
  return HPolytope(d, std::move(rows));
}

HPolytope simplex(std::size_t d) {
  std::vector<HRow> rows;
  for (std::size_t i = 0; i < d; ++i) {
    QVector a(d);
    a[i] = Rational(1);
    rows.push_back({Rational(0), a});
  }
  QVector sum(d);
  for (std::size_t i = 0; i < d; ++i) sum[i] = Rational(-1);
  rows.push_back({Rational(1), sum});
  return HPolytope(d, std::move(rows));
}

VPolytope crosspoly(std::size_t d) {
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < d; ++i) {
    QVector plus(d), minus(d);
    plus[i] = Rational(1);
    minus[i] = Rational(-1);
    pts.push_back(plus);
    pts.push_back(minus);
  }
  return VPolytope(d, std::move(pts)).sorted();
}

VPolytope cyclic(std::size_t d, std::size_t n) {
  std::vector<QVector> pts;
  for (std::size_t t = 1; t <= n; ++t) {
    QVector p(d);
    Rational v(1);
    for (std::size_t i = 0; i < d; ++i) {
      v *= Rational(static_cast<long>(t));
      p[i] = v;
    }
    pts.push_back(std::move(p));
  }
  return VPolytope(d, std::move(pts));
}

VPolytope polygon(std::size_t n) { return cyclic(2, n); }

VPolytope product(const VPolytope& a, const VPolytope& b) {
  std::size_t d = a.dim() + b.dim();
  std::vector<QVector> pts;
  for (const auto& pa : a.points()) {
    for (const auto& pb : b.points()) {
      QVector p(d);
      for (std::size_t i = 0; i < a.dim(); ++i) p[i] = pa[i];
      for (std::size_t i = 0; i < b.dim(); ++i) p[a.dim() + i] = pb[i];
      pts.push_back(std::move(p));
    }
  }
  return VPolytope(d, std::move(pts)).sorted();
}

HPolytope product(const HPolytope& a, const HPolytope& b) {
  std::size_t d = a.dim() + b.dim();
  std::vector<HRow> rows;
  for (const auto& r : a.rows()) {
    QVector coeff(d);
    for (std::size_t i = 0; i < a.dim(); ++i) coeff[i] = r.a[i];
    rows.push_back({r.b, std::move(coeff)});
  }
  for (const auto& r : b.rows()) {
    QVector coeff(d);
    for (std::size_t i = 0; i < b.dim(); ++i) coeff[a.dim() + i] = r.a[i];
    rows.push_back({r.b, std::move(coeff)});
  }
  return HPolytope(d, std::move(rows));
}

VPolytope prism(const VPolytope& base) {
  std::vector<QVector> seg = {QVector{Rational(0)}, QVector{Rational(1)}};
  return product(base, VPolytope(1, seg));
}

VPolytope cube_vertices(std::size_t d) {
  std::vector<QVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    QVector p(d);
    for (std::size_t i = 0; i < d; ++i) p[i] = Rational((mask >> i) & 1 ? 1 : 0);
    pts.push_back(std::move(p));
  }
  return VPolytope(d, std::move(pts)).sorted();
}

VPolytope simplex_vertices(std::size_t d) {
  std::vector<QVector> pts;
  pts.emplace_back(d);
  for (std::size_t i = 0; i < d; ++i) {
    QVector e(d);
    e[i] = Rational(1);
    pts.push_back(std::move(e));
  }
  return VPolytope(d, std::move(pts)).sorted();
}

std::vector<std::vector<bool>> dodecahedron_incidences() {
  // Pentagon vertex sets of the regular dodecahedron, 20 vertices.
  static const int pent[12][5] = {
      {0, 1, 9, 10, 13},  {0, 2, 8, 10, 14},  {0, 4, 8, 9, 15},
      {1, 3, 11, 13, 17}, {1, 5, 9, 11, 15},  {2, 3, 10, 12, 13},
      {2, 6, 12, 14, 18}, {3, 7, 12, 17, 18}, {4, 5, 15, 16, 19},
      {4, 6, 8, 14, 16},  {5, 7, 11, 17, 19}, {6, 7, 16, 18, 19}};
  std::vector<std::vector<bool>> inc(20, std::vector<bool>(12, false));
  for (int f = 0; f < 12; ++f)
    for (int k = 0; k < 5; ++k) inc[static_cast<std::size_t>(pent[f][k])][static_cast<std::size_t>(f)] = true;
  return inc;
}

SimplicialComplex rp2_6() {
  // Minimal 6-vertex triangulation of the projective plane: every edge in
  // two triangles, all vertex links 5-cycles, chi = 6 - 15 + 10 = 1.
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

std::vector<std::vector<bool>> icosahedron_incidences() {
  auto dd = dodecahedron_incidences();
  std::vector<std::vector<bool>> inc(12, std::vector<bool>(20, false));
  for (std::size_t v = 0; v < 20; ++v)
    for (std::size_t f = 0; f < 12; ++f) inc[f][v] = dd[v][f];
  return inc;
}

}  // namespace polywork::gen
