#include "doctest.h"

#include <random>

#include "polywork/generators.hpp"
#include "polywork/hull.hpp"

using namespace polywork;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Independent facet-count oracle: a d-subset of points spans a facet
// hyperplane iff it is affinely independent and all points lie weakly on one
// side. Counts distinct supporting hyperplanes.
std::size_t facet_count_by_subsets(const VPolytope& v) {
  std::size_t d = v.dim(), n = v.point_count();
  std::vector<std::pair<QVector, Rational>> planes;  // (normal, offset) canonical
  std::vector<std::size_t> pick;
  auto handle = [&]() {
    QMatrix m(std::vector<QVector>{});
    for (std::size_t t = 1; t < d; ++t) m.append_row(v.point(pick[t]) - v.point(pick[0]));
    if (m.row_count() && rank(m) < d - 1) return;
    auto ns = null_space([&] {
      QMatrix rows(std::vector<QVector>{});
      for (std::size_t t = 1; t < d; ++t) rows.append_row(v.point(pick[t]) - v.point(pick[0]));
      if (rows.row_count() == 0) rows = QMatrix(0, d);
      return rows;
    }());
    if (ns.size() != 1) return;
    QVector nrm = ns[0];
    Rational off = dot(nrm, v.point(pick[0]));
    int side = 0;
    for (std::size_t i = 0; i < n; ++i) {
      int s = (dot(nrm, v.point(i)) - off).sign();
      if (s == 0) continue;
      if (side == 0) side = s;
      else if (side != s) return;  // points on both sides
    }
    if (side == 0) return;  // degenerate: everything on the plane
    if (side > 0) {
      nrm = -nrm;
      off = -off;
    }
    HRow canon = canonicalize_row({-off, nrm});  // nrm.x <= off
    for (auto& [pn, po] : planes)
      if (pn == canon.a && po == canon.b) return;
    planes.emplace_back(canon.a, canon.b);
  };
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == d) {
      handle();
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return planes.size();
}

VPolytope random_vpolytope(std::mt19937& rng, std::size_t d, std::size_t n) {
  std::uniform_int_distribution<long> coord(-6, 6);
  std::vector<QVector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    QVector p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = q(coord(rng));
    pts.push_back(std::move(p));
  }
  return VPolytope(d, std::move(pts));
}

std::vector<QVector> as_set(const VPolytope& v) {
  auto pts = v.points();
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

TEST_CASE("enumerate_vertices on standard families") {
  CHECK(enumerate_vertices(gen::cube(3)).points() == gen::cube_vertices(3).points());
  for (std::size_t d = 1; d <= 5; ++d) {
    CHECK(enumerate_vertices(gen::simplex(d)).points() == gen::simplex_vertices(d).points());
  }
  SUBCASE("product of two hexagons has 36 vertices") {
    HPolytope hexagon = enumerate_facets(gen::polygon(6));
    CHECK(hexagon.row_count() == 6);
    HPolytope hh = gen::product(hexagon, hexagon);
    CHECK(hh.row_count() == 12);
    VPolytope v = enumerate_vertices(hh);
    CHECK(v.point_count() == 36);
    CHECK(as_set(v) == as_set(enumerate_vertices_by_bases(hh)));
  }
  SUBCASE("double description agrees with basis enumeration on random bounded systems") {
    std::mt19937 rng(99);
    int done = 0;
    for (int t = 0; t < 40 && done < 25; ++t) {
      VPolytope pts = random_vpolytope(rng, 3, 7);
      if (affine_dimension(pts) < 3) continue;
      HPolytope h = enumerate_facets(pts);
      CHECK(as_set(enumerate_vertices(h)) == as_set(enumerate_vertices_by_bases(h)));
      ++done;
    }
    CHECK(done == 25);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(enumerate_vertices(HPolytope(1, {{q(-1), QVector{q(1)}}, {q(0), QVector{q(-1)}}})),
                    EmptyPolyhedron);
    CHECK_THROWS_AS(enumerate_vertices(HPolytope(2, {{q(0), QVector{q(1), q(0)}}})), NotBounded);
  }
}

TEST_CASE("enumerate_facets on standard families") {
  CHECK(enumerate_facets(gen::cube_vertices(3)).row_count() == 6);
  CHECK(enumerate_facets(gen::crosspoly(3)).row_count() == 8);
  SUBCASE("cyclic polytope C4(8) has 20 facets, matching the subset oracle") {
    VPolytope c = gen::cyclic(4, 8);
    CHECK(facet_count_by_subsets(c) == 20);
    CHECK(enumerate_facets(c).row_count() == 20);
  }
  SUBCASE("every facet is tight at >= d affinely independent vertices") {
    VPolytope c = gen::cyclic(3, 7);
    HPolytope h = enumerate_facets(c);
    VPolytope verts = remove_redundancy(c);
    for (const auto& row : h.rows()) {
      QMatrix tight(std::vector<QVector>{});
      QVector base;
      bool first = true;
      std::size_t count = 0;
      for (const auto& v : verts.points()) {
        if (!(row.b + dot(row.a, v)).is_zero()) continue;
        ++count;
        if (first) {
          base = v;
          first = false;
        } else {
          tight.append_row(v - base);
        }
      }
      CHECK(count >= 3);
      CHECK(rank(tight) == 2);  // affine rank d-1 within the facet
    }
  }
  SUBCASE("lower-dimensional input: square inside R^3") {
    std::vector<QVector> pts = {QVector{q(0), q(0), q(2)}, QVector{q(1), q(0), q(2)},
                                QVector{q(0), q(1), q(2)}, QVector{q(1), q(1), q(2)}};
    HPolytope h = enumerate_facets(VPolytope(3, pts));
    CHECK(h.row_count() == 6);  // 2 hull equations + 4 facet rows
    VPolytope back = enumerate_vertices(h);
    CHECK(as_set(back) == as_set(VPolytope(3, pts)));
  }
  SUBCASE("single point") {
    VPolytope pt(2, {QVector{q(3), q(4)}});
    HPolytope h = enumerate_facets(pt);
    CHECK(h.row_count() == 4);
    CHECK(h.contains(QVector{q(3), q(4)}));
    CHECK(!h.contains(QVector{q(3), q(5)}));
  }
}

TEST_CASE("round trip: vertices(facets(V)) == irredundant V") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dims(2, 4);
  std::uniform_int_distribution<int> counts(4, 10);
  int done = 0;
  for (int t = 0; t < 60 && done < 30; ++t) {
    std::size_t d = static_cast<std::size_t>(dims(rng));
    VPolytope v = random_vpolytope(rng, d, static_cast<std::size_t>(counts(rng)));
    if (affine_dimension(v) < 1) continue;
    VPolytope expected = remove_redundancy(v).sorted();
    VPolytope got = enumerate_vertices(enumerate_facets(v));
    CHECK(as_set(got) == as_set(expected));
    ++done;
  }
  CHECK(done == 30);
}

TEST_CASE("verify") {
  CHECK(verify(gen::cube(3), gen::cube_vertices(3)));
  SUBCASE("missing vertex") {
    auto pts = gen::cube_vertices(3).points();
    pts.pop_back();
    CHECK(!verify(gen::cube(3), VPolytope(3, pts)));
  }
  CHECK(!verify(gen::cube(3), gen::crosspoly(3)));
  SUBCASE("equivalence triangle: verify(H, enumerate_vertices(H)) on families") {
    for (std::size_t d = 2; d <= 4; ++d) {
      CHECK(verify(gen::cube(d), enumerate_vertices(gen::cube(d))));
      CHECK(verify(gen::simplex(d), enumerate_vertices(gen::simplex(d))));
      HPolytope cross = enumerate_facets(gen::crosspoly(d));
      CHECK(verify(cross, enumerate_vertices(cross)));
    }
  }
  CHECK_THROWS_AS(verify(gen::cube(3), gen::crosspoly(2)), DimensionMismatch);
}

TEST_CASE("contains") {
  SUBCASE("cube [-1,1]^3 vs its own vertices") {
    std::vector<HRow> rows;
    for (int i = 0; i < 3; ++i) {
      QVector lo(3), hi(3);
      lo[static_cast<std::size_t>(i)] = q(1);
      hi[static_cast<std::size_t>(i)] = q(-1);
      rows.push_back({q(1), lo});
      rows.push_back({q(1), hi});
    }
    HPolytope big(3, rows);
    std::vector<QVector> corners;
    for (int m = 0; m < 8; ++m) {
      QVector p(3);
      for (int i = 0; i < 3; ++i) p[static_cast<std::size_t>(i)] = q((m >> i) & 1 ? 1 : -1);
      corners.push_back(p);
    }
    CHECK(contains(big, VPolytope(3, corners)));
    CHECK(!contains(big, gen::crosspoly(3)));
    // Octahedron |x|_1 <= 1 inside conv({+-1}^3).
    std::vector<HRow> oct;
    for (int sx : {1, -1})
      for (int sy : {1, -1})
        for (int sz : {1, -1}) oct.push_back({q(1), QVector{q(-sx), q(-sy), q(-sz)}});
    CHECK(contains(HPolytope(3, oct), VPolytope(3, corners)));
  }
}
