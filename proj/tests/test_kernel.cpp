#include "doctest.h"

#include <random>

#include "polywork/polytope.hpp"

using namespace polywork;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

HPolytope unit_cube(std::size_t d) {
  std::vector<HRow> rows;
  for (std::size_t i = 0; i < d; ++i) {
    QVector a(d), na(d);
    a[i] = q(1);
    na[i] = q(-1);
    rows.push_back({q(0), a});   // x_i >= 0
    rows.push_back({q(1), na});  // x_i <= 1
  }
  return HPolytope(d, rows);
}

// Independent boundedness oracle for d <= 3: rank check plus explicit ray
// search over null directions of (d-1)-subsets of the rows.
bool bounded_by_ray_check(const HPolytope& p) {
  QMatrix a = p.coefficient_matrix();
  std::size_t d = p.dim(), m = p.row_count();
  if (rank(a) < d) return false;
  auto recession_ok = [&](const QVector& z) {
    for (std::size_t i = 0; i < m; ++i)
      if (dot(p.row(i).a, z).sign() < 0) return false;
    return true;
  };
  std::vector<std::size_t> idx(d >= 1 ? d - 1 : 0);
  auto check_subset = [&](const std::vector<std::size_t>& s) {
    QMatrix sub(std::vector<QVector>{});
    for (auto i : s) sub.append_row(p.row(i).a);
    if (sub.row_count() == 0) sub = QMatrix(0, d);
    for (const auto& z : null_space(sub.row_count() ? sub : QMatrix(0, d))) {
      if (z.is_zero()) continue;
      if (recession_ok(z) || recession_ok(-z)) return true;
    }
    return false;
  };
  bool ray = false;
  if (d == 1) {
    ray = check_subset({});
  } else {
    std::vector<std::size_t> s;
    auto rec = [&](auto&& self, std::size_t start) -> void {
      if (ray) return;
      if (s.size() == d - 1) {
        if (check_subset(s)) ray = true;
        return;
      }
      for (std::size_t i = start; i < m; ++i) {
        s.push_back(i);
        self(self, i + 1);
        s.pop_back();
      }
    };
    rec(rec, 0);
  }
  return !ray;
}

}  // namespace

TEST_CASE("rational canonical form") {
  Rational a(2, 6);
  CHECK(a.num() == 1);
  CHECK(a.den() == 3);
  Rational b(-4, -8);
  CHECK(b == Rational(1, 2));
  Rational c(3, -9);
  CHECK(c.num() == -1);
  CHECK(c.den() == 3);
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational::parse("-22/11").str() == "-2");
  CHECK_THROWS_AS(Rational(1, 0), InputError);

  // Arithmetic stays in lowest terms with positive denominators.
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int t = 0; t < 300; ++t) {
    long n1 = dist(rng), n2 = dist(rng);
    long d1 = dist(rng), d2 = dist(rng);
    if (!d1 || !d2) continue;
    Rational x(n1, d1), y(n2, d2);
    for (Rational r : {x + y, x - y, x * y}) {
      Int g;
      mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.den() > 0);
    }
  }
}

TEST_CASE("rank") {
  QMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = q(1);
  CHECK(rank(id) == 3);
  CHECK(rank(QMatrix(2, 2)) == 0);
  QMatrix prop(std::vector<QVector>{QVector{q(1), q(2)}, QVector{q(2), q(4)}});
  CHECK(rank(prop) == 1);
}

TEST_CASE("determinant and solve") {
  QMatrix m(std::vector<QVector>{QVector{q(2), q(1)}, QVector{q(1), q(1)}});
  CHECK(det(m) == q(1));
  auto x = solve_square(m, QVector{q(3), q(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == q(1));
  CHECK((*x)[1] == q(1));
  QMatrix sing(std::vector<QVector>{QVector{q(1), q(2)}, QVector{q(2), q(4)}});
  CHECK(det(sing) == q(0));
  CHECK(!solve_square(sing, QVector{q(0), q(1)}).has_value());
}

TEST_CASE("solve_lp basics") {
  SUBCASE("min x1 over unit square") {
    QVector c(2);
    c[0] = q(1);
    LPResult r = solve_lp_over(unit_cube(2), c);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == q(0));
    CHECK(r.point[0] == q(0));  // some vertex of the optimal edge
    LPResult lex = solve_lp_lex_over(unit_cube(2), c);
    CHECK(lex.point == QVector{q(0), q(0)});
  }
  SUBCASE("min -x1 over x1 >= 0 is unbounded") {
    HPolytope p(1, {{q(0), QVector{q(1)}}});
    QVector c{q(-1)};
    CHECK(solve_lp_over(p, c).status == LPStatus::Unbounded);
  }
  SUBCASE("infeasible system") {
    HPolytope p(1, {{q(-1), QVector{q(1)}}, {q(0), QVector{q(-1)}}});  // x >= 1, x <= 0
    QVector c{q(1)};
    CHECK(solve_lp_over(p, c).status == LPStatus::Infeasible);
  }
  SUBCASE("optimal point is a vertex and satisfies constraints exactly") {
    // Simplex x >= 0, sum <= 1 with a tilted objective.
    HPolytope p(3, [] {
      std::vector<HRow> rows;
      for (int i = 0; i < 3; ++i) {
        QVector a(3);
        a[static_cast<std::size_t>(i)] = q(1);
        rows.push_back({q(0), a});
      }
      rows.push_back({q(1), QVector{q(-1), q(-1), q(-1)}});
      return rows;
    }());
    QVector c{q(-3), q(-1), q(-2)};
    LPResult r = solve_lp_over(p, c);
    REQUIRE(r.status == LPStatus::Optimal);
    CHECK(r.value == q(-3));
    CHECK(r.point == QVector{q(1), q(0), q(0)});
    QVector s = p.slacks(r.point);
    QMatrix tight(std::vector<QVector>{});
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s[i].sign() >= 0);
      if (s[i].is_zero()) tight.append_row(p.row(i).a);
    }
    CHECK(rank(tight) == 3);
  }
  SUBCASE("degenerate objective still lands on a vertex") {
    QVector c(2);  // constant objective over the square
    LPResult r = solve_lp_over(unit_cube(2), c);
    REQUIRE(r.status == LPStatus::Optimal);
    QVector s = unit_cube(2).slacks(r.point);
    QMatrix tight(std::vector<QVector>{});
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].is_zero()) tight.append_row(unit_cube(2).row(i).a);
    CHECK(rank(tight) == 2);
  }
}

TEST_CASE("remove_redundancy") {
  SUBCASE("duplicate square inequality") {
    HPolytope p(2, [] {
      auto rows = unit_cube(2).rows();
      rows.push_back(rows[3]);  // x2 <= 1 twice? index 3 is 1 - x2 >= 0
      return rows;
    }());
    CHECK(remove_redundancy(p).row_count() == 4);
  }
  SUBCASE("square corners plus centroid") {
    std::vector<QVector> pts = {QVector{q(0), q(0)}, QVector{q(1), q(0)}, QVector{q(0), q(1)},
                                QVector{q(1), q(1)}, QVector{q(1, 2), q(1, 2)}};
    VPolytope v(2, pts);
    VPolytope red = remove_redundancy(v);
    CHECK(red.point_count() == 4);
    for (const auto& pt : red.points()) CHECK(pt != (QVector{q(1, 2), q(1, 2)}));
  }
  SUBCASE("irredundant simplex is a fixed point, and idempotent") {
    HPolytope p(3, [] {
      std::vector<HRow> rows;
      for (int i = 0; i < 3; ++i) {
        QVector a(3);
        a[static_cast<std::size_t>(i)] = q(1);
        rows.push_back({q(0), a});
      }
      rows.push_back({q(1), QVector{q(-1), q(-1), q(-1)}});
      return rows;
    }());
    HPolytope once = remove_redundancy(p);
    CHECK(once.row_count() == 4);
    CHECK(remove_redundancy(once).rows() == once.rows());
  }
  SUBCASE("infeasible input throws") {
    HPolytope p(1, {{q(-1), QVector{q(1)}}, {q(0), QVector{q(-1)}}});
    CHECK_THROWS_AS(remove_redundancy(p), EmptyPolyhedron);
  }
}

TEST_CASE("affine_dimension") {
  CHECK(affine_dimension(unit_cube(3)) == 3);
  SUBCASE("square embedded in R^3") {
    auto rows = unit_cube(3).rows();
    rows.push_back({q(0), QVector{q(0), q(0), q(-1)}});  // x3 <= 0
    HPolytope p(3, rows);
    CHECK(affine_dimension(p) == 2);
  }
  CHECK(affine_dimension(VPolytope(4, {QVector{q(1), q(2), q(3), q(4)}})) == 0);
  CHECK(affine_dimension(VPolytope(2, {})) == -1);
  SUBCASE("empty H-description of the whole plane") {
    CHECK(affine_dimension(HPolytope(2, {})) == 2);
  }
}

TEST_CASE("is_bounded") {
  CHECK(is_bounded(unit_cube(3)));
  SUBCASE("positive orthant in R^3") {
    std::vector<HRow> rows;
    for (int i = 0; i < 3; ++i) {
      QVector a(3);
      a[static_cast<std::size_t>(i)] = q(1);
      rows.push_back({q(0), a});
    }
    CHECK(!is_bounded(HPolytope(3, rows)));
  }
  SUBCASE("slab with a free coordinate") {
    HPolytope p(2, {{q(0), QVector{q(1), q(0)}}, {q(1), QVector{q(-1), q(0)}}});
    CHECK(!is_bounded(p));
  }
  CHECK_THROWS_AS(is_bounded(HPolytope(1, {{q(-1), QVector{q(1)}}, {q(0), QVector{q(-1)}}})), EmptyPolyhedron);

  SUBCASE("agrees with the explicit ray-check oracle on random systems") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> dims(1, 3);
    std::uniform_int_distribution<int> counts(1, 6);
    int checked = 0;
    for (int t = 0; t < 120; ++t) {
      int d = dims(rng);
      int m = counts(rng);
      std::vector<HRow> rows;
      for (int i = 0; i < m; ++i) {
        QVector a(static_cast<std::size_t>(d));
        bool nonzero = false;
        for (int j = 0; j < d; ++j) {
          long v = coef(rng);
          a[static_cast<std::size_t>(j)] = q(v);
          nonzero |= v != 0;
        }
        if (!nonzero) continue;
        rows.push_back({q(std::abs(coef(rng))), a});  // b >= 0 keeps 0 feasible
      }
      if (rows.empty()) continue;
      HPolytope p(static_cast<std::size_t>(d), rows);
      CHECK(is_bounded(p) == bounded_by_ray_check(p));
      ++checked;
    }
    CHECK(checked > 80);
  }
}

TEST_CASE("canonicalize_row") {
  HRow r{q(1, 2), QVector{q(2, 3), q(-4)}};
  HRow c = canonicalize_row(r);
  CHECK(c.b == q(3));
  CHECK(c.a == (QVector{q(4), q(-24)}));
  // gcd of (3, 4, 24) is 1 already; orientation preserved
  HRow eq = canonicalize_row({q(1), QVector{q(-2), q(4)}}, true);
  CHECK(eq.a[0].sign() > 0);
}
