#include "polywork/polytope.hpp"

#include <algorithm>

namespace polywork {

HRow canonicalize_row(HRow row, bool flip_sign) {
  // Common denominator, then divide out the gcd of the numerators.
  Int lcm_den = 1;
  Int gcd_num = 0;
  auto feed = [&](const Rational& x) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  };
  feed(row.b);
  for (std::size_t j = 0; j < row.a.size(); ++j) feed(row.a[j]);
  Rational scale = Rational(lcm_den);
  row.b *= scale;
  for (std::size_t j = 0; j < row.a.size(); ++j) row.a[j] *= scale;
  auto feed_num = [&](const Rational& x) {
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), x.num().get_mpz_t());
  };
  feed_num(row.b);
  for (std::size_t j = 0; j < row.a.size(); ++j) feed_num(row.a[j]);
  if (gcd_num != 0) {
    Rational inv(Int(1), gcd_num);
    row.b *= inv;
    for (std::size_t j = 0; j < row.a.size(); ++j) row.a[j] *= inv;
  }
  if (flip_sign) {
    for (std::size_t j = 0; j < row.a.size(); ++j) {
      if (row.a[j].is_zero()) continue;
      if (row.a[j].sign() < 0) {
        row.b = -row.b;
        row.a = -row.a;
      }
      break;
    }
  }
  return row;
}

HPolytope::HPolytope(std::size_t dim, std::vector<HRow> rows) : d_(dim), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.a.size() != d_) throw DimensionMismatch("H-row length != ambient dimension");
}

QVector HPolytope::slacks(const QVector& x) const {
  if (x.size() != d_) throw DimensionMismatch("point dimension mismatch");
  QVector s(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) s[i] = rows_[i].b + dot(rows_[i].a, x);
  return s;
}

bool HPolytope::contains(const QVector& x) const {
  QVector s = slacks(x);
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].sign() < 0) return false;
  return true;
}

HPolytope HPolytope::canonicalized() const {
  std::vector<HRow> out;
  for (const auto& r : rows_) {
    HRow c = canonicalize_row(r);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return HPolytope(d_, std::move(out));
}

QMatrix HPolytope::coefficient_matrix() const {
  QMatrix m(std::vector<QVector>{});
  for (const auto& r : rows_) m.append_row(r.a);
  if (rows_.empty()) m = QMatrix(0, d_);
  return m;
}

QVector HPolytope::offsets() const {
  QVector b(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) b[i] = rows_[i].b;
  return b;
}

VPolytope::VPolytope(std::size_t dim, std::vector<QVector> points) : d_(dim), points_(std::move(points)) {
  for (const auto& p : points_)
    if (p.size() != d_) throw DimensionMismatch("point length != ambient dimension");
}

VPolytope VPolytope::sorted() const {
  auto pts = points_;
  std::sort(pts.begin(), pts.end());
  return VPolytope(d_, std::move(pts));
}

LPResult solve_lp_over(const HPolytope& p, const QVector& objective) {
  return solve_lp(LinearProgram::inequality(p.coefficient_matrix(), p.offsets(), objective));
}

LPResult solve_lp_lex_over(const HPolytope& p, const QVector& objective) {
  LPResult base = solve_lp_over(p, objective);
  if (base.status != LPStatus::Optimal) return base;
  std::size_t d = p.dim();
  std::vector<HRow> rows = p.rows();
  rows.push_back({-base.value, objective});
  rows.push_back({base.value, -objective});
  QVector point(d);
  for (std::size_t j = 0; j < d; ++j) {
    QVector ej(d);
    ej[j] = Rational(1);
    LPResult r = solve_lp_over(HPolytope(d, rows), ej);
    if (r.status != LPStatus::Optimal) return base;  // unbounded optimal face
    point[j] = r.value;
    QVector nej(d);
    nej[j] = Rational(-1);
    rows.push_back({-r.value, ej});
    rows.push_back({r.value, nej});
  }
  return {LPStatus::Optimal, base.value, std::move(point)};
}

HPolytope remove_redundancy(const HPolytope& p) {
  if (!inequality_system_feasible(p.coefficient_matrix(), p.offsets()))
    throw EmptyPolyhedron("remove_redundancy on an infeasible H-description");
  std::size_t m = p.row_count();
  std::vector<bool> active(m, true);
  for (std::size_t i = 0; i < m; ++i) {
    // Row i is redundant iff min b_i + a_i.x over the others (relaxed by
    // b_i + a_i.x >= -1 to stay bounded) is still nonnegative.
    QMatrix a(std::vector<QVector>{});
    std::vector<Rational> bs;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i || !active[j]) continue;
      a.append_row(p.row(j).a);
      bs.push_back(p.row(j).b);
    }
    a.append_row(p.row(i).a);
    bs.push_back(p.row(i).b + Rational(1));
    if (a.col_count() == 0) a = QMatrix(a.row_count(), p.dim());
    LPResult r = solve_lp(LinearProgram::inequality(a, QVector(bs), p.row(i).a));
    // Objective value at the optimum is a_i.x; slack of row i is b_i + that.
    if (r.status == LPStatus::Optimal && (p.row(i).b + r.value).sign() >= 0) active[i] = false;
  }
  std::vector<HRow> keep;
  for (std::size_t i = 0; i < m; ++i)
    if (active[i]) keep.push_back(p.row(i));
  return HPolytope(p.dim(), std::move(keep));
}

bool in_convex_hull(const QVector& x, const std::vector<QVector>& points) {
  // Feasibility of sum l_i p_i = x, sum l_i = 1, l >= 0.
  std::size_t n = points.size(), d = x.size();
  if (n == 0) return false;
  QMatrix a(d + 1, n);
  QVector b(d + 1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < d; ++i) a.at(i, j) = points[j][i];
    a.at(d, j) = Rational(1);
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = x[i];
  b[d] = Rational(1);
  QVector zero(n);
  return solve_lp(LinearProgram::standard(a, b, zero)).status == LPStatus::Optimal;
}

VPolytope remove_redundancy(const VPolytope& p) {
  std::size_t n = p.point_count();
  std::vector<bool> active(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<QVector> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && active[j]) others.push_back(p.point(j));
    if (in_convex_hull(p.point(i), others)) active[i] = false;
  }
  std::vector<QVector> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (active[i]) keep.push_back(p.point(i));
  return VPolytope(p.dim(), std::move(keep));
}

int affine_dimension(const VPolytope& p) {
  if (p.point_count() == 0) return -1;
  QMatrix diffs(std::vector<QVector>{});
  for (std::size_t i = 1; i < p.point_count(); ++i) diffs.append_row(p.point(i) - p.point(0));
  if (diffs.row_count() == 0) return 0;
  return static_cast<int>(rank(diffs));
}

int affine_dimension(const HPolytope& p) {
  if (!inequality_system_feasible(p.coefficient_matrix(), p.offsets())) return -1;
  // Implicit equality rows: those whose slack cannot be made positive.
  QMatrix eq(std::vector<QVector>{});
  for (std::size_t i = 0; i < p.row_count(); ++i) {
    // Maximize b_i + a_i.x, capped at 1 to keep the LP bounded.
    QMatrix a = p.coefficient_matrix();
    QVector b = p.offsets();
    a.append_row(-p.row(i).a);
    std::vector<Rational> bs;
    for (std::size_t j = 0; j < b.size(); ++j) bs.push_back(b[j]);
    bs.push_back(Rational(1) - p.row(i).b);
    LPResult r = solve_lp(LinearProgram::inequality(a, QVector(bs), -p.row(i).a));
    Rational best = p.row(i).b - r.value;  // max of b_i + a_i.x
    if (r.status == LPStatus::Optimal && best.is_zero()) eq.append_row(p.row(i).a);
  }
  if (eq.row_count() == 0) return static_cast<int>(p.dim());
  return static_cast<int>(p.dim() - rank(eq));
}

bool is_bounded(const HPolytope& p) {
  if (!inequality_system_feasible(p.coefficient_matrix(), p.offsets()))
    throw EmptyPolyhedron("is_bounded on an infeasible H-description");
  // Recession cone {x : A x >= 0}. Rank < d means it contains a line.
  QMatrix a = p.coefficient_matrix();
  if (rank(a) < p.dim()) return false;
  // Pointed cone: nonzero iff some A x >= 0 has positive total row sum.
  std::size_t m = p.row_count(), d = p.dim();
  QVector ones(m);
  QVector obj(d);
  for (std::size_t i = 0; i < m; ++i) {
    ones[i] = Rational(1);
    obj -= p.row(i).a;  // minimize -(sum of slacks) = maximize activity
  }
  QMatrix sys = a;
  QVector rhs(m + 1);
  sys.append_row(obj);  // sum_i a_i.x <= 1
  rhs[m] = Rational(1);
  LPResult r = solve_lp(LinearProgram::inequality(sys, rhs, obj));
  if (r.status != LPStatus::Optimal) return false;  // cannot happen: 0 feasible, capped
  return r.value.is_zero();
}

}  // namespace polywork
