#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "polywork/lp.hpp"

namespace polywork {

// One inequality b + a.x >= 0.
struct HRow {
  Rational b;
  QVector a;

  friend bool operator==(const HRow& x, const HRow& y) { return x.b == y.b && x.a == y.a; }
};

// Scales (b, a) by a positive rational so all entries are coprime integers.
// Inequality rows keep their orientation; pass flip_sign for equality rows,
// whose first nonzero coefficient is then made positive.
HRow canonicalize_row(HRow row, bool flip_sign = false);

// Intersection of half-spaces b_i + a_i.x >= 0 in R^d.
class HPolytope {
public:
  HPolytope(std::size_t dim, std::vector<HRow> rows);

  std::size_t dim() const { return d_; }
  std::size_t row_count() const { return rows_.size(); }
  const HRow& row(std::size_t i) const { return rows_[i]; }
  const std::vector<HRow>& rows() const { return rows_; }

  // b_i + a_i.x for every row.
  QVector slacks(const QVector& x) const;
  bool contains(const QVector& x) const;

  // Canonicalizes every row and removes exact duplicates (keeping first
  // occurrences). Does not remove LP-redundant rows.
  HPolytope canonicalized() const;

  QMatrix coefficient_matrix() const;  // rows a_i
  QVector offsets() const;             // entries b_i

private:
  std::size_t d_;
  std::vector<HRow> rows_;
};

// Convex hull of a finite point list in R^d.
class VPolytope {
public:
  VPolytope(std::size_t dim, std::vector<QVector> points);

  std::size_t dim() const { return d_; }
  std::size_t point_count() const { return points_.size(); }
  const QVector& point(std::size_t i) const { return points_[i]; }
  const std::vector<QVector>& points() const { return points_; }

  VPolytope sorted() const;  // canonical lexicographic point order

private:
  std::size_t d_;
  std::vector<QVector> points_;
};

using PolytopeDescription = std::variant<HPolytope, VPolytope>;

// --- kernel operations -----------------------------------------------------

LPResult solve_lp_over(const HPolytope& p, const QVector& objective);

// Lexicographic mode: resolves ties toward the coordinate-wise smallest
// optimal point. Requires the optimal face to be bounded; otherwise the
// plain Bland result is returned.
LPResult solve_lp_lex_over(const HPolytope& p, const QVector& objective);

// Minimal sub-description of the same set; survivor order follows the input.
HPolytope remove_redundancy(const HPolytope& p);
VPolytope remove_redundancy(const VPolytope& p);

// dim(P) in {-1, 0, ..., d}; -1 iff empty.
int affine_dimension(const HPolytope& p);
int affine_dimension(const VPolytope& p);

// True iff the recession cone is {0}; throws EmptyPolyhedron when infeasible.
bool is_bounded(const HPolytope& p);

// One LP: is x in conv(points)?
bool in_convex_hull(const QVector& x, const std::vector<QVector>& points);

}  // namespace polywork
