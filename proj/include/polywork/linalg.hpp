#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "polywork/rational.hpp"

namespace polywork {

// Dense rational vector with the length fixed at construction.
class QVector {
public:
  QVector() = default;
  explicit QVector(std::size_t d) : e_(d) {}
  QVector(std::initializer_list<Rational> init) : e_(init) {}
  explicit QVector(std::vector<Rational> entries) : e_(std::move(entries)) {}

  std::size_t size() const { return e_.size(); }
  const Rational& operator[](std::size_t i) const { return e_[i]; }
  Rational& operator[](std::size_t i) { return e_[i]; }

  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  bool is_zero() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const Rational& s);
  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(const Rational& s, QVector v) { return v *= s; }
  QVector operator-() const;

  friend bool operator==(const QVector& a, const QVector& b) { return a.e_ == b.e_; }
  // Coordinate-wise lexicographic order; the canonical vertex order.
  friend bool operator<(const QVector& a, const QVector& b);

  std::string str() const;

private:
  std::vector<Rational> e_;
};

Rational dot(const QVector& a, const QVector& b);

// Dense rational matrix, a rectangular list of rows.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, QVector(cols)) {}
  explicit QMatrix(std::vector<QVector> rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const QVector& row(std::size_t i) const { return rows_[i]; }
  QVector& row(std::size_t i) { return rows_[i]; }
  const Rational& at(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  Rational& at(std::size_t i, std::size_t j) { return rows_[i][j]; }

  void append_row(QVector r);
  QMatrix transposed() const;
  QVector apply(const QVector& x) const;  // M * x

  friend bool operator==(const QMatrix& a, const QMatrix& b) { return a.cols_ == b.cols_ && a.rows_ == b.rows_; }

private:
  std::size_t cols_ = 0;
  std::vector<QVector> rows_;
};

// Rank by exact Gaussian elimination.
std::size_t rank(QMatrix m);

// Determinant of a square matrix.
Rational det(QMatrix m);

// Unique solution of M x = b when M is square and nonsingular.
std::optional<QVector> solve_square(QMatrix m, QVector b);

// Some solution of M x = b, or nullopt if inconsistent.
std::optional<QVector> solve_any(QMatrix m, QVector b);

// Basis of the null space {x : M x = 0}.
std::vector<QVector> null_space(const QMatrix& m);

}  // namespace polywork
