#include "polywork/linalg.hpp"

#include <cassert>
#include <sstream>

namespace polywork {

bool QVector::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

QVector& QVector::operator+=(const QVector& o) {
  assert(size() == o.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  assert(size() == o.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

QVector QVector::operator-() const {
  QVector r(size());
  for (std::size_t i = 0; i < e_.size(); ++i) r[i] = -e_[i];
  return r;
}

bool operator<(const QVector& a, const QVector& b) {
  assert(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::string QVector::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ", ";
    os << e_[i];
  }
  os << ")";
  return os.str();
}

Rational dot(const QVector& a, const QVector& b) {
  assert(a.size() == b.size());
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMatrix::QMatrix(std::vector<QVector> rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : rows_[0].size();
  for (const auto& r : rows_) {
    if (r.size() != cols_) throw InputError("ragged matrix rows");
  }
}

void QMatrix::append_row(QVector r) {
  if (rows_.empty()) cols_ = r.size();
  if (r.size() != cols_) throw InputError("appended row has wrong length");
  rows_.push_back(std::move(r));
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

QVector QMatrix::apply(const QVector& x) const {
  assert(x.size() == cols_);
  QVector y(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) y[i] = dot(rows_[i], x);
  return y;
}

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.col_count() && r < m.row_count(); ++c) {
    std::size_t p = r;
    while (p < m.row_count() && m.at(p, c).is_zero()) ++p;
    if (p == m.row_count()) continue;
    std::swap(m.row(p), m.row(r));
    Rational inv = Rational(1) / m.at(r, c);
    m.row(r) *= inv;
    for (std::size_t i = 0; i < m.row_count(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c);
      for (std::size_t j = c; j < m.col_count(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) { return echelon(m).size(); }

Rational det(QMatrix m) {
  if (m.row_count() != m.col_count()) throw InputError("determinant of non-square matrix");
  std::size_t n = m.row_count();
  Rational d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(m.row(p), m.row(c));
      d = -d;
    }
    d *= m.at(c, c);
    Rational inv = Rational(1) / m.at(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return d;
}

std::optional<QVector> solve_square(QMatrix m, QVector b) {
  if (m.row_count() != m.col_count() || b.size() != m.row_count())
    throw InputError("solve_square shape mismatch");
  std::size_t n = b.size();
  QMatrix aug(std::vector<QVector>{});
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
    row.push_back(b[i]);
    aug.append_row(QVector(std::move(row)));
  }
  auto pivots = echelon(aug);
  if (pivots.size() != n || (!pivots.empty() && pivots.back() >= n)) return std::nullopt;
  QVector x(n);
  for (std::size_t r = 0; r < n; ++r) x[pivots[r]] = aug.at(r, n);
  return x;
}

std::optional<QVector> solve_any(QMatrix m, QVector b) {
  if (b.size() != m.row_count()) throw InputError("solve_any shape mismatch");
  std::size_t n = m.col_count();
  QMatrix aug(std::vector<QVector>{});
  for (std::size_t i = 0; i < m.row_count(); ++i) {
    std::vector<Rational> row;
    row.reserve(n + 1);
    for (std::size_t j = 0; j < n; ++j) row.push_back(m.at(i, j));
    row.push_back(b[i]);
    aug.append_row(QVector(std::move(row)));
  }
  auto pivots = echelon(aug);
  for (std::size_t p : pivots)
    if (p == n) return std::nullopt;  // pivot in the augmented column
  QVector x(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, n);
  return x;
}

std::vector<QVector> null_space(const QMatrix& m) {
  QMatrix e = m;
  auto pivots = echelon(e);
  std::size_t n = m.col_count();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    QVector v(n);
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace polywork
