#include "polywork/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace polywork {

namespace {

// Full-tableau simplex over exact rationals. Row layout: m constraint rows of
// [coefficients | rhs], plus a reduced-cost row with the negated objective in
// its rhs slot. Bland's rule everywhere, so cycling is impossible.
class Tableau {
public:
  Tableau(const QMatrix& a, const QVector& b) : m_(a.row_count()), n_(a.col_count()) {
    rows_.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      std::vector<Rational> r;
      r.reserve(n_ + 1);
      for (std::size_t j = 0; j < n_; ++j) r.push_back(a.at(i, j));
      r.push_back(b[i]);
      rows_.push_back(std::move(r));
    }
    basis_.assign(m_, SIZE_MAX);
  }

  std::size_t var_count() const { return n_; }
  std::size_t row_count() const { return m_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  Rational rhs(std::size_t i) const { return rows_[i][n_]; }
  Rational objective() const { return -cost_[n_]; }

  void set_basis(std::size_t row, std::size_t var) { basis_[row] = var; }

  // Rebuilds the reduced-cost row for objective c (size may be < n_; missing
  // entries cost zero) assuming basis columns are identity columns.
  void install_objective(const QVector& c) {
    cost_.assign(n_ + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost_[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      std::size_t bv = basis_[i];
      if (cost_[bv].is_zero()) continue;
      Rational f = cost_[bv];
      for (std::size_t j = 0; j <= n_; ++j) cost_[j] -= f * rows_[i][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = Rational(1) / rows_[row][col];
    for (auto& x : rows_[row]) x *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col].is_zero()) continue;
      Rational f = rows_[i][col];
      for (std::size_t j = 0; j <= n_; ++j) rows_[i][j] -= f * rows_[row][j];
    }
    if (!cost_[col].is_zero()) {
      Rational f = cost_[col];
      for (std::size_t j = 0; j <= n_; ++j) cost_[j] -= f * rows_[row][j];
    }
    basis_[row] = col;
  }

  // Runs Bland-rule iterations to optimality. Returns false on unboundedness.
  bool optimize() {
    for (;;) {
      std::size_t enter = SIZE_MAX;
      for (std::size_t j = 0; j < n_; ++j) {
        if (cost_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == SIZE_MAX) return true;
      std::size_t leave = SIZE_MAX;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter].sign() <= 0) continue;
        Rational ratio = rows_[i][n_] / rows_[i][enter];
        if (leave == SIZE_MAX || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == SIZE_MAX) return false;
      pivot(leave, enter);
    }
  }

  // Removes columns [first, n_) entirely, dropping rows whose basic variable
  // cannot be replaced (those rows are all-zero on the kept columns).
  void shrink_to(std::size_t first) {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < first) {
        ++i;
        continue;
      }
      std::size_t col = SIZE_MAX;
      for (std::size_t j = 0; j < first; ++j) {
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == SIZE_MAX) {
        // Redundant constraint.
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      } else {
        pivot(i, col);
        ++i;
      }
    }
    for (auto& r : rows_) r.erase(r.begin() + static_cast<std::ptrdiff_t>(first), r.begin() + static_cast<std::ptrdiff_t>(n_));
    n_ = first;
  }

  QVector solution(std::size_t vars) const {
    QVector x(vars);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < vars) x[basis_[i]] = rows_[i][n_];
    return x;
  }

private:
  std::size_t m_, n_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> cost_;
  std::vector<std::size_t> basis_;
};

LPResult solve_standard(const QMatrix& a0, const QVector& b0, const QVector& c) {
  std::size_t m = a0.row_count(), n = a0.col_count();
  if (b0.size() != m || c.size() != n) throw InputError("LP dimensions inconsistent");

  // Orient rows so the right-hand side is nonnegative, append artificials.
  QMatrix a(m, n + m);
  QVector b(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool neg = b0[i].sign() < 0;
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = neg ? -a0.at(i, j) : a0.at(i, j);
    b[i] = neg ? -b0[i] : b0[i];
    a.at(i, n + i) = Rational(1);
  }

  Tableau t(a, b);
  for (std::size_t i = 0; i < m; ++i) t.set_basis(i, n + i);
  QVector phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = Rational(1);
  t.install_objective(phase1);
  bool bounded = t.optimize();
  assert(bounded);
  (void)bounded;
  if (t.objective().sign() > 0) return {LPStatus::Infeasible, {}, {}};

  t.shrink_to(n);
  t.install_objective(c);
  if (!t.optimize()) return {LPStatus::Unbounded, {}, {}};
  return {LPStatus::Optimal, t.objective(), t.solution(n)};
}

}  // namespace

bool inequality_system_feasible(const QMatrix& a, const QVector& b) {
  // b + A x >= 0  <=>  A u - A w - y = -b with u, w, y >= 0.
  std::size_t m = a.row_count(), d = a.col_count();
  QMatrix sa(m, 2 * d + m);
  QVector sb(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      sa.at(i, j) = a.at(i, j);
      sa.at(i, d + j) = -a.at(i, j);
    }
    sa.at(i, 2 * d + i) = Rational(-1);
    sb[i] = -b[i];
  }
  QVector zero(2 * d + m);
  return solve_standard(sa, sb, zero).status != LPStatus::Infeasible;
}

namespace {

// Walks from an optimal point to a vertex of the optimal face by closing
// null directions of the tight rows. Stops early when the optimal face
// contains a line (no vertex to reach).
QVector purify(const QMatrix& a, const QVector& b, const QVector& c, QVector x) {
  std::size_t m = a.row_count(), d = a.col_count();
  for (;;) {
    QMatrix tight(std::vector<QVector>{});
    QVector slack = a.apply(x);
    for (std::size_t i = 0; i < m; ++i) slack[i] += b[i];
    for (std::size_t i = 0; i < m; ++i)
      if (slack[i].is_zero()) tight.append_row(a.row(i));
    std::vector<QVector> ns = tight.row_count() ? null_space(tight) : [&] {
      std::vector<QVector> id;
      for (std::size_t j = 0; j < d; ++j) {
        QVector e(d);
        e[j] = Rational(1);
        id.push_back(std::move(e));
      }
      return id;
    }();
    if (ns.empty()) return x;
    const QVector& z = ns.front();
    if (!dot(c, z).is_zero()) throw std::logic_error("purify called on a non-optimal point");
    bool moved = false;
    for (int s : {+1, -1}) {
      QVector dir = s > 0 ? z : -z;
      bool have = false;
      Rational step;
      for (std::size_t i = 0; i < m; ++i) {
        Rational rate = dot(a.row(i), dir);
        if (rate.sign() >= 0) continue;
        Rational t = -slack[i] / rate;
        if (!have || t < step) {
          have = true;
          step = t;
        }
      }
      if (have) {
        x += step * dir;
        moved = true;
        break;
      }
    }
    if (!moved) return x;  // feasible line through the optimum: not pointed
  }
}

}  // namespace

LPResult solve_lp(const LinearProgram& lp) {
  std::size_t m = lp.a.row_count(), s = lp.a.col_count();
  if (lp.b.size() != m || lp.c.size() != s) throw InputError("LP dimensions inconsistent");
  if (lp.form == LPForm::Standard) return solve_standard(lp.a, lp.b, lp.c);

  // x = u - w, slack y: A u - A w - y = -b.
  QMatrix sa(m, 2 * s + m);
  QVector sb(m);
  QVector sc(2 * s + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      sa.at(i, j) = lp.a.at(i, j);
      sa.at(i, s + j) = -lp.a.at(i, j);
    }
    sa.at(i, 2 * s + i) = Rational(-1);
    sb[i] = -lp.b[i];
  }
  for (std::size_t j = 0; j < s; ++j) {
    sc[j] = lp.c[j];
    sc[s + j] = -lp.c[j];
  }
  LPResult r = solve_standard(sa, sb, sc);
  if (r.status != LPStatus::Optimal) return r;
  QVector x(s);
  for (std::size_t j = 0; j < s; ++j) x[j] = r.point[j] - r.point[s + j];
  x = purify(lp.a, lp.b, lp.c, std::move(x));
  return {LPStatus::Optimal, r.value, std::move(x)};
}

}  // namespace polywork
