#pragma once

#include <optional>

#include "polywork/linalg.hpp"

namespace polywork {

enum class LPStatus { Optimal, Unbounded, Infeasible };

struct LPResult {
  LPStatus status = LPStatus::Infeasible;
  Rational value;  // meaningful iff Optimal
  QVector point;   // meaningful iff Optimal
};

enum class LPForm {
  Inequality,  // minimize c.x subject to b + A x >= 0, x free
  Standard,    // minimize c.x subject to A x = b, x >= 0
};

struct LinearProgram {
  QMatrix a;
  QVector b;
  QVector c;
  LPForm form = LPForm::Inequality;

  static LinearProgram inequality(QMatrix a, QVector b, QVector c) {
    return {std::move(a), std::move(b), std::move(c), LPForm::Inequality};
  }
  static LinearProgram standard(QMatrix a, QVector b, QVector c) {
    return {std::move(a), std::move(b), std::move(c), LPForm::Standard};
  }
};

// Exact two-phase primal simplex with Bland's pivot rule. For inequality-form
// problems the optimal point is purified to a basic feasible solution: a
// vertex whenever the feasible region is pointed. The returned optimum is
// deterministic but not lexicographically minimal.
LPResult solve_lp(const LinearProgram& lp);

// Phase-I feasibility of b + A x >= 0.
bool inequality_system_feasible(const QMatrix& a, const QVector& b);

}  // namespace polywork
