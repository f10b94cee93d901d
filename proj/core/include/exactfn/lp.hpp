#pragma once

#include <cstddef>
#include <vector>

#include "exactfn/rational.hpp"

namespace exactfn {

enum class Relation { GreaterEqual, Equal };

enum class VariableKind { NonNegative, Free };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

/// minimize objective·x subject to the constraint rows and per-variable sign
/// restrictions. An empty `kinds` means every variable is nonnegative.
struct LinearProgram {
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<VariableKind> kinds;

  [[nodiscard]] std::size_t num_variables() const { return objective.size(); }

  void add(std::vector<Rational> coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational value;                  // meaningful when Optimal
  std::vector<Rational> optimizer; // meaningful when Optimal

  [[nodiscard]] bool optimal() const { return status == LPStatus::Optimal; }
};

/// Two-phase dense simplex over exact rationals with Bland's pivoting rule.
/// Deterministic; throws InputError when a row width differs from the
/// objective width or the program has no variables.
[[nodiscard]] LPOutcome solve(const LinearProgram& lp);

/// Convenience wrapper: maximize instead of minimize. The returned value is
/// the maximum (not its negation).
[[nodiscard]] LPOutcome solve_max(LinearProgram lp);

/// True when `point` satisfies every row and sign restriction exactly.
[[nodiscard]] bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& point);

const char* to_string(LPStatus status);

}  // namespace exactfn
