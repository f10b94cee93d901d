#include "exactfn/lp.hpp"

#include <optional>
#include <string>

#include "exactfn/errors.hpp"

namespace exactfn {

namespace {

// Dense tableau in equality form: rows_[i] = (coefficients..., rhs), every rhs
// kept nonnegative. The last row holds reduced costs and the negated
// objective value.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), basis_(std::move(basis)) {}

  [[nodiscard]] std::size_t num_rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t num_cols() const { return rows_.empty() ? 0 : rows_.front().size() - 1; }

  // Installs costs over the current columns and prices out the basis.
  void set_costs(const std::vector<Rational>& costs) {
    const std::size_t n = num_cols();
    objective_.assign(n + 1, Rational{});
    for (std::size_t j = 0; j < n; ++j) objective_[j] = costs[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= n; ++j) {
        if (!rows_[i][j].is_zero()) objective_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs Bland's-rule simplex. Only columns below `usable_cols` may enter.
  // Returns false when the objective is unbounded below.
  bool optimize(std::size_t usable_cols) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < usable_cols; ++j) {
        if (objective_[j].sign() < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return true;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      const std::size_t rhs = num_cols();
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][*entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[i][rhs] / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return false;
      pivot(*leaving, *entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = num_cols() + 1;
    const Rational inv = Rational(1) / rows_[row][col];
    for (std::size_t j = 0; j < width; ++j) {
      if (!rows_[row][j].is_zero()) rows_[row][j] *= inv;
    }
    auto eliminate = [&](std::vector<Rational>& target) {
      if (target[col].is_zero()) return;
      const Rational factor = target[col];
      for (std::size_t j = 0; j < width; ++j) {
        if (!rows_[row][j].is_zero()) target[j] -= factor * rows_[row][j];
      }
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != row) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  // Negated objective value sits in the rhs slot of the cost row.
  [[nodiscard]] Rational objective_value() const { return -objective_[num_cols()]; }

  [[nodiscard]] std::vector<Rational> primal(std::size_t cols) const {
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (basis_[i] < cols) x[basis_[i]] = rows_[i][num_cols()];
    }
    return x;
  }

  // Pivots basic artificial columns (index >= first_artificial) out of the
  // basis, dropping rows that turn out to be redundant.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (!rows_[i][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  void drop_columns_from(std::size_t first_dropped) {
    for (auto& row : rows_) {
      Rational rhs = row.back();
      row.resize(first_dropped);
      row.push_back(std::move(rhs));
    }
  }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
};

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  const std::size_t n = lp.num_variables();
  if (n == 0) throw InputError("linear program has no variables");
  if (!lp.kinds.empty() && lp.kinds.size() != n) {
    throw InputError("variable kind list has width " + std::to_string(lp.kinds.size()) +
                     ", expected " + std::to_string(n));
  }
  for (std::size_t r = 0; r < lp.constraints.size(); ++r) {
    if (lp.constraints[r].coefficients.size() != n) {
      throw InputError("constraint row " + std::to_string(r) + " has width " +
                       std::to_string(lp.constraints[r].coefficients.size()) + ", expected " +
                       std::to_string(n));
    }
  }

  // Column layout: structural columns (free variables split in two), then one
  // surplus per >= row, then one artificial per row.
  std::vector<std::size_t> column_of(n);
  std::vector<bool> is_free(n, false);
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    is_free[j] = !lp.kinds.empty() && lp.kinds[j] == VariableKind::Free;
    column_of[j] = structural;
    structural += is_free[j] ? 2 : 1;
  }
  std::size_t surplus_count = 0;
  for (const auto& c : lp.constraints) {
    if (c.relation == Relation::GreaterEqual) ++surplus_count;
  }
  const std::size_t m = lp.constraints.size();
  const std::size_t first_artificial = structural + surplus_count;
  const std::size_t total = first_artificial + m;

  std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(total + 1));
  std::vector<std::size_t> basis(m);
  std::size_t next_surplus = structural;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    auto& row = rows[i];
    for (std::size_t j = 0; j < n; ++j) {
      row[column_of[j]] = c.coefficients[j];
      if (is_free[j]) row[column_of[j] + 1] = -c.coefficients[j];
    }
    if (c.relation == Relation::GreaterEqual) row[next_surplus++] = Rational(-1);
    row[total] = c.rhs;
    if (c.rhs.sign() < 0) {
      for (auto& v : row) v = -v;
    }
    row[first_artificial + i] = Rational(1);
    basis[i] = first_artificial + i;
  }

  Tableau tableau(std::move(rows), std::move(basis));

  std::vector<Rational> phase_one(total);
  for (std::size_t i = 0; i < m; ++i) phase_one[first_artificial + i] = Rational(1);
  tableau.set_costs(phase_one);
  tableau.optimize(total);
  if (tableau.objective_value().sign() > 0) return LPOutcome{LPStatus::Infeasible, {}, {}};

  tableau.expel_artificials(first_artificial);
  tableau.drop_columns_from(first_artificial);

  std::vector<Rational> costs(first_artificial);
  for (std::size_t j = 0; j < n; ++j) {
    costs[column_of[j]] = lp.objective[j];
    if (is_free[j]) costs[column_of[j] + 1] = -lp.objective[j];
  }
  tableau.set_costs(costs);
  if (!tableau.optimize(first_artificial)) return LPOutcome{LPStatus::Unbounded, {}, {}};

  const std::vector<Rational> columns = tableau.primal(first_artificial);
  LPOutcome out;
  out.status = LPStatus::Optimal;
  out.value = tableau.objective_value();
  out.optimizer.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.optimizer[j] = columns[column_of[j]];
    if (is_free[j]) out.optimizer[j] -= columns[column_of[j] + 1];
  }
  return out;
}

LPOutcome solve_max(LinearProgram lp) {
  for (auto& c : lp.objective) c = -c;
  LPOutcome out = solve(lp);
  if (out.optimal()) out.value = -out.value;
  return out;
}

bool is_feasible_point(const LinearProgram& lp, const std::vector<Rational>& point) {
  if (point.size() != lp.num_variables()) return false;
  for (std::size_t j = 0; j < point.size(); ++j) {
    const bool free = !lp.kinds.empty() && lp.kinds[j] == VariableKind::Free;
    if (!free && point[j].sign() < 0) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs;
    for (std::size_t j = 0; j < point.size(); ++j) {
      if (!c.coefficients[j].is_zero()) lhs += c.coefficients[j] * point[j];
    }
    if (c.relation == Relation::Equal ? lhs != c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

const char* to_string(LPStatus status) {
  switch (status) {
    case LPStatus::Optimal:
      return "optimal";
    case LPStatus::Infeasible:
      return "infeasible";
    case LPStatus::Unbounded:
      return "unbounded";
  }
  return "unknown";
}

}  // namespace exactfn
