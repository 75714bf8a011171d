#include "spingpc/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace spingpc {

namespace {

// Dense simplex tableau over exact rationals.
//
// Rows store A x = rhs with rhs >= 0; `basis[i]` is the column basic in row
// i. The cost row holds reduced costs; minimization pivots on a negative
// reduced cost column (Bland: smallest index) and leaves by the smallest
// ratio, ties broken by smallest basic column index, which guarantees
// termination without cycling.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows, RatVec(cols + 1, Rat(0))), cost_(cols + 1, Rat(0)),
        basis_(rows, 0) {}

  Rat& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  Rat& rhs(std::size_t i) { return a_[i][cols_]; }
  Rat& cost(std::size_t j) { return cost_[j]; }
  Rat& cost_rhs() { return cost_[cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::vector<std::size_t>& basis() { return basis_; }

  void price_out(std::size_t row) {
    const Rat factor = cost_[basis_[row]];
    if (factor == 0) return;
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (a_[row][j] != 0) cost_[j] -= factor * a_[row][j];
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    RatVec& prow = a_[row];
    const Rat p = prow[col];
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (prow[j] != 0) prow[j] /= p;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row) continue;
      const Rat f = a_[i][col];
      if (f == 0) continue;
      RatVec& r = a_[i];
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (prow[j] != 0) r[j] -= f * prow[j];
      }
    }
    const Rat fc = cost_[col];
    if (fc != 0) {
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (prow[j] != 0) cost_[j] -= fc * prow[j];
      }
    }
    basis_[row] = col;
  }

  // Returns false when unbounded.
  bool iterate(std::size_t usable_cols) {
    for (;;) {
      std::size_t enter = usable_cols;
      for (std::size_t j = 0; j < usable_cols; ++j) {
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == usable_cols) return true;  // optimal

      std::size_t leave = rows_;
      Rat best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rat ratio = a_[i][cols_] / a_[i][enter];
        if (leave == rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) return false;  // unbounded
      pivot(leave, enter);
    }
  }

 private:
  std::size_t rows_, cols_;
  std::vector<RatVec> a_;
  RatVec cost_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const RatVec& objective, const std::vector<LinearConstraint>& constraints,
                  bool nonnegative) {
  const std::size_t dim = objective.size();
  for (const auto& c : constraints) {
    if (c.kappa.size() != dim) throw std::invalid_argument("solve_lp: constraint dimension mismatch");
  }

  const std::size_t nvars = nonnegative ? dim : 2 * dim;  // x, or (x+, x-)
  std::size_t n_slack = 0;
  for (const auto& c : constraints) {
    if (c.relation == Relation::GeqZero) ++n_slack;
  }
  const std::size_t m = constraints.size();
  const std::size_t total = nvars + n_slack + m;  // + artificials
  Tableau t(m, total);

  // Row i encodes kappa . x >= -kappa0 as kappa.x - s_i + (sign fix) = -kappa0.
  std::size_t slack_at = nvars;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = constraints[i];
    Rat rhs = -c.kappa0;
    bool flip = rhs < 0;
    const Rat sgn = flip ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < dim; ++j) {
      if (c.kappa[j] == 0) continue;
      t.at(i, j) = sgn * c.kappa[j];
      if (!nonnegative) t.at(i, dim + j) = -sgn * c.kappa[j];
    }
    if (c.relation == Relation::GeqZero) {
      t.at(i, slack_at) = -sgn;  // surplus variable
      ++slack_at;
    }
    t.rhs(i) = sgn * rhs;
    // artificial basis
    const std::size_t art = nvars + n_slack + i;
    t.at(i, art) = 1;
    t.basis()[i] = art;
  }

  // Phase 1: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) t.cost(nvars + n_slack + i) = 1;
  for (std::size_t i = 0; i < m; ++i) t.price_out(i);
  if (!t.iterate(total)) {
    throw std::logic_error("solve_lp: phase 1 cannot be unbounded");
  }
  if (t.cost_rhs() < 0) {
    // cost row rhs tracks -objective; phase-1 optimum > 0 means infeasible
    return {LpStatus::Infeasible, Rat(0), {}};
  }
  // Pivot any zero-level artificial out of the basis when possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (t.basis()[i] < nvars + n_slack) continue;
    std::size_t col = nvars + n_slack;
    for (std::size_t j = 0; j < nvars + n_slack; ++j) {
      if (t.at(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col < nvars + n_slack) t.pivot(i, col);
    // otherwise the row is all-zero (redundant constraint); it stays inert
  }

  // Phase 2: restore the real objective, forbid artificial columns.
  for (std::size_t j = 0; j <= total; ++j) t.cost(j) = 0;
  for (std::size_t j = 0; j < dim; ++j) {
    t.cost(j) = objective[j];
    if (!nonnegative) t.cost(dim + j) = -objective[j];
  }
  for (std::size_t i = 0; i < m; ++i) t.price_out(i);
  if (!t.iterate(nvars + n_slack)) {
    return {LpStatus::Unbounded, Rat(0), {}};
  }

  RatVec x(dim, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t b = t.basis()[i];
    if (b < dim) {
      x[b] += t.rhs(i);
    } else if (!nonnegative && b < 2 * dim) {
      x[b - dim] -= t.rhs(i);
    }
  }
  Rat value = 0;
  for (std::size_t j = 0; j < dim; ++j) value += objective[j] * x[j];
  return {LpStatus::Optimal, value, std::move(x)};
}

}  // namespace spingpc
