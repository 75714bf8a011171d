#pragma once

#include <vector>

#include "spingpc/constraint.hpp"
#include "spingpc/rational.hpp"

namespace spingpc {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rat optimum;
  RatVec witness;
};

/// Minimizes objective . x over { x : kappa0 + kappa . x >= 0 (or == 0) }.
/// Exact rational two-phase simplex with Bland's rule, so results are
/// deterministic and bit-identical across runs. Variables are free unless
/// `nonnegative` is set (polytope work sets it; saves the sign split).
LpResult solve_lp(const RatVec& objective, const std::vector<LinearConstraint>& constraints,
                  bool nonnegative = false);

}  // namespace spingpc
