#pragma once

#include <optional>
#include <vector>

#include "spingpc/catalog.hpp"
#include "spingpc/geometry.hpp"
#include "spingpc/occupation.hpp"

namespace spingpc {

/// Keeps the first d' entries of a descending vector; the dropped tail mass
/// is the truncation error N - sum_{j<=d'} v_j. Unsorted inputs are sorted
/// first (the permutation is recorded, not rejected).
struct Truncation {
  OccupationVector truncated;
  Rat epsilon_prime;
  bool input_was_sorted = true;
};
Truncation truncate(const OccupationVector& v, int d_prime, int n_particles);

/// l1 distance from v' to the rotated hyperplane D'(x) + alpha (N - sum x) = 0:
///   |D'(v') + alpha eps'| / max_j |kappa_j - alpha|.
/// nullopt when every kappa_j equals alpha (degenerate rotation, excluded
/// from maximization).
std::optional<Rat> rotated_hyperplane_distance(const LinearConstraint& gpc,
                                               std::span<const Rat> v_prime,
                                               const Rat& eps_prime, const Rat& alpha);

struct LowerBound {
  Rat value;      // sup_alpha dist - eps', clamped at 0
  Rat max_dist;   // maximum over the finite candidate set (the sup of the
                  // distance at |alpha| -> inf is eps', which cancels)
  Rat alpha_star; // maximizer among the exact candidate set
};

/// max over alpha of the rotated hyperplane distance minus eps', clamped at
/// zero. The objective is piecewise linear-fractional in alpha, so the exact
/// maximum lies in a finite candidate set: the kappa values, midpoints of
/// kappa pairs, and the numerator zero -D'/eps'; the sup at |alpha| -> inf is
/// eps', which contributes 0 after subtraction.
LowerBound lower_bound(const LinearConstraint& gpc, std::span<const Rat> v_prime,
                       const Rat& eps_prime);

struct TruncationResult {
  OccupationVector truncated;
  Rat epsilon_prime;
  Rat f_min_prime;       // min facet distance in the truncated setting
  int achieving_gpc = 0; // 1-based truncated-catalog index
  Rat lower;             // F-: min over the per-constraint bounds, clamped
  Rat upper;             // F+ = F'_min + eps'
  Rat alpha_star;        // maximizer attached to F-
  int lower_gpc = 0;     // truncated constraint achieving F-
};

/// Truncates v to d' orbitals and assembles the distance bounds
/// F- <= dist(v, boundary of the full polytope) <= F+ from the truncated
/// setting's constraint table. The cross-setting constant relating truncated
/// to full coefficients is taken as 1 (override available for callers that
/// know the full-setting coefficient norms).
TruncationResult truncation_bounds(const OccupationVector& v, const Setting& full_setting,
                                   int d_prime, const ConstraintCatalog& catalog,
                                   const Rat& coefficient_ratio = Rat(1));

}  // namespace spingpc
