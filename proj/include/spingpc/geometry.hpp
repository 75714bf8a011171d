#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spingpc/catalog.hpp"
#include "spingpc/constraint.hpp"
#include "spingpc/lp.hpp"
#include "spingpc/occupation.hpp"
#include "spingpc/rational.hpp"
#include "spingpc/setting.hpp"

namespace spingpc {

/// H-representation of a spectral polytope on decreasingly ordered
/// occupation numbers. Inequalities carry a flag marking catalog facets.
struct Polytope {
  std::vector<LinearConstraint> equalities;
  std::vector<LinearConstraint> inequalities;
  std::vector<int> gpc_positions;  // indices into `inequalities`, catalog order
  int dim = 0;

  const LinearConstraint& gpc(int index1) const;  // 1-based catalog index
  int gpc_count() const { return static_cast<int>(gpc_positions.size()); }
};

/// Pauli constraints plus the catalog constraints of the setting. Equality
/// rows of trivial settings join `equalities`; inequality rows are flagged
/// as facets.
Polytope sector_polytope(const Setting& setting, const CatalogEntry& entry);

/// Decreasingly ordered plain Pauli polytope (box + ordering + normalization).
Polytope plain_pauli_polytope(int dim, int max_occupation, int n_particles);

/// l1 distance from v to the affine hyperplane kappa0 + kappa . x = 0,
/// ignoring every other constraint: |residual| / max_j |kappa_j|.
Rat hyperplane_distance_l1(const LinearConstraint& c, std::span<const Rat> v);

enum class FaceDistanceStatus { Ok, EmptyFace };

struct FaceDistance {
  FaceDistanceStatus status = FaceDistanceStatus::Ok;
  Rat value;
  RatVec witness;
};

/// min ||x - v||_1 over { x : all eqs hold, all ineqs >= 0 }; exact LP.
FaceDistance l1_distance_to_region(std::span<const Rat> v,
                                   const std::vector<LinearConstraint>& equalities,
                                   const std::vector<LinearConstraint>& inequalities);

/// Distance to the facet { x in p : facet(x) = 0 }. The facet must be one of
/// p's inequalities (checked by coefficients).
FaceDistance facet_distance_l1(const Polytope& p, const LinearConstraint& facet,
                               std::span<const Rat> v);

struct BoundaryDistance {
  Rat value;
  int gpc_index = 0;  // 1-based, smallest achieving index
};

/// Minimum facet distance over the polytope's flagged facets; skips empty
/// faces; throws when no facet yields a distance.
BoundaryDistance boundary_distance(const Polytope& p, std::span<const Rat> v);

bool contains(const Polytope& p, std::span<const Rat> v);

}  // namespace spingpc
