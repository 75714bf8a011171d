#pragma once

#include <vector>

#include "spingpc/catalog.hpp"
#include "spingpc/constraint.hpp"
#include "spingpc/setting.hpp"

namespace spingpc {

/// Integer orbital occupation vector of a spin-adapted configuration state,
/// together with the number of independent configurations carrying it.
struct Weight {
  std::vector<int> occupations;  // entries in {0,1,2}, length d
  long multiplicity = 0;

  bool operator==(const Weight&) const = default;
};

/// (2,...,2,1,...,1,0,...,0) with K twos and 2S ones.
Weight highest_weight(const Setting& setting);

/// All occupation vectors of the sector with their multiplicities, i.e. every
/// integer vector in {0,1,2}^d summing to N whose descending sort is
/// dominated by the highest weight. Enumeration is limited to d <= 12.
std::vector<Weight> weight_lattice(const Setting& setting);

/// Number of semistandard Young tableaux of shape hw (as a partition) and
/// content w; zero when w is not dominated. Both vectors share the same sum.
long kostka_multiplicity(const std::vector<int>& hw, const std::vector<int>& w);

/// Dimension of the sector's configuration space: sum of multiplicities
/// over the weight lattice.
long sector_dimension(const Setting& setting);

struct SelectionResult {
  LinearConstraint gpc;
  std::vector<Weight> selected;  // residual exactly 0 at the raw (unsorted) weight
  std::vector<Weight> excluded;
  long pinned_dimension = 0;     // sum of selected multiplicities
};

/// Splits the weight lattice by whether the constraint annihilates the
/// weight's configuration states.
SelectionResult selected_weights(const LinearConstraint& gpc, const Setting& setting);

/// Weights whose descending sort keeps a strictly positive residual for every
/// catalog constraint and every non-ordering Pauli inequality of the setting;
/// any contribution from these precludes pinning of every constraint.
std::vector<Weight> interior_weights(const Setting& setting, const CatalogEntry& entry);

}  // namespace spingpc
