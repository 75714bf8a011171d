#pragma once

#include <string>
#include <vector>

#include "spingpc/rational.hpp"
#include "spingpc/setting.hpp"

namespace spingpc {

enum class OccupationSpace { Orbital, SpinOrbital };

/// A vector of (natural orbital) occupation numbers with exact entries.
struct OccupationVector {
  RatVec values;
  OccupationSpace space = OccupationSpace::Orbital;
  bool sorted_desc = false;

  int dim() const { return static_cast<int>(values.size()); }
  Rat total() const { return sum(values); }

  /// Copy with entries sorted decreasingly.
  OccupationVector sorted() const;

  std::string str() const;
};

struct ValidationIssue {
  enum class Kind { Ordering, Box, Normalization, PauliViolation };
  Kind kind;
  int index = 0;  // position (ordering/box) or Pauli constraint index, 1-based
  Rat amount;     // violation magnitude
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Checks descending order, box bounds for the declared space, normalization
/// |sum - N| <= tol, and the spin-adapted Pauli constraints (with slack tol).
/// The vector is never mutated; violations are returned as data.
ValidationReport validate(const Setting& setting, const OccupationVector& v, const Rat& tol);

}  // namespace spingpc
