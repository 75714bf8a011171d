#pragma once

#include <span>
#include <string>
#include <vector>

#include "spingpc/rational.hpp"

namespace spingpc {

enum class Relation { GeqZero, EqZero };

enum class Sense { Leq, Geq, Eq };

/// Affine functional kappa0 + sum_j kappa_j * lambda_j together with a
/// relation (>= 0 or == 0). Constraint tables, Pauli constraints and
/// polytope facets all share this shape.
struct LinearConstraint {
  Rat kappa0;
  RatVec kappa;
  Relation relation = Relation::GeqZero;
  std::string label;

  int dim() const { return static_cast<int>(kappa.size()); }
  bool is_zero() const;

  /// Human-readable "k0 + k1 l1 + ... {>=,=} 0" form.
  std::string str() const;

  bool operator==(const LinearConstraint& other) const {
    return kappa0 == other.kappa0 && kappa == other.kappa && relation == other.relation;
  }
};

/// Exact residual kappa0 + kappa . v; throws on dimension mismatch.
Rat residual(const LinearConstraint& c, std::span<const Rat> v);

/// Converts a table row "a . lambda <sense> b" to the internal >=0 / ==0 form.
LinearConstraint normalize_inequality(const RatVec& coeffs, const Rat& bound, Sense sense,
                                      std::string label = {});

bool same_functional(const LinearConstraint& a, const LinearConstraint& b);

}  // namespace spingpc
