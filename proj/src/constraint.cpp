#include "spingpc/constraint.hpp"

#include <stdexcept>

namespace spingpc {

bool LinearConstraint::is_zero() const {
  if (kappa0 != 0) return false;
  for (const auto& k : kappa) {
    if (k != 0) return false;
  }
  return true;
}

std::string LinearConstraint::str() const {
  std::string out = rat_to_string(kappa0);
  for (std::size_t j = 0; j < kappa.size(); ++j) {
    if (kappa[j] == 0) continue;
    const Rat a = rat_abs(kappa[j]);
    out += kappa[j] < 0 ? " - " : " + ";
    if (a != 1) out += rat_to_string(a) + " ";
    out += "l" + std::to_string(j + 1);
  }
  out += relation == Relation::EqZero ? " = 0" : " >= 0";
  return out;
}

Rat residual(const LinearConstraint& c, std::span<const Rat> v) {
  if (v.size() != c.kappa.size()) {
    throw std::invalid_argument("residual: constraint dimension " + std::to_string(c.kappa.size()) +
                                " does not match vector dimension " + std::to_string(v.size()));
  }
  Rat acc = c.kappa0;
  for (std::size_t j = 0; j < c.kappa.size(); ++j) acc += c.kappa[j] * v[j];
  return acc;
}

LinearConstraint normalize_inequality(const RatVec& coeffs, const Rat& bound, Sense sense,
                                      std::string label) {
  LinearConstraint c;
  c.label = std::move(label);
  c.kappa.resize(coeffs.size());
  switch (sense) {
    case Sense::Leq:
      c.kappa0 = bound;
      for (std::size_t j = 0; j < coeffs.size(); ++j) c.kappa[j] = -coeffs[j];
      c.relation = Relation::GeqZero;
      break;
    case Sense::Geq:
      c.kappa0 = -bound;
      c.kappa = coeffs;
      c.relation = Relation::GeqZero;
      break;
    case Sense::Eq:
      c.kappa0 = -bound;
      c.kappa = coeffs;
      c.relation = Relation::EqZero;
      break;
  }
  return c;
}

bool same_functional(const LinearConstraint& a, const LinearConstraint& b) {
  return a.kappa0 == b.kappa0 && a.kappa == b.kappa && a.relation == b.relation;
}

}  // namespace spingpc
