#include "spingpc/truncation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace spingpc {

Truncation truncate(const OccupationVector& v, int d_prime, int n_particles) {
  if (d_prime <= 0 || d_prime > v.dim()) {
    throw std::invalid_argument("truncate: d' must lie in 1..d");
  }
  Truncation out;
  out.input_was_sorted = std::is_sorted(v.values.begin(), v.values.end(), std::greater<Rat>());
  OccupationVector sorted = out.input_was_sorted ? v : v.sorted();
  out.truncated.space = v.space;
  out.truncated.sorted_desc = true;
  out.truncated.values.assign(sorted.values.begin(), sorted.values.begin() + d_prime);
  out.epsilon_prime = Rat(n_particles) - sum(out.truncated.values);
  return out;
}

std::optional<Rat> rotated_hyperplane_distance(const LinearConstraint& gpc,
                                               std::span<const Rat> v_prime,
                                               const Rat& eps_prime, const Rat& alpha) {
  if (static_cast<int>(v_prime.size()) != gpc.dim()) {
    throw std::invalid_argument("rotated_hyperplane_distance: dimension mismatch");
  }
  Rat denom = 0;
  for (const auto& k : gpc.kappa) {
    Rat a = rat_abs(k - alpha);
    if (a > denom) denom = a;
  }
  if (denom == 0) return std::nullopt;
  const Rat numer = rat_abs(residual(gpc, v_prime) + alpha * eps_prime);
  return numer / denom;
}

LowerBound lower_bound(const LinearConstraint& gpc, std::span<const Rat> v_prime,
                       const Rat& eps_prime) {
  std::set<Rat> candidates;
  for (const auto& k : gpc.kappa) candidates.insert(k);
  for (const auto& a : gpc.kappa) {
    for (const auto& b : gpc.kappa) candidates.insert((a + b) / 2);
  }
  if (eps_prime != 0) {
    candidates.insert(-residual(gpc, v_prime) / eps_prime);
  }

  LowerBound best{Rat(0), Rat(0), Rat(0)};
  bool have = false;
  for (const auto& alpha : candidates) {
    auto dist = rotated_hyperplane_distance(gpc, v_prime, eps_prime, alpha);
    if (!dist) continue;
    if (!have || *dist > best.max_dist) {
      best.max_dist = *dist;
      best.alpha_star = alpha;
      have = true;
    }
  }
  // the |alpha| -> inf branch approaches eps', i.e. 0 after subtraction
  best.value = best.max_dist - eps_prime;
  if (best.value < 0) best.value = 0;
  return best;
}

TruncationResult truncation_bounds(const OccupationVector& v, const Setting& full_setting,
                                   int d_prime, const ConstraintCatalog& catalog,
                                   const Rat& coefficient_ratio) {
  Setting truncated_setting = full_setting;
  truncated_setting.n_orbitals = d_prime;
  if (auto reason = truncated_setting.invalid_reason()) {
    throw std::invalid_argument("truncation_bounds: invalid truncated setting: " + *reason);
  }
  auto entry = catalog.lookup(truncated_setting);
  if (!entry) {
    throw std::invalid_argument("truncation_bounds: no constraint table for the truncated setting " +
                                truncated_setting.str());
  }

  TruncationResult result;
  auto tr = truncate(v, d_prime, full_setting.n_particles);
  result.truncated = tr.truncated;
  result.epsilon_prime = tr.epsilon_prime;

  const Polytope p = sector_polytope(truncated_setting, *entry);
  const auto bd = boundary_distance(p, result.truncated.values);
  result.f_min_prime = bd.value;
  result.achieving_gpc = bd.gpc_index;
  result.upper = result.f_min_prime + result.epsilon_prime;

  // The boundary distance is a minimum over facets and each rotated-
  // hyperplane chain bounds only its own facet, so the bounds combine by min.
  result.lower = 0;
  result.lower_gpc = 0;
  result.alpha_star = 0;
  int idx = 0;
  for (const auto& gpc : entry->gpcs) {
    ++idx;
    if (gpc.relation != Relation::GeqZero) continue;
    auto lb = lower_bound(gpc, result.truncated.values, result.epsilon_prime);
    Rat value = coefficient_ratio * lb.max_dist - result.epsilon_prime;
    if (value < 0) value = 0;
    if (result.lower_gpc == 0 || value < result.lower) {
      result.lower = value;
      result.alpha_star = lb.alpha_star;
      result.lower_gpc = idx;
    }
  }
  return result;
}

}  // namespace spingpc
