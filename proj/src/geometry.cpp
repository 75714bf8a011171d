#include "spingpc/geometry.hpp"

#include <stdexcept>

namespace spingpc {

const LinearConstraint& Polytope::gpc(int index1) const {
  if (index1 < 1 || index1 > gpc_count()) {
    throw std::out_of_range("polytope has no GPC facet with index " + std::to_string(index1));
  }
  return inequalities[gpc_positions[index1 - 1]];
}

Polytope sector_polytope(const Setting& setting, const CatalogEntry& entry) {
  Polytope p;
  p.dim = setting.n_orbitals;
  for (auto& c : pauli_constraints(setting)) {
    (c.relation == Relation::EqZero ? p.equalities : p.inequalities).push_back(std::move(c));
  }
  for (const auto& gpc : entry.gpcs) {
    if (gpc.dim() != p.dim) {
      throw std::invalid_argument("catalog entry dimension does not match setting");
    }
    if (gpc.relation == Relation::EqZero) {
      p.equalities.push_back(gpc);
    } else {
      p.gpc_positions.push_back(static_cast<int>(p.inequalities.size()));
      p.inequalities.push_back(gpc);
    }
  }
  return p;
}

Polytope plain_pauli_polytope(int dim, int max_occupation, int n_particles) {
  Polytope p;
  p.dim = dim;
  for (auto& c : ordered_pauli_constraints(dim, max_occupation, n_particles)) {
    (c.relation == Relation::EqZero ? p.equalities : p.inequalities).push_back(std::move(c));
  }
  return p;
}

Rat hyperplane_distance_l1(const LinearConstraint& c, std::span<const Rat> v) {
  Rat max_abs = 0;
  for (const auto& k : c.kappa) {
    Rat a = rat_abs(k);
    if (a > max_abs) max_abs = a;
  }
  if (max_abs == 0) throw std::invalid_argument("hyperplane_distance_l1: zero normal vector");
  return rat_abs(residual(c, v)) / max_abs;
}

FaceDistance l1_distance_to_region(std::span<const Rat> v,
                                   const std::vector<LinearConstraint>& equalities,
                                   const std::vector<LinearConstraint>& inequalities) {
  const int d = static_cast<int>(v.size());
  // Variables (x_1..x_d, t_1..t_d); minimize sum t with t >= |x - v|.
  RatVec objective(2 * d, Rat(0));
  for (int j = 0; j < d; ++j) objective[d + j] = 1;

  std::vector<LinearConstraint> rows;
  rows.reserve(2 * d + equalities.size() + inequalities.size());
  for (int j = 0; j < d; ++j) {
    LinearConstraint up;  // t_j - x_j + v_j >= 0
    up.kappa.assign(2 * d, Rat(0));
    up.kappa0 = v[j];
    up.kappa[j] = -1;
    up.kappa[d + j] = 1;
    rows.push_back(std::move(up));
    LinearConstraint down;  // t_j + x_j - v_j >= 0
    down.kappa.assign(2 * d, Rat(0));
    down.kappa0 = -v[j];
    down.kappa[j] = 1;
    down.kappa[d + j] = 1;
    rows.push_back(std::move(down));
  }
  auto lift = [&](const LinearConstraint& c) {
    if (c.dim() != d) throw std::invalid_argument("l1_distance_to_region: dimension mismatch");
    LinearConstraint out;
    out.kappa0 = c.kappa0;
    out.kappa.assign(2 * d, Rat(0));
    for (int j = 0; j < d; ++j) out.kappa[j] = c.kappa[j];
    out.relation = c.relation;
    return out;
  };
  for (const auto& c : equalities) rows.push_back(lift(c));
  for (const auto& c : inequalities) rows.push_back(lift(c));

  auto lp = solve_lp(objective, rows, /*nonnegative=*/false);
  FaceDistance out;
  if (lp.status == LpStatus::Infeasible) {
    out.status = FaceDistanceStatus::EmptyFace;
    return out;
  }
  if (lp.status != LpStatus::Optimal) {
    throw std::logic_error("l1 distance LP cannot be unbounded");
  }
  out.value = lp.optimum;
  out.witness.assign(lp.witness.begin(), lp.witness.begin() + d);
  return out;
}

FaceDistance facet_distance_l1(const Polytope& p, const LinearConstraint& facet,
                               std::span<const Rat> v) {
  bool found = false;
  for (const auto& c : p.inequalities) {
    if (same_functional(c, facet)) {
      found = true;
      break;
    }
  }
  if (!found) throw std::invalid_argument("facet_distance_l1: facet is not one of the polytope's inequalities");

  std::vector<LinearConstraint> eqs = p.equalities;
  LinearConstraint face_eq = facet;
  face_eq.relation = Relation::EqZero;
  eqs.push_back(std::move(face_eq));
  return l1_distance_to_region(v, eqs, p.inequalities);
}

BoundaryDistance boundary_distance(const Polytope& p, std::span<const Rat> v) {
  if (p.gpc_positions.empty()) {
    throw std::invalid_argument("boundary_distance: polytope has no flagged facets");
  }
  std::optional<BoundaryDistance> best;
  for (int i = 1; i <= p.gpc_count(); ++i) {
    auto fd = facet_distance_l1(p, p.gpc(i), v);
    if (fd.status == FaceDistanceStatus::EmptyFace) continue;
    if (!best || fd.value < best->value) best = BoundaryDistance{fd.value, i};
  }
  if (!best) throw std::runtime_error("boundary_distance: every flagged facet is empty");
  return *best;
}

bool contains(const Polytope& p, std::span<const Rat> v) {
  for (const auto& c : p.equalities) {
    if (residual(c, v) != 0) return false;
  }
  for (const auto& c : p.inequalities) {
    if (residual(c, v) < 0) return false;
  }
  return true;
}

}  // namespace spingpc
