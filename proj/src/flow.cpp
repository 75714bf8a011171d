#include "spingpc/flow.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spingpc {

ConstraintOperator build_constraint_operator(const LinearConstraint& gpc, const SectorState& psi) {
  const int d = psi.setting().n_orbitals;
  if (gpc.dim() != d) throw std::invalid_argument("constraint dimension does not match sector");
  const Mat gamma = orbital_1rdm(psi);
  const auto no = natural_occupations(gamma);
  ConstraintOperator op;
  op.kappa0 = rat_to_double(gpc.kappa0);
  op.min_gap = no.min_gap;
  Eigen::VectorXd kappa(d);
  for (int k = 0; k < d; ++k) kappa[k] = rat_to_double(gpc.kappa[k]);
  op.coupling = no.orbitals * kappa.asDiagonal() * no.orbitals.adjoint();
  op.residual = op.kappa0 + kappa.dot(no.values);
  return op;
}

Vec apply_constraint_operator(const ConstraintOperator& op, const SectorState& psi) {
  Vec y = apply_one_body(op.coupling, psi);
  y += op.kappa0 * psi.amp;
  return y;
}

SectorState dhat_apply(const LinearConstraint& gpc, const SectorState& psi, double basis_tol) {
  const int d = psi.setting().n_orbitals;
  if (gpc.dim() != d) throw std::invalid_argument("dhat_apply: constraint dimension mismatch");
  const Mat gamma = orbital_1rdm(psi);
  Mat off = gamma;
  off.diagonal().setZero();
  if (off.cwiseAbs().maxCoeff() > basis_tol) {
    throw std::invalid_argument(
        "dhat_apply: state is not expressed in its natural-orbital basis (orbital 1RDM has "
        "off-diagonal weight)");
  }
  // natural orbital k = computational orbital with k-th largest occupation,
  // stable under ties so the action is deterministic
  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return gamma(a, a).real() > gamma(b, b).real();
  });
  std::vector<double> site_coeff(d, 0.0);
  for (int k = 0; k < d; ++k) site_coeff[order[k]] = rat_to_double(gpc.kappa[k]);
  const double kappa0 = rat_to_double(gpc.kappa0);

  SectorState out{psi.space, Vec::Zero(psi.basis_dim())};
  for (int i = 0; i < psi.basis_dim(); ++i) {
    if (psi.amp[i] == Cx(0)) continue;
    const Det det = psi.space->dets[i];
    double eig = kappa0;
    for (int j = 0; j < d; ++j) {
      const int occ = ((det >> so_index(j, 0)) & 1) + ((det >> so_index(j, 1)) & 1);
      eig += site_coeff[j] * occ;
    }
    out.amp[i] = eig * psi.amp[i];
  }
  return out;
}

double variance(const LinearConstraint& gpc, const SectorState& psi) {
  const auto op = build_constraint_operator(gpc, psi);
  const Vec phi = apply_constraint_operator(op, psi);
  const double mean = std::real(psi.amp.dot(phi));  // Eigen dot conjugates the left factor
  return std::max(0.0, phi.squaredNorm() - mean * mean);
}

namespace {

Vec flow_rhs(const LinearConstraint& gpc, const SectorState& psi, bool* warn, double gap_tol) {
  const auto op = build_constraint_operator(gpc, psi);
  if (warn && op.min_gap < gap_tol) *warn = true;
  const Vec phi = apply_constraint_operator(op, psi);
  const double mean = std::real(psi.amp.dot(phi));
  return -(phi - mean * psi.amp);
}

}  // namespace

SectorState flow_step(const LinearConstraint& gpc, const SectorState& psi, double dt,
                      bool* degeneracy_warning, double degeneracy_tol) {
  if (dt <= 0) throw std::invalid_argument("flow_step: dt must be positive");
  auto stage = [&](const Vec& amp) {
    SectorState s{psi.space, amp};
    return s.normalized();
  };
  const Vec k1 = flow_rhs(gpc, psi, degeneracy_warning, degeneracy_tol);
  const Vec k2 = flow_rhs(gpc, stage(psi.amp + 0.5 * dt * k1), degeneracy_warning, degeneracy_tol);
  const Vec k3 = flow_rhs(gpc, stage(psi.amp + 0.5 * dt * k2), degeneracy_warning, degeneracy_tol);
  const Vec k4 = flow_rhs(gpc, stage(psi.amp + dt * k3), degeneracy_warning, degeneracy_tol);
  SectorState out{psi.space, psi.amp + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)};
  return out.normalized();
}

FlowResult run_flow(const LinearConstraint& gpc, const SectorState& psi0,
                    const FlowOptions& options) {
  FlowResult result;
  result.state = psi0.normalized();
  const Vec start = result.state.amp;

  auto sample = [&](double t) {
    const auto op = build_constraint_operator(gpc, result.state);
    const Vec phi = apply_constraint_operator(op, result.state);
    const double mean = std::real(result.state.amp.dot(phi));
    FlowSample s;
    s.t = t;
    s.residual = op.residual;
    s.variance = std::max(0.0, phi.squaredNorm() - mean * mean);
    s.delta_norm = (result.state.amp - start).norm();
    return s;
  };

  FlowSample current = sample(0.0);
  result.initial_residual = current.residual;
  result.trajectory.push_back(current);

  int step_count = 0;
  double t = 0.0;
  while (t < options.t_max && current.residual >= options.stop_residual) {
    result.state = flow_step(gpc, result.state, options.dt, &result.degeneracy_warning,
                             options.degeneracy_tol);
    t += options.dt;
    ++step_count;
    current = sample(t);
    if (step_count % options.sample_stride == 0) result.trajectory.push_back(current);
  }
  if (result.trajectory.back().t != current.t) result.trajectory.push_back(current);
  return result;
}

}  // namespace spingpc
