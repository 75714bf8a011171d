#pragma once

#include <vector>

#include "spingpc/constraint.hpp"
#include "spingpc/fock.hpp"

namespace spingpc {

/// The one-particle operator attached to a constraint and a state: built from
/// the state's natural orbitals, so it is frame-dependent by construction.
struct ConstraintOperator {
  double kappa0 = 0;
  Mat coupling;          // A = U diag(kappa) U+ over spatial orbitals
  double residual = 0;   // kappa0 + kappa . lambda of the state it was built from
  double min_gap = 0;    // smallest natural occupation spacing seen
};

ConstraintOperator build_constraint_operator(const LinearConstraint& gpc, const SectorState& psi);

/// Operator application D |psi> using psi's own natural orbitals.
Vec apply_constraint_operator(const ConstraintOperator& op, const SectorState& psi);

/// D |psi> for a state already expressed in its natural-orbital basis:
/// every determinant is an eigenstate, so the action is diagonal. Throws
/// when the orbital 1RDM is not diagonal within basis_tol.
SectorState dhat_apply(const LinearConstraint& gpc, const SectorState& psi,
                       double basis_tol = 1e-8);

/// Var(D) in the state psi (natural-orbital construction of D).
double variance(const LinearConstraint& gpc, const SectorState& psi);

struct FlowOptions {
  double dt = 1e-3;
  double t_max = 1e3;
  double stop_residual = 1e-12;
  double degeneracy_tol = 1e-10;
  int sample_stride = 1;  // record every n-th step
};

struct FlowSample {
  double t = 0;
  double residual = 0;
  double variance = 0;
  double delta_norm = 0;  // || psi(t) - psi(0) ||_2
};

struct FlowResult {
  SectorState state;
  std::vector<FlowSample> trajectory;
  bool degeneracy_warning = false;
  double initial_residual = 0;
};

/// One classic 4th-order step of the norm-preserving descent flow
///   d/dt psi = -(1 - |psi><psi|) D psi,
/// rebuilding D from the current natural orbitals at every stage.
SectorState flow_step(const LinearConstraint& gpc, const SectorState& psi, double dt,
                      bool* degeneracy_warning = nullptr, double degeneracy_tol = 1e-10);

/// Integrates until the residual falls below stop_residual or t_max is hit.
FlowResult run_flow(const LinearConstraint& gpc, const SectorState& psi0,
                    const FlowOptions& options = {});

}  // namespace spingpc
