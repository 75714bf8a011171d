#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spingpc/setting.hpp"

namespace spingpc {

/// Slater determinant over at most 16 spatial orbitals, one bit per spin
/// orbital; spin orbital p = 2*orbital + spin with spin 0 = up, 1 = down.
/// |det> applies creation operators in increasing p order to the vacuum.
using Det = std::uint32_t;

inline int so_index(int orbital, int spin) { return 2 * orbital + spin; }
inline int so_orbital(int p) { return p / 2; }
inline int so_spin(int p) { return p % 2; }

std::string det_label(Det det, int n_orbitals);

/// The fixed-(N, M) determinant basis of a sector's ambient space.
struct FockSpace {
  Setting setting;  // two_m fixes the magnetization of every determinant
  std::vector<Det> dets;
  std::map<Det, int> index;

  int dim() const { return static_cast<int>(dets.size()); }
  static std::shared_ptr<const FockSpace> build(const Setting& setting);
};

/// Amplitude (sign, target) of f+_p f_q applied to a determinant; sign 0
/// when the move annihilates it.
struct Hop {
  int sign = 0;
  Det det = 0;
};
Hop apply_single(Det det, int p_create, int q_annihilate);

using Cx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Normalized state expanded over the determinants of one FockSpace.
struct SectorState {
  std::shared_ptr<const FockSpace> space;
  Vec amp;

  const Setting& setting() const { return space->setting; }
  int basis_dim() const { return space->dim(); }
  double norm() const { return amp.norm(); }
  SectorState normalized() const;

  /// amplitude map keyed by determinant, for serialization and inspection
  std::map<Det, Cx> amplitudes(double cutoff = 0.0) const;
};

/// y += c * (sum_sigma f+_{a sigma} f_{b sigma}) x  (orbital indices a, b)
void add_orbital_move(Vec& y, const Vec& x, const FockSpace& space, int a, int b, Cx c);

/// One-body operator sum_{ab sigma} A(a,b) f+_{a sigma} f_{b sigma} |x>.
Vec apply_one_body(const Mat& a, const SectorState& x);

/// S- and S+ ladder operators; the result lives in the M-+1 / M+1 space.
SectorState apply_s_minus(const SectorState& x);
SectorState apply_s_plus(const SectorState& x);

/// S^2 in the determinant basis of the space (real symmetric).
Eigen::MatrixXd s_squared_matrix(const FockSpace& space);

double s_squared_expectation(const SectorState& x);

/// Orthonormal basis of the S eigenspace with eigenvalue S(S+1) inside the
/// fixed-M determinant space: dense S^2 eigendecomposition, eigenvalue
/// tolerance 1e-8. Empty sector throws.
std::vector<SectorState> build_sector_basis(const Setting& setting, double eig_tol = 1e-8);

/// Deterministic pseudo-random normalized state in the sector (for tests and
/// the flow driver): complex gaussian coefficients over the sector basis.
SectorState random_sector_state(const std::vector<SectorState>& basis, std::uint64_t seed);

/// Orbital one-particle reduced density matrix: entry (i, j) is the
/// expectation of sum_sigma f+_{j sigma} f_{i sigma}; diagonal = occupations.
Mat orbital_1rdm(const SectorState& psi);

/// Spin-orbital one-particle reduced density matrix (2d x 2d), ordered
/// (1 up, 1 down, 2 up, ...). Block-diagonal in spin for fixed-M states.
Mat spin_orbital_1rdm(const SectorState& psi);

struct NaturalOccupations {
  Eigen::VectorXd values;  // descending
  Mat orbitals;            // column k is the k-th natural orbital
  double min_gap = 0.0;    // smallest spacing between consecutive values
};

/// Eigen-decomposition sorted descending with a stable ordering for
/// degenerate values; throws when the matrix is not Hermitian within tol.
NaturalOccupations natural_occupations(const Mat& gamma, double herm_tol = 1e-12);

/// |Lambda_{S,M}>: the highest weight determinant lowered (S - M) times.
SectorState highest_weight_state(const Setting& setting);

struct LabeledState {
  std::vector<int> weight;  // orbital occupations
  SectorState state;
};

/// Orthonormal monomial basis of the sector: orbital lowering operators
/// applied to |Lambda_{S,M}>, Gram-Schmidt in enumeration order within each
/// repeated weight. Labels match the sector's weight lattice. d <= 5.
std::vector<LabeledState> verma_basis_states(const Setting& setting);

}  // namespace spingpc
