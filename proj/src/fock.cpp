#include "spingpc/fock.hpp"

#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

namespace spingpc {

namespace {

int bits_below(Det det, int p) { return std::popcount(det & ((Det(1) << p) - 1)); }

void combinations(int n, int k, const std::function<void(Det)>& emit) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == k) {
      Det mask = 0;
      for (int i : idx) mask |= Det(1) << i;
      emit(mask);
      return;
    }
    for (int i = start; i <= n - (k - depth); ++i) {
      idx[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  if (k == 0) {
    emit(0);
  } else {
    rec(0, 0);
  }
}

}  // namespace

std::string det_label(Det det, int n_orbitals) {
  std::string out;
  for (int p = 0; p < 2 * n_orbitals; ++p) {
    if (!(det & (Det(1) << p))) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(so_orbital(p) + 1);
    out += so_spin(p) == 0 ? 'u' : 'd';
  }
  return out;
}

std::shared_ptr<const FockSpace> FockSpace::build(const Setting& setting) {
  // The determinant space only cares about N, d and M; two_s is bookkeeping.
  if (setting.n_orbitals <= 0 || setting.n_orbitals > 16) {
    throw std::invalid_argument("FockSpace: 1 <= d <= 16 required");
  }
  if (setting.n_particles <= 0 || setting.n_particles > 2 * setting.n_orbitals) {
    throw std::invalid_argument("FockSpace: 1 <= N <= 2d required");
  }
  if ((setting.n_particles + setting.two_m) % 2 != 0) {
    throw std::invalid_argument("FockSpace: N and 2M must have equal parity");
  }
  auto space = std::make_shared<FockSpace>();
  space->setting = setting;
  const int n_up = (setting.n_particles + setting.two_m) / 2;
  const int n_down = (setting.n_particles - setting.two_m) / 2;
  if (n_up < 0 || n_down < 0 || n_up > setting.n_orbitals || n_down > setting.n_orbitals) {
    return space;  // no determinants carry this magnetization
  }
  std::vector<Det> ups, downs;
  combinations(setting.n_orbitals, n_up, [&](Det m) { ups.push_back(m); });
  combinations(setting.n_orbitals, n_down, [&](Det m) { downs.push_back(m); });
  for (Det u : ups) {
    for (Det dn : downs) {
      Det det = 0;
      for (int j = 0; j < setting.n_orbitals; ++j) {
        if (u & (Det(1) << j)) det |= Det(1) << so_index(j, 0);
        if (dn & (Det(1) << j)) det |= Det(1) << so_index(j, 1);
      }
      space->dets.push_back(det);
    }
  }
  std::sort(space->dets.begin(), space->dets.end());
  for (int i = 0; i < space->dim(); ++i) space->index[space->dets[i]] = i;
  return space;
}

Hop apply_single(Det det, int p_create, int q_annihilate) {
  if (!(det & (Det(1) << q_annihilate))) return {};
  int sign = bits_below(det, q_annihilate) % 2 ? -1 : 1;
  Det mid = det & ~(Det(1) << q_annihilate);
  if (mid & (Det(1) << p_create)) return {};
  if (bits_below(mid, p_create) % 2) sign = -sign;
  return {sign, mid | (Det(1) << p_create)};
}

SectorState SectorState::normalized() const {
  SectorState out = *this;
  const double n = out.amp.norm();
  if (n == 0) throw std::runtime_error("cannot normalize the zero state");
  out.amp /= n;
  return out;
}

std::map<Det, Cx> SectorState::amplitudes(double cutoff) const {
  std::map<Det, Cx> out;
  for (int i = 0; i < basis_dim(); ++i) {
    if (std::abs(amp[i]) > cutoff) out[space->dets[i]] = amp[i];
  }
  return out;
}

void add_orbital_move(Vec& y, const Vec& x, const FockSpace& space, int a, int b, Cx c) {
  for (int i = 0; i < space.dim(); ++i) {
    if (x[i] == Cx(0)) continue;
    const Det det = space.dets[i];
    for (int spin = 0; spin < 2; ++spin) {
      auto hop = apply_single(det, so_index(a, spin), so_index(b, spin));
      if (hop.sign == 0) continue;
      auto it = space.index.find(hop.det);
      if (it == space.index.end()) continue;
      y[it->second] += c * double(hop.sign) * x[i];
    }
  }
}

Vec apply_one_body(const Mat& a, const SectorState& x) {
  const auto& space = *x.space;
  const int d = space.setting.n_orbitals;
  if (a.rows() != d || a.cols() != d) {
    throw std::invalid_argument("apply_one_body: operator dimension mismatch");
  }
  Vec y = Vec::Zero(space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    if (x.amp[i] == Cx(0)) continue;
    const Det det = space.dets[i];
    for (int p = 0; p < 2 * d; ++p) {
      if (!(det & (Det(1) << p))) continue;
      const int b = so_orbital(p);
      const int spin = so_spin(p);
      for (int aa = 0; aa < d; ++aa) {
        if (a(aa, b) == Cx(0)) continue;
        auto hop = apply_single(det, so_index(aa, spin), p);
        if (hop.sign == 0) continue;
        y[space.index.at(hop.det)] += a(aa, b) * double(hop.sign) * x.amp[i];
      }
    }
  }
  return y;
}

namespace {

SectorState apply_ladder(const SectorState& x, int delta_two_m) {
  const auto& s = x.setting();
  Setting target = s;
  target.two_m += delta_two_m;
  auto tspace = FockSpace::build(target);
  SectorState out{tspace, Vec::Zero(tspace->dim())};
  if (tspace->dim() == 0) return out;
  const int spin_from = delta_two_m < 0 ? 0 : 1;  // S-: up -> down
  const int spin_to = 1 - spin_from;
  for (int i = 0; i < x.basis_dim(); ++i) {
    if (x.amp[i] == Cx(0)) continue;
    const Det det = x.space->dets[i];
    for (int j = 0; j < s.n_orbitals; ++j) {
      auto hop = apply_single(det, so_index(j, spin_to), so_index(j, spin_from));
      if (hop.sign == 0) continue;
      out.amp[tspace->index.at(hop.det)] += double(hop.sign) * x.amp[i];
    }
  }
  return out;
}

}  // namespace

SectorState apply_s_minus(const SectorState& x) { return apply_ladder(x, -2); }
SectorState apply_s_plus(const SectorState& x) { return apply_ladder(x, +2); }

Eigen::MatrixXd s_squared_matrix(const FockSpace& space) {
  const int dim = space.dim();
  const int d = space.setting.n_orbitals;
  const double m = space.setting.two_m / 2.0;
  Eigen::MatrixXd s2 = Eigen::MatrixXd::Zero(dim, dim);
  for (int col = 0; col < dim; ++col) {
    const Det det = space.dets[col];
    // S- S+ |det> + M(M+1) |det>
    s2(col, col) += m * (m + 1.0);
    for (int j = 0; j < d; ++j) {
      auto up = apply_single(det, so_index(j, 0), so_index(j, 1));  // S+ piece f+_ju f_jd
      if (up.sign == 0) continue;
      for (int k = 0; k < d; ++k) {
        auto down = apply_single(up.det, so_index(k, 1), so_index(k, 0));
        if (down.sign == 0) continue;
        s2(space.index.at(down.det), col) += double(up.sign * down.sign);
      }
    }
  }
  return s2;
}

double s_squared_expectation(const SectorState& x) {
  auto raised = apply_s_plus(x);
  const double m = x.setting().two_m / 2.0;
  double val = m * (m + 1.0) * x.amp.squaredNorm();
  val += raised.amp.squaredNorm();  // <x|S-S+|x> = ||S+ x||^2
  return val;
}

std::vector<SectorState> build_sector_basis(const Setting& setting, double eig_tol) {
  auto space = FockSpace::build(setting);
  if (space->dim() == 0) throw std::runtime_error("empty sector " + setting.str());
  Eigen::MatrixXd s2 = s_squared_matrix(*space);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(s2);
  const double target = setting.two_s * (setting.two_s + 2) / 4.0;
  std::vector<SectorState> basis;
  for (int k = 0; k < space->dim(); ++k) {
    if (std::abs(solver.eigenvalues()[k] - target) > eig_tol) continue;
    SectorState st{space, solver.eigenvectors().col(k).cast<Cx>()};
    basis.push_back(std::move(st));
  }
  if (basis.empty()) {
    throw std::runtime_error("sector " + setting.str() + " has no states with the requested spin");
  }
  return basis;
}

SectorState random_sector_state(const std::vector<SectorState>& basis, std::uint64_t seed) {
  if (basis.empty()) throw std::invalid_argument("random_sector_state: empty basis");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  SectorState out{basis[0].space, Vec::Zero(basis[0].basis_dim())};
  for (const auto& b : basis) {
    const Cx c(gauss(rng), gauss(rng));
    out.amp += c * b.amp;
  }
  return out.normalized();
}

Mat orbital_1rdm(const SectorState& psi) {
  const auto& space = *psi.space;
  const int d = space.setting.n_orbitals;
  Mat gamma = Mat::Zero(d, d);
  for (int col = 0; col < space.dim(); ++col) {
    if (psi.amp[col] == Cx(0)) continue;
    const Det det = space.dets[col];
    for (int p = 0; p < 2 * d; ++p) {
      if (!(det & (Det(1) << p))) continue;
      const int i = so_orbital(p);
      const int spin = so_spin(p);
      for (int j = 0; j < d; ++j) {
        auto hop = apply_single(det, so_index(j, spin), p);  // f+_{j sigma} f_{i sigma}
        if (hop.sign == 0) continue;
        auto it = space.index.find(hop.det);
        if (it == space.index.end()) continue;
        // (gamma_l)_{ij} = <psi| f+_{j s} f_{i s} |psi>
        gamma(i, j) += std::conj(psi.amp[it->second]) * double(hop.sign) * psi.amp[col];
      }
    }
  }
  return gamma;
}

Mat spin_orbital_1rdm(const SectorState& psi) {
  const auto& space = *psi.space;
  const int d2 = 2 * space.setting.n_orbitals;
  Mat gamma = Mat::Zero(d2, d2);
  for (int col = 0; col < space.dim(); ++col) {
    if (psi.amp[col] == Cx(0)) continue;
    const Det det = space.dets[col];
    for (int p = 0; p < d2; ++p) {
      if (!(det & (Det(1) << p))) continue;
      for (int q = 0; q < d2; ++q) {
        auto hop = apply_single(det, q, p);  // f+_q f_p
        if (hop.sign == 0) continue;
        auto it = space.index.find(hop.det);
        if (it == space.index.end()) continue;
        gamma(p, q) += std::conj(psi.amp[it->second]) * double(hop.sign) * psi.amp[col];
      }
    }
  }
  return gamma;
}

SectorState highest_weight_state(const Setting& setting) {
  if (auto reason = setting.invalid_reason()) {
    throw std::invalid_argument("highest_weight_state: invalid setting " + setting.str() + ": " +
                                *reason);
  }
  Setting top = setting;
  top.two_m = setting.two_s;
  auto space = FockSpace::build(top);
  Det det = 0;
  for (int j = 0; j < setting.k_paired(); ++j) {
    det |= Det(1) << so_index(j, 0);
    det |= Det(1) << so_index(j, 1);
  }
  for (int j = setting.k_paired(); j < setting.j_open(); ++j) det |= Det(1) << so_index(j, 0);
  SectorState psi{space, Vec::Zero(space->dim())};
  psi.amp[space->index.at(det)] = 1.0;
  const int lowerings = (setting.two_s - setting.two_m) / 2;
  for (int i = 0; i < lowerings; ++i) psi = apply_s_minus(psi).normalized();
  return psi;
}

std::vector<LabeledState> verma_basis_states(const Setting& setting) {
  if (setting.n_orbitals > 5) {
    throw std::invalid_argument("verma_basis_states: d <= 5 required");
  }
  const int d = setting.n_orbitals;
  auto moment = [&](const std::vector<int>& w) {
    long m = 0;
    for (int j = 0; j < d; ++j) m += static_cast<long>(j) * w[j];
    return m;
  };

  std::vector<int> hw(d, 0);
  for (int j = 0; j < setting.k_paired(); ++j) hw[j] = 2;
  for (int j = setting.k_paired(); j < setting.j_open(); ++j) hw[j] = 1;

  std::map<std::vector<int>, std::vector<SectorState>> by_weight;
  by_weight[hw].push_back(highest_weight_state(setting));

  // enumerate reachable weights level by level; level = total lowering depth
  std::map<long, std::vector<std::vector<int>>> levels;
  {
    std::vector<int> occ(d, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
      if (pos == d) {
        if (remaining == 0) levels[moment(occ)].push_back(occ);
        return;
      }
      for (int k = 0; k <= 2 && k <= remaining; ++k) {
        if (remaining - k > 2 * (d - pos - 1)) continue;
        occ[pos] = k;
        rec(pos + 1, remaining - k);
      }
      occ[pos] = 0;
    };
    rec(0, setting.n_particles);
  }

  const long base = moment(hw);
  for (auto& [level, weights] : levels) {
    if (level <= base) continue;
    for (const auto& w : weights) {
      std::vector<SectorState>& states = by_weight[w];  // starts empty
      for (int j = 0; j + 1 < d; ++j) {
        if (w[j] >= 2 || w[j + 1] <= 0) continue;
        std::vector<int> pred = w;
        pred[j] += 1;
        pred[j + 1] -= 1;
        auto it = by_weight.find(pred);
        if (it == by_weight.end()) continue;
        for (const auto& src : it->second) {
          Vec cand = Vec::Zero(src.basis_dim());
          add_orbital_move(cand, src.amp, *src.space, j + 1, j, Cx(1));
          for (const auto& prev : states) cand -= prev.amp.dot(cand) * prev.amp;
          if (cand.norm() > 1e-9) {
            states.push_back(SectorState{src.space, cand.normalized()});
          }
        }
      }
      if (states.empty()) by_weight.erase(w);
    }
  }

  std::vector<LabeledState> out;
  for (auto& [w, states] : by_weight) {
    for (auto& s : states) out.push_back({w, std::move(s)});
  }
  return out;
}

NaturalOccupations natural_occupations(const Mat& gamma, double herm_tol) {
  if (gamma.rows() != gamma.cols()) throw std::invalid_argument("natural_occupations: not square");
  if ((gamma - gamma.adjoint()).cwiseAbs().maxCoeff() > herm_tol) {
    throw std::invalid_argument("natural_occupations: matrix not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(gamma);
  const int d = static_cast<int>(gamma.rows());
  NaturalOccupations out;
  out.values.resize(d);
  out.orbitals.resize(d, d);
  for (int k = 0; k < d; ++k) {
    out.values[k] = solver.eigenvalues()[d - 1 - k];
    out.orbitals.col(k) = solver.eigenvectors().col(d - 1 - k);
  }
  out.min_gap = d > 1 ? out.values[0] - out.values[1] : 2.0;
  for (int k = 0; k + 1 < d; ++k) out.min_gap = std::min(out.min_gap, out.values[k] - out.values[k + 1]);
  return out;
}

}  // namespace spingpc
