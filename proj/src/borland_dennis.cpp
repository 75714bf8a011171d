#include "spingpc/borland_dennis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace spingpc {

namespace {

Det det_of(std::initializer_list<std::pair<int, int>> orbitals) {
  Det det = 0;
  for (auto [orb, spin] : orbitals) det |= Det(1) << so_index(orb, spin);
  return det;
}

}  // namespace

SectorState borland_dennis_state(const Rat& epsilon, bool include_generic) {
  const Rat eps2 = epsilon * epsilon;
  if (eps2 >= Rat(2, 3)) throw std::invalid_argument("borland_dennis_state: eps^2 < 2/3 required");
  const Setting setting{3, 3, 1, 1};
  auto space = FockSpace::build(setting);

  const Det i1 = det_of({{0, 0}, {0, 1}, {1, 0}});  // 1u 1d 2u
  const Det i2 = det_of({{0, 0}, {2, 0}, {2, 1}});  // 1u 3u 3d
  const Det i3 = det_of({{1, 0}, {1, 1}, {2, 0}});  // 2u 2d 3u

  SectorState psi{space, Vec::Zero(space->dim())};
  const double e = rat_to_double(epsilon);
  psi.amp[space->index.at(i1)] = std::sqrt(rat_to_double(Rat(2, 3) - eps2));
  psi.amp[space->index.at(i3)] = std::sqrt(1.0 / 3.0);
  psi.amp[space->index.at(i2)] = e;

  if (include_generic && e != 0.0) {
    // deterministic eps^2 admixture of the orthogonal complement of the
    // three named configurations within the sector
    auto basis = build_sector_basis(setting);
    std::vector<Vec> complement;
    for (const auto& b : basis) {
      Vec v = b.amp;
      for (Det dd : {i1, i2, i3}) v[space->index.at(dd)] = Cx(0);
      for (const auto& prev : complement) v -= prev.dot(v) * prev;
      if (v.norm() > 1e-9) complement.push_back(v.normalized());
    }
    const double g = e * e / std::sqrt(double(complement.size()));
    for (const auto& v : complement) psi.amp += g * v;
    psi = psi.normalized();
  }
  return psi;
}

BdExactTable borland_dennis_exact_table(const Rat& epsilon) {
  const Rat eps2 = epsilon * epsilon;
  if (eps2 >= Rat(2, 3)) throw std::invalid_argument("borland_dennis_exact_table: eps^2 < 2/3 required");
  BdExactTable t;
  t.epsilon = epsilon;

  // weights of the three configurations and their (exact) populations
  const Rat a1 = Rat(2, 3) - eps2;  // |1u 1d 2u|^2
  const Rat a2 = eps2;              // |1u 3u 3d|^2
  const Rat a3 = Rat(1, 3);         // |2u 2d 3u|^2

  // orbital populations: configurations differ by two moves, so the orbital
  // 1RDM is diagonal with entries a1*(2,1,0) + a2*(1,0,2) + a3*(0,2,1)
  RatVec orb = {2 * a1 + a2, a1 + 2 * a3, 2 * a2 + a3};
  std::sort(orb.begin(), orb.end(), std::greater<Rat>());
  t.orbital_spectrum = orb;

  // spin-orbital populations (1u,1d,2u,2d,3u,3d)
  RatVec so = {a1 + a2, a1, a1 + a3, a3, a2 + a3, a2};
  std::sort(so.begin(), so.end(), std::greater<Rat>());
  t.spin_orbital_spectrum = so;

  t.d_spin_independent = so[4] + so[5] - so[3];
  t.x1 = Rat(3) - so[0] - so[1] - so[2];
  t.x2 = Rat(1) - so[0];
  t.d1 = Rat(1) - orb[0] + orb[1];
  t.d2 = Rat(1) - orb[1] + orb[2];
  t.x1_orbital = Rat(2) - orb[0];
  t.x2_orbital = Rat(3) - orb[0] - orb[1];
  return t;
}

double bd_phase_condition_defect(const SectorState& psi) {
  const int d = psi.setting().n_orbitals;
  const Mat gamma = spin_orbital_1rdm(psi);
  Mat up(d, d), down(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      up(i, j) = gamma(so_index(i, 0), so_index(j, 0));
      down(i, j) = gamma(so_index(i, 1), so_index(j, 1));
    }
  }
  const auto no_up = natural_occupations(up);
  const auto no_down = natural_occupations(down);
  if (d != 3) throw std::invalid_argument("bd_phase_condition_defect: three orbitals expected");

  const double a =
      std::sqrt(std::max(0.0, no_down.values[0])) * std::abs(no_up.orbitals.col(2).dot(no_down.orbitals.col(0)));
  const double b =
      std::sqrt(std::max(0.0, no_down.values[1])) * std::abs(no_up.orbitals.col(1).dot(no_down.orbitals.col(1)));
  const double c =
      std::sqrt(std::max(0.0, no_down.values[2])) * std::abs(no_up.orbitals.col(0).dot(no_down.orbitals.col(2)));
  const double top = std::max({a, b, c});
  return std::max(0.0, 2 * top - (a + b + c));
}

}  // namespace spingpc
