#include <random>

#include "doctest.h"
#include "spingpc/fock.hpp"
#include "spingpc/truncation.hpp"

using namespace spingpc;

namespace {

OccupationVector ov(RatVec vals) {
  return OccupationVector{std::move(vals), OccupationSpace::Orbital, false};
}

LinearConstraint constraint(Rat k0, RatVec k) {
  LinearConstraint c;
  c.kappa0 = std::move(k0);
  c.kappa = std::move(k);
  return c;
}

// exact rational spectrum of a sector state: rationalize at 1e-12 and repair
// the normalization on the leading entry
RatVec exact_spectrum(const SectorState& psi) {
  auto no = natural_occupations(orbital_1rdm(psi), 1e-10);
  RatVec lambda(no.values.size());
  for (int k = 0; k < no.values.size(); ++k) {
    lambda[k] = rationalize(no.values[k], 1000000000000ul);
  }
  lambda[0] += Rat(psi.setting().n_particles) - sum(lambda);
  return lambda;
}

}  // namespace

TEST_CASE("truncate") {
  auto t1 = truncate(ov({Rat(2), Rat(1), Rat(1), Rat(0)}), 3, 4);
  CHECK(t1.truncated.values == RatVec{Rat(2), Rat(1), Rat(1)});
  CHECK(t1.epsilon_prime == 0);
  CHECK(t1.input_was_sorted);

  auto t2 = truncate(ov({Rat(2), Rat(1), Rat(9, 10), Rat(1, 10)}), 3, 4);
  CHECK(t2.epsilon_prime == Rat(1, 10));

  // unsorted input is sorted, not rejected
  auto t3 = truncate(ov({Rat(1), Rat(2), Rat(9, 10), Rat(1, 10)}), 3, 4);
  CHECK_FALSE(t3.input_was_sorted);
  CHECK(t3.truncated.values == RatVec{Rat(2), Rat(1), Rat(9, 10)});

  // three-term-family style full vector with a tiny tail
  const Rat d(1, 50);
  auto t4 = truncate(ov({Rat(4, 3) - d, Rat(4, 3) - d, Rat(1, 3) + 2 * d - Rat(1, 500),
                         Rat(1, 1000), Rat(1, 1000)}),
                     3, 3);
  CHECK(t4.epsilon_prime == Rat(1, 500));

  CHECK_THROWS_AS(truncate(ov({Rat(1)}), 2, 1), std::invalid_argument);
}

TEST_CASE("rotated hyperplane distance") {
  // alpha = 0 reduces to the plain hyperplane distance of the truncated row
  auto gpc = constraint(Rat(3), {Rat(-2), Rat(1), Rat(0), Rat(-1)});
  RatVec v = {Rat(7, 4), Rat(5, 4), Rat(3, 4), Rat(1, 4)};
  auto at0 = rotated_hyperplane_distance(gpc, v, Rat(1, 10), Rat(0));
  REQUIRE(at0.has_value());
  CHECK(*at0 == hyperplane_distance_l1(gpc, v));

  // two-orbital example: kappa = (-1, 1), v' = (2, 1/2), eps' = 1/10, alpha=1
  auto bd = constraint(Rat(1), {Rat(-1), Rat(1)});
  auto dist = rotated_hyperplane_distance(bd, RatVec{Rat(2), Rat(1, 2)}, Rat(1, 10), Rat(1));
  REQUIRE(dist.has_value());
  CHECK(*dist == Rat(1, 5));

  // all-kappa-equal rotation degenerates
  auto flat = constraint(Rat(1), {Rat(2), Rat(2)});
  CHECK_FALSE(rotated_hyperplane_distance(flat, RatVec{Rat(1), Rat(1)}, Rat(0), Rat(2)).has_value());
}

TEST_CASE("lower bound closed form at zero truncation error") {
  auto gpc = constraint(Rat(1), {Rat(-1), Rat(0), Rat(1)});
  RatVec v = {Rat(3, 2), Rat(1), Rat(1, 2)};  // D' = 1 - 3/2 + 1/2 = 0
  auto lb0 = lower_bound(gpc, v, Rat(0));
  CHECK(lb0.value == 0);

  RatVec v2 = {Rat(7, 4), Rat(1), Rat(1, 4)};  // D' = -1/2
  auto lb = lower_bound(gpc, v2, Rat(0));
  // max over alpha of |D'| / max|kappa_j - alpha|: denominator minimized at
  // the midpoint of extreme kappas, value (max-min)/2 = 1
  CHECK(lb.value == Rat(1, 2));
  CHECK(lb.alpha_star == 0);
}

TEST_CASE("lower bound equals a dense alpha-grid maximum") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> num(-8, 8);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + trial % 3;
    RatVec kappa(d), v(d);
    for (int j = 0; j < d; ++j) {
      kappa[j] = Rat(num(rng));
      v[j] = Rat(num(rng) + 9, 9);
    }
    bool all_equal = std::all_of(kappa.begin(), kappa.end(),
                                 [&](const Rat& k) { return k == kappa[0]; });
    if (all_equal) kappa[0] += 1;
    auto gpc = constraint(Rat(num(rng)), kappa);
    const Rat eps(std::abs(num(rng)), 20);

    auto lb = lower_bound(gpc, v, eps);
    Rat max_kappa = 0;
    for (const auto& k : kappa) max_kappa = std::max(max_kappa, rat_abs(k));
    const Rat span = 10 * (max_kappa + 1);
    for (Rat alpha = -span; alpha <= span; alpha += Rat(1, 40)) {
      auto dist = rotated_hyperplane_distance(gpc, v, eps, alpha);
      if (!dist) continue;
      // the exact value dominates the shifted objective everywhere: the
      // far-field sup of the distance itself is eps', which cancels
      Rat shifted = *dist - eps;
      if (shifted < 0) shifted = 0;
      CHECK(shifted <= lb.value);
    }
    // and it is attained at the reported maximizer
    auto at_star = rotated_hyperplane_distance(gpc, v, eps, lb.alpha_star);
    REQUIRE(at_star.has_value());
    CHECK(*at_star == lb.max_dist);

    // monotone non-increasing in eps' whenever the kappa range spans zero
    // (then |alpha| <= max_j |kappa_j - alpha| for every alpha)
    Rat kmin = kappa[0], kmax = kappa[0];
    for (const auto& k : kappa) {
      kmin = std::min(kmin, k);
      kmax = std::max(kmax, k);
    }
    if (kmin <= 0 && kmax >= 0) {
      auto lb2 = lower_bound(gpc, v, eps + Rat(1, 10));
      CHECK(lb2.value <= lb.value);
    }
  }
}

TEST_CASE("truncation bounds: full-width truncation collapses the sandwich") {
  const Setting s{4, 4, 2, 2};
  OccupationVector v = ov({Rat(7, 4), Rat(5, 4), Rat(3, 4), Rat(1, 4)});
  auto res = truncation_bounds(v, s, 4, ConstraintCatalog::builtin());
  CHECK(res.epsilon_prime == 0);
  CHECK(res.lower >= 0);
  CHECK(res.lower <= res.upper);
  CHECK(res.upper == res.f_min_prime);

  // the exact boundary distance sits inside [F-, F+]
  auto entry = ConstraintCatalog::builtin().lookup(s);
  auto p = sector_polytope(s, *entry);
  auto bd = boundary_distance(p, v.values);
  CHECK(res.lower <= bd.value);
  CHECK(bd.value <= res.upper);
}

TEST_CASE("three-way sandwich on sampled sector spectra") {
  const Setting full{4, 5, 2, 2};
  const auto& cat = ConstraintCatalog::builtin();
  auto full_entry = cat.lookup(full);
  REQUIRE(full_entry.has_value());
  const Polytope full_p = sector_polytope(full, *full_entry);

  auto basis = build_sector_basis(full);
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    auto psi = random_sector_state(basis, seed * 17);
    RatVec lambda = exact_spectrum(psi);
    OccupationVector v{lambda, OccupationSpace::Orbital, true};

    auto res = truncation_bounds(v, full, 4, cat);
    auto bd = boundary_distance(full_p, lambda);
    CAPTURE(seed);
    CHECK(res.lower >= 0);
    CHECK(res.lower <= bd.value);
    CHECK(bd.value <= res.upper);
  }
}
