#include "spingpc/setting.hpp"

#include <cstdlib>
#include <stdexcept>

namespace spingpc {

std::optional<std::string> Setting::invalid_reason() const {
  if (n_particles <= 0) return "particle number must be positive";
  if (n_orbitals <= 0) return "orbital count must be positive";
  if (two_s < 0) return "2S must be non-negative";
  if (std::abs(two_m) > two_s) return "|2M| exceeds 2S";
  if (two_s > n_particles) return "2S exceeds N";
  if ((n_particles - two_s) % 2 != 0) return "N and 2S must have equal parity";
  if (n_particles > 2 * n_orbitals) return "N exceeds 2d";
  return std::nullopt;
}

Setting Setting::checked(int n, int d, int two_s, int two_m) {
  Setting s{n, d, two_s, two_m};
  if (auto reason = s.invalid_reason()) {
    throw std::invalid_argument("invalid setting " + s.str() + ": " + *reason);
  }
  return s;
}

std::string Setting::str() const {
  return "(N=" + std::to_string(n_particles) + ", d=" + std::to_string(n_orbitals) +
         ", 2S=" + std::to_string(two_s) + ", 2M=" + std::to_string(two_m) + ")";
}

}  // namespace spingpc
