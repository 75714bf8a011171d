#pragma once

#include <compare>
#include <optional>
#include <string>

namespace spingpc {

/// A spin sector: N electrons in d spatial orbitals with total spin 2S and
/// magnetization 2M (both stored doubled so they stay integral).
struct Setting {
  int n_particles = 0;
  int n_orbitals = 0;
  int two_s = 0;
  int two_m = 0;

  /// Number of doubly occupied orbitals in the highest weight, (N-2S)/2.
  int k_paired() const { return (n_particles - two_s) / 2; }
  /// Index of the last singly occupied orbital in the highest weight, (N+2S)/2.
  int j_open() const { return (n_particles + two_s) / 2; }

  /// Error message when the quadruple is not a valid sector, nullopt when valid.
  std::optional<std::string> invalid_reason() const;
  bool valid() const { return !invalid_reason().has_value(); }

  /// Throws std::invalid_argument on invalid data.
  static Setting checked(int n, int d, int two_s, int two_m);

  std::string str() const;

  auto operator<=>(const Setting&) const = default;
};

}  // namespace spingpc
