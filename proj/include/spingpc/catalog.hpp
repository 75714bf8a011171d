#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spingpc/constraint.hpp"
#include "spingpc/setting.hpp"

namespace spingpc {

/// Catalog entries are keyed without M: the constraint tables are valid for
/// every M in a multiplet. Spin-independent sets (on spin-orbital spectra of
/// length 2d) are kept under the same machinery with spin_orbital = true.
struct CatalogKey {
  int n_particles = 0;
  int dim = 0;  // d for orbital space, 2d for spin-orbital space
  int two_s = 0;
  bool spin_orbital = false;

  auto operator<=>(const CatalogKey&) const = default;
};

struct CatalogEntry {
  std::vector<LinearConstraint> gpcs;  // table order, index i is 1-based in reports
  std::string provenance;
  bool extended_by_stabilization = false;

  bool operator==(const CatalogEntry&) const = default;
};

struct CatalogWarning {
  int line = 0;
  std::string message;
};

class ConstraintCatalog {
 public:
  /// All constraint tables shipped with the library.
  static const ConstraintCatalog& builtin();

  /// Parses the line-oriented catalog text format. Later duplicate blocks
  /// replace earlier ones; a warning is recorded for each replacement.
  static ConstraintCatalog load(std::istream& in, std::vector<CatalogWarning>* warnings = nullptr);

  void serialize(std::ostream& out) const;

  /// Entries from `other` replace same-key entries here.
  void merge(const ConstraintCatalog& other, std::vector<CatalogWarning>* warnings = nullptr);

  /// Orbital-space lookup for a sector (M is ignored). Settings with S=0 or
  /// N=2 are covered with an empty list; N=3, S=1/2 extends past the stored
  /// tables by zero-padding (flagged). Returns nullopt when not covered.
  std::optional<CatalogEntry> lookup(const Setting& setting) const;

  std::optional<CatalogEntry> lookup_spin_orbital(int n_particles, int n_spin_orbitals) const;

  const std::map<CatalogKey, CatalogEntry>& entries() const { return entries_; }

  void insert(const CatalogKey& key, CatalogEntry entry);

  bool operator==(const ConstraintCatalog&) const = default;

 private:
  std::map<CatalogKey, CatalogEntry> entries_;
};

/// Spin-adapted Pauli constraints for a sector, normalized to >=0 / ==0 form:
/// box 2 >= l1 and ld >= 0, the ordering chain, the partial sums
/// sum_{m<=K+j} l_m <= N-2S+j for j = 1..2S-1, and the normalization equality.
std::vector<LinearConstraint> pauli_constraints(const Setting& setting);

/// Just the partial-sum family above (empty for 2S <= 1).
std::vector<LinearConstraint> partial_sum_constraints(const Setting& setting);

/// Ordinary Pauli constraints on a decreasingly ordered spectrum: box with
/// the given maximal occupation, ordering chain, and normalization to N.
std::vector<LinearConstraint> ordered_pauli_constraints(int dim, int max_occupation,
                                                        int n_particles);

}  // namespace spingpc
