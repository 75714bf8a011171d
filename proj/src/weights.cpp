#include "spingpc/weights.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace spingpc {

Weight highest_weight(const Setting& setting) {
  if (auto reason = setting.invalid_reason()) {
    throw std::invalid_argument("highest_weight: invalid setting " + setting.str() + ": " + *reason);
  }
  Weight w;
  w.occupations.assign(setting.n_orbitals, 0);
  for (int i = 0; i < setting.k_paired(); ++i) w.occupations[i] = 2;
  for (int i = setting.k_paired(); i < setting.j_open(); ++i) w.occupations[i] = 1;
  w.multiplicity = 1;
  return w;
}

long kostka_multiplicity(const std::vector<int>& hw, const std::vector<int>& w) {
  long hw_sum = 0, w_sum = 0;
  for (int x : hw) hw_sum += x;
  for (int x : w) w_sum += x;
  if (hw_sum != w_sum) throw std::invalid_argument("kostka_multiplicity: unequal sums");

  // shape: hw sorted decreasingly; only one- and two-box rows occur here
  std::vector<int> shape = hw;
  std::sort(shape.begin(), shape.end(), std::greater<int>());
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  for (int row : shape) {
    if (row > 2) throw std::invalid_argument("kostka_multiplicity: occupations exceed 2");
  }
  const int col2_len = static_cast<int>(std::count(shape.begin(), shape.end(), 2));

  // a two-column tableau is a pair of strictly increasing columns sharing the
  // doubly occurring values, with the row condition col1[i] <= col2[i]
  std::vector<int> doubles, singles;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 2) {
      doubles.push_back(static_cast<int>(j));
    } else if (w[j] == 1) {
      singles.push_back(static_cast<int>(j));
    } else if (w[j] != 0) {
      return 0;  // content outside {0,1,2} cannot fill a two-column shape
    }
  }
  const int pick = col2_len - static_cast<int>(doubles.size());
  if (pick < 0 || pick > static_cast<int>(singles.size())) return 0;

  long count = 0;
  std::vector<int> chosen(pick);
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == pick) {
      std::vector<int> col2 = doubles;
      col2.insert(col2.end(), chosen.begin(), chosen.end());
      std::sort(col2.begin(), col2.end());
      std::vector<int> col1 = doubles;
      for (int s : singles) {
        if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) col1.push_back(s);
      }
      std::sort(col1.begin(), col1.end());
      for (std::size_t i = 0; i < col2.size(); ++i) {
        if (col1[i] > col2[i]) return;
      }
      ++count;
      return;
    }
    for (int i = start; i < static_cast<int>(singles.size()); ++i) {
      chosen[k] = singles[i];
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return count;
}

std::vector<Weight> weight_lattice(const Setting& setting) {
  if (setting.n_orbitals > 12) {
    throw std::invalid_argument("weight_lattice: enumeration limited to d <= 12");
  }
  const auto hw = highest_weight(setting);
  std::vector<Weight> lattice;
  std::vector<int> occ(setting.n_orbitals, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == setting.n_orbitals) {
      if (remaining != 0) return;
      long mult = kostka_multiplicity(hw.occupations, occ);
      if (mult > 0) lattice.push_back({occ, mult});
      return;
    }
    const int slots_left = setting.n_orbitals - pos;
    for (int k = 0; k <= 2; ++k) {
      if (k > remaining || remaining - k > 2 * (slots_left - 1)) continue;
      occ[pos] = k;
      rec(pos + 1, remaining - k);
    }
    occ[pos] = 0;
  };
  rec(0, setting.n_particles);
  return lattice;
}

long sector_dimension(const Setting& setting) {
  long dim = 0;
  for (const auto& w : weight_lattice(setting)) dim += w.multiplicity;
  return dim;
}

SelectionResult selected_weights(const LinearConstraint& gpc, const Setting& setting) {
  if (gpc.dim() != setting.n_orbitals) {
    throw std::invalid_argument("selected_weights: constraint dimension mismatch");
  }
  SelectionResult result;
  result.gpc = gpc;
  for (auto& w : weight_lattice(setting)) {
    Rat r = gpc.kappa0;
    for (int j = 0; j < gpc.dim(); ++j) r += gpc.kappa[j] * w.occupations[j];
    if (r == 0) {
      result.pinned_dimension += w.multiplicity;
      result.selected.push_back(std::move(w));
    } else {
      result.excluded.push_back(std::move(w));
    }
  }
  return result;
}

std::vector<Weight> interior_weights(const Setting& setting, const CatalogEntry& entry) {
  std::vector<LinearConstraint> checks;
  for (const auto& gpc : entry.gpcs) {
    if (gpc.relation == Relation::GeqZero) checks.push_back(gpc);
  }
  for (auto& c : pauli_constraints(setting)) {
    if (c.relation != Relation::GeqZero) continue;
    if (c.label.rfind("ordering", 0) == 0) continue;  // chamber walls, not facets
    checks.push_back(std::move(c));
  }

  std::vector<Weight> interior;
  for (auto& w : weight_lattice(setting)) {
    std::vector<int> sorted = w.occupations;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    bool strict = true;
    for (const auto& c : checks) {
      Rat r = c.kappa0;
      for (int j = 0; j < c.dim(); ++j) r += c.kappa[j] * sorted[j];
      if (r <= 0) {
        strict = false;
        break;
      }
    }
    if (strict) interior.push_back(std::move(w));
  }
  return interior;
}

}  // namespace spingpc
