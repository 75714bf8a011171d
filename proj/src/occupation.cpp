#include "spingpc/occupation.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "spingpc/catalog.hpp"

namespace spingpc {

OccupationVector OccupationVector::sorted() const {
  OccupationVector out = *this;
  std::sort(out.values.begin(), out.values.end(), std::greater<Rat>());
  out.sorted_desc = true;
  return out;
}

std::string OccupationVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += rat_to_string(values[i]);
  }
  out += ")";
  return out;
}

ValidationReport validate(const Setting& setting, const OccupationVector& v, const Rat& tol) {
  ValidationReport report;
  const Rat max_occ = v.space == OccupationSpace::Orbital ? Rat(2) : Rat(1);
  const int expected_dim =
      v.space == OccupationSpace::Orbital ? setting.n_orbitals : 2 * setting.n_orbitals;
  if (v.dim() != expected_dim) {
    throw std::invalid_argument("validate: vector dimension " + std::to_string(v.dim()) +
                                " does not match setting dimension " +
                                std::to_string(expected_dim));
  }

  for (int i = 0; i + 1 < v.dim(); ++i) {
    if (v.values[i] + tol < v.values[i + 1]) {
      report.issues.push_back({ValidationIssue::Kind::Ordering, i + 1,
                               v.values[i + 1] - v.values[i],
                               "entries " + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                   " not descending"});
    }
  }
  for (int i = 0; i < v.dim(); ++i) {
    if (v.values[i] < -tol) {
      report.issues.push_back({ValidationIssue::Kind::Box, i + 1, -v.values[i],
                               "entry " + std::to_string(i + 1) + " below 0"});
    }
    if (v.values[i] > max_occ + tol) {
      report.issues.push_back({ValidationIssue::Kind::Box, i + 1, v.values[i] - max_occ,
                               "entry " + std::to_string(i + 1) + " above " +
                                   rat_to_string(max_occ)});
    }
  }
  const Rat total = v.total();
  const Rat dev = rat_abs(total - Rat(setting.n_particles));
  if (dev > tol) {
    report.issues.push_back({ValidationIssue::Kind::Normalization, 0, dev,
                             "sum " + rat_to_string(total) + " deviates from N"});
  }

  if (v.space == OccupationSpace::Orbital) {
    int idx = 0;
    for (const auto& c : partial_sum_constraints(setting)) {
      ++idx;
      const Rat r = residual(c, v.values);
      if (r < -tol) {
        report.issues.push_back(
            {ValidationIssue::Kind::PauliViolation, idx, -r, "violates " + c.str()});
      }
    }
  }
  return report;
}

}  // namespace spingpc
