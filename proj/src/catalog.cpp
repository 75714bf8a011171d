#include "spingpc/catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace spingpc {

namespace detail {
const char* builtin_catalog_text();
}

namespace {

struct CatalogParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

ConstraintCatalog ConstraintCatalog::load(std::istream& in, std::vector<CatalogWarning>* warnings) {
  ConstraintCatalog catalog;
  std::string line;
  int lineno = 0;
  bool in_block = false;
  CatalogKey key;
  CatalogEntry entry;

  auto flush = [&]() {
    if (!in_block) return;
    if (catalog.entries_.count(key) && warnings) {
      warnings->push_back({lineno, "duplicate setting block replaces earlier entry for N=" +
                                       std::to_string(key.n_particles) +
                                       " dim=" + std::to_string(key.dim) +
                                       " 2S=" + std::to_string(key.two_s)});
    }
    catalog.entries_[key] = std::move(entry);
    entry = CatalogEntry{};
    in_block = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];
    auto fail = [&](const std::string& msg) -> CatalogParseError {
      return CatalogParseError("catalog line " + std::to_string(lineno) + ": " + msg);
    };

    if (head == "setting" || head == "setting-so") {
      flush();
      const bool so = head == "setting-so";
      const std::size_t want = so ? 3 : 4;
      if (tokens.size() != want) throw fail("expected '" + head + (so ? " <N> <2d>'" : " <N> <d> <2S>'"));
      key = CatalogKey{};
      key.spin_orbital = so;
      try {
        key.n_particles = std::stoi(tokens[1]);
        key.dim = std::stoi(tokens[2]);
        key.two_s = so ? 0 : std::stoi(tokens[3]);
      } catch (const std::exception&) {
        throw fail("malformed integer in setting header");
      }
      if (key.n_particles <= 0 || key.dim <= 0 || key.two_s < 0) {
        throw fail("setting header values out of range");
      }
      if (!so) {
        Setting probe{key.n_particles, key.dim, key.two_s, key.two_s % 2};
        probe.two_m = key.two_s;  // any magnetization works for validation
        if (auto reason = probe.invalid_reason()) throw fail(*reason);
      }
      in_block = true;
    } else if (head == "provenance") {
      if (!in_block) throw fail("'provenance' outside a setting block");
      std::string text;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (!text.empty()) text += ' ';
        text += tokens[i];
      }
      entry.provenance = text;
    } else if (head == "gpc") {
      if (!in_block) throw fail("'gpc' row outside a setting block");
      if (tokens.size() != static_cast<std::size_t>(key.dim) + 3) {
        throw fail("expected " + std::to_string(key.dim) + " coefficients, got " +
                   std::to_string(static_cast<long>(tokens.size()) - 3));
      }
      Sense sense;
      const std::string& rel = tokens.back();
      if (rel == "leq") {
        sense = Sense::Leq;
      } else if (rel == "geq") {
        sense = Sense::Geq;
      } else if (rel == "eq") {
        sense = Sense::Eq;
      } else {
        throw fail("unknown relation '" + rel + "' (expected leq|geq|eq)");
      }
      Rat bound;
      RatVec coeffs(key.dim);
      try {
        bound = parse_rational(tokens[1]);
        for (int j = 0; j < key.dim; ++j) coeffs[j] = parse_rational(tokens[2 + j]);
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
      LinearConstraint c = normalize_inequality(coeffs, bound, sense);
      if (c.is_zero()) throw fail("degenerate all-zero constraint");
      if (c.relation == Relation::GeqZero) {
        bool all_zero_kappa = true;
        for (const auto& k : c.kappa) {
          if (k != 0) {
            all_zero_kappa = false;
            break;
          }
        }
        if (all_zero_kappa) throw fail("inequality with zero normal vector");
      }
      c.label = "gpc " + std::to_string(entry.gpcs.size() + 1);
      entry.gpcs.push_back(std::move(c));
    } else {
      throw fail("unknown directive '" + head + "'");
    }
  }
  flush();
  return catalog;
}

void ConstraintCatalog::serialize(std::ostream& out) const {
  bool first = true;
  for (const auto& [key, entry] : entries_) {
    if (!first) out << "\n";
    first = false;
    if (key.spin_orbital) {
      out << "setting-so " << key.n_particles << " " << key.dim << "\n";
    } else {
      out << "setting " << key.n_particles << " " << key.dim << " " << key.two_s << "\n";
    }
    if (!entry.provenance.empty()) out << "provenance " << entry.provenance << "\n";
    for (const auto& gpc : entry.gpcs) {
      // stored form is kappa0 + kappa.l REL 0, i.e. kappa.l {>=,=} -kappa0
      out << "gpc " << rat_to_string(-gpc.kappa0);
      for (const auto& k : gpc.kappa) out << " " << rat_to_string(k);
      out << (gpc.relation == Relation::EqZero ? " eq" : " geq") << "\n";
    }
  }
}

void ConstraintCatalog::merge(const ConstraintCatalog& other, std::vector<CatalogWarning>* warnings) {
  for (const auto& [key, entry] : other.entries_) {
    if (entries_.count(key) && warnings) {
      warnings->push_back({0, "catalog merge replaces entry for N=" + std::to_string(key.n_particles) +
                                  " dim=" + std::to_string(key.dim) +
                                  " 2S=" + std::to_string(key.two_s)});
    }
    entries_[key] = entry;
  }
}

void ConstraintCatalog::insert(const CatalogKey& key, CatalogEntry entry) {
  entries_[key] = std::move(entry);
}

const ConstraintCatalog& ConstraintCatalog::builtin() {
  static const ConstraintCatalog catalog = [] {
    std::istringstream in(detail::builtin_catalog_text());
    return load(in);
  }();
  return catalog;
}

std::optional<CatalogEntry> ConstraintCatalog::lookup(const Setting& setting) const {
  if (auto reason = setting.invalid_reason()) {
    throw std::invalid_argument("catalog lookup: invalid setting " + setting.str() + ": " + *reason);
  }
  CatalogKey key{setting.n_particles, setting.n_orbitals, setting.two_s, false};
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;

  // Sectors with no constraints beyond the spin-adapted Pauli set.
  if (setting.two_s == 0 || (setting.n_particles == 2 && setting.two_s == 0)) {
    CatalogEntry empty;
    empty.provenance = "no constraints beyond Pauli for S=0";
    return empty;
  }

  // Two aligned electrons: the triplet spatial state is a general
  // antisymmetric two-tensor, so occupations come in degenerate pairs (and
  // the last one vanishes for odd d).
  if (setting.n_particles == 2 && setting.two_s == 2) {
    CatalogEntry entry;
    entry.provenance = "derived: triplet pair occupation degeneracies";
    const int d = setting.n_orbitals;
    for (int p = 0; p + 1 < d; p += 2) {
      RatVec coeffs(d, Rat(0));
      coeffs[p] = 1;
      coeffs[p + 1] = -1;
      entry.gpcs.push_back(normalize_inequality(coeffs, Rat(0), Sense::Eq));
    }
    if (d % 2 == 1) {
      RatVec coeffs(d, Rat(0));
      coeffs[d - 1] = 1;
      entry.gpcs.push_back(normalize_inequality(coeffs, Rat(0), Sense::Eq));
    }
    int idx = 0;
    for (auto& g : entry.gpcs) g.label = "gpc " + std::to_string(++idx);
    return entry;
  }

  // The N=3, S=1/2 family is stable in d: zero-pad the largest stored block.
  if (setting.n_particles == 3 && setting.two_s == 1 && setting.n_orbitals > 9) {
    CatalogKey base{3, 9, 1, false};
    auto it = entries_.find(base);
    if (it != entries_.end()) {
      CatalogEntry extended = it->second;
      for (auto& gpc : extended.gpcs) gpc.kappa.resize(setting.n_orbitals, Rat(0));
      extended.extended_by_stabilization = true;
      extended.provenance += " (extended by stabilization to d=" +
                             std::to_string(setting.n_orbitals) + ")";
      return extended;
    }
  }
  return std::nullopt;
}

std::optional<CatalogEntry> ConstraintCatalog::lookup_spin_orbital(int n_particles,
                                                                   int n_spin_orbitals) const {
  CatalogKey key{n_particles, n_spin_orbitals, 0, true};
  if (auto it = entries_.find(key); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::vector<LinearConstraint> pauli_constraints(const Setting& setting) {
  if (auto reason = setting.invalid_reason()) {
    throw std::invalid_argument("pauli_constraints: invalid setting " + setting.str() + ": " +
                                *reason);
  }
  auto constraints = ordered_pauli_constraints(setting.n_orbitals, 2, setting.n_particles);
  for (auto& c : partial_sum_constraints(setting)) constraints.push_back(std::move(c));
  return constraints;
}

std::vector<LinearConstraint> partial_sum_constraints(const Setting& setting) {
  std::vector<LinearConstraint> constraints;
  const int d = setting.n_orbitals;
  const int k = setting.k_paired();
  for (int j = 1; j <= setting.two_s - 1; ++j) {
    if (k + j > d) break;  // prefix covers every orbital: implied by normalization
    RatVec coeffs(d, Rat(0));
    for (int m = 0; m < k + j; ++m) coeffs[m] = 1;
    constraints.push_back(normalize_inequality(coeffs, Rat(setting.n_particles - setting.two_s + j),
                                               Sense::Leq,
                                               "partial sum j=" + std::to_string(j)));
  }
  return constraints;
}

std::vector<LinearConstraint> ordered_pauli_constraints(int dim, int max_occupation,
                                                        int n_particles) {
  std::vector<LinearConstraint> constraints;
  {
    RatVec coeffs(dim, Rat(0));
    coeffs[0] = 1;
    constraints.push_back(normalize_inequality(coeffs, Rat(max_occupation), Sense::Leq, "box top"));
  }
  for (int i = 0; i + 1 < dim; ++i) {
    RatVec coeffs(dim, Rat(0));
    coeffs[i] = 1;
    coeffs[i + 1] = -1;
    constraints.push_back(
        normalize_inequality(coeffs, Rat(0), Sense::Geq, "ordering " + std::to_string(i + 1)));
  }
  {
    RatVec coeffs(dim, Rat(0));
    coeffs[dim - 1] = 1;
    constraints.push_back(normalize_inequality(coeffs, Rat(0), Sense::Geq, "box bottom"));
  }
  {
    RatVec coeffs(dim, Rat(1));
    constraints.push_back(normalize_inequality(coeffs, Rat(n_particles), Sense::Eq, "normalization"));
  }
  return constraints;
}

}  // namespace spingpc
