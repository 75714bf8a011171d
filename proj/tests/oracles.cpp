#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace spingpc::oracle {

namespace {

// Solves rows . x = rhs exactly; returns the unique solution or nullopt when
// the system is underdetermined or inconsistent.
std::optional<RatVec> solve_unique(std::vector<RatVec> m, RatVec rhs, int dim) {
  const int nrows = static_cast<int>(m.size());
  int rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < dim && rank < nrows; ++col) {
    int sel = -1;
    for (int r = rank; r < nrows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    std::swap(rhs[sel], rhs[rank]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < dim; ++c) m[r][c] -= f * m[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < nrows; ++r) {
    if (rhs[r] != 0) return std::nullopt;  // inconsistent
  }
  if (rank < dim) return std::nullopt;  // underdetermined
  RatVec x(dim);
  for (int r = 0; r < rank; ++r) x[pivot_col[r]] = rhs[r] / m[r][pivot_col[r]];
  return x;
}

int rank_of(const std::vector<LinearConstraint>& eqs, int dim) {
  std::vector<RatVec> m;
  for (const auto& c : eqs) m.push_back(c.kappa);
  int rank = 0;
  for (int col = 0; col < dim && rank < static_cast<int>(m.size()); ++col) {
    int sel = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    for (int r = rank + 1; r < static_cast<int>(m.size()); ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < dim; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

Rat l1_norm_diff(const RatVec& a, const RatVec& b) {
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += rat_abs(a[i] - b[i]);
  return acc;
}

bool feasible(const std::vector<LinearConstraint>& eqs,
              const std::vector<LinearConstraint>& ineqs, const RatVec& x) {
  for (const auto& c : eqs) {
    if (residual(c, x) != 0) return false;
  }
  for (const auto& c : ineqs) {
    if (residual(c, x) < 0) return false;
  }
  return true;
}

}  // namespace

std::optional<Rat> exhaustive_face_distance(const std::vector<LinearConstraint>& equalities,
                                            const std::vector<LinearConstraint>& inequalities,
                                            const RatVec& v) {
  const int dim = static_cast<int>(v.size());
  const int need = dim - rank_of(equalities, dim);

  // candidate hyperplane pool: tight inequalities and kink planes x_j = v_j
  struct Plane {
    RatVec coeffs;
    Rat rhs;
  };
  std::vector<Plane> pool;
  for (const auto& c : inequalities) pool.push_back({c.kappa, -c.kappa0});
  for (int j = 0; j < dim; ++j) {
    RatVec e(dim, Rat(0));
    e[j] = 1;
    pool.push_back({std::move(e), v[j]});
  }

  std::vector<RatVec> base_m;
  RatVec base_rhs;
  for (const auto& c : equalities) {
    base_m.push_back(c.kappa);
    base_rhs.push_back(-c.kappa0);
  }

  std::optional<Rat> best;
  std::vector<int> subset(need);
  const int pool_size = static_cast<int>(pool.size());

  auto consider = [&]() {
    std::vector<RatVec> m = base_m;
    RatVec rhs = base_rhs;
    for (int idx : subset) {
      m.push_back(pool[idx].coeffs);
      rhs.push_back(pool[idx].rhs);
    }
    auto x = solve_unique(std::move(m), std::move(rhs), dim);
    if (!x || !feasible(equalities, inequalities, *x)) return;
    Rat f = l1_norm_diff(*x, v);
    if (!best || f < *best) best = f;
  };

  if (need <= 0) {
    consider();
    return best;
  }
  // iterate all subsets of size `need`
  std::function<void(int, int)> rec = [&](int start, int k) {
    if (k == need) {
      consider();
      return;
    }
    for (int i = start; i < pool_size; ++i) {
      subset[k] = i;
      rec(i + 1, k + 1);
    }
  };
  rec(0, 0);
  return best;
}

GridSearch grid_face_distance(const std::vector<LinearConstraint>& equalities,
                              const std::vector<LinearConstraint>& inequalities, const RatVec& v,
                              const Rat& step) {
  const int dim = static_cast<int>(v.size());

  // eliminate equalities: x_pivot = g0 + G . s over free coordinates s
  std::vector<RatVec> m;
  RatVec rhs;
  for (const auto& c : equalities) {
    m.push_back(c.kappa);
    rhs.push_back(-c.kappa0);
  }
  const int nrows = static_cast<int>(m.size());
  int rank = 0;
  std::vector<int> pivot_cols;
  for (int col = 0; col < dim && rank < nrows; ++col) {
    int sel = -1;
    for (int r = rank; r < nrows; ++r) {
      if (m[r][col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    std::swap(m[sel], m[rank]);
    std::swap(rhs[sel], rhs[rank]);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rat f = m[r][col] / m[rank][col];
      for (int c = col; c < dim; ++c) m[r][c] -= f * m[rank][c];
      rhs[r] -= f * rhs[rank];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (int r = rank; r < nrows; ++r) {
    if (rhs[r] != 0) return {};  // inconsistent equalities: empty face
  }
  std::vector<int> free_cols;
  for (int c = 0; c < dim; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) {
      free_cols.push_back(c);
    }
  }
  const int k = static_cast<int>(free_cols.size());
  if (k > 2) throw std::invalid_argument("grid_face_distance supports faces of dimension <= 2");

  // x(s): start from particular solution, add free contributions
  auto point_at = [&](const RatVec& s) {
    RatVec x(dim, Rat(0));
    for (int i = 0; i < k; ++i) x[free_cols[i]] = s[i];
    for (int r = 0; r < rank; ++r) {
      Rat val = rhs[r];
      for (int i = 0; i < k; ++i) val -= m[r][free_cols[i]] * s[i];
      x[pivot_cols[r]] = val / m[r][pivot_cols[r]];
    }
    return x;
  };

  // substituted inequality rows: c0 + c . s >= 0
  struct Row {
    Rat c0;
    RatVec c;
  };
  std::vector<Row> rows;
  for (const auto& ineq : inequalities) {
    Row row;
    row.c.assign(k, Rat(0));
    row.c0 = ineq.kappa0;
    RatVec coeff_free(k, Rat(0));
    for (int i = 0; i < k; ++i) coeff_free[i] = ineq.kappa[free_cols[i]];
    for (int r = 0; r < rank; ++r) {
      const Rat kp = ineq.kappa[pivot_cols[r]];
      if (kp == 0) continue;
      const Rat inv = kp / m[r][pivot_cols[r]];
      row.c0 += inv * rhs[r];
      for (int i = 0; i < k; ++i) coeff_free[i] -= inv * m[r][free_cols[i]];
    }
    row.c = coeff_free;
    rows.push_back(std::move(row));
  }

  // direction stretch factors: l1 norm of dx/ds_i
  RatVec stretch(k, Rat(1));
  for (int i = 0; i < k; ++i) {
    for (int r = 0; r < rank; ++r) {
      stretch[i] += rat_abs(m[r][free_cols[i]] / m[r][pivot_cols[r]]);
    }
  }

  GridSearch out;
  auto offer = [&](const RatVec& s) {
    for (const auto& row : rows) {
      Rat val = row.c0;
      for (int i = 0; i < k; ++i) val += row.c[i] * s[i];
      if (val < 0) return;
    }
    Rat f = l1_norm_diff(point_at(s), v);
    if (!out.found || f < out.minimum) {
      out.found = true;
      out.minimum = f;
    }
  };

  // exact feasible interval of coordinate `i` given earlier coordinates fixed
  auto interval = [&](const std::vector<Row>& rws, int i, const RatVec& s_prefix,
                      Rat& lo, Rat& hi) -> bool {
    lo = 0;
    hi = 2;  // occupations are boxed by the polytope rows anyway
    for (const auto& row : rws) {
      Rat cst = row.c0;
      for (int q = 0; q < i; ++q) cst += row.c[q] * s_prefix[q];
      bool later = false;
      for (int q = i + 1; q < k; ++q) {
        if (row.c[q] != 0) later = true;
      }
      if (later) continue;  // involves a later coordinate; handled downstream
      if (row.c[i] == 0) {
        if (cst < 0) return false;
      } else if (row.c[i] > 0) {
        Rat bound = -cst / row.c[i];
        if (bound > lo) lo = bound;
      } else {
        Rat bound = -cst / row.c[i];
        if (bound < hi) hi = bound;
      }
    }
    return lo <= hi;
  };

  auto grid_values = [&](const Rat& lo, const Rat& hi) {
    std::vector<Rat> values;
    values.push_back(lo);
    // smallest multiple of step >= lo
    Rat q = lo / step;
    mpz_class n = q.get_num() / q.get_den();
    while (Rat(n) * step < lo) ++n;
    for (Rat s = Rat(n) * step; s <= hi; s += step) values.push_back(s);
    if (values.back() != hi) values.push_back(hi);
    return values;
  };

  if (k == 0) {
    offer({});
    out.resolution = 0;
    return out;
  }
  if (k == 1) {
    Rat lo, hi;
    if (!interval(rows, 0, {}, lo, hi)) return {};
    for (const auto& s0 : grid_values(lo, hi)) offer({s0});
    out.resolution = step / 2 * stretch[0];
    return out;
  }

  // k == 2: outer coordinate on the grid (clamped by rows not involving s2),
  // inner coordinate clamped to its exact interval per line.
  Rat lo1, hi1;
  {
    std::vector<Row> outer_rows;
    for (const auto& row : rows) {
      if (row.c[1] == 0) outer_rows.push_back(row);
    }
    if (!interval(outer_rows, 0, {}, lo1, hi1)) return {};
  }
  Rat slope_max = 0;
  for (const auto& row : rows) {
    if (row.c[1] == 0) continue;
    Rat sl = rat_abs(row.c[0] / row.c[1]);
    if (sl > slope_max) slope_max = sl;
  }
  for (const auto& s1 : grid_values(lo1, hi1)) {
    RatVec prefix{s1};
    Rat lo2, hi2;
    std::vector<Row> inner;
    for (const auto& row : rows) inner.push_back(row);
    if (!interval(inner, 1, prefix, lo2, hi2)) continue;
    for (const auto& s2 : grid_values(lo2, hi2)) offer({s1, s2});
  }
  out.resolution = step / 2 * stretch[0] + step / 2 * (Rat(1) + slope_max) * stretch[1];
  return out;
}

}  // namespace spingpc::oracle
