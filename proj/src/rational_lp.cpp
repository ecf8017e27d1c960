// Copyright 2026 The pdcg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pdcg/rational_lp.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>

namespace pdcg {

RationalMatrixSystem RationalMatrixSystem::with_vars(int n, bool all_nonneg) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  RationalMatrixSystem sys;
  sys.num_vars = n;
  sys.nonneg.assign(static_cast<std::size_t>(n), all_nonneg);
  return sys;
}

void RationalMatrixSystem::add_eq(std::vector<Rational> lhs, Rational rhs) {
  if (lhs.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("equality row has wrong width");
  }
  eq_lhs.push_back(std::move(lhs));
  eq_rhs.push_back(std::move(rhs));
}

void RationalMatrixSystem::add_ge(std::vector<Rational> lhs, Rational rhs) {
  if (lhs.size() != static_cast<std::size_t>(num_vars)) {
    throw std::invalid_argument("inequality row has wrong width");
  }
  ge_lhs.push_back(std::move(lhs));
  ge_rhs.push_back(std::move(rhs));
}

bool lp_point_satisfies(const RationalMatrixSystem& sys, const std::vector<Rational>& x) {
  if (x.size() != static_cast<std::size_t>(sys.num_vars)) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sys.nonneg[j] && x[j] < 0) return false;
  }
  for (std::size_t r = 0; r < sys.eq_lhs.size(); ++r) {
    Rational acc(0);
    for (std::size_t j = 0; j < x.size(); ++j) acc += sys.eq_lhs[r][j] * x[j];
    if (acc != sys.eq_rhs[r]) return false;
  }
  for (std::size_t r = 0; r < sys.ge_lhs.size(); ++r) {
    Rational acc(0);
    for (std::size_t j = 0; j < x.size(); ++j) acc += sys.ge_lhs[r][j] * x[j];
    if (acc < sys.ge_rhs[r]) return false;
  }
  return true;
}

bool lp_certificate_valid(const RationalMatrixSystem& sys, const LpInfeasibleCert& cert) {
  if (cert.eq_mult.size() != sys.eq_lhs.size() ||
      cert.ge_mult.size() != sys.ge_lhs.size()) {
    return false;
  }
  for (const Rational& mu : cert.ge_mult) {
    if (mu < 0) return false;
  }
  std::vector<Rational> combined(static_cast<std::size_t>(sys.num_vars), Rational(0));
  Rational rhs(0);
  for (std::size_t r = 0; r < sys.eq_lhs.size(); ++r) {
    for (std::size_t j = 0; j < combined.size(); ++j) {
      combined[j] += cert.eq_mult[r] * sys.eq_lhs[r][j];
    }
    rhs += cert.eq_mult[r] * sys.eq_rhs[r];
  }
  for (std::size_t r = 0; r < sys.ge_lhs.size(); ++r) {
    for (std::size_t j = 0; j < combined.size(); ++j) {
      combined[j] += cert.ge_mult[r] * sys.ge_lhs[r][j];
    }
    rhs += cert.ge_mult[r] * sys.ge_rhs[r];
  }
  for (std::size_t j = 0; j < combined.size(); ++j) {
    if (sys.nonneg[j] ? combined[j] > 0 : combined[j] != 0) return false;
  }
  return rhs > 0;
}

namespace {

// ---------------------------------------------------------------------------
// Standard-form tableau simplex with Bland's rule.
// ---------------------------------------------------------------------------

struct StdCol {
  int var = -1;       // original variable, or -1 for a slack column
  int sign = +1;      // +1 / -1 for split free variables
  int slack_row = -1; // ge-row index for slack columns
};

class Simplex {
 public:
  explicit Simplex(const RationalMatrixSystem& sys) : sys_(sys) {
    build();
  }

  // Runs phase 1 (min sum of artificials). Returns true when a feasible
  // basis was reached.
  bool phase1() {
    obj_.assign(static_cast<std::size_t>(num_cols_ + num_rows_), Rational(0));
    for (int i = 0; i < num_rows_; ++i) obj_[static_cast<std::size_t>(num_cols_ + i)] = 1;
    obj_rhs_ = 0;
    for (int i = 0; i < num_rows_; ++i) {
      // Reduce against the artificial basis (cost 1 per basic artificial).
      for (std::size_t j = 0; j < obj_.size(); ++j) {
        obj_[j] -= tab_[i][j];
      }
      obj_rhs_ -= rhs_[static_cast<std::size_t>(i)];
    }
    run(/*allow_artificial_entering=*/false);
    return obj_rhs_ == 0;  // obj_rhs_ holds -(current objective value)
  }

  // Multipliers of the phase-1 optimum in the row-flipped system.
  std::vector<Rational> phase1_multipliers() const {
    std::vector<Rational> y(static_cast<std::size_t>(num_rows_));
    for (int i = 0; i < num_rows_; ++i) {
      y[static_cast<std::size_t>(i)] = 1 - obj_[static_cast<std::size_t>(num_cols_ + i)];
    }
    return y;
  }

  // Drops artificials from the tableau; requires a feasible phase-1 end state.
  void prepare_phase2() {
    for (int i = 0; i < num_rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < num_cols_) continue;
      int enter = -1;
      for (int j = 0; j < num_cols_; ++j) {
        if (tab_[i][static_cast<std::size_t>(j)] != 0) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        pivot(i, enter);
      } else {
        basis_[static_cast<std::size_t>(i)] = -1;  // redundant row
      }
    }
    std::vector<std::vector<Rational>> tab2;
    std::vector<Rational> rhs2;
    std::vector<int> basis2;
    for (int i = 0; i < num_rows_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < 0) continue;
      auto& row = tab_[i];
      row.resize(static_cast<std::size_t>(num_cols_));
      tab2.push_back(std::move(row));
      rhs2.push_back(rhs_[static_cast<std::size_t>(i)]);
      basis2.push_back(basis_[static_cast<std::size_t>(i)]);
    }
    tab_ = std::move(tab2);
    rhs_ = std::move(rhs2);
    basis_ = std::move(basis2);
    num_rows_ = static_cast<int>(tab_.size());
    has_artificials_ = false;
  }

  // Minimizes the given cost over the standard-form columns. Returns false
  // when unbounded; unbounded_col() then names the entering column.
  bool phase2(const std::vector<Rational>& cost) {
    obj_ = cost;
    obj_.resize(static_cast<std::size_t>(num_cols_), Rational(0));
    obj_rhs_ = 0;
    for (int i = 0; i < num_rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      const Rational factor = obj_[static_cast<std::size_t>(b)];
      if (factor == 0) continue;
      for (int j = 0; j < num_cols_; ++j) {
        obj_[static_cast<std::size_t>(j)] -= factor * tab_[i][static_cast<std::size_t>(j)];
      }
      obj_rhs_ -= factor * rhs_[static_cast<std::size_t>(i)];
    }
    return run(false);
  }

  int unbounded_col() const { return unbounded_col_; }

  // Basic solution mapped back to the original variables.
  std::vector<Rational> extract_point() const {
    std::vector<Rational> x(static_cast<std::size_t>(sys_.num_vars), Rational(0));
    for (int i = 0; i < num_rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b < 0 || b >= num_cols_) continue;
      const StdCol& col = cols_[static_cast<std::size_t>(b)];
      if (col.var >= 0) {
        x[static_cast<std::size_t>(col.var)] += Rational(col.sign) * rhs_[static_cast<std::size_t>(i)];
      }
    }
    return x;
  }

  // Recession direction for the entering column, in original variables.
  std::vector<Rational> extract_ray(int enter_col) const {
    std::vector<Rational> dz(static_cast<std::size_t>(num_cols_), Rational(0));
    dz[static_cast<std::size_t>(enter_col)] = 1;
    for (int i = 0; i < num_rows_; ++i) {
      const int b = basis_[static_cast<std::size_t>(i)];
      if (b >= 0 && b < num_cols_) {
        dz[static_cast<std::size_t>(b)] = -tab_[i][static_cast<std::size_t>(enter_col)];
      }
    }
    std::vector<Rational> ray(static_cast<std::size_t>(sys_.num_vars), Rational(0));
    for (int j = 0; j < num_cols_; ++j) {
      const StdCol& col = cols_[static_cast<std::size_t>(j)];
      if (col.var >= 0 && dz[static_cast<std::size_t>(j)] != 0) {
        ray[static_cast<std::size_t>(col.var)] += Rational(col.sign) * dz[static_cast<std::size_t>(j)];
      }
    }
    return ray;
  }

  const std::vector<StdCol>& cols() const { return cols_; }
  const std::vector<int>& row_flip() const { return flip_; }
  int structural_cols() const { return num_cols_; }

 private:
  void build() {
    for (int j = 0; j < sys_.num_vars; ++j) {
      cols_.push_back({j, +1, -1});
      if (!sys_.nonneg[static_cast<std::size_t>(j)]) cols_.push_back({j, -1, -1});
    }
    const int num_ge = static_cast<int>(sys_.ge_lhs.size());
    for (int r = 0; r < num_ge; ++r) cols_.push_back({-1, +1, r});
    num_cols_ = static_cast<int>(cols_.size());
    const int num_eq = static_cast<int>(sys_.eq_lhs.size());
    num_rows_ = num_eq + num_ge;

    tab_.assign(static_cast<std::size_t>(num_rows_), {});
    rhs_.assign(static_cast<std::size_t>(num_rows_), Rational(0));
    flip_.assign(static_cast<std::size_t>(num_rows_), 1);
    for (int i = 0; i < num_rows_; ++i) {
      const bool is_eq = i < num_eq;
      const auto& lhs = is_eq ? sys_.eq_lhs[static_cast<std::size_t>(i)]
                              : sys_.ge_lhs[static_cast<std::size_t>(i - num_eq)];
      const Rational& b = is_eq ? sys_.eq_rhs[static_cast<std::size_t>(i)]
                                : sys_.ge_rhs[static_cast<std::size_t>(i - num_eq)];
      auto& row = tab_[static_cast<std::size_t>(i)];
      row.assign(static_cast<std::size_t>(num_cols_ + num_rows_), Rational(0));
      for (int j = 0; j < num_cols_; ++j) {
        const StdCol& col = cols_[static_cast<std::size_t>(j)];
        if (col.var >= 0) {
          row[static_cast<std::size_t>(j)] =
              Rational(col.sign) * lhs[static_cast<std::size_t>(col.var)];
        } else if (!is_eq && col.slack_row == i - num_eq) {
          row[static_cast<std::size_t>(j)] = -1;  // C x - s = d
        }
      }
      rhs_[static_cast<std::size_t>(i)] = b;
      if (rhs_[static_cast<std::size_t>(i)] < 0) {
        flip_[static_cast<std::size_t>(i)] = -1;
        rhs_[static_cast<std::size_t>(i)] = -rhs_[static_cast<std::size_t>(i)];
        for (auto& entry : row) entry = -entry;
      }
      row[static_cast<std::size_t>(num_cols_ + i)] = 1;  // artificial
      basis_.push_back(num_cols_ + i);
    }
    has_artificials_ = true;
  }

  void pivot(int row, int col) {
    auto& prow = tab_[static_cast<std::size_t>(row)];
    const Rational p = prow[static_cast<std::size_t>(col)];
    for (auto& entry : prow) entry /= p;
    rhs_[static_cast<std::size_t>(row)] /= p;
    for (int i = 0; i < num_rows_; ++i) {
      if (i == row) continue;
      const Rational factor = tab_[i][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      auto& irow = tab_[static_cast<std::size_t>(i)];
      for (std::size_t j = 0; j < irow.size(); ++j) {
        if (prow[j] != 0) irow[j] -= factor * prow[j];
      }
      rhs_[static_cast<std::size_t>(i)] -= factor * rhs_[static_cast<std::size_t>(row)];
    }
    if (!obj_.empty()) {
      const Rational factor = obj_[static_cast<std::size_t>(col)];
      if (factor != 0) {
        for (std::size_t j = 0; j < obj_.size(); ++j) {
          if (prow[j] != 0) obj_[j] -= factor * prow[j];
        }
        obj_rhs_ -= factor * rhs_[static_cast<std::size_t>(row)];
      }
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Bland's rule: entering = lowest-index column with a negative reduced
  // cost, leaving = lowest basis index among the ratio-test ties. Artificial
  // columns never re-enter. Returns false on an unbounded direction.
  bool run(bool allow_artificial_entering) {
    const int enterable = allow_artificial_entering
                              ? static_cast<int>(obj_.size())
                              : num_cols_;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < enterable; ++j) {
        if (obj_[static_cast<std::size_t>(j)] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best_ratio(0);
      for (int i = 0; i < num_rows_; ++i) {
        const Rational& a = tab_[i][static_cast<std::size_t>(enter)];
        if (a <= 0) continue;
        const Rational ratio = rhs_[static_cast<std::size_t>(i)] / a;
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) {
        unbounded_col_ = enter;
        return false;
      }
      pivot(leave, enter);
    }
  }

  const RationalMatrixSystem& sys_;
  std::vector<StdCol> cols_;
  std::vector<std::vector<Rational>> tab_;
  std::vector<Rational> rhs_;
  std::vector<int> flip_;
  std::vector<int> basis_;
  std::vector<Rational> obj_;
  Rational obj_rhs_;
  int num_rows_ = 0;
  int num_cols_ = 0;
  int unbounded_col_ = -1;
  bool has_artificials_ = false;
};

LpInfeasibleCert harvest_certificate(const RationalMatrixSystem& sys, const Simplex& sx) {
  const std::vector<Rational> y = sx.phase1_multipliers();
  const std::size_t num_eq = sys.eq_lhs.size();
  LpInfeasibleCert cert;
  cert.eq_mult.resize(num_eq);
  cert.ge_mult.resize(sys.ge_lhs.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Rational value = Rational(sx.row_flip()[i]) * y[i];
    if (i < num_eq) {
      cert.eq_mult[i] = value;
    } else {
      cert.ge_mult[i - num_eq] = value;
    }
  }
  if (!lp_certificate_valid(sys, cert)) {
    throw std::logic_error("simplex produced an invalid infeasibility certificate");
  }
  return cert;
}

std::vector<Rational> objective_in_std_cols(const Simplex& sx,
                                            const std::vector<Rational>& c,
                                            bool negate) {
  std::vector<Rational> cost(static_cast<std::size_t>(sx.structural_cols()), Rational(0));
  for (int j = 0; j < sx.structural_cols(); ++j) {
    const StdCol& col = sx.cols()[static_cast<std::size_t>(j)];
    if (col.var >= 0) {
      cost[static_cast<std::size_t>(j)] =
          Rational(col.sign) * c[static_cast<std::size_t>(col.var)];
      if (negate) cost[static_cast<std::size_t>(j)] = -cost[static_cast<std::size_t>(j)];
    }
  }
  return cost;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc(0);
  for (std::size_t j = 0; j < a.size(); ++j) acc += a[j] * b[j];
  return acc;
}

}  // namespace

LpOutcome solve_feasibility(const RationalMatrixSystem& sys) {
  Simplex sx(sys);
  if (!sx.phase1()) {
    return harvest_certificate(sys, sx);
  }
  LpFeasiblePoint point{sx.extract_point()};
  if (!lp_point_satisfies(sys, point.x)) {
    throw std::logic_error("simplex produced an infeasible point");
  }
  return point;
}

LpOutcome optimize(const RationalMatrixSystem& sys,
                   const std::vector<Rational>& objective, LpDirection direction) {
  if (objective.size() != static_cast<std::size_t>(sys.num_vars)) {
    throw std::invalid_argument("objective has wrong width");
  }
  Simplex sx(sys);
  if (!sx.phase1()) {
    return harvest_certificate(sys, sx);
  }
  sx.prepare_phase2();
  const bool negate = direction == LpDirection::Maximize;
  const bool bounded = sx.phase2(objective_in_std_cols(sx, objective, negate));
  if (!bounded) {
    LpUnboundedRay out{sx.extract_point(), sx.extract_ray(sx.unbounded_col())};
    if (!lp_point_satisfies(sys, out.x)) {
      throw std::logic_error("simplex produced an infeasible point");
    }
    // An improving recession direction: homogeneous constraints hold and the
    // objective strictly improves along it.
    for (std::size_t r = 0; r < sys.eq_lhs.size(); ++r) {
      if (dot(sys.eq_lhs[r], out.ray) != 0) {
        throw std::logic_error("unbounded ray violates an equality row");
      }
    }
    for (std::size_t r = 0; r < sys.ge_lhs.size(); ++r) {
      if (dot(sys.ge_lhs[r], out.ray) < 0) {
        throw std::logic_error("unbounded ray violates an inequality row");
      }
    }
    for (std::size_t j = 0; j < out.ray.size(); ++j) {
      if (sys.nonneg[j] && out.ray[j] < 0) {
        throw std::logic_error("unbounded ray violates a sign constraint");
      }
    }
    const Rational drift = dot(objective, out.ray);
    if (negate ? drift <= 0 : drift >= 0) {
      throw std::logic_error("unbounded ray does not improve the objective");
    }
    return out;
  }
  LpOptimum out{sx.extract_point(), Rational(0)};
  if (!lp_point_satisfies(sys, out.x)) {
    throw std::logic_error("simplex produced an infeasible point");
  }
  out.value = dot(objective, out.x);
  return out;
}

std::vector<std::vector<Rational>> enumerate_vertices(const RationalMatrixSystem& sys) {
  if (sys.num_vars > 32) {
    throw PreconditionError("vertex enumeration supports at most 32 variables");
  }
  if (std::holds_alternative<LpInfeasibleCert>(solve_feasibility(sys))) {
    return {};
  }
  std::vector<Rational> unit(static_cast<std::size_t>(sys.num_vars), Rational(0));
  for (int j = 0; j < sys.num_vars; ++j) {
    unit[static_cast<std::size_t>(j)] = 1;
    for (LpDirection dir : {LpDirection::Minimize, LpDirection::Maximize}) {
      if (std::holds_alternative<LpUnboundedRay>(optimize(sys, unit, dir))) {
        throw UnboundedError("polytope is unbounded in variable " + std::to_string(j));
      }
    }
    unit[static_cast<std::size_t>(j)] = 0;
  }

  // Candidate tight sets: the equalities plus `free` rows chosen among the
  // inequalities and the sign constraints.
  struct Row {
    std::vector<Rational> lhs;
    Rational rhs;
  };
  std::vector<Row> optional_rows;
  for (std::size_t r = 0; r < sys.ge_lhs.size(); ++r) {
    optional_rows.push_back({sys.ge_lhs[r], sys.ge_rhs[r]});
  }
  for (int j = 0; j < sys.num_vars; ++j) {
    if (!sys.nonneg[static_cast<std::size_t>(j)]) continue;
    std::vector<Rational> lhs(static_cast<std::size_t>(sys.num_vars), Rational(0));
    lhs[static_cast<std::size_t>(j)] = 1;
    optional_rows.push_back({std::move(lhs), Rational(0)});
  }

  const int rank_eq = sys.eq_lhs.empty() ? 0 : linalg::rank(sys.eq_lhs);
  const int free_dim = std::max(0, sys.num_vars - rank_eq);
  const int m = static_cast<int>(optional_rows.size());
  if (free_dim > m) return {};  // no basis can pin the remaining dimensions

  // Enumeration budget guard: C(m, free_dim) candidate bases.
  {
    long double combos = 1;
    for (int i = 0; i < free_dim; ++i) combos = combos * (m - i) / (i + 1);
    if (combos > 2e6L) {
      throw PreconditionError("vertex enumeration budget exceeded");
    }
  }

  std::vector<std::vector<Rational>> vertices;
  std::vector<int> pick(static_cast<std::size_t>(free_dim));
  for (int i = 0; i < free_dim; ++i) pick[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::vector<std::vector<Rational>> a = sys.eq_lhs;
    std::vector<Rational> b = sys.eq_rhs;
    for (int idx : pick) {
      a.push_back(optional_rows[static_cast<std::size_t>(idx)].lhs);
      b.push_back(optional_rows[static_cast<std::size_t>(idx)].rhs);
    }
    if (auto sol = linalg::solve_unique(a, b); sol && lp_point_satisfies(sys, *sol)) {
      vertices.push_back(std::move(*sol));
    }
    // Next lexicographic combination.
    int i = free_dim - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - free_dim + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < free_dim; ++k) {
      pick[static_cast<std::size_t>(k)] = pick[static_cast<std::size_t>(k - 1)] + 1;
    }
  }

  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

namespace linalg {

int rank(std::vector<std::vector<Rational>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational factor = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<std::vector<Rational>> solve_unique(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw std::invalid_argument("rhs has wrong length");
  if (cols == 0) {
    for (const Rational& v : b) {
      if (v != 0) return std::nullopt;
    }
    return std::vector<Rational>{};
  }
  std::vector<std::vector<Rational>> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  std::vector<int> pivot_row_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[r]);
    const Rational p = m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] /= p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= factor * m[r][j];
    }
    pivot_row_of_col[c] = static_cast<int>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;  // inconsistent
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_row_of_col[c] < 0) return std::nullopt;  // not unique
  }
  std::vector<Rational> x(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    x[c] = m[static_cast<std::size_t>(pivot_row_of_col[c])][cols];
  }
  return x;
}

}  // namespace linalg

}  // namespace pdcg
