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

#ifndef PDCG_RATIONAL_LP_HPP
#define PDCG_RATIONAL_LP_HPP

#include <optional>
#include <variant>
#include <vector>

#include "pdcg/errors.hpp"
#include "pdcg/rational.hpp"

namespace pdcg {

/// Constraint system over exact rationals:
///   eq_lhs x  = eq_rhs
///   ge_lhs x >= ge_rhs
///   x_j >= 0 for every j with nonneg[j]
/// Rows are kept in insertion order; solving is deterministic.
struct RationalMatrixSystem {
  int num_vars = 0;
  std::vector<std::vector<Rational>> eq_lhs;
  std::vector<Rational> eq_rhs;
  std::vector<std::vector<Rational>> ge_lhs;
  std::vector<Rational> ge_rhs;
  std::vector<bool> nonneg;

  static RationalMatrixSystem with_vars(int n, bool all_nonneg);
  void add_eq(std::vector<Rational> lhs, Rational rhs);
  void add_ge(std::vector<Rational> lhs, Rational rhs);
};

struct LpFeasiblePoint {
  std::vector<Rational> x;
};

/// Farkas-style refutation: with r := eq_mult^T A + ge_mult^T C it holds that
/// ge_mult >= 0, r_j <= 0 for nonnegative variables, r_j = 0 for free ones,
/// and eq_mult^T b + ge_mult^T d > 0 -- impossible for any feasible x.
struct LpInfeasibleCert {
  std::vector<Rational> eq_mult;
  std::vector<Rational> ge_mult;
};

struct LpUnboundedRay {
  std::vector<Rational> x;    // feasible point
  std::vector<Rational> ray;  // improving recession direction
};

struct LpOptimum {
  std::vector<Rational> x;
  Rational value;
};

using LpOutcome = std::variant<LpFeasiblePoint, LpInfeasibleCert, LpUnboundedRay, LpOptimum>;

enum class LpDirection { Minimize, Maximize };

/// Phase-1 exact simplex with Bland's rule. Returns LpFeasiblePoint or
/// LpInfeasibleCert; both are re-verified against the system before return.
LpOutcome solve_feasibility(const RationalMatrixSystem& sys);

/// Two-phase exact simplex. Returns LpOptimum, LpInfeasibleCert or
/// LpUnboundedRay (with a verified improving ray).
LpOutcome optimize(const RationalMatrixSystem& sys,
                   const std::vector<Rational>& objective, LpDirection direction);

/// All vertices (basic feasible solutions) of the polytope, deduplicated and
/// sorted lexicographically. Throws UnboundedError when the feasible set is
/// unbounded; throws PreconditionError when the documented size caps
/// (num_vars <= 32, bounded enumeration budget) are exceeded.
std::vector<std::vector<Rational>> enumerate_vertices(const RationalMatrixSystem& sys);

/// Exact check of every constraint.
bool lp_point_satisfies(const RationalMatrixSystem& sys, const std::vector<Rational>& x);

/// Exact check of the refutation identity described at LpInfeasibleCert.
bool lp_certificate_valid(const RationalMatrixSystem& sys, const LpInfeasibleCert& cert);

namespace linalg {

/// Row rank by exact Gaussian elimination.
int rank(std::vector<std::vector<Rational>> a);

/// Solves A x = b when the solution exists and is unique (full column rank
/// and consistent); nullopt otherwise.
std::optional<std::vector<Rational>> solve_unique(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace linalg

}  // namespace pdcg

#endif  // PDCG_RATIONAL_LP_HPP
