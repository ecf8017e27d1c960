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

#ifndef PDCG_POSITIVE_HPP
#define PDCG_POSITIVE_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "pdcg/game.hpp"
#include "pdcg/incomplete.hpp"
#include "pdcg/symmetric_convex.hpp"

namespace pdcg {

/// Nonnegative dividends witnessing a positive extension: for every known S,
/// the dividends of the subsets of S sum to v(S). Zero entries are omitted.
struct PositiveWitness {
  int n = 0;
  std::map<Coalition, Rational> dividends;
};

/// Farkas refutation of positive extendability: y over the known nonempty
/// coalitions with sum_{S in K, S superset T} y(S) >= 0 for every nonempty T
/// and sum v(S) y(S) <= -1.
struct FarkasCertificate {
  int n = 0;
  std::map<Coalition, Rational> y;
};

using FeasibilityOutcome = std::variant<PositiveWitness, FarkasCertificate>;

/// Dividend support of a positive extension, with its (strictly positive)
/// dividend values.
struct BalancedCollection {
  std::vector<Coalition> support;  // canonical index order
  std::map<Coalition, Rational> dividends;
};

struct PositiveExtreme {
  BalancedCollection collection;
  Game game;
};

using PositiveExtremeSet = std::vector<PositiveExtreme>;

struct DisjointCaseResult {
  std::vector<PositiveExtreme> extremes;
  Game lower;
  Game upper;
};

struct DownClosedCaseResult {
  /// Forced dividends per known coalition; the grand coalition's entry is the
  /// leftover mass placed on the parameter coalition C.
  std::map<Coalition, Rational> delta;
  std::vector<std::pair<Coalition, Game>> extremes;  // (C, v^C)
  Game lower;
  Game upper;
};

struct SymmetricPositivityReport {
  ReducedSymmetric lower;
  bool positive = false;
  /// First size with a negative symmetric dividend, and its value.
  std::optional<std::pair<int, Rational>> negative_dividend;
};

/// Decides positive extendability. Certificate-first: the dual inequality
/// system (rows deduplicated by the subset-of-K membership pattern) is solved
/// exactly; a feasible dual point is the certificate, otherwise the primal
/// equality system yields a witness. Both branches are verified before
/// return. The general path requires n <= max_n.
FeasibilityOutcome pos_extendable(const IncompleteGame& inc, int max_n = 16);

/// True iff the grand coalition is known. Throws PreconditionError when the
/// instance is not positively extendable.
bool pos_bounded(const IncompleteGame& inc);

/// Same verdicts as pos_extendable, but every known coalition must have size
/// at most c (throws SizeBoundViolatedError otherwise); only the dual rows
/// reachable from K are ever built, so large n is fine.
FeasibilityOutcome pos_extendable_bounded_size(const IncompleteGame& inc, int c);

/// All extreme games of the set of positive extensions, enumerated as the
/// dividend supports whose restricted equality system has a unique, strictly
/// positive solution. Requires a positively extendable instance with the
/// grand coalition known (UnboundedError otherwise) and n <= max_n.
PositiveExtremeSet pos_extreme_games(const IncompleteGame& inc, int max_n = 5);

/// Validation helpers used by the post-conditions and the test suites.
bool verify_positive_witness(const IncompleteGame& inc, const PositiveWitness& w);
bool verify_farkas_certificate(const IncompleteGame& inc, const FarkasCertificate& c);

/// Closed forms for K = {∅, S_1, ..., S_{k-1}, N} with pairwise disjoint S_i.
/// Throws StructureMismatchError when K has a different shape and
/// NotExtendableError when v(S_i) < 0 or v(N) < sum v(S_i).
DisjointCaseResult pos_disjoint_case(const IncompleteGame& inc);

/// Closed forms for down-closed K \ {N} with N known. Throws
/// StructureMismatchError on shape mismatch and NotExtendableError (naming
/// the first negative Delta) when no positive extension exists.
DownClosedCaseResult pos_downclosed_case(const IncompleteGame& inc);

/// Per-size exact LP envelope of symmetric positive extensions: dividends
/// d_t >= 0 per size with sum_t C(k,t) d_t = sigma(k) on X. Throws
/// InfeasibleError when no such dividends exist and UnboundedError when some
/// maximum is unbounded (n not in X).
ScBounds sp_per_coalition_bounds(const ReducedIncomplete& r);

/// Bounds of symmetric positive extensions when K consists of the grand
/// coalition and every coalition of size at most k with per-size values:
/// lower = Gamma (the size-k value) on unknown coalitions, upper = v(N).
std::pair<Game, Game> pos_symmetric_prefix_bounds(int n, int k,
                                                  const std::vector<Rational>& size_values,
                                                  const Rational& grand_value);

/// Assembles the pointwise lower game of sp_per_coalition_bounds and reports
/// whether it is itself symmetric positive.
SymmetricPositivityReport lower_game_positivity_regression(const ReducedIncomplete& r);

}  // namespace pdcg

#endif  // PDCG_POSITIVE_HPP
