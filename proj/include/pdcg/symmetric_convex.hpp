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

#ifndef PDCG_SYMMETRIC_CONVEX_HPP
#define PDCG_SYMMETRIC_CONVEX_HPP

#include <map>
#include <optional>
#include <vector>

#include "pdcg/game.hpp"
#include "pdcg/incomplete.hpp"

namespace pdcg {

/// A consecutive size triple k1 < k2 < k3 of X whose secant test fails:
/// sigma(k2) > sigma(k1) + (k2-k1) * (sigma(k3)-sigma(k1)) / (k3-k1).
struct ScTriple {
  int k1 = 0, k2 = 0, k3 = 0;
  Rational value;  // sigma(k2)
  Rational bound;  // the secant value at k2
};

struct ScExtendability {
  bool extendable = false;
  std::optional<ScTriple> violation;
};

/// Pointwise lower and upper games over coalition sizes; both agree with
/// sigma on X.
struct ScBounds {
  ReducedSymmetric lower;
  ReducedSymmetric upper;
};

/// The extreme games of the set of symmetric convex extensions: one game per
/// unknown size ("gap") plus the upper game. Structure size is always
/// n - |X| + 2; entries may coincide only in degenerate (collinear) inputs.
struct ScExtremeSet {
  ReducedSymmetric upper_game;
  std::map<int, ReducedSymmetric> gap_extremes;  // key: the gap size k
};

/// Convex coefficients over ScExtremeSet, summing to one.
struct ScDecomposition {
  Rational upper_coeff;
  std::map<int, Rational> gap_coeffs;
};

/// Secant test over all consecutive size triples of X. Instances with
/// |X| <= 2 are always extendable.
ScExtendability sc_extendable(const ReducedIncomplete& r);

/// True iff |X| > 2 and n is in X. Throws PreconditionError when the
/// instance is not extendable.
bool sc_bounded(const ReducedIncomplete& r);

/// Lower game via the max of the two neighbouring secant lines (one-sided at
/// the boundary), upper game via line-chart interpolation between the
/// nearest known sizes. Requires extendable and bounded.
ScBounds sc_bounds(const ReducedIncomplete& r);

/// The piecewise-linear extreme games s^k for every gap k, plus the upper
/// game. Requires extendable and bounded. Every returned game is a member of
/// the extension set.
ScExtremeSet sc_extreme_games(const ReducedIncomplete& r);

/// True iff s agrees with sigma on X and satisfies the size-wise midpoint
/// inequalities (s(k-1) + s(k+1))/2 >= s(k) for every interior k.
bool sc_membership(const ReducedSymmetric& s, const ReducedIncomplete& r);

/// Exact convex coefficients reconstructing s over sc_extreme_games(r)
/// (unique whenever that system is affinely independent). Throws
/// NotAMemberError when s is not a member or not a combination of the
/// system, and PreconditionError when the extension set is not bounded.
ScDecomposition sc_decompose(const ReducedSymmetric& s, const ReducedIncomplete& r);

/// Midpoint inequalities of a size-indexed sequence (the symmetric-convexity
/// test on reduced forms).
bool reduced_midpoint_convex(const ReducedSymmetric& s);

}  // namespace pdcg

#endif  // PDCG_SYMMETRIC_CONVEX_HPP
