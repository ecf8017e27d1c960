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

#include "pdcg/symmetric_convex.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdcg/rational_lp.hpp"

namespace pdcg {

namespace {

Rational line_at(int x1, const Rational& y1, int x2, const Rational& y2, int k) {
  return y1 + Rational(k - x1) * (y2 - y1) / Rational(x2 - x1);
}

void require_extendable_bounded(const ReducedIncomplete& r) {
  if (!sc_extendable(r).extendable) {
    throw PreconditionError("instance has no symmetric convex extension");
  }
  if (!sc_bounded(r)) {
    throw PreconditionError("set of symmetric convex extensions is unbounded");
  }
}

// Neighbours of a gap size k within X: indices of the closest known sizes.
struct GapNeighbours {
  int i1 = -1, i2 = -1;  // two closest below, i1 < i2 < k (i1 may be absent)
  int j1 = -1, j2 = -1;  // two closest above, k < j1 < j2 (j2 may be absent)
};

GapNeighbours neighbours(const std::vector<int>& sizes, int k) {
  GapNeighbours out;
  const auto above = std::upper_bound(sizes.begin(), sizes.end(), k);
  const auto below_count = above - sizes.begin();
  if (below_count >= 1) out.i2 = sizes[static_cast<std::size_t>(below_count - 1)];
  if (below_count >= 2) out.i1 = sizes[static_cast<std::size_t>(below_count - 2)];
  const auto above_count = sizes.end() - above;
  if (above_count >= 1) out.j1 = *above;
  if (above_count >= 2) out.j2 = *(above + 1);
  return out;
}

Rational lower_value(const ReducedIncomplete& r, int k) {
  const GapNeighbours nb = neighbours(r.sizes, k);
  const bool has_i = nb.i1 >= 0;
  const bool has_j = nb.j2 >= 0;
  Rational from_below, from_above;
  if (has_i) from_below = line_at(nb.i1, r.at(nb.i1), nb.i2, r.at(nb.i2), k);
  if (has_j) from_above = line_at(nb.j1, r.at(nb.j1), nb.j2, r.at(nb.j2), k);
  if (!has_j) return from_below;
  if (!has_i) return from_above;
  return std::max(from_below, from_above);
}

Rational upper_value(const ReducedIncomplete& r, int k) {
  const GapNeighbours nb = neighbours(r.sizes, k);
  return line_at(nb.i2, r.at(nb.i2), nb.j1, r.at(nb.j1), k);
}

}  // namespace

bool reduced_midpoint_convex(const ReducedSymmetric& s) {
  for (int k = 1; k + 1 <= s.n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (s.s[i - 1] + s.s[i + 1] < 2 * s.s[i]) return false;
  }
  return true;
}

ScExtendability sc_extendable(const ReducedIncomplete& r) {
  for (std::size_t i = 0; i + 2 < r.sizes.size(); ++i) {
    const int k1 = r.sizes[i];
    const int k2 = r.sizes[i + 1];
    const int k3 = r.sizes[i + 2];
    const Rational bound = line_at(k1, r.sigma[i], k3, r.sigma[i + 2], k2);
    if (r.sigma[i + 1] > bound) {
      return {false, ScTriple{k1, k2, k3, r.sigma[i + 1], bound}};
    }
  }
  return {true, std::nullopt};
}

bool sc_bounded(const ReducedIncomplete& r) {
  if (!sc_extendable(r).extendable) {
    throw PreconditionError("instance has no symmetric convex extension");
  }
  return r.sizes.size() > 2 && r.sizes.back() == r.n;
}

ScBounds sc_bounds(const ReducedIncomplete& r) {
  require_extendable_bounded(r);
  ScBounds out;
  out.lower.n = out.upper.n = r.n;
  out.lower.s.resize(static_cast<std::size_t>(r.n) + 1);
  out.upper.s.resize(static_cast<std::size_t>(r.n) + 1);
  for (int k = 0; k <= r.n; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (r.has_size(k)) {
      out.lower.s[i] = out.upper.s[i] = r.at(k);
    } else {
      out.lower.s[i] = lower_value(r, k);
      out.upper.s[i] = upper_value(r, k);
    }
  }
  return out;
}

ScExtremeSet sc_extreme_games(const ReducedIncomplete& r) {
  const ScBounds bounds = sc_bounds(r);
  ScExtremeSet out;
  out.upper_game = bounds.upper;
  for (int k = 1; k < r.n; ++k) {
    if (r.has_size(k)) continue;
    const GapNeighbours nb = neighbours(r.sizes, k);
    const int i = nb.i2;
    const int j = nb.j1;
    const Rational& low_k = bounds.lower.s[static_cast<std::size_t>(k)];
    ReducedSymmetric game;
    game.n = r.n;
    game.s.resize(static_cast<std::size_t>(r.n) + 1);
    for (int m = 0; m <= r.n; ++m) {
      const auto mi = static_cast<std::size_t>(m);
      if (r.has_size(m)) {
        game.s[mi] = r.at(m);
      } else if (m < i || m > j) {
        game.s[mi] = bounds.upper.s[mi];
      } else if (m == k) {
        game.s[mi] = low_k;
      } else if (m > k) {  // k < m < j
        game.s[mi] = line_at(k, low_k, j, r.at(j), m);
      } else {  // i < m < k
        game.s[mi] = line_at(i, r.at(i), k, low_k, m);
      }
    }
    if (!reduced_midpoint_convex(game)) {
      throw std::logic_error("extreme game fails the symmetric convexity test");
    }
    out.gap_extremes.emplace(k, std::move(game));
  }
  return out;
}

bool sc_membership(const ReducedSymmetric& s, const ReducedIncomplete& r) {
  if (s.n != r.n) {
    throw DimensionMismatchError("player counts differ");
  }
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    if (s.s[static_cast<std::size_t>(r.sizes[i])] != r.sigma[i]) return false;
  }
  return reduced_midpoint_convex(s);
}

ScDecomposition sc_decompose(const ReducedSymmetric& s, const ReducedIncomplete& r) {
  if (!sc_membership(s, r)) {
    throw NotAMemberError("game is not a symmetric convex extension of the instance");
  }
  require_extendable_bounded(r);

  // Exact barycentric coordinates over the extreme-game system: nonnegative
  // coefficients, one value equation per gap size plus the sum-to-one row.
  // When the extension set is a simplex the solution is unique; members
  // outside the system's hull (possible beyond the simplex shapes) are
  // rejected.
  const ScExtremeSet extremes = sc_extreme_games(r);
  std::vector<const ReducedSymmetric*> basis;
  basis.reserve(extremes.gap_extremes.size() + 1);
  for (const auto& [k, game] : extremes.gap_extremes) basis.push_back(&game);
  basis.push_back(&extremes.upper_game);

  const int num_games = static_cast<int>(basis.size());
  RationalMatrixSystem sys = RationalMatrixSystem::with_vars(num_games, true);
  for (int m = 0; m <= r.n; ++m) {
    if (r.has_size(m)) continue;
    std::vector<Rational> row(static_cast<std::size_t>(num_games));
    for (int b = 0; b < num_games; ++b) {
      row[static_cast<std::size_t>(b)] =
          basis[static_cast<std::size_t>(b)]->s[static_cast<std::size_t>(m)];
    }
    sys.add_eq(std::move(row), s.s[static_cast<std::size_t>(m)]);
  }
  sys.add_eq(std::vector<Rational>(static_cast<std::size_t>(num_games), Rational(1)),
             Rational(1));

  const LpOutcome outcome = solve_feasibility(sys);
  const auto* point = std::get_if<LpFeasiblePoint>(&outcome);
  if (point == nullptr) {
    throw NotAMemberError(
        "game is not a convex combination of the extreme-game system");
  }
  ScDecomposition out;
  std::size_t which = 0;
  for (const auto& [k, game] : extremes.gap_extremes) {
    out.gap_coeffs.emplace(k, point->x[which++]);
  }
  out.upper_coeff = point->x[which];
  return out;
}

}  // namespace pdcg
