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

#ifndef PDCG_GAME_HPP
#define PDCG_GAME_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pdcg/coalition.hpp"
#include "pdcg/errors.hpp"
#include "pdcg/rational.hpp"

namespace pdcg {

/// A complete TU game: one exact rational per coalition, v({}) = 0.
/// Immutable after construction; every operation below is pure.
class Game {
 public:
  /// The zero game on n players.
  explicit Game(int n);
  /// Takes the full value table indexed by coalition index (size 2^n).
  /// Throws std::invalid_argument if n is out of 1..24, the table size is
  /// wrong, or the empty coalition's value is nonzero.
  Game(int n, std::vector<Rational> values);

  int players() const { return n_; }
  Coalition grand_coalition() const { return Coalition::grand(n_); }
  std::size_t table_size() const { return values_.size(); }
  const Rational& value(Coalition s) const { return values_[s.index()]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const Game& a, const Game& b) = default;

  static Game unanimity(int n, Coalition t);
  /// v(S) = sum of per-player worths.
  static Game additive(int n, const std::vector<Rational>& worths);

 private:
  int n_;
  std::vector<Rational> values_;
};

/// Harsanyi dividends of a game, indexed like a Game's value table; d({}) = 0.
struct DividendVector {
  int n = 0;
  std::vector<Rational> d;

  const Rational& at(Coalition t) const { return d[t.index()]; }
  friend bool operator==(const DividendVector& a, const DividendVector& b) = default;
};

/// Violation of the nondecreasing-marginal-contribution test: for player i,
/// v(small + i) - v(small) > v(large + i) - v(large) with small <= large.
struct ConvexityViolation {
  int player = 0;
  Coalition small, large;
};

struct ClassReport {
  bool monotonic = false;
  bool superadditive = false;
  bool convex = false;
  bool positive = false;
  bool symmetric = false;

  // First violation found per failed class, in a fixed deterministic order.
  std::optional<std::pair<Coalition, Coalition>> monotonic_witness;      // (T, S), T subset S
  std::optional<std::pair<Coalition, Coalition>> superadditive_witness;  // disjoint (S, T)
  std::optional<ConvexityViolation> convex_witness;
  std::optional<Coalition> positive_witness;  // coalition with negative dividend
  std::optional<std::pair<Coalition, Coalition>> symmetric_witness;  // equal size, different value
};

/// A midpoint violation (v(S-i) + v(S+j))/2 < v(S) with i in S, j outside S.
struct MidpointViolation {
  Coalition s;
  int removed = 0;  // i
  int added = 0;    // j
};

/// Size-indexed form (N, s) of a symmetric game; s[0] = 0, s.size() = n+1.
struct ReducedSymmetric {
  int n = 0;
  std::vector<Rational> s;

  const Rational& at(int size) const { return s[static_cast<std::size_t>(size)]; }
  /// Expands back to the dense symmetric game.
  Game to_game() const;
  friend bool operator==(const ReducedSymmetric& a, const ReducedSymmetric& b) = default;
};

/// Moebius transform: d(T) = sum over S subset T of (-1)^{|T|-|S|} v(S).
DividendVector mobius(const Game& g);

/// Zeta transform; exact inverse of mobius. Requires d({}) = 0.
Game inverse_mobius(const DividendVector& d);

/// Decides the five game classes, with a concrete witness per failure.
/// Convexity uses the marginal-contribution characterisation; positivity the
/// sign of the Moebius transform.
ClassReport classify(const Game& g);

/// First (S, i, j) with (v(S-i) + v(S+j))/2 < v(S), ordered by the canonical
/// coalition index of (S, S-i, S+j); nullopt when every instance holds.
std::optional<MidpointViolation> midpoint_check(const Game& g);

/// Throws NotSymmetricError (with witness pair) when g is not symmetric.
ReducedSymmetric reduce_symmetric(const Game& g);

/// Dividend recursion specialised to reduced symmetric games: per-size
/// dividends delta with s(m) = sum_t C(m,t) delta_t. delta[0] = 0.
std::vector<Rational> symmetric_dividends(const ReducedSymmetric& s);

}  // namespace pdcg

#endif  // PDCG_GAME_HPP
