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

#ifndef PDCG_INCOMPLETE_HPP
#define PDCG_INCOMPLETE_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "pdcg/game.hpp"

namespace pdcg {

/// An incomplete game (N, K, v): values known only on the coalition family K.
/// The empty coalition always belongs to K with value 0.
class IncompleteGame {
 public:
  IncompleteGame(int n, std::vector<std::pair<Coalition, Rational>> entries);

  int players() const { return n_; }
  /// Known coalitions in canonical index order; the empty coalition first.
  std::vector<Coalition> known() const;
  bool knows(Coalition s) const { return values_.count(s.index()) != 0; }
  const Rational& value(Coalition s) const;
  std::size_t known_count() const { return values_.size(); }
  Coalition grand_coalition() const { return Coalition::grand(n_); }

 private:
  int n_;
  std::map<std::uint32_t, Rational> values_;
};

/// Reduced form (N, X, sigma) of a partially symmetric incomplete game:
/// values known per coalition size. 0 is always in X with sigma(0) = 0.
struct ReducedIncomplete {
  int n = 0;
  std::vector<int> sizes;       // X, strictly increasing, starts with 0
  std::vector<Rational> sigma;  // aligned with sizes

  bool has_size(int k) const;
  const Rational& at(int k) const;  // requires has_size(k)
  bool complete() const { return sizes.size() == static_cast<std::size_t>(n) + 1; }
};

/// Per-coalition closed rational intervals [lo(S), hi(S)].
struct IntervalGame {
  int n = 0;
  std::vector<Rational> lo, hi;
};

/// True iff g agrees with inc on every known coalition.
/// Throws DimensionMismatchError when the player counts differ.
bool is_extension(const Game& g, const IncompleteGame& inc);

/// Groups K by coalition size. Throws NotPartiallySymmetricError (with a
/// witnessing same-size pair) when two known values of the same size differ.
ReducedIncomplete reduce_partially_symmetric(const IncompleteGame& inc);

/// Smallest superset of the input closed under pairwise union and
/// intersection, computed as a fixpoint. Result sorted by canonical index.
std::vector<Coalition> lattice_closure(std::span<const Coalition> family);

/// Requires K to form a chain under inclusion (throws NotAChainError with an
/// incomparable pair otherwise). Completes K to a maximal chain by inserting
/// the lexicographically smallest missing players, fills the missing chain
/// values by linear interpolation in chain position (extrapolating the last
/// known slope upwards, slope 0 when only the empty coalition is known), and
/// returns the modular game of the resulting marginals. The output is always
/// a convex extension of the input.
Game chain_convex_extension(const IncompleteGame& inc);

/// Per-coalition hull [lower(S), upper(S)]. Throws CrossedBoundsError at the
/// first coalition (canonical order) where lower exceeds upper.
IntervalGame interval_hull(const Game& lower, const Game& upper);

}  // namespace pdcg

#endif  // PDCG_INCOMPLETE_HPP
