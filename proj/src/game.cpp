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

#include "pdcg/game.hpp"

#include <bit>
#include <stdexcept>

namespace pdcg {

namespace {

void check_player_count(int n) {
  if (n < 1 || n > Coalition::kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." +
                                std::to_string(Coalition::kMaxPlayers));
  }
}

std::uint32_t full_mask(int n) { return (std::uint32_t{1} << n) - 1; }

}  // namespace

Game::Game(int n) : n_(n) {
  check_player_count(n);
  values_.assign(std::size_t{1} << n, Rational(0));
}

Game::Game(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  check_player_count(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("value table must have 2^n entries");
  }
  if (values_[0] != 0) {
    throw std::invalid_argument("the empty coalition must have value 0");
  }
}

Game Game::unanimity(int n, Coalition t) {
  check_player_count(n);
  if (t.empty() || !t.subset_of(Coalition::grand(n))) {
    throw std::invalid_argument("unanimity coalition must be nonempty within {1..n}");
  }
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  for (std::uint32_t s = 0; s <= full_mask(n); ++s) {
    if (t.subset_of(Coalition(s))) values[s] = 1;
  }
  return Game(n, std::move(values));
}

Game Game::additive(int n, const std::vector<Rational>& worths) {
  check_player_count(n);
  if (worths.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("additive game needs one worth per player");
  }
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  for (std::uint32_t s = 1; s <= full_mask(n); ++s) {
    Rational total(0);
    for (int p = 1; p <= n; ++p) {
      if ((s >> (p - 1)) & 1u) total += worths[static_cast<std::size_t>(p - 1)];
    }
    values[s] = total;
  }
  return Game(n, std::move(values));
}

Game ReducedSymmetric::to_game() const {
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    values[mask] = s[static_cast<std::size_t>(std::popcount(mask))];
  }
  return Game(n, std::move(values));
}

DividendVector mobius(const Game& g) {
  const int n = g.players();
  std::vector<Rational> d = g.values();
  // In-place Moebius transform over the subset lattice.
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t mask = 0; mask < d.size(); ++mask) {
      if (mask & b) d[mask] -= d[mask ^ b];
    }
  }
  return DividendVector{n, std::move(d)};
}

Game inverse_mobius(const DividendVector& dv) {
  check_player_count(dv.n);
  if (dv.d.size() != (std::size_t{1} << dv.n)) {
    throw std::invalid_argument("dividend table must have 2^n entries");
  }
  if (dv.d[0] != 0) {
    throw std::invalid_argument("the empty coalition's dividend must be 0");
  }
  std::vector<Rational> v = dv.d;
  // Zeta transform: v(S) = sum of d(T) over T subset S.
  for (int bit = 0; bit < dv.n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t mask = 0; mask < v.size(); ++mask) {
      if (mask & b) v[mask] += v[mask ^ b];
    }
  }
  return Game(dv.n, std::move(v));
}

ClassReport classify(const Game& g) {
  const int n = g.players();
  const std::uint32_t full = full_mask(n);
  ClassReport report;

  // Monotonicity via single-player removals; a failing step is itself a
  // violating subset pair. Players scanned so that index(S-i) ascends.
  report.monotonic = true;
  for (std::uint32_t s = 1; s <= full && report.monotonic; ++s) {
    const Coalition cs{s};
    for (int p = n; p >= 1; --p) {
      if (!((s >> (p - 1)) & 1u)) continue;
      const Coalition smaller = cs.without(p);
      if (g.value(smaller) > g.value(cs)) {
        report.monotonic = false;
        report.monotonic_witness = {smaller, cs};
        break;
      }
    }
  }

  // Superadditivity over all disjoint nonempty pairs.
  report.superadditive = true;
  for (std::uint32_t s = 1; s <= full && report.superadditive; ++s) {
    const std::uint32_t rest = full & ~s;
    for (std::uint32_t t = rest; t != 0; t = (t - 1) & rest) {
      if (g.value(Coalition(s)) + g.value(Coalition(t)) > g.value(Coalition(s | t))) {
        report.superadditive = false;
        report.superadditive_witness = {Coalition(s), Coalition(t)};
        break;
      }
    }
  }

  // Convexity: for every player i and S subset T subset N-i, the marginal of
  // i may not shrink. Exhaustive subset-pair scan, O(n 3^{n-1}).
  report.convex = true;
  for (int i = 1; i <= n && report.convex; ++i) {
    const std::uint32_t ibit = std::uint32_t{1} << (i - 1);
    const std::uint32_t rest = full & ~ibit;
    std::vector<Rational> marginal(std::size_t{1} << n);
    for (std::uint32_t s = rest;; s = (s - 1) & rest) {
      marginal[s] = g.value(Coalition(s | ibit)) - g.value(Coalition(s));
      if (s == 0) break;
    }
    // Submasks of `rest` in increasing index order.
    for (std::uint32_t t = 0;; t = (t - rest) & rest) {
      for (std::uint32_t s = 0;; s = (s - t) & t) {
        if (s != t && marginal[s] > marginal[t]) {
          report.convex = false;
          report.convex_witness = ConvexityViolation{i, Coalition(s), Coalition(t)};
          break;
        }
        if (s == t) break;
      }
      if (!report.convex || t == rest) break;
    }
  }

  // Positivity: nonnegative Moebius transform.
  const DividendVector dv = mobius(g);
  report.positive = true;
  for (std::uint32_t s = 1; s <= full; ++s) {
    if (dv.d[s] < 0) {
      report.positive = false;
      report.positive_witness = Coalition(s);
      break;
    }
  }

  // Symmetry: compare against the first coalition seen of each size.
  report.symmetric = true;
  std::vector<std::uint32_t> first_of_size(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::uint32_t s = 1; s <= full && report.symmetric; ++s) {
    const auto k = static_cast<std::size_t>(std::popcount(s));
    if (!seen[k]) {
      seen[k] = true;
      first_of_size[k] = s;
    } else if (g.value(Coalition(s)) != g.value(Coalition(first_of_size[k]))) {
      report.symmetric = false;
      report.symmetric_witness = {Coalition(first_of_size[k]), Coalition(s)};
    }
  }

  if ((report.positive && !report.convex) || (report.convex && !report.superadditive)) {
    throw std::logic_error("class implication chain violated");
  }
  return report;
}

std::optional<MidpointViolation> midpoint_check(const Game& g) {
  const int n = g.players();
  const std::uint32_t full = full_mask(n);
  for (std::uint32_t s = 1; s < full; ++s) {
    const Coalition cs{s};
    const Rational two_v = 2 * g.value(cs);
    // i descending and j ascending so the witness is lexicographically first
    // in the canonical indices of (S, S-i, S+j).
    for (int i = n; i >= 1; --i) {
      if (!((s >> (i - 1)) & 1u)) continue;
      const Rational& v_removed = g.value(cs.without(i));
      for (int j = 1; j <= n; ++j) {
        if ((s >> (j - 1)) & 1u) continue;
        if (v_removed + g.value(cs.with(j)) < two_v) {
          return MidpointViolation{cs, i, j};
        }
      }
    }
  }
  return std::nullopt;
}

ReducedSymmetric reduce_symmetric(const Game& g) {
  const int n = g.players();
  const std::uint32_t full = full_mask(n);
  std::vector<Rational> s(static_cast<std::size_t>(n) + 1, Rational(0));
  std::vector<std::uint32_t> first_of_size(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (!seen[k]) {
      seen[k] = true;
      first_of_size[k] = mask;
      s[k] = g.value(Coalition(mask));
    } else if (g.value(Coalition(mask)) != s[k]) {
      throw NotSymmetricError(Coalition(first_of_size[k]), Coalition(mask));
    }
  }
  return ReducedSymmetric{n, std::move(s)};
}

std::vector<Rational> symmetric_dividends(const ReducedSymmetric& rs) {
  std::vector<Rational> delta(static_cast<std::size_t>(rs.n) + 1, Rational(0));
  for (int t = 1; t <= rs.n; ++t) {
    Rational acc = rs.s[static_cast<std::size_t>(t)];
    for (int u = 1; u < t; ++u) {
      acc -= binomial(t, u) * delta[static_cast<std::size_t>(u)];
    }
    delta[static_cast<std::size_t>(t)] = acc;
  }
  return delta;
}

}  // namespace pdcg
