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

#include "pdcg/incomplete.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pdcg {

IncompleteGame::IncompleteGame(int n, std::vector<std::pair<Coalition, Rational>> entries)
    : n_(n) {
  if (n < 1 || n > Coalition::kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." +
                                std::to_string(Coalition::kMaxPlayers));
  }
  const Coalition grand = Coalition::grand(n);
  for (auto& [coalition, value] : entries) {
    if (!coalition.subset_of(grand)) {
      throw std::invalid_argument("coalition " + coalition.to_string() +
                                  " is not within {1.." + std::to_string(n) + "}");
    }
    if (!values_.emplace(coalition.index(), std::move(value)).second) {
      throw std::invalid_argument("duplicate coalition " + coalition.to_string());
    }
  }
  auto [it, inserted] = values_.emplace(0, Rational(0));
  if (!inserted && it->second != 0) {
    throw std::invalid_argument("the empty coalition must have value 0");
  }
}

std::vector<Coalition> IncompleteGame::known() const {
  std::vector<Coalition> out;
  out.reserve(values_.size());
  for (const auto& [mask, value] : values_) out.push_back(Coalition(mask));
  return out;
}

const Rational& IncompleteGame::value(Coalition s) const {
  const auto it = values_.find(s.index());
  if (it == values_.end()) {
    throw std::invalid_argument("coalition " + s.to_string() + " has no known value");
  }
  return it->second;
}

bool ReducedIncomplete::has_size(int k) const {
  return std::binary_search(sizes.begin(), sizes.end(), k);
}

const Rational& ReducedIncomplete::at(int k) const {
  const auto it = std::lower_bound(sizes.begin(), sizes.end(), k);
  if (it == sizes.end() || *it != k) {
    throw std::invalid_argument("size " + std::to_string(k) + " is not in X");
  }
  return sigma[static_cast<std::size_t>(it - sizes.begin())];
}

bool is_extension(const Game& g, const IncompleteGame& inc) {
  if (g.players() != inc.players()) {
    throw DimensionMismatchError("player counts differ");
  }
  for (Coalition s : inc.known()) {
    if (g.value(s) != inc.value(s)) return false;
  }
  return true;
}

ReducedIncomplete reduce_partially_symmetric(const IncompleteGame& inc) {
  const int n = inc.players();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Coalition> first(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> value(static_cast<std::size_t>(n) + 1);
  for (Coalition s : inc.known()) {
    const auto k = static_cast<std::size_t>(s.size());
    if (!seen[k]) {
      seen[k] = true;
      first[k] = s;
      value[k] = inc.value(s);
    } else if (inc.value(s) != value[k]) {
      throw NotPartiallySymmetricError(first[k], s);
    }
  }
  ReducedIncomplete out;
  out.n = n;
  for (int k = 0; k <= n; ++k) {
    if (seen[static_cast<std::size_t>(k)]) {
      out.sizes.push_back(k);
      out.sigma.push_back(value[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

std::vector<Coalition> lattice_closure(std::span<const Coalition> family) {
  std::set<std::uint32_t> closed;
  for (Coalition s : family) closed.insert(s.index());
  std::vector<std::uint32_t> queue(closed.begin(), closed.end());
  while (!queue.empty()) {
    const std::uint32_t a = queue.back();
    queue.pop_back();
    // Pair the new element with everything already present.
    std::vector<std::uint32_t> snapshot(closed.begin(), closed.end());
    for (std::uint32_t b : snapshot) {
      for (std::uint32_t candidate : {a | b, a & b}) {
        if (closed.insert(candidate).second) queue.push_back(candidate);
      }
    }
  }
  std::vector<Coalition> out;
  out.reserve(closed.size());
  for (std::uint32_t mask : closed) out.push_back(Coalition(mask));
  return out;
}

Game chain_convex_extension(const IncompleteGame& inc) {
  const int n = inc.players();
  std::vector<Coalition> chain = inc.known();
  std::sort(chain.begin(), chain.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    if (!chain[i].subset_of(chain[i + 1])) {
      throw NotAChainError(chain[i], chain[i + 1]);
    }
  }

  // Positions of the known coalitions along a maximal chain are their sizes.
  std::vector<int> known_pos;
  std::vector<Rational> known_val;
  for (Coalition s : chain) {
    known_pos.push_back(s.size());
    known_val.push_back(inc.value(s));
  }

  // Chain values at every position 0..n: interpolate between known positions,
  // extrapolate the last known slope above the top.
  std::vector<Rational> val(static_cast<std::size_t>(n) + 1, Rational(0));
  for (std::size_t i = 0; i < known_pos.size(); ++i) {
    val[static_cast<std::size_t>(known_pos[i])] = known_val[i];
  }
  for (std::size_t i = 0; i + 1 < known_pos.size(); ++i) {
    const int a = known_pos[i];
    const int b = known_pos[i + 1];
    const Rational slope = (known_val[i + 1] - known_val[i]) / Rational(b - a);
    for (int q = a + 1; q < b; ++q) {
      val[static_cast<std::size_t>(q)] = known_val[i] + Rational(q - a) * slope;
    }
  }
  const int top = known_pos.back();
  if (top < n) {
    Rational slope(0);
    if (known_pos.size() >= 2) {
      const int a = known_pos[known_pos.size() - 2];
      const Rational& va = known_val[known_val.size() - 2];
      slope = (known_val.back() - va) / Rational(top - a);
    }
    for (int q = top + 1; q <= n; ++q) {
      val[static_cast<std::size_t>(q)] = known_val.back() + Rational(q - top) * slope;
    }
  }

  // Complete the chain, adding the smallest missing players first, and record
  // the per-step marginal of the player added at each position.
  std::vector<Rational> player_worth(static_cast<std::size_t>(n), Rational(0));
  Coalition current;  // chain starts at the empty coalition
  int position = 0;
  auto extend_towards = [&](Coalition target) {
    for (int p = 1; p <= n; ++p) {
      if (current.contains(p) || !target.contains(p)) continue;
      ++position;
      player_worth[static_cast<std::size_t>(p - 1)] =
          val[static_cast<std::size_t>(position)] -
          val[static_cast<std::size_t>(position - 1)];
      current = current.with(p);
    }
  };
  for (Coalition s : chain) extend_towards(s);
  extend_towards(Coalition::grand(n));

  return Game::additive(n, player_worth);
}

IntervalGame interval_hull(const Game& lower, const Game& upper) {
  if (lower.players() != upper.players()) {
    throw DimensionMismatchError("player counts differ");
  }
  const std::size_t size = lower.table_size();
  for (std::uint32_t s = 0; s < size; ++s) {
    if (lower.value(Coalition(s)) > upper.value(Coalition(s))) {
      throw CrossedBoundsError(Coalition(s));
    }
  }
  return IntervalGame{lower.players(), lower.values(), upper.values()};
}

}  // namespace pdcg
