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

#ifndef PDCG_COALITION_HPP
#define PDCG_COALITION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pdcg {

/// A coalition over players {1..n}, n <= 24, stored as a bitmask. Player p
/// occupies bit p-1, so the mask doubles as the dense index in 0..2^n-1 and
/// the empty coalition has index 0.
class Coalition {
 public:
  static constexpr int kMaxPlayers = 24;

  constexpr Coalition() = default;
  explicit constexpr Coalition(std::uint32_t mask) : mask_(mask) {}

  static Coalition of(std::initializer_list<int> players);
  static Coalition of(const std::vector<int>& players);
  static Coalition singleton(int player);
  /// The grand coalition {1..n}.
  static Coalition grand(int n);

  constexpr std::uint32_t index() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(int player) const;
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool disjoint_from(Coalition other) const {
    return (mask_ & other.mask_) == 0;
  }

  Coalition with(int player) const;
  Coalition without(int player) const;
  constexpr Coalition unite(Coalition o) const { return Coalition(mask_ | o.mask_); }
  constexpr Coalition intersect(Coalition o) const { return Coalition(mask_ & o.mask_); }
  constexpr Coalition minus(Coalition o) const { return Coalition(mask_ & ~o.mask_); }

  /// Ascending player numbers.
  std::vector<int> members() const;
  /// "{1,3}"; the empty coalition renders as "{}".
  std::string to_string() const;

  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  friend constexpr std::strong_ordering operator<=>(Coalition a, Coalition b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint32_t mask_ = 0;
};

/// Print order for tables: by size, then lexicographically by the sorted
/// member list ({1,4} before {2,3}). Distinct from the canonical index order.
bool size_lex_less(Coalition a, Coalition b);

}  // namespace pdcg

#endif  // PDCG_COALITION_HPP
