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

#include "pdcg/coalition.hpp"

#include <stdexcept>

namespace pdcg {

namespace {

void check_player(int player) {
  if (player < 1 || player > Coalition::kMaxPlayers) {
    throw std::invalid_argument("player number out of range 1.." +
                                std::to_string(Coalition::kMaxPlayers));
  }
}

}  // namespace

Coalition Coalition::of(std::initializer_list<int> players) {
  std::uint32_t mask = 0;
  for (int p : players) {
    check_player(p);
    mask |= std::uint32_t{1} << (p - 1);
  }
  return Coalition(mask);
}

Coalition Coalition::of(const std::vector<int>& players) {
  std::uint32_t mask = 0;
  for (int p : players) {
    check_player(p);
    mask |= std::uint32_t{1} << (p - 1);
  }
  return Coalition(mask);
}

Coalition Coalition::singleton(int player) {
  check_player(player);
  return Coalition(std::uint32_t{1} << (player - 1));
}

Coalition Coalition::grand(int n) {
  if (n < 0 || n > kMaxPlayers) {
    throw std::invalid_argument("player count out of range 0.." +
                                std::to_string(kMaxPlayers));
  }
  if (n == 0) return Coalition();
  return Coalition((std::uint32_t{1} << n) - 1);
}

bool Coalition::contains(int player) const {
  check_player(player);
  return (mask_ >> (player - 1)) & 1u;
}

Coalition Coalition::with(int player) const {
  check_player(player);
  return Coalition(mask_ | (std::uint32_t{1} << (player - 1)));
}

Coalition Coalition::without(int player) const {
  check_player(player);
  return Coalition(mask_ & ~(std::uint32_t{1} << (player - 1)));
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int p = 1; p <= kMaxPlayers; ++p) {
    if ((mask_ >> (p - 1)) & 1u) out.push_back(p);
  }
  return out;
}

std::string Coalition::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : members()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  out += '}';
  return out;
}

bool size_lex_less(Coalition a, Coalition b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  const std::uint32_t diff = a.index() ^ b.index();
  if (diff == 0) return false;
  // The coalition owning the lowest differing bit has the smaller first
  // differing member, hence the lexicographically smaller member list.
  return (a.index() & (diff & -diff)) != 0;
}

}  // namespace pdcg
