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

#ifndef PDCG_GAME_FILE_HPP
#define PDCG_GAME_FILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pdcg/game.hpp"
#include "pdcg/incomplete.hpp"

namespace pdcg {

/// Line-oriented game file:
///
///   # comment
///   players 3
///   kind complete          (optional: "complete" | "incomplete")
///   {} 0                   (optional; implied)
///   {1} 1
///   {1,2} 4
///   {1,2,3} 9
///
/// One coalition entry per line: a sorted member list without spaces,
/// then a value as an integer or "p/q". Duplicate coalitions are rejected.
struct GameFileEntry {
  Coalition coalition;
  Rational value;
  int line = 0;
};

struct GameFile {
  int players = 0;
  std::optional<std::string> kind;
  std::vector<GameFileEntry> entries;
};

/// Throws ParseError with 1-based line/column on malformed input.
GameFile parse_game_file(const std::string& text);

/// Requires every nonempty coalition to be present (and kind, when given, to
/// be "complete"); throws ParseError otherwise.
Game to_game(const GameFile& file);

/// Accepts any entry list; a missing empty coalition is inserted with value 0
/// and reported through inserted_empty.
IncompleteGame to_incomplete(const GameFile& file, bool* inserted_empty = nullptr);

/// Canonical text form: header, then entries sorted by size and member list.
/// Output of these serializers parses back to an equal object.
std::string serialize_game_file(const Game& game);
std::string serialize_game_file(const IncompleteGame& inc);

}  // namespace pdcg

#endif  // PDCG_GAME_FILE_HPP
