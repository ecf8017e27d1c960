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

#include "pdcg/game_file.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace pdcg {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

Coalition parse_coalition(const Token& token, int n, int line) {
  const std::string& text = token.text;
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw ParseError("expected a coalition like {1,3}", line, token.column);
  }
  std::vector<int> players;
  const std::string inner = text.substr(1, text.size() - 2);
  if (!inner.empty()) {
    std::stringstream ss(inner);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (part.empty() || !std::all_of(part.begin(), part.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw ParseError("malformed player number '" + part + "'", line, token.column);
      }
      const long value = std::stol(part);
      if (value < 1 || value > n) {
        throw ParseError("player " + part + " outside 1.." + std::to_string(n), line,
                         token.column);
      }
      players.push_back(static_cast<int>(value));
    }
    if (inner.back() == ',') {
      throw ParseError("trailing comma in coalition", line, token.column);
    }
  }
  return Coalition::of(players);
}

}  // namespace

GameFile parse_game_file(const std::string& text) {
  GameFile file;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  bool have_players = false;
  std::set<std::uint32_t> seen;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::vector<Token> tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (!have_players) {
      if (tokens[0].text != "players" || tokens.size() != 2) {
        throw ParseError("expected 'players <n>' first", line_no, tokens[0].column);
      }
      const std::string& count = tokens[1].text;
      if (count.empty() || !std::all_of(count.begin(), count.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          })) {
        throw ParseError("malformed player count", line_no, tokens[1].column);
      }
      const long n = std::stol(count);
      if (n < 1 || n > Coalition::kMaxPlayers) {
        throw ParseError("player count outside 1.." +
                             std::to_string(Coalition::kMaxPlayers),
                         line_no, tokens[1].column);
      }
      file.players = static_cast<int>(n);
      have_players = true;
      continue;
    }
    if (tokens[0].text == "kind") {
      if (tokens.size() != 2 ||
          (tokens[1].text != "complete" && tokens[1].text != "incomplete")) {
        throw ParseError("kind must be 'complete' or 'incomplete'", line_no,
                         tokens[0].column);
      }
      if (file.kind) {
        throw ParseError("duplicate kind line", line_no, tokens[0].column);
      }
      file.kind = tokens[1].text;
      continue;
    }
    if (tokens.size() != 2) {
      throw ParseError("expected '<coalition> <value>'", line_no, tokens[0].column);
    }
    const Coalition coalition = parse_coalition(tokens[0], file.players, line_no);
    const auto value = parse_rational(tokens[1].text);
    if (!value) {
      throw ParseError("malformed rational '" + tokens[1].text + "'", line_no,
                       tokens[1].column);
    }
    if (!seen.insert(coalition.index()).second) {
      throw ParseError("duplicate coalition " + coalition.to_string(), line_no,
                       tokens[0].column);
    }
    file.entries.push_back({coalition, *value, line_no});
  }
  if (!have_players) {
    throw ParseError("missing 'players <n>' line", std::max(line_no, 1), 1);
  }
  return file;
}

Game to_game(const GameFile& file) {
  if (file.kind && *file.kind != "complete") {
    throw ParseError("expected a complete game file", 1, 1);
  }
  const int n = file.players;
  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  std::vector<bool> present(values.size(), false);
  present[0] = true;
  for (const GameFileEntry& entry : file.entries) {
    if (entry.coalition.empty() && entry.value != 0) {
      throw ParseError("the empty coalition must have value 0", entry.line, 1);
    }
    values[entry.coalition.index()] = entry.value;
    present[entry.coalition.index()] = true;
  }
  for (std::uint32_t s = 1; s < values.size(); ++s) {
    if (!present[s]) {
      throw ParseError("complete game is missing coalition " + Coalition(s).to_string(),
                       1, 1);
    }
  }
  return Game(n, std::move(values));
}

IncompleteGame to_incomplete(const GameFile& file, bool* inserted_empty) {
  std::vector<std::pair<Coalition, Rational>> entries;
  bool has_empty = false;
  for (const GameFileEntry& entry : file.entries) {
    if (entry.coalition.empty()) {
      has_empty = true;
      if (entry.value != 0) {
        throw ParseError("the empty coalition must have value 0", entry.line, 1);
      }
    }
    entries.emplace_back(entry.coalition, entry.value);
  }
  if (inserted_empty != nullptr) *inserted_empty = !has_empty;
  return IncompleteGame(file.players, std::move(entries));
}

namespace {

std::string serialize(int n, const char* kind,
                      std::vector<std::pair<Coalition, Rational>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return size_lex_less(a.first, b.first); });
  std::string out = "players " + std::to_string(n) + "\n";
  out += "kind ";
  out += kind;
  out += '\n';
  for (const auto& [coalition, value] : entries) {
    out += coalition.to_string() + " " + to_string(value) + "\n";
  }
  return out;
}

}  // namespace

std::string serialize_game_file(const Game& game) {
  std::vector<std::pair<Coalition, Rational>> entries;
  for (std::uint32_t s = 1; s < game.table_size(); ++s) {
    entries.emplace_back(Coalition(s), game.value(Coalition(s)));
  }
  return serialize(game.players(), "complete", std::move(entries));
}

std::string serialize_game_file(const IncompleteGame& inc) {
  std::vector<std::pair<Coalition, Rational>> entries;
  for (Coalition s : inc.known()) {
    entries.emplace_back(s, inc.value(s));
  }
  return serialize(inc.players(), "incomplete", std::move(entries));
}

}  // namespace pdcg
