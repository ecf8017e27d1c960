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

#include "pdcg/rational.hpp"

#include <cctype>

namespace pdcg {

namespace {

// Strict decimal integer: optional leading '-', then one or more digits.
// mpz_set_str is laxer (it skips whitespace), so validate first.
bool is_integer_token(const std::string& s) {
  std::size_t i = 0;
  if (i < s.size() && s[i] == '-') ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text)) return std::nullopt;
    return Rational(mpz_class(text), 1);
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den)) return std::nullopt;
  mpz_class q(den);
  if (q == 0) return std::nullopt;
  Rational r(mpz_class(num), q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  return value.get_str();
}

Rational binomial(int m, int t) {
  if (t < 0 || t > m || m < 0) return Rational(0);
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(m),
               static_cast<unsigned long>(t));
  return Rational(result);
}

}  // namespace pdcg
