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

#ifndef PDCG_RATIONAL_HPP
#define PDCG_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace pdcg {

/// Exact arbitrary-precision rational. All game values, dividends and LP
/// coefficients in this library are of this type; no floating point anywhere.
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q". Returns nullopt on malformed text or a zero
/// denominator. The result is canonicalized (lowest terms, positive q).
std::optional<Rational> parse_rational(const std::string& text);

/// Renders in lowest terms as "p/q", or plain "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Exact binomial coefficient C(m, t); zero when t < 0 or t > m.
Rational binomial(int m, int t);

}  // namespace pdcg

#endif  // PDCG_RATIONAL_HPP
