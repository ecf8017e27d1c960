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

#ifndef PDCG_ERRORS_HPP
#define PDCG_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "pdcg/coalition.hpp"

namespace pdcg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two objects built over different player counts were combined.
struct DimensionMismatchError : Error {
  using Error::Error;
};

/// A complete game was required to be symmetric but is not; carries the first
/// witnessing pair of equal-size coalitions with different values.
struct NotSymmetricError : Error {
  NotSymmetricError(Coalition a, Coalition b)
      : Error("game is not symmetric: v(" + a.to_string() + ") != v(" +
              b.to_string() + ")"),
        first(a),
        second(b) {}
  Coalition first, second;
};

struct NotPartiallySymmetricError : Error {
  NotPartiallySymmetricError(Coalition a, Coalition b)
      : Error("incomplete game is not partially symmetric: v(" + a.to_string() +
              ") != v(" + b.to_string() + ")"),
        first(a),
        second(b) {}
  Coalition first, second;
};

/// The known-coalition family was required to be a chain; carries an
/// incomparable pair.
struct NotAChainError : Error {
  NotAChainError(Coalition a, Coalition b)
      : Error("coalitions are incomparable: " + a.to_string() + " and " +
              b.to_string()),
        first(a),
        second(b) {}
  Coalition first, second;
};

struct CrossedBoundsError : Error {
  explicit CrossedBoundsError(Coalition s)
      : Error("lower bound exceeds upper bound at " + s.to_string()),
        witness(s) {}
  Coalition witness;
};

/// A documented operation precondition does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

struct NotAMemberError : Error {
  using Error::Error;
};

struct UnboundedError : Error {
  using Error::Error;
};

struct StructureMismatchError : Error {
  using Error::Error;
};

/// Closed-form extendability test failed; the message states the violated
/// inequality (a Farkas certificate can be obtained from pos_extendable).
struct NotExtendableError : Error {
  using Error::Error;
};

struct SizeBoundViolatedError : Error {
  using Error::Error;
};

struct InfeasibleError : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(const std::string& what, int line_arg, int column_arg)
      : Error(what + " (line " + std::to_string(line_arg) + ", column " +
              std::to_string(column_arg) + ")"),
        line(line_arg),
        column(column_arg) {}
  int line, column;
};

}  // namespace pdcg

#endif  // PDCG_ERRORS_HPP
