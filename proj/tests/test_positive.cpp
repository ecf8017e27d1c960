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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "pdcg/positive.hpp"
#include "pdcg/rational_lp.hpp"
#include "test_util.hpp"

using namespace pdcg;
using pdcg::testing::Rng;

namespace {

IncompleteGame certificate_fixture() {
  return IncompleteGame(
      2, {{Coalition::of({1}), Rational(2)}, {Coalition::of({1, 2}), Rational(1)}});
}

IncompleteGame witness_fixture() {
  return IncompleteGame(
      3, {{Coalition::of({1, 2}), Rational(1)}, {Coalition::grand(3), Rational(3)}});
}

// The primal dividend system of an incomplete game over all nonempty
// coalitions; shared oracle for envelopes and vertex enumeration.
RationalMatrixSystem primal_system(const IncompleteGame& inc) {
  const int n = inc.players();
  const int num_vars = (1 << n) - 1;
  auto sys = RationalMatrixSystem::with_vars(num_vars, true);
  for (Coalition s : inc.known()) {
    if (s.empty()) continue;
    std::vector<Rational> row(static_cast<std::size_t>(num_vars), Rational(0));
    for (std::uint32_t t = s.index(); t != 0; t = (t - 1) & s.index()) {
      row[static_cast<std::size_t>(t - 1)] = 1;
    }
    sys.add_eq(std::move(row), inc.value(s));
  }
  return sys;
}

std::vector<Rational> dividend_point(const PositiveExtreme& extreme, int n) {
  std::vector<Rational> point(static_cast<std::size_t>((1 << n) - 1), Rational(0));
  for (const auto& [t, d] : extreme.collection.dividends) {
    point[static_cast<std::size_t>(t.index() - 1)] = d;
  }
  return point;
}

Game witness_game(const PositiveWitness& w) {
  DividendVector dv{w.n, std::vector<Rational>(std::size_t{1} << w.n, Rational(0))};
  for (const auto& [t, d] : w.dividends) dv.d[t.index()] = d;
  return inverse_mobius(dv);
}

// Lemma-style minimality oracle: pinning any support member to zero leaves
// no positive extension on the remaining support.
bool support_is_minimal(const IncompleteGame& inc, const BalancedCollection& collection) {
  for (std::size_t drop = 0; drop < collection.support.size(); ++drop) {
    const int kept = static_cast<int>(collection.support.size()) - 1;
    auto sys = RationalMatrixSystem::with_vars(kept, true);
    for (Coalition s : inc.known()) {
      if (s.empty()) continue;
      std::vector<Rational> row;
      for (std::size_t j = 0; j < collection.support.size(); ++j) {
        if (j == drop) continue;
        row.emplace_back(collection.support[j].subset_of(s) ? 1 : 0);
      }
      sys.add_eq(std::move(row), inc.value(s));
    }
    if (!std::holds_alternative<LpInfeasibleCert>(solve_feasibility(sys))) {
      return false;
    }
  }
  return true;
}

IncompleteGame random_incomplete(Rng& rng, int n, int max_known) {
  std::vector<std::pair<Coalition, Rational>> entries;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t s = 1; s < (1u << n); ++s) masks.push_back(s);
  std::shuffle(masks.begin(), masks.end(), rng);
  const int count = 1 + static_cast<int>(rng() % max_known);
  for (int i = 0; i < count && i < static_cast<int>(masks.size()); ++i) {
    entries.emplace_back(Coalition(masks[static_cast<std::size_t>(i)]),
                         pdcg::testing::random_rational(rng, -4, 9, 3));
  }
  return IncompleteGame(n, std::move(entries));
}

}  // namespace

TEST_CASE("pos_extendable returns a verifying certificate on the fixture") {
  const IncompleteGame inc = certificate_fixture();
  const FeasibilityOutcome outcome = pos_extendable(inc);
  REQUIRE(std::holds_alternative<FarkasCertificate>(outcome));
  const auto& cert = std::get<FarkasCertificate>(outcome);
  CHECK(verify_farkas_certificate(inc, cert));
  // The dual rows force the sign pattern of the certificate.
  CHECK(cert.y.at(Coalition::of({1})) <= -1);
  CHECK(cert.y.at(Coalition::of({1, 2})) >= 1);
  Rational objective(0);
  for (const auto& [s, y] : cert.y) objective += inc.value(s) * y;
  CHECK(objective <= -1);
}

TEST_CASE("pos_extendable returns the canonical witness on the fixture") {
  const IncompleteGame inc = witness_fixture();
  const FeasibilityOutcome outcome = pos_extendable(inc);
  REQUIRE(std::holds_alternative<PositiveWitness>(outcome));
  const auto& witness = std::get<PositiveWitness>(outcome);
  CHECK(verify_positive_witness(inc, witness));
  REQUIRE(witness.dividends.size() == 2);
  CHECK(witness.dividends.at(Coalition::of({1, 2})) == 1);
  CHECK(witness.dividends.at(Coalition::grand(3)) == 2);
}

TEST_CASE("the trivial incomplete game has the all-zero witness") {
  const IncompleteGame inc(3, {});
  const FeasibilityOutcome outcome = pos_extendable(inc);
  REQUIRE(std::holds_alternative<PositiveWitness>(outcome));
  CHECK(std::get<PositiveWitness>(outcome).dividends.empty());
}

TEST_CASE("pos_bounded") {
  CHECK(pos_bounded(witness_fixture()));
  CHECK_FALSE(pos_bounded(IncompleteGame(2, {{Coalition::of({1}), Rational(1)}})));
  CHECK(pos_bounded(IncompleteGame(3, {{Coalition::grand(3), Rational(0)}})));
  CHECK_THROWS_AS(pos_bounded(certificate_fixture()), PreconditionError);
}

TEST_CASE("bounded-size path handles large player counts") {
  const IncompleteGame singles(
      10, {{Coalition::of({1}), Rational(1)}, {Coalition::of({2}), Rational(2)}});
  const FeasibilityOutcome a = pos_extendable_bounded_size(singles, 1);
  REQUIRE(std::holds_alternative<PositiveWitness>(a));
  CHECK(std::get<PositiveWitness>(a).dividends.at(Coalition::of({1})) == 1);
  CHECK(std::get<PositiveWitness>(a).dividends.at(Coalition::of({2})) == 2);

  const IncompleteGame cert(
      10, {{Coalition::of({1}), Rational(2)}, {Coalition::of({1, 2}), Rational(1)}});
  const FeasibilityOutcome b = pos_extendable_bounded_size(cert, 2);
  REQUIRE(std::holds_alternative<FarkasCertificate>(b));
  CHECK(verify_farkas_certificate(cert, std::get<FarkasCertificate>(b)));

  CHECK_THROWS_AS(pos_extendable_bounded_size(cert, 1), SizeBoundViolatedError);
}

TEST_CASE("general and bounded-size paths agree on random instances") {
  Rng rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 3);
    IncompleteGame inc = random_incomplete(rng, n, 6);
    const FeasibilityOutcome a = pos_extendable(inc);
    const FeasibilityOutcome b = pos_extendable_bounded_size(inc, n);
    CHECK(a.index() == b.index());
  }
}

TEST_CASE("Farkas dichotomy with verified branches on random instances") {
  Rng rng(17);
  int witnesses = 0;
  int certificates = 0;
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 4);
    IncompleteGame inc = random_incomplete(rng, n, 8);
    const FeasibilityOutcome outcome = pos_extendable(inc);
    if (const auto* witness = std::get_if<PositiveWitness>(&outcome)) {
      ++witnesses;
      CHECK(verify_positive_witness(inc, *witness));
      const Game g = witness_game(*witness);
      CHECK(is_extension(g, inc));
      CHECK(classify(g).positive);
    } else {
      ++certificates;
      CHECK(verify_farkas_certificate(inc, std::get<FarkasCertificate>(outcome)));
    }
  }
  CHECK(witnesses > 0);
  CHECK(certificates > 0);
}

TEST_CASE("extreme games of the witness fixture") {
  const IncompleteGame inc = witness_fixture();
  const PositiveExtremeSet extremes = pos_extreme_games(inc);
  CHECK(extremes.size() == 12);

  std::vector<std::vector<Rational>> points;
  for (const PositiveExtreme& extreme : extremes) {
    // Support: one carrier inside {1,2} with dividend 1, one coalition
    // containing player 3 with dividend 2.
    REQUIRE(extreme.collection.support.size() == 2);
    CHECK(is_extension(extreme.game, inc));
    CHECK(classify(extreme.game).positive);
    CHECK(support_is_minimal(inc, extreme.collection));
    points.push_back(dividend_point(extreme, 3));
    Rational mass(0);
    for (const auto& [t, d] : extreme.collection.dividends) mass += d;
    CHECK(mass == inc.value(Coalition::grand(3)));
  }
  std::sort(points.begin(), points.end());
  CHECK(points == enumerate_vertices(primal_system(inc)));
}

TEST_CASE("complete instances collapse to a single extreme game") {
  std::vector<std::pair<Coalition, Rational>> entries;
  const Game squares = [] {
    std::vector<Rational> v(8, Rational(0));
    for (std::uint32_t s = 1; s < 8; ++s) {
      const int k = Coalition(s).size();
      v[s] = k * k;
    }
    return Game(3, std::move(v));
  }();
  for (std::uint32_t s = 1; s < 8; ++s) {
    entries.emplace_back(Coalition(s), squares.value(Coalition(s)));
  }
  const IncompleteGame inc(3, std::move(entries));
  const PositiveExtremeSet extremes = pos_extreme_games(inc);
  REQUIRE(extremes.size() == 1);
  CHECK(extremes[0].game == squares);
}

TEST_CASE("only the grand coalition known: extremes are scaled unanimity games") {
  const IncompleteGame inc(3, {{Coalition::grand(3), Rational(1)}});
  const PositiveExtremeSet extremes = pos_extreme_games(inc);
  REQUIRE(extremes.size() == 7);
  for (const PositiveExtreme& extreme : extremes) {
    REQUIRE(extreme.collection.support.size() == 1);
    CHECK(extreme.game ==
          Game::unanimity(3, extreme.collection.support.front()));
  }
}

TEST_CASE("pos_extreme_games guards") {
  CHECK_THROWS_AS(pos_extreme_games(IncompleteGame(2, {{Coalition::of({1}), Rational(1)}})),
                  UnboundedError);
  CHECK_THROWS_AS(pos_extreme_games(certificate_fixture()), PreconditionError);
  CHECK_THROWS_AS(pos_extreme_games(witness_fixture(), 2), PreconditionError);
}

TEST_CASE("vertex soundness and completeness on random bounded instances") {
  Rng rng(23);
  int nontrivial = 0;
  for (int iter = 0; iter < 25; ++iter) {
    const int n = 2 + static_cast<int>(rng() % 3);
    // Known values generated from nonnegative dividends so that most
    // instances are extendable; the grand coalition is always known.
    DividendVector dv{n, std::vector<Rational>(std::size_t{1} << n, Rational(0))};
    for (std::size_t t = 1; t < dv.d.size(); ++t) {
      dv.d[t] = pdcg::testing::random_rational(rng, 0, 3, 2);
    }
    const Game source = inverse_mobius(dv);
    std::vector<std::pair<Coalition, Rational>> entries;
    entries.emplace_back(Coalition::grand(n), source.value(Coalition::grand(n)));
    for (std::uint32_t s = 1; s < (1u << n) - 1; ++s) {
      if (rng() % 3 == 0) {
        entries.emplace_back(Coalition(s), source.value(Coalition(s)));
      }
    }
    const IncompleteGame inc(n, std::move(entries));
    const PositiveExtremeSet extremes = pos_extreme_games(inc);
    REQUIRE(!extremes.empty());
    nontrivial += extremes.size() > 1;

    std::vector<std::vector<Rational>> points;
    for (const PositiveExtreme& extreme : extremes) {
      CHECK(support_is_minimal(inc, extreme.collection));
      CHECK(is_extension(extreme.game, inc));
      CHECK(classify(extreme.game).positive);
      Rational mass(0);
      for (const auto& [t, d] : extreme.collection.dividends) mass += d;
      CHECK(mass == inc.value(Coalition::grand(n)));
      points.push_back(dividend_point(extreme, n));
    }
    std::sort(points.begin(), points.end());
    CHECK(points == enumerate_vertices(primal_system(inc)));

    // Any convex combination of two extremes stays in the extension set.
    if (extremes.size() >= 2) {
      const Game mix = pdcg::testing::combine(Rational(1, 3), extremes[0].game,
                                              Rational(2, 3), extremes[1].game);
      CHECK(is_extension(mix, inc));
      CHECK(classify(mix).positive);
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("disjoint closed form on the worked instance") {
  const IncompleteGame inc(4, {{Coalition::of({1, 2}), Rational(2)},
                               {Coalition::of({3}), Rational(1)},
                               {Coalition::grand(4), Rational(5)}});
  const DisjointCaseResult result = pos_disjoint_case(inc);
  CHECK(result.lower.value(Coalition::of({1, 2, 3})) == 3);
  CHECK(result.lower.value(Coalition::of({4})) == 0);
  CHECK(result.lower.value(Coalition::grand(4)) == 5);
  CHECK(result.upper.value(Coalition::of({1})) == 2);
  CHECK(result.upper.value(Coalition::of({1, 3})) == 3);
  CHECK(result.upper.value(Coalition::grand(4)) == 5);

  // Carriers: T1 in {1,2} (3 choices), T2 = {3}, and a leftover coalition
  // not inside any known part (11 choices).
  CHECK(result.extremes.size() == 33);
  const PositiveExtremeSet reference = pos_extreme_games(inc, 4);
  REQUIRE(reference.size() == result.extremes.size());
  std::vector<std::vector<Rational>> a, b;
  for (const auto& e : result.extremes) a.push_back(e.game.values());
  for (const auto& e : reference) b.push_back(e.game.values());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("disjoint closed form rejects deficient grand values") {
  const IncompleteGame inc(4, {{Coalition::of({1, 2}), Rational(2)},
                               {Coalition::of({3}), Rational(1)},
                               {Coalition::grand(4), Rational(2)}});
  CHECK_THROWS_AS(pos_disjoint_case(inc), NotExtendableError);
}

TEST_CASE("disjoint closed form structure checks") {
  CHECK_THROWS_AS(pos_disjoint_case(IncompleteGame(3, {{Coalition::of({1}), Rational(1)}})),
                  StructureMismatchError);
  const IncompleteGame overlapping(3, {{Coalition::of({1, 2}), Rational(1)},
                                       {Coalition::of({2, 3}), Rational(1)},
                                       {Coalition::grand(3), Rational(4)}});
  CHECK_THROWS_AS(pos_disjoint_case(overlapping), StructureMismatchError);
}

TEST_CASE("disjoint closed form matches the LP envelope and Farkas verdict") {
  Rng rng(29);
  for (int iter = 0; iter < 15; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 3);
    // Random disjoint parts over a shuffled player list.
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int p = 1; p <= n; ++p) order[static_cast<std::size_t>(p - 1)] = p;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::pair<Coalition, Rational>> entries;
    std::size_t used = 0;
    Rational sum(0);
    while (used < order.size() && rng() % 3 != 0) {
      const std::size_t take = 1 + rng() % std::min<std::size_t>(2, order.size() - used);
      Coalition part;
      for (std::size_t i = 0; i < take; ++i) part = part.with(order[used++]);
      if (part.size() == n) break;
      const Rational value = pdcg::testing::random_rational(rng, 0, 4, 2);
      sum += value;
      entries.emplace_back(part, value);
    }
    const bool feasible = rng() % 4 != 0;
    Rational grand_value = sum;
    if (feasible) {
      grand_value += pdcg::testing::random_rational(rng, 0, 4, 2);
    } else {
      grand_value -= pdcg::testing::random_rational(rng, 1, 3, 1);
    }
    entries.emplace_back(Coalition::grand(n), grand_value);
    const IncompleteGame inc(n, std::move(entries));

    const FeasibilityOutcome verdict = pos_extendable(inc);
    if (grand_value < sum) {
      CHECK_THROWS_AS(pos_disjoint_case(inc), NotExtendableError);
      CHECK(std::holds_alternative<FarkasCertificate>(verdict));
      continue;
    }
    CHECK(std::holds_alternative<PositiveWitness>(verdict));
    const DisjointCaseResult result = pos_disjoint_case(inc);
    const RationalMatrixSystem sys = primal_system(inc);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      std::vector<Rational> objective(static_cast<std::size_t>((1 << n) - 1),
                                      Rational(0));
      for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
        objective[static_cast<std::size_t>(t - 1)] = 1;
      }
      CHECK(std::get<LpOptimum>(optimize(sys, objective, LpDirection::Minimize)).value ==
            result.lower.value(Coalition(s)));
      CHECK(std::get<LpOptimum>(optimize(sys, objective, LpDirection::Maximize)).value ==
            result.upper.value(Coalition(s)));
    }
  }
}

TEST_CASE("down-closed closed form on the worked instance") {
  const IncompleteGame inc(3, {{Coalition::of({1}), Rational(1)},
                               {Coalition::of({2}), Rational(1)},
                               {Coalition::of({3}), Rational(1)},
                               {Coalition::grand(3), Rational(5)}});
  const DownClosedCaseResult result = pos_downclosed_case(inc);
  CHECK(result.delta.at(Coalition::of({1})) == 1);
  CHECK(result.delta.at(Coalition::of({2})) == 1);
  CHECK(result.delta.at(Coalition::of({3})) == 1);
  CHECK(result.delta.at(Coalition::grand(3)) == 2);
  CHECK(result.lower.value(Coalition::of({1, 2})) == 2);
  CHECK(result.upper.value(Coalition::of({1, 2})) == 4);
  REQUIRE(result.extremes.size() == 4);

  const PositiveExtremeSet reference = pos_extreme_games(inc);
  REQUIRE(reference.size() == 4);
  std::vector<std::vector<Rational>> a, b;
  for (const auto& [c, game] : result.extremes) a.push_back(game.values());
  for (const auto& e : reference) b.push_back(e.game.values());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("down-closed closed form degenerate and infeasible budgets") {
  const IncompleteGame tight(3, {{Coalition::of({1}), Rational(1)},
                                 {Coalition::of({2}), Rational(1)},
                                 {Coalition::of({3}), Rational(1)},
                                 {Coalition::grand(3), Rational(3)}});
  const DownClosedCaseResult single = pos_downclosed_case(tight);
  CHECK(single.extremes.size() == 1);
  CHECK(single.lower == single.upper);
  CHECK(single.lower == single.extremes[0].second);

  const IncompleteGame broke(3, {{Coalition::of({1}), Rational(1)},
                                 {Coalition::of({2}), Rational(1)},
                                 {Coalition::of({3}), Rational(1)},
                                 {Coalition::grand(3), Rational(2)}});
  CHECK_THROWS_AS(pos_downclosed_case(broke), NotExtendableError);

  const IncompleteGame gap(3, {{Coalition::of({1, 2}), Rational(1)},
                               {Coalition::grand(3), Rational(2)}});
  CHECK_THROWS_AS(pos_downclosed_case(gap), StructureMismatchError);
}

TEST_CASE("down-closed closed form matches the LP envelope on random instances") {
  Rng rng(37);
  for (int iter = 0; iter < 12; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 2);
    // Seed a down-closed family from random low-size coalitions.
    std::vector<bool> member(std::size_t{1} << n, false);
    member[0] = true;
    for (int seeds = 0; seeds < 3; ++seeds) {
      const std::uint32_t seed = static_cast<std::uint32_t>(rng() % ((1u << n) - 1)) + 1;
      if (Coalition(seed).size() > 2) continue;
      for (std::uint32_t t = seed;; t = (t - 1) & seed) {
        member[t] = true;
        if (t == 0) break;
      }
    }
    // Values from random nonnegative dividends; occasionally corrupted.
    DividendVector dv{n, std::vector<Rational>(std::size_t{1} << n, Rational(0))};
    for (std::size_t t = 1; t < dv.d.size(); ++t) {
      dv.d[t] = pdcg::testing::random_rational(rng, 0, 3, 2);
    }
    const Game source = inverse_mobius(dv);
    std::vector<std::pair<Coalition, Rational>> entries;
    for (std::uint32_t s = 1; s < (1u << n) - 1; ++s) {
      if (member[s]) entries.emplace_back(Coalition(s), source.value(Coalition(s)));
    }
    entries.emplace_back(Coalition::grand(n), source.value(Coalition::grand(n)));
    const IncompleteGame inc(n, std::move(entries));

    const DownClosedCaseResult result = pos_downclosed_case(inc);
    CHECK(std::holds_alternative<PositiveWitness>(pos_extendable(inc)));
    const RationalMatrixSystem sys = primal_system(inc);
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
      std::vector<Rational> objective(static_cast<std::size_t>((1 << n) - 1),
                                      Rational(0));
      for (std::uint32_t t = s; t != 0; t = (t - 1) & s) {
        objective[static_cast<std::size_t>(t - 1)] = 1;
      }
      CHECK(std::get<LpOptimum>(optimize(sys, objective, LpDirection::Minimize)).value ==
            result.lower.value(Coalition(s)));
      CHECK(std::get<LpOptimum>(optimize(sys, objective, LpDirection::Maximize)).value ==
            result.upper.value(Coalition(s)));
    }
    const PositiveExtremeSet reference = pos_extreme_games(inc);
    std::vector<std::vector<Rational>> a, b;
    for (const auto& [c, game] : result.extremes) a.push_back(game.values());
    for (const auto& e : reference) b.push_back(e.game.values());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("symmetric positive per-size envelope of the running fixture") {
  ReducedIncomplete r;
  r.n = 4;
  r.sizes = {0, 2, 4};
  r.sigma = {Rational(0), Rational(2), Rational(20)};
  const ScBounds bounds = sp_per_coalition_bounds(r);
  CHECK(bounds.lower.s[1] == 0);
  CHECK(bounds.lower.s[2] == 2);
  CHECK(bounds.lower.s[3] == 3);  // (3/2) * sigma(2)
  CHECK(bounds.upper.s[3] == 8);
  CHECK(bounds.lower.s[4] == 20);
  CHECK(bounds.upper.s[4] == 20);

  // Cross-route check: the per-size extrema over the dividend polytope match
  // the extrema over its enumerated vertices.
  auto sys = RationalMatrixSystem::with_vars(4, true);
  sys.add_eq({Rational(2), Rational(1), Rational(0), Rational(0)}, Rational(2));
  sys.add_eq({Rational(4), Rational(6), Rational(4), Rational(1)}, Rational(20));
  const auto vertices = enumerate_vertices(sys);
  REQUIRE(!vertices.empty());
  for (int m = 1; m <= 4; ++m) {
    Rational lo = bounds.upper.s[static_cast<std::size_t>(m)];
    Rational hi = bounds.lower.s[static_cast<std::size_t>(m)];
    for (const auto& v : vertices) {
      Rational value(0);
      for (int t = 1; t <= 4; ++t) {
        value += binomial(m, t) * v[static_cast<std::size_t>(t - 1)];
      }
      lo = std::min(lo, value);
      hi = std::max(hi, value);
    }
    CHECK(lo == bounds.lower.s[static_cast<std::size_t>(m)]);
    CHECK(hi == bounds.upper.s[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("symmetric positive envelope error paths") {
  ReducedIncomplete infeasible;
  infeasible.n = 4;
  infeasible.sizes = {0, 2, 4};
  infeasible.sigma = {Rational(0), Rational(2), Rational(1)};
  CHECK_THROWS_AS(sp_per_coalition_bounds(infeasible), InfeasibleError);

  ReducedIncomplete open_top;
  open_top.n = 4;
  open_top.sizes = {0, 2};
  open_top.sigma = {Rational(0), Rational(2)};
  CHECK_THROWS_AS(sp_per_coalition_bounds(open_top), UnboundedError);
}

TEST_CASE("symmetric prefix bounds") {
  const auto [lower1, upper1] = pos_symmetric_prefix_bounds(
      4, 1, {Rational(1)}, Rational(10));
  CHECK(lower1.value(Coalition::of({1, 2})) == 1);
  CHECK(upper1.value(Coalition::of({1, 2})) == 10);
  CHECK(lower1.value(Coalition::of({2})) == 1);
  CHECK(lower1.value(Coalition::grand(4)) == 10);

  const auto [lower2, upper2] = pos_symmetric_prefix_bounds(
      4, 2, {Rational(1), Rational(3)}, Rational(12));
  CHECK(lower2.value(Coalition::of({1, 2, 3})) == 3);
  CHECK(upper2.value(Coalition::of({1, 2, 3})) == 12);
  CHECK(lower2.value(Coalition::of({1, 3})) == 3);

  CHECK_THROWS_AS(pos_symmetric_prefix_bounds(4, 0, {}, Rational(1)),
                  StructureMismatchError);
  CHECK_THROWS_AS(pos_symmetric_prefix_bounds(4, 4, {Rational(1), Rational(2),
                                                     Rational(3), Rational(4)},
                                              Rational(1)),
                  StructureMismatchError);

  // The prefix bounds are outer bounds for the per-size envelope of
  // symmetric positive extensions (not tight in general).
  ReducedIncomplete r;
  r.n = 4;
  r.sizes = {0, 1, 4};
  r.sigma = {Rational(0), Rational(1), Rational(10)};
  const ScBounds envelope = sp_per_coalition_bounds(r);
  const ReducedSymmetric lower_r = reduce_symmetric(lower1);
  const ReducedSymmetric upper_r = reduce_symmetric(upper1);
  for (int m = 0; m <= 4; ++m) {
    CHECK(lower_r.s[static_cast<std::size_t>(m)] <=
          envelope.lower.s[static_cast<std::size_t>(m)]);
    CHECK(envelope.upper.s[static_cast<std::size_t>(m)] <=
          upper_r.s[static_cast<std::size_t>(m)]);
  }
}

TEST_CASE("the pointwise lower game of the fixture is not symmetric positive") {
  ReducedIncomplete r;
  r.n = 4;
  r.sizes = {0, 2, 4};
  r.sigma = {Rational(0), Rational(2), Rational(20)};
  const SymmetricPositivityReport report = lower_game_positivity_regression(r);
  CHECK(report.lower.s == std::vector<Rational>{0, 0, 2, 3, 20});
  CHECK_FALSE(report.positive);
  REQUIRE(report.negative_dividend.has_value());
  CHECK(report.negative_dividend->first == 3);
  CHECK(report.negative_dividend->second == -3);
}

TEST_CASE("complete positive instances have a positive lower game") {
  // A symmetric positive game taken as a degenerate incomplete instance.
  ReducedIncomplete r;
  r.n = 4;
  r.sizes = {0, 1, 2, 3, 4};
  r.sigma = {Rational(0), Rational(1), Rational(3), Rational(6), Rational(10)};
  const SymmetricPositivityReport report = lower_game_positivity_regression(r);
  CHECK(report.positive);
  CHECK(report.lower.s == std::vector<Rational>(r.sigma));
}

TEST_CASE("infeasible budgets propagate through the regression report") {
  ReducedIncomplete r;
  r.n = 4;
  r.sizes = {0, 2, 4};
  r.sigma = {Rational(0), Rational(2), Rational(1)};
  CHECK_THROWS_AS(lower_game_positivity_regression(r), InfeasibleError);
}
