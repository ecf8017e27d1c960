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

#include "pdcg/positive.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "pdcg/rational_lp.hpp"

namespace pdcg {

namespace {

constexpr std::uint32_t kNoSuperset = 0xFFFFFFFFu;

// Distinct dual rows are keyed by the subset-of-K membership pattern of T;
// the pattern is identified with its maximal element, the intersection of
// the known supersets of T.
std::vector<std::uint32_t> representatives_general(int n,
                                                   const std::vector<Coalition>& ks) {
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint32_t> rep(size, kNoSuperset);
  for (Coalition s : ks) rep[s.index()] = s.index();
  // Downward lattice sweep: the supersets of T are T itself and the
  // supersets of the T+i.
  for (std::uint32_t mask = static_cast<std::uint32_t>(size) - 1;; --mask) {
    for (int bit = 0; bit < n; ++bit) {
      const std::uint32_t up = mask | (std::uint32_t{1} << bit);
      if (up == mask || rep[up] == kNoSuperset) continue;
      rep[mask] &= rep[up];
    }
    if (mask == 0) break;
  }
  std::set<std::uint32_t> reps;
  for (std::uint32_t mask = 1; mask < size; ++mask) {
    if (rep[mask] != kNoSuperset) reps.insert(rep[mask]);
  }
  return {reps.begin(), reps.end()};
}

std::vector<std::uint32_t> representatives_bounded(const std::vector<Coalition>& ks) {
  std::set<std::uint32_t> reps;
  std::set<std::uint32_t> seen;
  for (Coalition s : ks) {
    for (std::uint32_t t = s.index(); t != 0; t = (t - 1) & s.index()) {
      if (!seen.insert(t).second) continue;
      std::uint32_t rep = kNoSuperset;
      for (Coalition other : ks) {
        if ((t & ~other.index()) == 0) rep &= other.index();
      }
      reps.insert(rep);
    }
  }
  return {reps.begin(), reps.end()};
}

FeasibilityOutcome decide(const IncompleteGame& inc, const std::vector<Coalition>& ks,
                          const std::vector<std::uint32_t>& reps) {
  const int num_known = static_cast<int>(ks.size());

  // Dual system first: a feasible point is a non-extendability certificate.
  RationalMatrixSystem dual = RationalMatrixSystem::with_vars(num_known, false);
  for (std::uint32_t rep : reps) {
    std::vector<Rational> row(static_cast<std::size_t>(num_known), Rational(0));
    for (int s = 0; s < num_known; ++s) {
      if ((rep & ~ks[static_cast<std::size_t>(s)].index()) == 0) {
        row[static_cast<std::size_t>(s)] = 1;
      }
    }
    dual.add_ge(std::move(row), Rational(0));
  }
  {
    std::vector<Rational> row(static_cast<std::size_t>(num_known));
    for (int s = 0; s < num_known; ++s) {
      row[static_cast<std::size_t>(s)] = -inc.value(ks[static_cast<std::size_t>(s)]);
    }
    dual.add_ge(std::move(row), Rational(1));
  }
  LpOutcome dual_outcome = solve_feasibility(dual);
  if (auto* feasible = std::get_if<LpFeasiblePoint>(&dual_outcome)) {
    FarkasCertificate cert;
    cert.n = inc.players();
    for (int s = 0; s < num_known; ++s) {
      cert.y.emplace(ks[static_cast<std::size_t>(s)],
                     feasible->x[static_cast<std::size_t>(s)]);
    }
    if (!verify_farkas_certificate(inc, cert)) {
      throw std::logic_error("invalid non-extendability certificate");
    }
    return cert;
  }

  // Dual infeasible: the primal equality system has a nonnegative solution.
  const int num_reps = static_cast<int>(reps.size());
  RationalMatrixSystem primal = RationalMatrixSystem::with_vars(num_reps, true);
  for (int s = 0; s < num_known; ++s) {
    std::vector<Rational> row(static_cast<std::size_t>(num_reps), Rational(0));
    for (int p = 0; p < num_reps; ++p) {
      if ((reps[static_cast<std::size_t>(p)] & ~ks[static_cast<std::size_t>(s)].index()) == 0) {
        row[static_cast<std::size_t>(p)] = 1;
      }
    }
    primal.add_eq(std::move(row), inc.value(ks[static_cast<std::size_t>(s)]));
  }
  LpOutcome primal_outcome = solve_feasibility(primal);
  auto* point = std::get_if<LpFeasiblePoint>(&primal_outcome);
  if (point == nullptr) {
    throw std::logic_error("exactly one side of the alternative must be solvable");
  }
  PositiveWitness witness;
  witness.n = inc.players();
  for (int p = 0; p < num_reps; ++p) {
    if (point->x[static_cast<std::size_t>(p)] != 0) {
      witness.dividends.emplace(Coalition(reps[static_cast<std::size_t>(p)]),
                                point->x[static_cast<std::size_t>(p)]);
    }
  }
  if (!verify_positive_witness(inc, witness)) {
    throw std::logic_error("invalid positive-extendability witness");
  }
  return witness;
}

std::vector<Coalition> known_nonempty(const IncompleteGame& inc) {
  std::vector<Coalition> ks = inc.known();
  std::erase_if(ks, [](Coalition s) { return s.empty(); });
  return ks;
}

Game game_from_sparse_dividends(int n, const std::map<Coalition, Rational>& dividends) {
  DividendVector dv{n, std::vector<Rational>(std::size_t{1} << n, Rational(0))};
  for (const auto& [t, value] : dividends) dv.d[t.index()] = value;
  return inverse_mobius(dv);
}

}  // namespace

bool verify_positive_witness(const IncompleteGame& inc, const PositiveWitness& w) {
  for (const auto& [t, value] : w.dividends) {
    if (t.empty() || value < 0) return false;
  }
  for (Coalition s : inc.known()) {
    Rational acc(0);
    for (const auto& [t, value] : w.dividends) {
      if (t.subset_of(s)) acc += value;
    }
    if (acc != inc.value(s)) return false;
  }
  return true;
}

bool verify_farkas_certificate(const IncompleteGame& inc, const FarkasCertificate& c) {
  const std::vector<Coalition> ks = known_nonempty(inc);
  for (Coalition s : ks) {
    if (c.y.find(s) == c.y.end()) return false;
  }
  // One inequality per distinct membership pattern covers every nonempty T.
  for (std::uint32_t rep : representatives_bounded(ks)) {
    Rational acc(0);
    for (Coalition s : ks) {
      if ((rep & ~s.index()) == 0) acc += c.y.at(s);
    }
    if (acc < 0) return false;
  }
  Rational objective(0);
  for (Coalition s : ks) objective += inc.value(s) * c.y.at(s);
  return objective <= -1;
}

FeasibilityOutcome pos_extendable(const IncompleteGame& inc, int max_n) {
  if (inc.players() > max_n) {
    throw PreconditionError("player count exceeds the general-path cap of " +
                            std::to_string(max_n));
  }
  const std::vector<Coalition> ks = known_nonempty(inc);
  return decide(inc, ks, representatives_general(inc.players(), ks));
}

FeasibilityOutcome pos_extendable_bounded_size(const IncompleteGame& inc, int c) {
  const std::vector<Coalition> ks = known_nonempty(inc);
  for (Coalition s : ks) {
    if (s.size() > c) {
      throw SizeBoundViolatedError("coalition " + s.to_string() +
                                   " exceeds the size bound " + std::to_string(c));
    }
  }
  return decide(inc, ks, representatives_bounded(ks));
}

bool pos_bounded(const IncompleteGame& inc) {
  if (std::holds_alternative<FarkasCertificate>(pos_extendable(inc))) {
    throw PreconditionError("instance is not positively extendable");
  }
  return inc.knows(inc.grand_coalition());
}

PositiveExtremeSet pos_extreme_games(const IncompleteGame& inc, int max_n) {
  const int n = inc.players();
  if (n > max_n) {
    throw PreconditionError("player count exceeds the enumeration cap of " +
                            std::to_string(max_n));
  }
  if (std::holds_alternative<FarkasCertificate>(pos_extendable(inc))) {
    throw PreconditionError("instance is not positively extendable");
  }
  if (!inc.knows(inc.grand_coalition())) {
    throw UnboundedError("set of positive extensions is unbounded (grand coalition unknown)");
  }

  const std::vector<Coalition> ks = known_nonempty(inc);
  const int num_vars = (1 << n) - 1;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (Coalition s : ks) {
    std::vector<Rational> row(static_cast<std::size_t>(num_vars), Rational(0));
    for (std::uint32_t t = s.index(); t != 0; t = (t - 1) & s.index()) {
      row[static_cast<std::size_t>(t - 1)] = 1;
    }
    rows.push_back(std::move(row));
    rhs.push_back(inc.value(s));
  }
  const int r = linalg::rank(rows);

  PositiveExtremeSet out;
  auto try_support = [&](const std::vector<int>& support_vars) {
    std::vector<std::vector<Rational>> a(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      a[i].reserve(support_vars.size());
      for (int var : support_vars) a[i].push_back(rows[i][static_cast<std::size_t>(var)]);
    }
    const auto solution = linalg::solve_unique(a, rhs);
    if (!solution) return;
    for (const Rational& d : *solution) {
      if (d <= 0) return;
    }
    BalancedCollection collection;
    for (std::size_t j = 0; j < support_vars.size(); ++j) {
      const Coalition t(static_cast<std::uint32_t>(support_vars[j] + 1));
      collection.support.push_back(t);
      collection.dividends.emplace(t, (*solution)[j]);
    }
    Game game = game_from_sparse_dividends(n, collection.dividends);
    out.push_back({std::move(collection), std::move(game)});
  };

  if (r == num_vars) {
    // The equalities pin the dividend vector; the extension set is a point.
    const auto solution = linalg::solve_unique(rows, rhs);
    if (!solution) {
      throw std::logic_error("extendable instance with inconsistent equalities");
    }
    BalancedCollection collection;
    for (int var = 0; var < num_vars; ++var) {
      if ((*solution)[static_cast<std::size_t>(var)] == 0) continue;
      const Coalition t(static_cast<std::uint32_t>(var + 1));
      collection.support.push_back(t);
      collection.dividends.emplace(t, (*solution)[static_cast<std::size_t>(var)]);
    }
    Game game = game_from_sparse_dividends(n, collection.dividends);
    out.push_back({std::move(collection), std::move(game)});
    return out;
  }

  {
    long double total = 0;
    long double combos = 1;
    for (int i = 0; i <= r; ++i) {
      total += combos;
      combos = combos * (num_vars - i) / (i + 1);
    }
    if (total > 5e6L) {
      throw PreconditionError("support enumeration budget exceeded");
    }
  }

  // Supports of vertices have at most rank-many members (basic solutions).
  for (int size = 0; size <= r; ++size) {
    std::vector<int> pick(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      try_support(pick);
      int i = size - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == num_vars - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

DisjointCaseResult pos_disjoint_case(const IncompleteGame& inc) {
  const int n = inc.players();
  const Coalition grand = inc.grand_coalition();
  if (!inc.knows(grand)) {
    throw StructureMismatchError("the grand coalition must be known");
  }
  std::vector<Coalition> parts = known_nonempty(inc);
  std::erase(parts, grand);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!parts[i].disjoint_from(parts[j])) {
        throw StructureMismatchError("known coalitions " + parts[i].to_string() +
                                     " and " + parts[j].to_string() +
                                     " are not disjoint");
      }
    }
  }
  Rational sum(0);
  for (Coalition s : parts) {
    if (inc.value(s) < 0) {
      throw NotExtendableError("v(" + s.to_string() + ") = " +
                               to_string(inc.value(s)) + " < 0");
    }
    sum += inc.value(s);
  }
  const Rational leftover = inc.value(grand) - sum;
  if (leftover < 0) {
    throw NotExtendableError("v(" + grand.to_string() + ") = " +
                             to_string(inc.value(grand)) + " < " + to_string(sum) +
                             " = sum of the known disjoint values");
  }

  // Collection members carry strictly positive dividends only.
  std::vector<Coalition> carriers;
  for (Coalition s : parts) {
    if (inc.value(s) > 0) carriers.push_back(s);
  }
  std::vector<std::uint32_t> grand_candidates;
  if (leftover > 0) {
    for (std::uint32_t t = 1; t <= grand.index(); ++t) {
      bool inside_some_part = false;
      for (Coalition s : parts) {
        if ((t & ~s.index()) == 0) {
          inside_some_part = true;
          break;
        }
      }
      if (!inside_some_part) grand_candidates.push_back(t);
    }
  }

  {
    long double total = grand_candidates.empty() ? 1 : static_cast<long double>(grand_candidates.size());
    for (Coalition s : carriers) total *= (1u << s.size()) - 1;
    if (total > 5e6L) {
      throw PreconditionError("extreme enumeration budget exceeded");
    }
  }

  DisjointCaseResult out{{}, Game(n), Game(n)};
  std::vector<std::uint32_t> choice(carriers.size());
  auto emit = [&](std::uint32_t grand_part) {
    BalancedCollection collection;
    std::map<Coalition, Rational> dividends;
    for (std::size_t i = 0; i < carriers.size(); ++i) {
      dividends.emplace(Coalition(choice[i]), inc.value(carriers[i]));
    }
    if (grand_part != 0) dividends.emplace(Coalition(grand_part), leftover);
    for (const auto& [t, value] : dividends) collection.support.push_back(t);
    collection.dividends = dividends;
    Game game = game_from_sparse_dividends(n, dividends);
    out.extremes.push_back({std::move(collection), std::move(game)});
  };
  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == carriers.size()) {
      if (grand_candidates.empty()) {
        emit(0);
      } else {
        for (std::uint32_t t : grand_candidates) emit(t);
      }
      return;
    }
    const std::uint32_t mask = carriers[i].index();
    // Nonempty submasks in increasing index order.
    for (std::uint32_t t = mask & (~mask + 1);; t = ((t | ~mask) + 1) & mask) {
      choice[i] = t;
      self(self, i + 1);
      if (t == mask) break;
    }
  };
  recurse(recurse, 0);

  // Lower game v^K and the upper game, straight from the closed forms.
  std::vector<Rational> lower_values(std::size_t{1} << n, Rational(0));
  std::vector<Rational> upper_values(std::size_t{1} << n, Rational(0));
  for (std::uint32_t s = 1; s <= grand.index(); ++s) {
    if (s == grand.index()) {
      lower_values[s] = inc.value(grand);
      upper_values[s] = inc.value(grand);
      continue;
    }
    Rational below(0);
    Rational outside(0);
    bool inside_some_part = false;
    for (Coalition part : parts) {
      if (part.index() == (part.index() & s)) below += inc.value(part);
      if ((part.index() & ~s) != 0) outside += inc.value(part);
      if ((s & ~part.index()) == 0) inside_some_part = true;
    }
    lower_values[s] = below;
    if (inside_some_part) {
      for (Coalition part : parts) {
        if ((s & ~part.index()) == 0) {
          upper_values[s] = inc.value(part);
          break;
        }
      }
    } else {
      upper_values[s] = inc.value(grand) - outside;
    }
  }
  out.lower = Game(n, std::move(lower_values));
  out.upper = Game(n, std::move(upper_values));
  return out;
}

DownClosedCaseResult pos_downclosed_case(const IncompleteGame& inc) {
  const int n = inc.players();
  const Coalition grand = inc.grand_coalition();
  if (!inc.knows(grand)) {
    throw StructureMismatchError("the grand coalition must be known");
  }
  std::vector<Coalition> below = inc.known();
  std::erase(below, grand);
  for (Coalition s : below) {
    for (int p : s.members()) {
      if (!inc.knows(s.without(p))) {
        throw StructureMismatchError("family is not down-closed: " +
                                     s.without(p).to_string() + " is missing");
      }
    }
  }
  std::sort(below.begin(), below.end(), [](Coalition a, Coalition b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });

  DownClosedCaseResult out{{}, {}, Game(n), Game(n)};
  std::map<Coalition, Rational> delta;  // over below, excluding the empty set
  for (Coalition s : below) {
    if (s.empty()) continue;
    Rational acc = inc.value(s);
    for (std::uint32_t t = (s.index() - 1) & s.index(); t != 0; t = (t - 1) & s.index()) {
      acc -= delta.at(Coalition(t));
    }
    if (acc < 0) {
      throw NotExtendableError("Delta(" + s.to_string() + ") = " + to_string(acc) +
                               " < 0");
    }
    delta.emplace(s, std::move(acc));
  }
  Rational leftover = inc.value(grand);
  for (const auto& [s, d] : delta) leftover -= d;
  if (leftover < 0) {
    throw NotExtendableError("Delta(" + grand.to_string() + ") = " +
                             to_string(leftover) + " < 0");
  }
  out.delta = delta;
  out.delta.emplace(grand, leftover);

  // base(S) = sum of forced dividends below S, via a zeta transform.
  std::vector<Rational> base(std::size_t{1} << n, Rational(0));
  for (const auto& [s, d] : delta) base[s.index()] = d;
  for (int bit = 0; bit < n; ++bit) {
    const std::uint32_t b = std::uint32_t{1} << bit;
    for (std::uint32_t mask = 0; mask < base.size(); ++mask) {
      if (mask & b) base[mask] += base[mask ^ b];
    }
  }

  auto build_extreme = [&](Coalition c) -> std::pair<Coalition, Game> {
    std::vector<Rational> values(std::size_t{1} << n);
    for (std::uint32_t s = 0; s < values.size(); ++s) {
      values[s] = base[s];
      if (leftover > 0 && (c.index() & ~s) == 0) values[s] += leftover;
    }
    return {c, Game(n, std::move(values))};
  };

  if (leftover == 0) {
    out.extremes.push_back(build_extreme(grand));
  } else {
    std::set<std::uint32_t> excluded;
    for (Coalition s : below) excluded.insert(s.index());
    for (std::uint32_t c = 1; c <= grand.index(); ++c) {
      if (!excluded.count(c)) out.extremes.push_back(build_extreme(Coalition(c)));
    }
  }

  std::vector<Rational> lower_values = base;
  lower_values[grand.index()] += leftover;
  out.lower = Game(n, std::move(lower_values));
  std::vector<Rational> upper_values(std::size_t{1} << n);
  for (std::uint32_t s = 0; s < upper_values.size(); ++s) {
    upper_values[s] = inc.knows(Coalition(s)) ? inc.value(Coalition(s))
                                              : base[s] + leftover;
  }
  out.upper = Game(n, std::move(upper_values));
  return out;
}

ScBounds sp_per_coalition_bounds(const ReducedIncomplete& r) {
  const int n = r.n;
  RationalMatrixSystem sys = RationalMatrixSystem::with_vars(n, true);
  for (std::size_t i = 0; i < r.sizes.size(); ++i) {
    const int k = r.sizes[i];
    if (k == 0) continue;
    std::vector<Rational> row(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) row[static_cast<std::size_t>(t - 1)] = binomial(k, t);
    sys.add_eq(std::move(row), r.sigma[i]);
  }
  if (std::holds_alternative<LpInfeasibleCert>(solve_feasibility(sys))) {
    throw InfeasibleError("no symmetric positive extension matches the known sizes");
  }

  ScBounds out;
  out.lower.n = out.upper.n = n;
  out.lower.s.resize(static_cast<std::size_t>(n) + 1);
  out.upper.s.resize(static_cast<std::size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    const auto mi = static_cast<std::size_t>(m);
    if (r.has_size(m)) {
      out.lower.s[mi] = out.upper.s[mi] = r.at(m);
      continue;
    }
    std::vector<Rational> objective(static_cast<std::size_t>(n));
    for (int t = 1; t <= n; ++t) {
      objective[static_cast<std::size_t>(t - 1)] = binomial(m, t);
    }
    LpOutcome low = optimize(sys, objective, LpDirection::Minimize);
    out.lower.s[mi] = std::get<LpOptimum>(low).value;
    LpOutcome high = optimize(sys, objective, LpDirection::Maximize);
    if (std::holds_alternative<LpUnboundedRay>(high)) {
      throw UnboundedError("size " + std::to_string(m) +
                           " has no upper bound (the grand coalition size is unknown)");
    }
    out.upper.s[mi] = std::get<LpOptimum>(high).value;
  }
  return out;
}

std::pair<Game, Game> pos_symmetric_prefix_bounds(int n, int k,
                                                  const std::vector<Rational>& size_values,
                                                  const Rational& grand_value) {
  if (n < 2 || n > Coalition::kMaxPlayers || k < 1 || k >= n) {
    throw StructureMismatchError("prefix size k must satisfy 1 <= k < n");
  }
  if (size_values.size() != static_cast<std::size_t>(k)) {
    throw StructureMismatchError("expected one value per size 1..k");
  }
  const Rational& gamma = size_values[static_cast<std::size_t>(k - 1)];
  std::vector<Rational> lower_values(std::size_t{1} << n, Rational(0));
  std::vector<Rational> upper_values(std::size_t{1} << n, Rational(0));
  for (std::uint32_t s = 1; s < lower_values.size(); ++s) {
    const int size = std::popcount(s);
    if (size <= k) {
      lower_values[s] = upper_values[s] = size_values[static_cast<std::size_t>(size - 1)];
    } else if (size == n) {
      lower_values[s] = upper_values[s] = grand_value;
    } else {
      lower_values[s] = gamma;
      upper_values[s] = grand_value;
    }
  }
  return {Game(n, std::move(lower_values)), Game(n, std::move(upper_values))};
}

SymmetricPositivityReport lower_game_positivity_regression(const ReducedIncomplete& r) {
  SymmetricPositivityReport report;
  report.lower = sp_per_coalition_bounds(r).lower;
  const std::vector<Rational> delta = symmetric_dividends(report.lower);
  report.positive = true;
  for (int t = 1; t <= r.n; ++t) {
    if (delta[static_cast<std::size_t>(t)] < 0) {
      report.positive = false;
      report.negative_dividend = {t, delta[static_cast<std::size_t>(t)]};
      break;
    }
  }
  if (r.n <= 12) {
    const ClassReport dense = classify(report.lower.to_game());
    if (dense.positive != report.positive) {
      throw std::logic_error("size-indexed and dense positivity checks disagree");
    }
  }
  return report;
}

}  // namespace pdcg
