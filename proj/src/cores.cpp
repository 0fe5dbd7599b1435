// Copyright 2026 The partstab Authors.
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

#include "partstab/cores.hpp"

#include <algorithm>
#include <set>

#include "partstab/errors.hpp"
#include "partstab/kernels.hpp"

namespace partstab {

using Mask = Coalition::Mask;

std::string to_string(Mode mode) {
  switch (mode) {
    case Mode::kStrong: return "strong";
    case Mode::kMedium: return "medium";
    case Mode::kWeak: return "weak";
  }
  return "?";
}

Mode parse_mode(std::string_view text) {
  if (text == "strong") return Mode::kStrong;
  if (text == "medium") return Mode::kMedium;
  if (text == "weak") return Mode::kWeak;
  throw InputError("unknown mode '" + std::string(text) +
                   "' (expected strong, medium or weak)");
}

namespace {

constexpr std::pair<CoreVerdict, std::string_view> kVerdictNames[] = {
    {CoreVerdict::kMember, "member"},
    {CoreVerdict::kNotIndividuallyRational, "not_individually_rational"},
    {CoreVerdict::kInefficient, "inefficient"},
    {CoreVerdict::kBlockingCoalition, "blocking_coalition"},
    {CoreVerdict::kDominatingPartition, "dominating_partition"},
    {CoreVerdict::kDeficientPartition, "deficient_partition"},
};

}  // namespace

std::string to_string(CoreVerdict verdict) {
  for (const auto& [v, name] : kVerdictNames) {
    if (v == verdict) return std::string(name);
  }
  return "?";
}

CoreVerdict parse_core_verdict(std::string_view text) {
  for (const auto& [v, name] : kVerdictNames) {
    if (name == text) return v;
  }
  throw InputError("unknown core verdict '" + std::string(text) + "'");
}

namespace {

CoreReport rejection(Mode mode, CoreVerdict verdict) {
  CoreReport r;
  r.mode = mode;
  r.member = false;
  r.verdict = verdict;
  return r;
}

// Individual rationality then efficiency; nullopt when x is an imputation.
std::optional<CoreReport> imputation_failure(const Game& game,
                                             const Allocation& x, Mode mode) {
  for (int i = 0; i < game.num_players(); ++i) {
    const Coalition c = Coalition::singleton(i);
    if (x[static_cast<std::size_t>(i)] < game.value(c)) {
      CoreReport r = rejection(mode, CoreVerdict::kNotIndividuallyRational);
      r.coalition = c;
      return r;
    }
  }
  if (x.total() != game.value(game.grand())) {
    CoreReport r = rejection(mode, CoreVerdict::kInefficient);
    r.coalition = game.grand();
    return r;
  }
  return std::nullopt;
}

}  // namespace

CoreReport strong_core_contains(const Game& game, const Allocation& x) {
  require_allocation_size(game, x);
  const std::vector<Rational> sums = kernels::subset_sums(x.payoffs());
  const Mask grand = game.grand().bits();
  for (Mask c = 1; c < grand; ++c) {
    if (sums[c] < game.values()[c]) {
      CoreReport r = rejection(Mode::kStrong, CoreVerdict::kBlockingCoalition);
      r.coalition = Coalition(c);
      return r;
    }
  }
  if (sums[grand] != game.values()[grand]) {
    CoreReport r = rejection(Mode::kStrong, CoreVerdict::kInefficient);
    r.coalition = game.grand();
    return r;
  }
  CoreReport r;
  r.mode = Mode::kStrong;
  r.member = true;
  return r;
}

LinearProgram imputation_program(const Game& game) {
  const int n = game.num_players();
  LinearProgram lp(n);
  for (int i = 0; i < n; ++i) {
    lp.lower[static_cast<std::size_t>(i)] = game.value(Coalition::singleton(i));
  }
  lp.add_constraint(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)),
                    Relation::kEqual, game.value(game.grand()));
  return lp;
}

namespace {

std::vector<Rational> indicator_row(int n, Mask c) {
  std::vector<Rational> row(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    if ((c >> i) & 1U) row[static_cast<std::size_t>(i)] = 1;
  }
  return row;
}

void require_coalition(LinearProgram& lp, const Game& game, Mask c) {
  lp.add_constraint(indicator_row(game.num_players(), c),
                    Relation::kGreaterEqual, game.values()[c]);
}

bool imputation_set_empty(const Game& game) {
  Rational singles = 0;
  for (int i = 0; i < game.num_players(); ++i) {
    singles += game.value(Coalition::singleton(i));
  }
  return game.value(game.grand()) < singles;
}

}  // namespace

LinearProgram strong_core_program(const Game& game) {
  LinearProgram lp = imputation_program(game);
  const Mask grand = game.grand().bits();
  for (Mask c = 1; c < grand; ++c) {
    if (std::popcount(c) >= 2) require_coalition(lp, game, c);
  }
  return lp;
}

CoreExistence strong_core_nonempty(const Game& game) {
  const int n = game.num_players();
  const Mask grand = game.grand().bits();
  LinearProgram lp = imputation_program(game);
  // Cuts added per round: the most violated coalitions, lowest mask first
  // among equals.
  const std::size_t per_round = static_cast<std::size_t>(n);
  while (true) {
    LpOutcome out = lp_solve(lp);
    if (out.status != LpStatus::kOptimal) return {};
    const std::vector<Rational> sums = kernels::subset_sums(out.witness);
    std::vector<std::pair<Rational, Mask>> violated;
    for (Mask c = 1; c < grand; ++c) {
      if (sums[c] < game.values()[c]) {
        violated.emplace_back(game.values()[c] - sums[c], c);
      }
    }
    if (violated.empty()) {
      return {true, Allocation(std::move(out.witness))};
    }
    const std::size_t take = std::min(per_round, violated.size());
    std::partial_sort(violated.begin(),
                      violated.begin() + static_cast<std::ptrdiff_t>(take),
                      violated.end(), [](const auto& a, const auto& b) {
                        if (a.first != b.first) return a.first > b.first;
                        return a.second < b.second;
                      });
    for (std::size_t k = 0; k < take; ++k) {
      require_coalition(lp, game, violated[k].second);
    }
  }
}

std::pair<Rational, Partition> optimal_structure_value(const Game& game) {
  const auto& table = game.structures();
  const Coalition grand = game.grand();
  return {table.best[grand.bits()],
          unchecked_partition(game.num_players(), table.argmax(grand))};
}

std::pair<Rational, Partition> best_nongrand_partition(const Game& game) {
  const int n = game.num_players();
  if (n == 1) {
    throw NoNonGrandPartition(
        "a 1-player game has no partition other than the grand coalition");
  }
  const auto& table = game.structures();
  const Mask grand = game.grand().bits();
  // First block T holds player 0 and is proper; the rest is opt(N \ T).
  std::optional<Rational> best;
  std::optional<Partition> best_partition;
  Rational candidate;
  for (Mask rest = (grand ^ 1U); rest != 0; rest = (rest - 1) & (grand ^ 1U)) {
    const Mask first = grand ^ rest;
    candidate = table.best[first] + table.best[rest];
    if (best && candidate < *best) continue;
    std::vector<Coalition> blocks = table.argmax(Coalition(first));
    const auto tail = table.argmax(Coalition(rest));
    blocks.insert(blocks.end(), tail.begin(), tail.end());
    Partition p = unchecked_partition(n, std::move(blocks));
    if (!best || candidate > *best || p < *best_partition) {
      best = candidate;
      best_partition = std::move(p);
    }
  }
  return {*best, *best_partition};
}

Rational max_nongrand_worth(const Game& game) {
  return best_nongrand_partition(game).first;
}

bool medium_core_nonempty(const Game& game) {
  if (game.num_players() == 1) return true;
  return game.value(game.grand()) >= max_nongrand_worth(game);
}

CoreReport medium_core_contains(const Game& game, const Allocation& x) {
  require_allocation_size(game, x);
  if (auto failure = imputation_failure(game, x, Mode::kMedium)) return *failure;
  CoreReport r;
  r.mode = Mode::kMedium;
  if (game.num_players() == 1) {
    r.member = true;
    return r;
  }
  auto [threshold, argmax] = best_nongrand_partition(game);
  if (game.value(game.grand()) >= threshold) {
    r.member = true;
    return r;
  }
  r.verdict = CoreVerdict::kDominatingPartition;
  r.partition = std::move(argmax);
  return r;
}

CoreReport weak_core_contains(const Game& game, const Allocation& x) {
  require_allocation_size(game, x);
  if (auto failure = imputation_failure(game, x, Mode::kWeak)) return *failure;
  const int n = game.num_players();
  const std::vector<Rational> sums = kernels::subset_sums(x.payoffs());
  const Mask grand = game.grand().bits();
  std::vector<std::uint8_t> deficient(sums.size(), 0);
  for (Mask c = 1; c < grand; ++c) {
    deficient[c] = sums[c] < game.values()[c] ? 1 : 0;
  }
  const kernels::CoverTable covers = kernels::flagged_covers(n, deficient);
  CoreReport r;
  r.mode = Mode::kWeak;
  if (covers.covered(game.grand())) {
    r.verdict = CoreVerdict::kDeficientPartition;
    r.partition = unchecked_partition(n, covers.cover(game.grand()));
    return r;
  }
  r.member = true;
  for (Mask c = 1; c < grand; ++c) {
    if (deficient[c] == 0) r.satisfied.emplace_back(c);
  }
  return r;
}

CoreExistence weak_core_nonempty(const Game& game) {
  if (imputation_set_empty(game)) return {};
  if (medium_core_nonempty(game)) {
    return {true, equal_surplus_allocation(game, Partition::grand(game.num_players()))};
  }
  const int n = game.num_players();
  const Mask grand = game.grand().bits();
  std::set<std::vector<Mask>> visited;
  std::vector<Rational> sums;
  std::vector<std::uint8_t> deficient(std::size_t{1} << n, 0);

  // Depth-first; `forced` stays sorted so it doubles as the memo key.
  auto search = [&](auto&& self, std::vector<Mask>& forced) -> std::optional<Allocation> {
    if (!visited.insert(forced).second) return std::nullopt;
    LinearProgram lp = imputation_program(game);
    for (Mask c : forced) require_coalition(lp, game, c);
    LpOutcome out = lp_solve(lp);
    if (out.status != LpStatus::kOptimal) return std::nullopt;
    sums = kernels::subset_sums(out.witness);
    for (Mask c = 1; c < grand; ++c) {
      deficient[c] = sums[c] < game.values()[c] ? 1 : 0;
    }
    const kernels::CoverTable covers = kernels::flagged_covers(n, deficient);
    if (!covers.covered(game.grand())) return Allocation(std::move(out.witness));
    for (Coalition block : covers.cover(game.grand())) {
      auto at = std::lower_bound(forced.begin(), forced.end(), block.bits());
      at = forced.insert(at, block.bits());
      auto found = self(self, forced);
      forced.erase(std::lower_bound(forced.begin(), forced.end(), block.bits()));
      if (found) return found;
    }
    return std::nullopt;
  };
  std::vector<Mask> forced;
  if (auto found = search(search, forced)) return {true, std::move(found)};
  return {};
}

CoreReport core_contains(const Game& game, const Allocation& x, Mode mode) {
  switch (mode) {
    case Mode::kStrong: return strong_core_contains(game, x);
    case Mode::kMedium: return medium_core_contains(game, x);
    case Mode::kWeak: return weak_core_contains(game, x);
  }
  throw InputError("unknown mode");
}

CoreExistence core_nonempty(const Game& game, Mode mode) {
  switch (mode) {
    case Mode::kStrong: return strong_core_nonempty(game);
    case Mode::kMedium:
      if (!medium_core_nonempty(game) || imputation_set_empty(game)) return {};
      return {true, equal_surplus_allocation(game, Partition::grand(game.num_players()))};
    case Mode::kWeak: return weak_core_nonempty(game);
  }
  throw InputError("unknown mode");
}

}  // namespace partstab
