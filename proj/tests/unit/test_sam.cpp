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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partstab/errors.hpp"
#include "partstab/sam.hpp"
#include "partstab/stability.hpp"

namespace partstab {
namespace {

using oracle::Blocks;
using oracle::game_a;
using oracle::game_b;

Partition blocks(int n, std::initializer_list<std::initializer_list<int>> bs) {
  std::vector<Coalition> out;
  for (auto b : bs) out.push_back(Coalition::of(b));
  return Partition(n, out);
}

// Players 1, 2, 3 each alone worth 1; only {2,3} pays more together.
Game turning_game() { return oracle::game_from(3, {0, 1, 1, 0, 1, 0, 5, 0}); }

bool has_direction_change(const SamTrace& t) {
  for (std::size_t k = 1; k < t.steps.size(); ++k) {
    if (t.steps[k].direction != t.steps[k - 1].direction) return true;
  }
  return false;
}

TEST_CASE("best refinement examples") {
  const Partition ac_b = blocks(3, {{0, 2}, {1}});
  CHECK(best_refinement(game_b(), Partition::grand(3)) ==
        std::pair<Rational, Partition>{10, ac_b});
  CHECK(best_refinement(game_b(), ac_b) == std::pair<Rational, Partition>{10, ac_b});
  CHECK(best_refinement(game_a(), Partition::singletons(3)) ==
        std::pair<Rational, Partition>{0, Partition::singletons(3)});
}

TEST_CASE("best coarsening examples") {
  const Partition ac_b = blocks(3, {{0, 2}, {1}});
  CHECK(best_coarsening(game_b(), Partition::singletons(3)) ==
        std::pair<Rational, Partition>{10, ac_b});
  CHECK(best_coarsening(game_b(), ac_b) ==
        std::pair<Rational, Partition>{8, Partition::grand(3)});
  CHECK(best_coarsening(game_a(), Partition::singletons(3)) ==
        std::pair<Rational, Partition>{6, Partition::grand(3)});
  CHECK_THROWS_AS(best_coarsening(game_a(), Partition::grand(3)), NoCoarsening);
}

TEST_CASE("single steps") {
  const auto b = sam_step(game_b(), Partition::singletons(3));
  REQUIRE(b.has_value());
  CHECK(b->to == blocks(3, {{0, 2}, {1}}));
  CHECK(b->to_worth == 10);
  CHECK(b->direction == MoveKind::kFusion);
  CHECK_FALSE(sam_step(game_b(), blocks(3, {{0, 2}, {1}})).has_value());
  const auto a = sam_step(game_a(), Partition::singletons(3));
  REQUIRE(a.has_value());
  CHECK(a->to == Partition::grand(3));
}

TEST_CASE("runs") {
  const SamTrace b = sam_run(game_b(), Partition::singletons(3));
  CHECK(b.steps.size() == 1);
  CHECK(b.terminal == blocks(3, {{0, 2}, {1}}));
  CHECK(b.terminal_pair.allocation == Allocation{3, 4, 3});
  const SamTrace a = sam_run(game_a(), Partition::singletons(3));
  CHECK(a.steps.size() == 1);
  CHECK(a.terminal == Partition::grand(3));
  CHECK(a.terminal_pair.allocation == Allocation{2, 2, 2});
  const SamTrace still = sam_run(game_b(), blocks(3, {{0, 2}, {1}}));
  CHECK(still.steps.empty());
  CHECK(still.terminal == still.start);
}

TEST_CASE("pinned run with a direction change") {
  const SamTrace t = sam_run(turning_game(), blocks(3, {{0, 1}, {2}}));
  REQUIRE(t.steps.size() == 2);
  CHECK(t.steps[0].direction == MoveKind::kFission);
  CHECK(t.steps[0].to == Partition::singletons(3));
  CHECK(t.steps[1].direction == MoveKind::kFusion);
  CHECK(t.steps[1].to == blocks(3, {{0}, {1, 2}}));
  CHECK(t.terminal_worth == 6);
}

TEST_CASE("search finds multi-step runs with a direction change") {
  std::mt19937_64 rng(89);
  bool found = false;
  for (int trial = 0; trial < 2000 && !found; ++trial) {
    const Game g = oracle::random_game(rng, 3, -3, 6);
    for (const Blocks& p : oracle::all_partitions(3)) {
      const SamTrace t = sam_run(g, oracle::to_partition(3, p));
      if (t.steps.size() >= 2 && has_direction_change(t)) found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("best refinement and coarsening match brute force") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 5;
    const Game g = oracle::random_game(rng, n, -3, 3);
    const auto all = oracle::all_partitions(n);
    for (const Blocks& p : all) {
      const Partition part = oracle::to_partition(n, p);
      Rational fine = oracle::worth(g, p);
      std::optional<Rational> coarse;
      std::optional<Partition> coarse_arg;
      for (const Blocks& q : all) {
        const Rational w = oracle::worth(g, q);
        if (oracle::refines(q, p)) fine = std::max(fine, w);
        if (oracle::refines(p, q)) {
          const Partition qp = oracle::to_partition(n, q);
          if (!coarse || w > *coarse || (w == *coarse && qp < *coarse_arg)) {
            coarse = w;
            coarse_arg = qp;
          }
        }
      }
      const auto [rv, rp] = best_refinement(g, part);
      CHECK(rv == fine);
      CHECK(worth(g, rp) == fine);
      CHECK((rp == part || is_refinement(rp, part)));
      if (fine == worth(g, part)) CHECK(rp == part);
      if (coarse) {
        const auto [cv, cp] = best_coarsening(g, part);
        CHECK(cv == *coarse);
        CHECK(cp == *coarse_arg);
      }
    }
  }
}

TEST_CASE("terminals are medium stable and traces ascend") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + trial % 4;
    const Game g = oracle::random_game(rng, n);
    const auto stable = enumerate_stable_partitions(g, Mode::kMedium);
    for (const Blocks& p : oracle::all_partitions(n)) {
      const SamTrace t = sam_run(g, oracle::to_partition(n, p));
      CHECK(t == sam_run(g, t.start));
      Rational last = worth(g, t.start);
      Partition at = t.start;
      for (const SamStep& s : t.steps) {
        CHECK(s.from == at);
        CHECK(s.from_worth == last);
        CHECK(s.to_worth > last);
        CHECK(s.to_worth == worth(g, s.to));
        if (s.direction == MoveKind::kFission) {
          CHECK(is_refinement(s.to, s.from));
        } else {
          CHECK(is_refinement(s.from, s.to));
        }
        last = s.to_worth;
        at = s.to;
      }
      CHECK(t.terminal == at);
      CHECK(t.terminal_worth == last);
      CHECK(std::find(stable.begin(), stable.end(), t.terminal) != stable.end());
      CHECK(stable_contains(g, t.terminal_pair, Mode::kMedium).stable);
      CHECK(t.steps.size() <= oracle::bell(n));
    }
  }
}

}  // namespace
}  // namespace partstab
