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

// Transferable-utility games, allocations and partition-allocation pairs.

#ifndef PARTSTAB_GAME_HPP_
#define PARTSTAB_GAME_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "partstab/coalition.hpp"
#include "partstab/kernels.hpp"
#include "partstab/partition.hpp"
#include "partstab/rational.hpp"

namespace partstab {

namespace detail {
struct LazyStructure;
}

// A game (N, v): n players and an exact value for every coalition.
//
// Immutable once built. Values are stored in a table of size 2^n indexed by
// coalition bitmask; entry 0 is v(empty) = 0. The optimal-structure table
// (see kernels::StructureTable) is computed on first use and shared by
// copies of the game.
class Game {
 public:
  // `values` must have 2^n entries with values[0] == 0. `names` defaults to
  // "1", ..., "n". Throws InputError on malformed input and LimitExceeded
  // when n exceeds `player_cap` (itself at most kMaxPlayers).
  Game(int n, std::vector<Rational> values, std::vector<std::string> names = {},
       int player_cap = kDefaultPlayerCap);

  int num_players() const noexcept { return n_; }
  Coalition grand() const noexcept { return Coalition::all(n_); }

  // v(c); 0 for the empty set. Throws InputError when c names a player
  // outside {0..n-1}.
  const Rational& value(Coalition c) const;
  std::span<const Rational> values() const noexcept { return values_; }

  std::span<const std::string> names() const noexcept { return names_; }
  const std::string& name(int player) const { return names_.at(player); }

  // Per-subset optimal coalition structures. O(3^n) on first call.
  const kernels::StructureTable& structures() const;

 private:
  int n_;
  std::vector<Rational> values_;
  std::vector<std::string> names_;
  std::shared_ptr<detail::LazyStructure> lazy_;
};

// One payoff per player.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<Rational> payoffs)
      : payoffs_(std::move(payoffs)) {}
  Allocation(std::initializer_list<Rational> payoffs) : payoffs_(payoffs) {}

  std::size_t size() const noexcept { return payoffs_.size(); }
  const Rational& operator[](std::size_t i) const { return payoffs_[i]; }
  std::span<const Rational> payoffs() const noexcept { return payoffs_; }

  // x(C) = sum of payoffs over members of c.
  Rational sum(Coalition c) const;
  // Total payoff.
  Rational total() const;
  // x|_C reindexed to 0..|c|-1 in ascending player order.
  Allocation restricted_to(Coalition c) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;

 private:
  std::vector<Rational> payoffs_;
};

std::string to_string(const Allocation& x);

// A partition together with an allocation meant to be feasible for it.
struct PAPair {
  Partition partition;
  Allocation allocation;
};

// The restriction of a game to coalition c, with players renumbered.
struct SubGame {
  Game game;
  // players[k] = original index of the subgame's player k (ascending).
  std::vector<int> players;
};

const Rational& coalition_value(const Game& game, Coalition c);

// Restriction v|_C. Throws InputError for an empty c.
SubGame subgame(const Game& game, Coalition c);

// Sum of block values.
Rational worth(const Game& game, const Partition& p);

// x individually rational and sum x = v(N).
bool is_efficient_allocation(const Game& game, const Allocation& x);

// x individually rational and efficient within every block of p.
bool is_partition_allocation(const Game& game, const Partition& p,
                             const Allocation& x);

// Within each block C, x(i) = v({i}) + (v(C) - sum_{j in C} v({j})) / |C|.
// Throws EmptyBlockAllocation naming the first block with negative surplus.
Allocation equal_surplus_allocation(const Game& game, const Partition& p);

// Throws InputError if x.size() != n.
void require_allocation_size(const Game& game, const Allocation& x);

// Throws InputError if p is a partition of a different player count.
void require_partition_size(const Game& game, const Partition& p);

}  // namespace partstab

#endif  // PARTSTAB_GAME_HPP_
