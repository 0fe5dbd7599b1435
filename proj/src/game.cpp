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

#include "partstab/game.hpp"

#include <mutex>
#include <unordered_set>

#include "partstab/errors.hpp"

namespace partstab {

namespace detail {
struct LazyStructure {
  std::once_flag once;
  kernels::StructureTable table;
};
}  // namespace detail

Game::Game(int n, std::vector<Rational> values, std::vector<std::string> names,
           int player_cap)
    : n_(n),
      values_(std::move(values)),
      names_(std::move(names)),
      lazy_(std::make_shared<detail::LazyStructure>()) {
  if (player_cap > kMaxPlayers) player_cap = kMaxPlayers;
  if (n < 1) throw InputError("a game needs at least one player");
  if (n > player_cap) {
    throw LimitExceeded("game has " + std::to_string(n) +
                        " players; the cap is " + std::to_string(player_cap));
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw InputError("value table must have 2^n = " +
                     std::to_string(std::size_t{1} << n) + " entries, got " +
                     std::to_string(values_.size()));
  }
  for (auto& q : values_) {
    if (q.get_den() == 0) throw InputError("value with zero denominator");
    q.canonicalize();
  }
  if (values_[0] != 0) throw InputError("v(empty set) must be 0");
  if (names_.empty()) {
    for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i + 1));
  }
  if (names_.size() != static_cast<std::size_t>(n)) {
    throw InputError("expected " + std::to_string(n) + " player names");
  }
  std::unordered_set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) {
    throw InputError("duplicate player name");
  }
}

const Rational& Game::value(Coalition c) const {
  if (!c.is_subset_of(grand())) {
    throw InputError("coalition names player " +
                     std::to_string((c - grand()).min_player()) +
                     " outside a " + std::to_string(n_) + "-player game");
  }
  return values_[c.bits()];
}

const kernels::StructureTable& Game::structures() const {
  std::call_once(lazy_->once, [this] {
    lazy_->table = kernels::optimal_structures(n_, values_);
  });
  return lazy_->table;
}

Rational Allocation::sum(Coalition c) const {
  Rational total = 0;
  for (int i : c.members()) total += payoffs_[static_cast<std::size_t>(i)];
  return total;
}

Rational Allocation::total() const {
  Rational total = 0;
  for (const auto& q : payoffs_) total += q;
  return total;
}

Allocation Allocation::restricted_to(Coalition c) const {
  std::vector<Rational> out;
  for (int i : c.members()) out.push_back(payoffs_[static_cast<std::size_t>(i)]);
  return Allocation(std::move(out));
}

std::string to_string(const Allocation& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ',';
    out += to_string(x[i]);
  }
  out += ')';
  return out;
}

const Rational& coalition_value(const Game& game, Coalition c) {
  return game.value(c);
}

SubGame subgame(const Game& game, Coalition c) {
  if (c.empty()) throw InputError("subgame of the empty coalition");
  if (!c.is_subset_of(game.grand())) {
    throw InputError("subgame coalition outside the player set");
  }
  std::vector<int> players = c.members();
  const int m = c.size();
  // Scatter each local mask to the original bit positions.
  std::vector<Rational> values(std::size_t{1} << m);
  std::vector<Coalition::Mask> scatter(std::size_t{1} << m, 0);
  for (Coalition::Mask local = 1; local < (Coalition::Mask{1} << m); ++local) {
    const int k = std::countr_zero(local);
    scatter[local] = scatter[local & (local - 1)] |
                     (Coalition::Mask{1} << players[static_cast<std::size_t>(k)]);
    values[local] = game.values()[scatter[local]];
  }
  std::vector<std::string> names;
  for (int i : players) names.push_back(game.name(i));
  return SubGame{Game(m, std::move(values), std::move(names), kMaxPlayers),
                 std::move(players)};
}

Rational worth(const Game& game, const Partition& p) {
  require_partition_size(game, p);
  Rational total = 0;
  for (Coalition b : p.blocks()) total += game.value(b);
  return total;
}

void require_allocation_size(const Game& game, const Allocation& x) {
  if (x.size() != static_cast<std::size_t>(game.num_players())) {
    throw InputError("allocation has " + std::to_string(x.size()) +
                     " payoffs for a " + std::to_string(game.num_players()) +
                     "-player game");
  }
}

void require_partition_size(const Game& game, const Partition& p) {
  if (p.num_players() != game.num_players()) {
    throw InputError("partition of " + std::to_string(p.num_players()) +
                     " players used with a " +
                     std::to_string(game.num_players()) + "-player game");
  }
}

namespace {

bool individually_rational(const Game& game, const Allocation& x) {
  for (int i = 0; i < game.num_players(); ++i) {
    if (x[static_cast<std::size_t>(i)] < game.value(Coalition::singleton(i))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_efficient_allocation(const Game& game, const Allocation& x) {
  require_allocation_size(game, x);
  return individually_rational(game, x) && x.total() == game.value(game.grand());
}

bool is_partition_allocation(const Game& game, const Partition& p,
                             const Allocation& x) {
  require_allocation_size(game, x);
  require_partition_size(game, p);
  if (!individually_rational(game, x)) return false;
  for (Coalition b : p.blocks()) {
    if (x.sum(b) != game.value(b)) return false;
  }
  return true;
}

Allocation equal_surplus_allocation(const Game& game, const Partition& p) {
  require_partition_size(game, p);
  std::vector<Rational> out(static_cast<std::size_t>(game.num_players()));
  for (Coalition b : p.blocks()) {
    Rational standalone = 0;
    for (int i : b.members()) standalone += game.value(Coalition::singleton(i));
    Rational share = game.value(b) - standalone;
    if (share < 0) {
      throw EmptyBlockAllocation(
          "block " + to_string(b, game.names()) + " has value " +
              to_string(game.value(b)) + " below its singleton total " +
              to_string(standalone),
          b.bits());
    }
    share /= b.size();
    for (int i : b.members()) {
      out[static_cast<std::size_t>(i)] =
          game.value(Coalition::singleton(i)) + share;
    }
  }
  return Allocation(std::move(out));
}

}  // namespace partstab
