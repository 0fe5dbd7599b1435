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

#include "partstab/stability.hpp"

#include <stdexcept>

#include "partstab/errors.hpp"
#include "partstab/lattice.hpp"

namespace partstab {
namespace {

using Mask = Coalition::Mask;

Coalition lift(const SubGame& sub, Coalition local) {
  Mask bits = 0;
  for (int k : local.members()) {
    bits |= Mask{1} << sub.players[static_cast<std::size_t>(k)];
  }
  return Coalition(bits);
}

Partition replace_block(const Partition& p, Coalition block,
                        const std::vector<Coalition>& pieces) {
  std::vector<Coalition> blocks;
  for (Coalition b : p.blocks()) {
    if (b != block) blocks.push_back(b);
  }
  blocks.insert(blocks.end(), pieces.begin(), pieces.end());
  return unchecked_partition(p.num_players(), std::move(blocks));
}

// Empty when (p, x) is feasible, else a reason.
std::string infeasibility(const Game& game, const Partition& p,
                          const Allocation& x) {
  for (int i = 0; i < game.num_players(); ++i) {
    const Coalition c = Coalition::singleton(i);
    if (x[static_cast<std::size_t>(i)] < game.value(c)) {
      return "player " + game.name(i) + " receives " +
             to_string(x[static_cast<std::size_t>(i)]) + " below v({" +
             game.name(i) + "}) = " + to_string(game.value(c));
    }
  }
  for (Coalition b : p.blocks()) {
    if (x.sum(b) != game.value(b)) {
      return "block " + to_string(b, game.names()) + " receives " +
             to_string(x.sum(b)) + " but is worth " + to_string(game.value(b));
    }
  }
  return {};
}

void require_feasible(const Game& game, const PAPair& pair) {
  require_partition_size(game, pair.partition);
  require_allocation_size(game, pair.allocation);
  std::string why = infeasibility(game, pair.partition, pair.allocation);
  if (!why.empty()) throw InfeasiblePair("infeasible pair: " + why);
}

struct FissionOutcome {
  bool resistant = true;
  std::optional<Coalition> block;
  std::optional<Partition> refinement;
};

// Per-block core tests, stopping at the first failing block.
FissionOutcome decomposed_fission(const Game& game, const PAPair& pair,
                                  Mode mode) {
  const Partition& p = pair.partition;
  for (Coalition block : p.blocks()) {
    if (block.size() < 2) continue;
    const SubGame sub = subgame(game, block);
    std::vector<Coalition> pieces;
    switch (mode) {
      case Mode::kStrong: {
        const CoreReport r = strong_core_contains(
            sub.game, pair.allocation.restricted_to(block));
        if (r.member) continue;
        const Coalition part = lift(sub, *r.coalition);
        pieces = {part, block - part};
        break;
      }
      case Mode::kMedium: {
        auto [threshold, argmax] = best_nongrand_partition(sub.game);
        if (game.value(block) >= threshold) continue;
        for (Coalition local : argmax.blocks()) pieces.push_back(lift(sub, local));
        break;
      }
      case Mode::kWeak: {
        const CoreReport r =
            weak_core_contains(sub.game, pair.allocation.restricted_to(block));
        if (r.member) continue;
        for (Coalition local : r.partition->blocks()) {
          pieces.push_back(lift(sub, local));
        }
        break;
      }
    }
    return {false, block, replace_block(p, block, pieces)};
  }
  return {};
}

struct FusionOutcome {
  bool resistant = true;
  std::optional<Coalition> merged;
  std::optional<Partition> coarsening;
};

// Block subsets in ascending index-mask order; the first with at least two
// blocks and sum of values below the value of the union fails.
FusionOutcome block_subset_scan(const Game& game, const Partition& p) {
  const std::size_t count = p.blocks().size();
  const std::size_t subsets = std::size_t{1} << count;
  std::vector<Mask> unions(subsets, 0);
  std::vector<Rational> apart(subsets, Rational(0));
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = s & (~s + 1);
    const std::size_t k = static_cast<std::size_t>(std::countr_zero(s));
    unions[s] = unions[s ^ low] | p[k].bits();
    apart[s] = apart[s ^ low] + game.values()[p[k].bits()];
    if ((s ^ low) == 0) continue;
    if (apart[s] < game.values()[unions[s]]) {
      std::vector<Coalition> blocks{Coalition(unions[s])};
      for (std::size_t j = 0; j < count; ++j) {
        if (((s >> j) & 1U) == 0) blocks.push_back(p[j]);
      }
      return {false, Coalition(unions[s]),
              unchecked_partition(p.num_players(), std::move(blocks))};
    }
  }
  return {};
}

bool block_core_nonempty(const Game& game, Coalition block, Mode mode) {
  if (block.size() == 1) return true;
  switch (mode) {
    case Mode::kMedium:
      return game.value(block) == game.structures().best[block.bits()];
    case Mode::kStrong:
      return strong_core_nonempty(subgame(game, block).game).nonempty;
    case Mode::kWeak: {
      if (block.size() == 2) {
        Rational singles = 0;
        for (int i : block.members()) singles += game.value(Coalition::singleton(i));
        return game.value(block) >= singles;
      }
      return weak_core_nonempty(subgame(game, block).game).nonempty;
    }
  }
  return false;
}

}  // namespace

bool fission_resistant_direct(const Game& game, const PAPair& pair, Mode mode) {
  require_feasible(game, pair);
  const Partition& p = pair.partition;
  const Allocation& x = pair.allocation;
  const Rational current = worth(game, p);
  bool resistant = true;
  for_each_refinement(p, [&](const Partition& finer) {
    if (!resistant) return;
    switch (mode) {
      case Mode::kStrong:
        for (Coalition c : finer.blocks()) {
          if (!p.contains_block(c) && x.sum(c) < game.value(c)) resistant = false;
        }
        break;
      case Mode::kMedium:
        if (worth(game, finer) > current) resistant = false;
        break;
      case Mode::kWeak: {
        bool blocked = false;
        for (Coalition c : finer.blocks()) {
          if (!p.contains_block(c) && x.sum(c) >= game.value(c)) blocked = true;
        }
        if (!blocked) resistant = false;
        break;
      }
    }
  });
  return resistant;
}

bool fission_resistant_decomposed(const Game& game, const PAPair& pair,
                                  Mode mode) {
  require_feasible(game, pair);
  return decomposed_fission(game, pair, mode).resistant;
}

bool fusion_resistant(const Game& game, const PAPair& pair) {
  require_feasible(game, pair);
  return block_subset_scan(game, pair.partition).resistant;
}

bool fusion_resistant_by_coarsenings(const Game& game, const Partition& p) {
  require_partition_size(game, p);
  const Rational current = worth(game, p);
  bool resistant = true;
  for_each_coarsening(p, [&](const Partition& coarser) {
    if (resistant && worth(game, coarser) > current) resistant = false;
  });
  return resistant;
}

bool patched_core_contains(const Game& game, const Partition& p,
                           const Allocation& x, Mode mode) {
  require_partition_size(game, p);
  require_allocation_size(game, x);
  for (Coalition block : p.blocks()) {
    const SubGame sub = subgame(game, block);
    if (!core_contains(sub.game, x.restricted_to(block), mode).member) return false;
  }
  return true;
}

bool partition_in_Pi(const Game& game, const Partition& p, Mode mode) {
  require_partition_size(game, p);
  for (Coalition block : p.blocks()) {
    if (!block_core_nonempty(game, block, mode)) return false;
  }
  return true;
}

bool partition_in_Pu(const Game& game, const Partition& p) {
  require_partition_size(game, p);
  return block_subset_scan(game, p).resistant;
}

StabilityReport stable_contains(const Game& game, const PAPair& pair, Mode mode) {
  require_partition_size(game, pair.partition);
  require_allocation_size(game, pair.allocation);
  StabilityReport report;
  report.mode = mode;
  report.detail = infeasibility(game, pair.partition, pair.allocation);
  if (!report.detail.empty()) {
    report.feasible = false;
    return report;
  }
  FissionOutcome fission = decomposed_fission(game, pair, mode);
  report.fission_resistant = fission.resistant;
  report.fission_block = fission.block;
  report.fission_certificate = std::move(fission.refinement);
  FusionOutcome fusion = block_subset_scan(game, pair.partition);
  report.fusion_resistant = fusion.resistant;
  report.fusion_coalition = fusion.merged;
  report.fusion_certificate = std::move(fusion.coarsening);
  report.stable = report.fission_resistant && report.fusion_resistant;

  if (game.num_players() <= kStabilityCrossCheckCap) {
    const bool direct = fission_resistant_direct(game, pair, mode);
    const bool by_worth = fusion_resistant_by_coarsenings(game, pair.partition);
    const bool patched =
        patched_core_contains(game, pair.partition, pair.allocation, mode) &&
        partition_in_Pu(game, pair.partition);
    if (direct != report.fission_resistant || by_worth != report.fusion_resistant ||
        patched != report.stable) {
      throw std::logic_error("stability cross-check disagreement on " +
                             to_string(pair.partition) + " with x = " +
                             to_string(pair.allocation));
    }
  }
  return report;
}

std::vector<Partition> enumerate_stable_partitions(const Game& game, Mode mode) {
  const int n = game.num_players();
  if (n > kEnumerateStableCap) {
    throw LimitExceeded("stable-partition enumeration refused: " +
                        std::to_string(n) + " players exceeds the cap of " +
                        std::to_string(kEnumerateStableCap));
  }
  // -1 unknown, else whether the block's subgame core is nonempty.
  std::vector<signed char> block_ok(std::size_t{1} << n, -1);
  std::vector<Partition> out;
  PartitionStream stream(n, kEnumerateStableCap);
  while (auto p = stream.next()) {
    bool in_pi = true;
    for (Coalition block : p->blocks()) {
      auto& memo = block_ok[block.bits()];
      if (memo < 0) memo = block_core_nonempty(game, block, mode) ? 1 : 0;
      if (memo == 0) {
        in_pi = false;
        break;
      }
    }
    if (in_pi && block_subset_scan(game, *p).resistant) out.push_back(std::move(*p));
  }
  return out;
}

}  // namespace partstab
