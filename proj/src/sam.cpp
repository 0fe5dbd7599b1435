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

#include "partstab/sam.hpp"

#include <array>

#include "partstab/errors.hpp"
#include "partstab/kernels.hpp"

namespace partstab {

using Mask = Coalition::Mask;

std::pair<Rational, Partition> best_refinement(const Game& game,
                                               const Partition& p) {
  require_partition_size(game, p);
  const auto& table = game.structures();
  Rational best = 0;
  std::vector<Coalition> blocks;
  for (Coalition b : p.blocks()) {
    best += table.best[b.bits()];
    const auto pieces = table.argmax(b);
    blocks.insert(blocks.end(), pieces.begin(), pieces.end());
  }
  if (best == worth(game, p)) return {std::move(best), p};
  return {std::move(best), unchecked_partition(p.num_players(), std::move(blocks))};
}

namespace {

// h(S): best quotient partition of S with at least one block of size >= 2.
// A singleton first block must be followed by such a partition of the rest;
// a larger first block may be followed by any partition of the rest.
struct MergeTable {
  std::vector<Rational> best;
  std::vector<std::uint8_t> blocks;  // 0 = undefined (|S| < 2)
  std::vector<Mask> first;
};

// Block chain of the h-argmax of s given its first block.
void merge_chain(Mask s, Mask head, const MergeTable& h,
                 const kernels::StructureTable& opt, std::vector<Mask>& out) {
  out.push_back(head);
  const Mask rest = s ^ head;
  if (rest == 0) return;
  if (std::popcount(head) >= 2) {
    for (Coalition c : opt.argmax(Coalition(rest))) out.push_back(c.bits());
  } else {
    merge_chain(rest, h.first[rest], h, opt, out);
  }
}

bool chain_less(Mask s, const std::vector<Mask>& a, const std::vector<Mask>& b) {
  std::array<std::uint8_t, 32> la{};
  std::array<std::uint8_t, 32> lb{};
  for (std::size_t k = 0; k < a.size(); ++k) {
    for (Mask m = a[k]; m != 0; m &= m - 1) la[std::countr_zero(m)] = static_cast<std::uint8_t>(k);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    for (Mask m = b[k]; m != 0; m &= m - 1) lb[std::countr_zero(m)] = static_cast<std::uint8_t>(k);
  }
  for (Mask m = s; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (la[i] != lb[i]) return la[i] < lb[i];
  }
  return false;
}

}  // namespace

std::pair<Rational, Partition> best_coarsening(const Game& game,
                                               const Partition& p) {
  require_partition_size(game, p);
  if (p.is_grand()) {
    throw NoCoarsening("the grand coalition has no strict coarsening");
  }
  const int m = p.size();
  const std::size_t size = std::size_t{1} << m;
  std::vector<Mask> unions(size, 0);
  std::vector<Rational> qv(size, Rational(0));
  for (std::size_t s = 1; s < size; ++s) {
    const auto low = static_cast<Mask>(s & (~s + 1));
    unions[s] = unions[s ^ low] | p[static_cast<std::size_t>(std::countr_zero(low))].bits();
    qv[s] = game.values()[unions[s]];
  }
  const kernels::StructureTable opt = kernels::optimal_structures(m, qv);

  MergeTable h{std::vector<Rational>(size, Rational(0)),
               std::vector<std::uint8_t>(size, 0), std::vector<Mask>(size, 0)};
  Rational candidate;
  std::vector<Mask> chain_a;
  std::vector<Mask> chain_b;
  for (Mask s = 1; s < size; ++s) {
    if (std::popcount(s) < 2) continue;
    const Mask low = s & (~s + 1);
    const Mask rest = s ^ low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      const Mask head = low | sub;
      const Mask tail = s ^ head;
      std::uint8_t blocks = 0;
      if (sub != 0) {
        candidate = qv[head] + opt.best[tail];
        blocks = static_cast<std::uint8_t>(1 + (tail == 0 ? 0 : opt.blocks[tail]));
      } else if (h.blocks[tail] != 0) {
        candidate = qv[head] + h.best[tail];
        blocks = static_cast<std::uint8_t>(1 + h.blocks[tail]);
      }
      if (blocks != 0) {
        bool take = h.blocks[s] == 0;
        if (!take) {
          const int order = cmp(candidate, h.best[s]);
          take = order > 0 || (order == 0 && blocks < h.blocks[s]);
          if (order == 0 && blocks == h.blocks[s]) {
            chain_a.clear();
            chain_b.clear();
            merge_chain(s, head, h, opt, chain_a);
            merge_chain(s, h.first[s], h, opt, chain_b);
            take = chain_less(s, chain_a, chain_b);
          }
        }
        if (take) {
          h.best[s] = candidate;
          h.blocks[s] = blocks;
          h.first[s] = head;
        }
      }
      if (sub == 0) break;
    }
  }

  const auto all = static_cast<Mask>(size - 1);
  std::vector<Mask> chain;
  merge_chain(all, h.first[all], h, opt, chain);
  std::vector<Coalition> blocks;
  for (Mask q : chain) blocks.emplace_back(unions[q]);
  return {h.best[all], unchecked_partition(p.num_players(), std::move(blocks))};
}

std::optional<SamStep> sam_step(const Game& game, const Partition& p) {
  const Rational current = worth(game, p);
  auto [up_worth, up] = best_refinement(game, p);
  SamStep step{p, std::move(up), current, std::move(up_worth), MoveKind::kFission};
  if (!p.is_grand()) {
    auto [merged_worth, merged] = best_coarsening(game, p);
    if (merged_worth >= step.to_worth) {
      step.to = std::move(merged);
      step.to_worth = std::move(merged_worth);
      step.direction = MoveKind::kFusion;
    }
  }
  if (step.to_worth > current) return step;
  return std::nullopt;
}

SamTrace sam_run(const Game& game, const Partition& start) {
  require_partition_size(game, start);
  SamTrace trace{start, {}, start, worth(game, start), {start, {}}};
  while (auto step = sam_step(game, trace.terminal)) {
    trace.terminal = step->to;
    trace.terminal_worth = step->to_worth;
    trace.steps.push_back(std::move(*step));
  }
  trace.terminal_pair = {trace.terminal, equal_surplus_allocation(game, trace.terminal)};
  return trace;
}

}  // namespace partstab
