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

#include "partstab/kernels.hpp"

#include <array>
#include <cassert>
#include <cstddef>

namespace partstab::kernels {
namespace {

using Mask = Coalition::Mask;

constexpr std::uint8_t kNoCover = 0;

std::size_t table_size(int n) { return std::size_t{1} << n; }

// Restricted-growth comparison of two partitions of s: each has first block
// `a` (resp. `b`) followed by the chain stored in `first` for the remainder.
bool chain_precedes(Mask s, Mask a, Mask b, const std::vector<Mask>& first) {
  std::array<std::uint8_t, 32> la{};
  std::array<std::uint8_t, 32> lb{};
  auto label = [&](Mask head, std::array<std::uint8_t, 32>& out) {
    std::uint8_t k = 0;
    for (Mask left = s, block = head; left != 0; ++k) {
      for (Mask m = block; m != 0; m &= m - 1) out[std::countr_zero(m)] = k;
      left ^= block;
      if (left != 0) block = first[left];
    }
  };
  label(a, la);
  label(b, lb);
  for (Mask m = s; m != 0; m &= m - 1) {
    const int i = std::countr_zero(m);
    if (la[i] != lb[i]) return la[i] < lb[i];
  }
  return false;
}

// Fills entry s of an optimal-structure table. All proper subsets of s must
// be filled already. `scratch` avoids an allocation per candidate.
void fill_structure_entry(Mask s, std::span<const Rational> values,
                          StructureTable& t, Rational& scratch) {
  const Mask low = s & (~s + 1);
  const Mask rest = s ^ low;
  // T = s itself: the one-block partition.
  Rational best = values[s];
  std::uint8_t best_blocks = 1;
  Mask best_first = s;
  // Every other T = low | sub with sub a proper submask of rest.
  if (rest == 0) {
    t.best[s] = best;
    t.blocks[s] = best_blocks;
    t.first[s] = best_first;
    return;
  }
  for (Mask sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
    const Mask first = low | sub;
    const Mask remainder = s ^ first;
    scratch = values[first] + t.best[remainder];
    const auto blocks = static_cast<std::uint8_t>(1 + t.blocks[remainder]);
    const int order = cmp(scratch, best);
    if (order > 0 || (order == 0 && (blocks < best_blocks ||
                                 (blocks == best_blocks &&
                                  chain_precedes(s, first, best_first, t.first))))) {
      best = scratch;
      best_blocks = blocks;
      best_first = first;
    }
    if (sub == 0) break;
  }
  t.best[s] = best;
  t.blocks[s] = best_blocks;
  t.first[s] = best_first;
}

void fill_cover_entry(Mask s, std::span<const std::uint8_t> flagged,
                      CoverTable& t) {
  const Mask low = s & (~s + 1);
  const Mask rest = s ^ low;
  std::uint8_t best_blocks = kNoCover;
  Mask best_first = 0;
  // Walk every T = low | sub, sub a submask of rest (including rest itself).
  for (Mask sub = rest;; sub = (sub - 1) & rest) {
    const Mask first = low | sub;
    if (flagged[first] != 0) {
      const Mask remainder = s ^ first;
      const bool tail_ok = remainder == 0 || t.blocks[remainder] != kNoCover;
      if (tail_ok) {
        const auto blocks = static_cast<std::uint8_t>(
            1 + (remainder == 0 ? 0 : t.blocks[remainder]));
        if (best_blocks == kNoCover || blocks < best_blocks ||
            (blocks == best_blocks &&
             chain_precedes(s, first, best_first, t.first))) {
          best_blocks = blocks;
          best_first = first;
        }
      }
    }
    if (sub == 0) break;
  }
  t.blocks[s] = best_blocks;
  t.first[s] = best_first;
}

StructureTable empty_structure_table(int n) {
  StructureTable t;
  t.n = n;
  t.best.assign(table_size(n), Rational(0));
  t.blocks.assign(table_size(n), 0);
  t.first.assign(table_size(n), 0);
  return t;
}

CoverTable empty_cover_table(int n) {
  CoverTable t;
  t.n = n;
  t.blocks.assign(table_size(n), kNoCover);
  t.first.assign(table_size(n), 0);
  return t;
}

}  // namespace

std::vector<Coalition> StructureTable::argmax(Coalition s) const {
  std::vector<Coalition> out;
  Mask left = s.bits();
  while (left != 0) {
    out.emplace_back(first[left]);
    left ^= first[left];
  }
  return out;
}

std::vector<Coalition> CoverTable::cover(Coalition s) const {
  std::vector<Coalition> out;
  if (!covered(s)) return out;
  Mask left = s.bits();
  while (left != 0) {
    out.emplace_back(first[left]);
    left ^= first[left];
  }
  return out;
}

std::vector<std::vector<Mask>> popcount_layers(int n) {
  std::vector<std::vector<Mask>> layers(static_cast<std::size_t>(n) + 1);
  for (Mask s = 0; s < table_size(n); ++s) {
    layers[static_cast<std::size_t>(std::popcount(s))].push_back(s);
  }
  return layers;
}

namespace serial {

std::vector<Rational> subset_sums(std::span<const Rational> payoffs) {
  const int n = static_cast<int>(payoffs.size());
  std::vector<Rational> sums(table_size(n), Rational(0));
  for (Mask s = 1; s < table_size(n); ++s) {
    sums[s] = sums[s & (s - 1)] + payoffs[std::countr_zero(s)];
  }
  return sums;
}

StructureTable optimal_structures(int n, std::span<const Rational> values) {
  assert(values.size() == table_size(n));
  StructureTable t = empty_structure_table(n);
  Rational scratch;
  for (Mask s = 1; s < table_size(n); ++s) {
    fill_structure_entry(s, values, t, scratch);
  }
  return t;
}

CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged) {
  assert(flagged.size() == table_size(n));
  CoverTable t = empty_cover_table(n);
  for (Mask s = 1; s < table_size(n); ++s) fill_cover_entry(s, flagged, t);
  return t;
}

}  // namespace serial

namespace parallel {

std::vector<Rational> subset_sums(std::span<const Rational> payoffs) {
  const int n = static_cast<int>(payoffs.size());
  std::vector<Rational> sums(table_size(n), Rational(0));
  const auto layers = popcount_layers(n);
  for (std::size_t k = 1; k < layers.size(); ++k) {
    const auto& layer = layers[k];
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      const Mask s = layer[static_cast<std::size_t>(j)];
      sums[s] = sums[s & (s - 1)] + payoffs[std::countr_zero(s)];
    }
  }
  return sums;
}

StructureTable optimal_structures(int n, std::span<const Rational> values) {
  assert(values.size() == table_size(n));
  StructureTable t = empty_structure_table(n);
  const auto layers = popcount_layers(n);
  for (std::size_t k = 1; k < layers.size(); ++k) {
    const auto& layer = layers[k];
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel
    {
      Rational scratch;
#pragma omp for schedule(dynamic, 16)
      for (std::ptrdiff_t j = 0; j < count; ++j) {
        fill_structure_entry(layer[static_cast<std::size_t>(j)], values, t,
                             scratch);
      }
    }
  }
  return t;
}

CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged) {
  assert(flagged.size() == table_size(n));
  CoverTable t = empty_cover_table(n);
  const auto layers = popcount_layers(n);
  for (std::size_t k = 1; k < layers.size(); ++k) {
    const auto& layer = layers[k];
    const auto count = static_cast<std::ptrdiff_t>(layer.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t j = 0; j < count; ++j) {
      fill_cover_entry(layer[static_cast<std::size_t>(j)], flagged, t);
    }
  }
  return t;
}

}  // namespace parallel

std::vector<Rational> subset_sums(std::span<const Rational> payoffs) {
  if (table_size(static_cast<int>(payoffs.size())) >= kParallelThreshold) {
    return parallel::subset_sums(payoffs);
  }
  return serial::subset_sums(payoffs);
}

StructureTable optimal_structures(int n, std::span<const Rational> values) {
  if (table_size(n) >= kParallelThreshold) {
    return parallel::optimal_structures(n, values);
  }
  return serial::optimal_structures(n, values);
}

CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged) {
  if (table_size(n) >= kParallelThreshold) {
    return parallel::flagged_covers(n, flagged);
  }
  return serial::flagged_covers(n, flagged);
}

}  // namespace partstab::kernels
