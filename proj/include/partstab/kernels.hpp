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

// Subset dynamic programs over all 2^n coalitions of a game.
//
// Each kernel exists twice: `serial::` walks the masks in increasing numeric
// order and is the reference; `parallel::` processes the masks one popcount
// layer at a time (every mask of a layer depends only on strictly smaller
// layers) and distributes a layer across OpenMP threads. Both produce
// bit-identical tables because every tie is broken by a total order.
//
// The top-level functions pick the parallel variant once the table is large
// enough for threading to pay off.

#ifndef PARTSTAB_KERNELS_HPP_
#define PARTSTAB_KERNELS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "partstab/coalition.hpp"
#include "partstab/rational.hpp"

namespace partstab::kernels {

// For every subset S of an n-player ground set: the maximum worth over the
// partitions of S (best), and the canonical argmax, stored as the number of
// its blocks and its block containing min(S) (first). Ties are broken toward
// fewer blocks, then toward the smaller restricted-growth labelling.
// best[0] = 0 and blocks[0] = 0 describe the empty partition of the empty set.
struct StructureTable {
  int n = 0;
  std::vector<Rational> best;
  std::vector<std::uint8_t> blocks;
  std::vector<Coalition::Mask> first;

  // Blocks of the canonical argmax partition of s, in increasing min-player
  // order.
  std::vector<Coalition> argmax(Coalition s) const;
};

// For every subset S: the fewest-block partition of S whose blocks are all
// flagged, with the same canonical tie-breaking. blocks[S] == 0 means no such
// partition exists (for S nonempty).
struct CoverTable {
  int n = 0;
  std::vector<std::uint8_t> blocks;
  std::vector<Coalition::Mask> first;

  bool covered(Coalition s) const { return s.empty() || blocks[s.bits()] != 0; }
  // Blocks of the canonical cover of s; empty if none exists.
  std::vector<Coalition> cover(Coalition s) const;
};

// Masks with threshold or more entries go to the OpenMP kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 10;

namespace serial {

// sums[S] = sum of payoffs[i] over i in S; payoffs.size() == n.
std::vector<Rational> subset_sums(std::span<const Rational> payoffs);

// values.size() == 2^n, values[0] == 0.
StructureTable optimal_structures(int n, std::span<const Rational> values);

// flagged.size() == 2^n; flagged[S] != 0 marks S usable as a block.
CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged);

}  // namespace serial

namespace parallel {

std::vector<Rational> subset_sums(std::span<const Rational> payoffs);
StructureTable optimal_structures(int n, std::span<const Rational> values);
CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged);

}  // namespace parallel

std::vector<Rational> subset_sums(std::span<const Rational> payoffs);
StructureTable optimal_structures(int n, std::span<const Rational> values);
CoverTable flagged_covers(int n, std::span<const std::uint8_t> flagged);

// Masks of {0..n-1} grouped by popcount; layer k holds the masks of size k
// in increasing order.
std::vector<std::vector<Coalition::Mask>> popcount_layers(int n);

}  // namespace partstab::kernels

#endif  // PARTSTAB_KERNELS_HPP_
