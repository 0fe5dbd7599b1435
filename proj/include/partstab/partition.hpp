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

#ifndef PARTSTAB_PARTITION_HPP_
#define PARTSTAB_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "partstab/coalition.hpp"

namespace partstab {

// A partition of the players {0, ..., n-1} into nonempty disjoint blocks.
//
// Blocks are kept sorted by their smallest member, so two equal partitions
// always have identical block sequences. Partitions are totally ordered by
// (block count, restricted-growth labelling); this is the canonical order
// used for enumeration output and every tie-break in the library.
class Partition {
 public:
  // Validates that `blocks` are nonempty, pairwise disjoint and cover
  // {0..n-1}; throws InputError otherwise. Block order is irrelevant.
  Partition(int n, std::vector<Coalition> blocks);

  // {N}
  static Partition grand(int n);
  // {{0}, {1}, ..., {n-1}}
  static Partition singletons(int n);

  int num_players() const noexcept { return n_; }
  // Number of blocks.
  int size() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const Coalition> blocks() const noexcept { return blocks_; }
  const Coalition& operator[](std::size_t k) const { return blocks_[k]; }

  bool is_grand() const noexcept { return blocks_.size() == 1; }
  bool is_singletons() const noexcept {
    return static_cast<int>(blocks_.size()) == n_;
  }
  bool contains_block(Coalition c) const noexcept;
  // Index of the block holding `player`.
  std::size_t block_index_of(int player) const;

  // labels[i] = index of the block containing player i (restricted growth
  // string: labels[0] == 0 and each label is at most one above the running
  // maximum).
  std::vector<int> labels() const;

  friend bool operator==(const Partition& a, const Partition& b) noexcept {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) noexcept;

 private:
  struct Trusted {};
  Partition(Trusted, int n, std::vector<Coalition> blocks)
      : n_(n), blocks_(std::move(blocks)) {}
  friend Partition partition_from_labels(std::span<const int> labels);
  friend Partition unchecked_partition(int n, std::vector<Coalition> blocks);

  int n_ = 0;
  std::vector<Coalition> blocks_;
};

// Builds the partition described by a restricted growth string.
Partition partition_from_labels(std::span<const int> labels);

// Skips validation but still canonicalizes block order. For internal callers
// whose blocks are disjoint and covering by construction.
Partition unchecked_partition(int n, std::vector<Coalition> blocks);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

// "{{0,1},{2}}" with 0-based indices.
std::string to_string(const Partition& p);
// "{{A,C},{B}}" using player names.
std::string to_string(const Partition& p, std::span<const std::string> names);
// "{A,C}"
std::string to_string(Coalition c, std::span<const std::string> names);

}  // namespace partstab

#endif  // PARTSTAB_PARTITION_HPP_
