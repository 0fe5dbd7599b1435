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

// The partition lattice: enumeration, the refinement order, fission/fusion
// neighbourhoods and the directed coalition-structure graph whose arcs are
// single two-way splits and single pairwise merges.
//
// Cost notes: enumerate_partitions and the full neighbourhoods are Bell(n)
// in the worst case; the one-step neighbourhoods are O(2^|C|) per block and
// O(p^2) respectively.

#ifndef PARTSTAB_LATTICE_HPP_
#define PARTSTAB_LATTICE_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partstab/coalition.hpp"
#include "partstab/partition.hpp"

namespace partstab {

// Pull-based stream over every partition of {0..n-1}: block count
// ascending, canonical order within a block count.
class PartitionStream {
 public:
  // Throws LimitExceeded when n > player_cap and InputError when n < 1.
  explicit PartitionStream(int n, int player_cap = kDefaultPlayerCap);

  std::optional<Partition> next();

 private:
  bool start_block_count();
  bool advance();

  int n_;
  int blocks_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> labels_;
};

// Materialized PartitionStream: Bell(n) partitions.
std::vector<Partition> enumerate_partitions(int n,
                                            int player_cap = kDefaultPlayerCap);

// Every partition of `ground` as block lists (blocks in min-member order),
// in the same order as PartitionStream over |ground| players.
std::vector<std::vector<Coalition>> set_partitions(Coalition ground);

// p strictly refines q: |p| >= |q| + 1 and every block of q is a union of
// blocks of p.
bool is_refinement(const Partition& p, const Partition& q);

using PartitionVisitor = std::function<void(const Partition&)>;

// Lazily visits every strict refinement of p.
void for_each_refinement(const Partition& p, const PartitionVisitor& visit);
// Lazily visits every strict coarsening of p.
void for_each_coarsening(const Partition& p, const PartitionVisitor& visit);

// All strict refinements of p, canonical order.
std::vector<Partition> fission_neighborhood(const Partition& p);
// All strict coarsenings of p, canonical order.
std::vector<Partition> fusion_neighborhood(const Partition& p);

// Partitions reachable by one two-way split of one block.
std::vector<Partition> one_step_fission(const Partition& p);
// Partitions reachable by merging exactly two blocks.
std::vector<Partition> one_step_fusion(const Partition& p);

// Coarsest common refinement: all nonempty pairwise block intersections.
Partition meet(const Partition& p, const Partition& q);

enum class MoveKind { kFission, kFusion };

std::string to_string(MoveKind kind);

struct PartitionMove {
  MoveKind kind;
  Partition from;
  Partition to;
  // The block that was split (fission) or the two blocks merged (fusion).
  std::vector<Coalition> touched;
};

// A walk in the coalition-structure graph from p to q: two-way splits down to
// meet(p, q), then pairwise merges up to q. Empty iff p == q.
std::vector<PartitionMove> path(const Partition& p, const Partition& q);

// Graph size guard for export_graph (Bell(6) = 203 nodes).
inline constexpr int kGraphExportCap = 6;

// DOT digraph of the coalition-structure graph on n players: one node per
// partition, ranked by block count, one arc per one-step fission and one per
// one-step fusion. Node ids are "P<p>_" followed by the blocks joined with
// "__", members joined with "_" (0-based), e.g. P2_0_1__2. `names` labels the
// nodes and defaults to 1..n. Throws LimitExceeded for n > kGraphExportCap.
std::string export_graph(int n, std::span<const std::string> names = {});

// Stable DOT node id for p.
std::string graph_node_id(const Partition& p);

}  // namespace partstab

#endif  // PARTSTAB_LATTICE_HPP_
