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

#include "partstab/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "partstab/errors.hpp"

namespace partstab {

// --- PartitionStream -------------------------------------------------------

PartitionStream::PartitionStream(int n, int player_cap)
    : n_(n), blocks_(1), labels_(static_cast<std::size_t>(n), 0) {
  if (player_cap > kMaxPlayers) player_cap = kMaxPlayers;
  if (n < 1) throw InputError("cannot enumerate partitions of " +
                              std::to_string(n) + " players");
  if (n > player_cap) {
    throw LimitExceeded("partition enumeration refused: " + std::to_string(n) +
                        " players exceeds the cap of " +
                        std::to_string(player_cap));
  }
}

// Smallest labelling with exactly blocks_ blocks: zeros, then 1..blocks_-1
// on the last positions.
bool PartitionStream::start_block_count() {
  if (blocks_ > n_) return false;
  const int zeros = n_ - blocks_ + 1;
  for (int i = 0; i < n_; ++i) {
    labels_[static_cast<std::size_t>(i)] = i < zeros ? 0 : i - zeros + 1;
  }
  return true;
}

// Next labelling in lexicographic order with exactly blocks_ blocks.
bool PartitionStream::advance() {
  std::vector<int> prefix_max(static_cast<std::size_t>(n_));
  int running = -1;
  for (int i = 0; i < n_; ++i) {
    running = std::max(running, labels_[static_cast<std::size_t>(i)]);
    prefix_max[static_cast<std::size_t>(i)] = running;
  }
  for (int i = n_ - 1; i >= 1; --i) {
    const int before = prefix_max[static_cast<std::size_t>(i - 1)];
    const int bumped = labels_[static_cast<std::size_t>(i)] + 1;
    if (bumped > std::min(blocks_ - 1, before + 1)) continue;
    const int new_max = std::max(before, bumped);
    const int needed = blocks_ - 1 - new_max;  // labels still to introduce
    const int room = n_ - 1 - i;
    if (needed > room) continue;
    labels_[static_cast<std::size_t>(i)] = bumped;
    const int zeros = room - needed;
    for (int j = 1; j <= room; ++j) {
      labels_[static_cast<std::size_t>(i + j)] =
          j <= zeros ? 0 : new_max + (j - zeros);
    }
    return true;
  }
  return false;
}

std::optional<Partition> PartitionStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    start_block_count();
  } else if (!advance()) {
    ++blocks_;
    if (!start_block_count()) {
      done_ = true;
      return std::nullopt;
    }
  }
  return partition_from_labels(labels_);
}

std::vector<Partition> enumerate_partitions(int n, int player_cap) {
  PartitionStream stream(n, player_cap);
  std::vector<Partition> out;
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

std::vector<std::vector<Coalition>> set_partitions(Coalition ground) {
  const std::vector<int> members = ground.members();
  std::vector<std::vector<Coalition>> out;
  if (members.empty()) return out;
  PartitionStream stream(static_cast<int>(members.size()), kMaxPlayers);
  while (auto local = stream.next()) {
    std::vector<Coalition> blocks;
    for (Coalition b : local->blocks()) {
      Coalition::Mask bits = 0;
      for (int k : b.members()) {
        bits |= Coalition::Mask{1} << members[static_cast<std::size_t>(k)];
      }
      blocks.emplace_back(bits);
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

// --- Refinement order and neighbourhoods ------------------------------------

bool is_refinement(const Partition& p, const Partition& q) {
  if (p.num_players() != q.num_players()) {
    throw InputError("is_refinement on partitions of different sizes");
  }
  if (p.size() < q.size() + 1) return false;
  for (Coalition b : p.blocks()) {
    const Coalition& host = q[q.block_index_of(b.min_player())];
    if (!b.is_subset_of(host)) return false;
  }
  return true;
}

void for_each_refinement(const Partition& p, const PartitionVisitor& visit) {
  // Mixed-radix walk over one partition per block; digit 0 is the block kept
  // whole, so the all-zero combination is p itself and is skipped.
  std::vector<std::vector<std::vector<Coalition>>> options;
  options.reserve(p.blocks().size());
  for (Coalition b : p.blocks()) options.push_back(set_partitions(b));
  std::vector<std::size_t> digit(options.size(), 0);
  while (true) {
    std::size_t k = 0;
    while (k < digit.size()) {
      if (++digit[k] < options[k].size()) break;
      digit[k] = 0;
      ++k;
    }
    if (k == digit.size()) return;
    std::vector<Coalition> blocks;
    for (std::size_t j = 0; j < digit.size(); ++j) {
      const auto& chosen = options[j][digit[j]];
      blocks.insert(blocks.end(), chosen.begin(), chosen.end());
    }
    visit(unchecked_partition(p.num_players(), std::move(blocks)));
  }
}

void for_each_coarsening(const Partition& p, const PartitionVisitor& visit) {
  const int count = p.size();
  PartitionStream quotient(count, kMaxPlayers);
  while (auto q = quotient.next()) {
    if (q->is_singletons()) continue;
    std::vector<Coalition> blocks;
    for (Coalition group : q->blocks()) {
      Coalition merged;
      for (int k : group.members()) merged = merged | p[static_cast<std::size_t>(k)];
      blocks.push_back(merged);
    }
    visit(unchecked_partition(p.num_players(), std::move(blocks)));
  }
}

namespace {

std::vector<Partition> sorted(std::vector<Partition> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Partition replace_blocks(const Partition& p, std::span<const Coalition> drop,
                         std::span<const Coalition> add) {
  std::vector<Coalition> blocks;
  for (Coalition b : p.blocks()) {
    if (std::find(drop.begin(), drop.end(), b) == drop.end()) blocks.push_back(b);
  }
  blocks.insert(blocks.end(), add.begin(), add.end());
  return unchecked_partition(p.num_players(), std::move(blocks));
}

}  // namespace

std::vector<Partition> fission_neighborhood(const Partition& p) {
  std::vector<Partition> out;
  for_each_refinement(p, [&](const Partition& q) { out.push_back(q); });
  return sorted(std::move(out));
}

std::vector<Partition> fusion_neighborhood(const Partition& p) {
  std::vector<Partition> out;
  for_each_coarsening(p, [&](const Partition& q) { out.push_back(q); });
  return sorted(std::move(out));
}

std::vector<Partition> one_step_fission(const Partition& p) {
  std::vector<Partition> out;
  for (Coalition b : p.blocks()) {
    if (b.size() < 2) continue;
    // Halves containing min(b) identify each unordered split exactly once.
    const Coalition::Mask low = b.bits() & (~b.bits() + 1);
    const Coalition::Mask rest = b.bits() ^ low;
    for (Coalition::Mask sub = (rest - 1) & rest;; sub = (sub - 1) & rest) {
      const Coalition half(low | sub);
      const Coalition parts[] = {half, b - half};
      const Coalition dropped[] = {b};
      out.push_back(replace_blocks(p, dropped, parts));
      if (sub == 0) break;
    }
  }
  return sorted(std::move(out));
}

std::vector<Partition> one_step_fusion(const Partition& p) {
  std::vector<Partition> out;
  for (std::size_t a = 0; a < p.blocks().size(); ++a) {
    for (std::size_t b = a + 1; b < p.blocks().size(); ++b) {
      const Coalition dropped[] = {p[a], p[b]};
      const Coalition merged[] = {p[a] | p[b]};
      out.push_back(replace_blocks(p, dropped, merged));
    }
  }
  return sorted(std::move(out));
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.num_players() != q.num_players()) {
    throw InputError("meet of partitions of different sizes");
  }
  std::vector<Coalition> blocks;
  for (Coalition a : p.blocks()) {
    for (Coalition b : q.blocks()) {
      if (a.intersects(b)) blocks.push_back(a & b);
    }
  }
  return unchecked_partition(p.num_players(), std::move(blocks));
}

std::string to_string(MoveKind kind) {
  return kind == MoveKind::kFission ? "fission" : "fusion";
}

std::vector<PartitionMove> path(const Partition& p, const Partition& q) {
  const Partition bottom = meet(p, q);
  std::vector<PartitionMove> moves;
  Partition current = p;
  // Down: peel the meet's pieces off each block of p one at a time.
  for (Coalition block : p.blocks()) {
    Coalition remaining = block;
    for (Coalition piece : bottom.blocks()) {
      if (!piece.is_subset_of(block) || piece == remaining) continue;
      const Coalition dropped[] = {remaining};
      const Coalition parts[] = {piece, remaining - piece};
      Partition next = replace_blocks(current, dropped, parts);
      moves.push_back({MoveKind::kFission, current, next, {remaining}});
      current = std::move(next);
      remaining = remaining - piece;
    }
  }
  // Up: grow each block of q from its first meet piece.
  for (Coalition target : q.blocks()) {
    Coalition grown;
    for (Coalition piece : bottom.blocks()) {
      if (!piece.is_subset_of(target)) continue;
      if (grown.empty()) {
        grown = piece;
        continue;
      }
      const Coalition dropped[] = {grown, piece};
      const Coalition merged[] = {grown | piece};
      Partition next = replace_blocks(current, dropped, merged);
      moves.push_back({MoveKind::kFusion, current, next, {grown, piece}});
      current = std::move(next);
      grown = grown | piece;
    }
  }
  return moves;
}

std::string graph_node_id(const Partition& p) {
  std::string id = "P" + std::to_string(p.size()) + "_";
  for (std::size_t k = 0; k < p.blocks().size(); ++k) {
    if (k) id += "__";
    const auto members = p[k].members();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j) id += '_';
      id += std::to_string(members[j]);
    }
  }
  return id;
}

std::string export_graph(int n, std::span<const std::string> names) {
  if (n > kGraphExportCap) {
    throw LimitExceeded("graph export refused: " + std::to_string(n) +
                        " players exceeds the export cap of " +
                        std::to_string(kGraphExportCap));
  }
  std::vector<std::string> labels(names.begin(), names.end());
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != static_cast<std::size_t>(n)) {
    throw InputError("export_graph: expected " + std::to_string(n) + " names");
  }
  const auto nodes = enumerate_partitions(n, kGraphExportCap);
  std::ostringstream os;
  os << "digraph coalition_structures {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  int rank = 0;
  for (const auto& p : nodes) {
    if (p.size() != rank) {
      if (rank != 0) os << "  }\n";
      rank = p.size();
      os << "  { rank=same; // p=" << rank << "\n";
    }
    os << "    " << graph_node_id(p) << " [label=\"" << to_string(p, labels)
       << "\"];\n";
  }
  os << "  }\n";
  for (const auto& p : nodes) {
    for (const auto& q : one_step_fission(p)) {
      os << "  " << graph_node_id(p) << " -> " << graph_node_id(q)
         << " [label=\"fission\", color=blue];\n";
    }
    for (const auto& q : one_step_fusion(p)) {
      os << "  " << graph_node_id(p) << " -> " << graph_node_id(q)
         << " [label=\"fusion\", color=red];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace partstab
