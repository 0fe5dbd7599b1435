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

#include "partstab/partition.hpp"

#include <algorithm>
#include <sstream>

#include "partstab/errors.hpp"

namespace partstab {
namespace {

void sort_blocks(std::vector<Coalition>& blocks) {
  std::sort(blocks.begin(), blocks.end(), [](Coalition a, Coalition b) {
    return a.min_player() < b.min_player();
  });
}

}  // namespace

Coalition Coalition::of(std::initializer_list<int> players) {
  Mask bits = 0;
  for (int p : players) {
    if (p < 0 || p >= kMaxPlayers) {
      throw InputError("player index out of range: " + std::to_string(p));
    }
    bits |= Mask{1} << p;
  }
  return Coalition(bits);
}

std::vector<int> Coalition::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(std::countr_zero(rest));
  }
  return out;
}

Partition::Partition(int n, std::vector<Coalition> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > kMaxPlayers) {
    throw InputError("partition player count out of range: " +
                     std::to_string(n));
  }
  const Coalition all = Coalition::all(n);
  Coalition seen;
  for (Coalition b : blocks_) {
    if (b.empty()) throw InputError("partition has an empty block");
    if (!b.is_subset_of(all)) {
      throw InputError("partition block names a player >= " +
                       std::to_string(n));
    }
    if (b.intersects(seen)) {
      throw InputError("partition blocks overlap at player " +
                       std::to_string((b & seen).min_player()));
    }
    seen = seen | b;
  }
  if (seen != all) {
    throw InputError("partition does not cover player " +
                     std::to_string((all - seen).min_player()));
  }
  sort_blocks(blocks_);
}

Partition Partition::grand(int n) {
  return Partition(n, {Coalition::all(n)});
}

Partition Partition::singletons(int n) {
  std::vector<Coalition> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) blocks.push_back(Coalition::singleton(i));
  return Partition(Trusted{}, n, std::move(blocks));
}

bool Partition::contains_block(Coalition c) const noexcept {
  if (c.empty()) return false;
  const int lo = c.min_player();
  for (Coalition b : blocks_) {
    if (b.contains(lo)) return b == c;
  }
  return false;
}

std::size_t Partition::block_index_of(int player) const {
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (blocks_[k].contains(player)) return k;
  }
  throw InputError("player " + std::to_string(player) + " not in partition");
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    for (int i : blocks_[k].members()) {
      out[static_cast<std::size_t>(i)] = static_cast<int>(k);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) noexcept {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.blocks_.size() <=> b.blocks_.size(); c != 0) return c;
  // Compare restricted growth strings player by player.
  for (int i = 0; i < a.n_; ++i) {
    std::size_t la = 0;
    std::size_t lb = 0;
    while (!a.blocks_[la].contains(i)) ++la;
    while (!b.blocks_[lb].contains(i)) ++lb;
    if (auto c = la <=> lb; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Partition partition_from_labels(std::span<const int> labels) {
  const int n = static_cast<int>(labels.size());
  std::vector<Coalition> blocks;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(labels[static_cast<std::size_t>(i)]);
    if (k >= blocks.size()) blocks.resize(k + 1);
    blocks[k] = blocks[k] | Coalition::singleton(i);
  }
  return Partition(Partition::Trusted{}, n, std::move(blocks));
}

Partition unchecked_partition(int n, std::vector<Coalition> blocks) {
  sort_blocks(blocks);
  return Partition(Partition::Trusted{}, n, std::move(blocks));
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.num_players());
  for (Coalition b : p.blocks()) {
    h ^= b.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < p.blocks().size(); ++k) {
    if (k) os << ',';
    os << '{';
    const auto members = p[k].members();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (j) os << ',';
      os << members[j];
    }
    os << '}';
  }
  os << '}';
  return os.str();
}

std::string to_string(Coalition c, std::span<const std::string> names) {
  std::string out = "{";
  bool first = true;
  for (int i : c.members()) {
    if (!first) out += ',';
    first = false;
    out += names[static_cast<std::size_t>(i)];
  }
  out += '}';
  return out;
}

std::string to_string(const Partition& p, std::span<const std::string> names) {
  std::string out = "{";
  for (std::size_t k = 0; k < p.blocks().size(); ++k) {
    if (k) out += ',';
    out += to_string(p[k], names);
  }
  out += '}';
  return out;
}

}  // namespace partstab
