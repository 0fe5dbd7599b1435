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

#ifndef PARTSTAB_COALITION_HPP_
#define PARTSTAB_COALITION_HPP_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace partstab {

// Hard upper bound on players; a game stores 2^n values.
inline constexpr int kMaxPlayers = 20;
// Default cap enforced on games unless the caller raises it.
inline constexpr int kDefaultPlayerCap = 14;

// A set of players as a bitmask (bit i set <=> player i is a member).
// The empty set is representable because v(empty) = 0 is a convention the
// value table stores, but a Coalition used as a block is always nonempty.
class Coalition {
 public:
  using Mask = std::uint32_t;

  constexpr Coalition() noexcept = default;
  constexpr explicit Coalition(Mask bits) noexcept : bits_(bits) {}

  static Coalition of(std::initializer_list<int> players);
  static constexpr Coalition singleton(int player) noexcept {
    return Coalition(Mask{1} << player);
  }
  static constexpr Coalition all(int n) noexcept {
    return Coalition(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool contains(int player) const noexcept {
    return ((bits_ >> player) & 1U) != 0;
  }
  // Smallest member; undefined on the empty set.
  constexpr int min_player() const noexcept { return std::countr_zero(bits_); }
  constexpr int max_player() const noexcept {
    return 31 - std::countl_zero(bits_);
  }
  constexpr bool is_subset_of(Coalition other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Coalition other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }

  // Members in ascending order.
  std::vector<int> members() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) noexcept {
    return Coalition(a.bits_ | b.bits_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) noexcept {
    return Coalition(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) noexcept {
    return Coalition(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Coalition, Coalition) noexcept = default;
  // Bitmask order.
  friend constexpr auto operator<=>(Coalition a, Coalition b) noexcept {
    return a.bits_ <=> b.bits_;
  }

 private:
  Mask bits_ = 0;
};

}  // namespace partstab

#endif  // PARTSTAB_COALITION_HPP_
