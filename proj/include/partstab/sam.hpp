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

// Steepest ascent over the partition lattice.
//
// Each step moves to the highest-worth partition among all strict
// refinements and strict coarsenings of the current one, stopping when none
// is strictly better. The terminal partition is then paired with its
// equal-surplus allocation, which is medium-stable.

#ifndef PARTSTAB_SAM_HPP_
#define PARTSTAB_SAM_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "partstab/game.hpp"
#include "partstab/lattice.hpp"

namespace partstab {

// max over refinements of p and p itself: the sum of per-block optimal
// structure values. Returns p itself when nothing improves on it, otherwise
// the canonical argmax assembled block by block.
std::pair<Rational, Partition> best_refinement(const Game& game,
                                               const Partition& p);

// max over strict coarsenings of p. Solved on the quotient game whose
// players are p's blocks, with a DP over quotient partitions that have at
// least one merged block. Ties go to fewer blocks, then canonical order.
// Throws NoCoarsening when p = {N}.
std::pair<Rational, Partition> best_coarsening(const Game& game,
                                               const Partition& p);

struct SamStep {
  Partition from;
  Partition to;
  Rational from_worth;
  Rational to_worth;
  MoveKind direction = MoveKind::kFission;

  friend bool operator==(const SamStep&, const SamStep&) = default;
};

// The steepest strictly improving move, or nullopt at a terminal partition.
// Equal best worths on both sides resolve to the coarsening.
std::optional<SamStep> sam_step(const Game& game, const Partition& p);

struct SamTrace {
  Partition start;
  std::vector<SamStep> steps;
  Partition terminal;
  Rational terminal_worth;
  PAPair terminal_pair;

  friend bool operator==(const SamTrace& a, const SamTrace& b) {
    return a.start == b.start && a.steps == b.steps && a.terminal == b.terminal &&
           a.terminal_worth == b.terminal_worth &&
           a.terminal_pair.partition == b.terminal_pair.partition &&
           a.terminal_pair.allocation == b.terminal_pair.allocation;
  }
};

SamTrace sam_run(const Game& game, const Partition& start);

}  // namespace partstab

#endif  // PARTSTAB_SAM_HPP_
