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

// Stability of partition-allocation pairs (P, x) with x feasible for P.
//
// Fission resistance asks that no refinement P' of P succeeds:
//   strong  every C' in P' \ P has x(C') >= v(C');
//   medium  w(P) >= w(P');
//   weak    some C' in P' \ P has x(C') >= v(C').
// Fusion resistance asks that w(P) >= w(P') for every coarsening P', which
// holds iff no set of two or more blocks is worth more merged than apart.
//
// Both resistances decompose per block, so the "decomposed" forms below
// run a core test on each block's subgame instead of walking the lattice.

#ifndef PARTSTAB_STABILITY_HPP_
#define PARTSTAB_STABILITY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "partstab/cores.hpp"
#include "partstab/game.hpp"

namespace partstab {

using StabilityMode = Mode;

struct StabilityReport {
  Mode mode = Mode::kMedium;
  // False when x is not a feasible allocation for the partition; the pair is
  // then unstable and `detail` says why.
  bool feasible = true;
  bool fission_resistant = false;
  bool fusion_resistant = false;
  bool stable = false;
  // First block (canonical order) whose subgame fails its core test, and a
  // refinement of P that splits only that block and succeeds.
  std::optional<Coalition> fission_block;
  std::optional<Partition> fission_certificate;
  // Union of the first block set worth more merged, and the coarsening that
  // merges exactly those blocks.
  std::optional<Coalition> fusion_coalition;
  std::optional<Partition> fusion_certificate;
  std::string detail;

  friend bool operator==(const StabilityReport&, const StabilityReport&) = default;
};

// Walks every refinement of P. Bell-number cost; meant for small n and for
// cross-checking. Throws InfeasiblePair unless x is feasible for P.
bool fission_resistant_direct(const Game& game, const PAPair& pair, Mode mode);

// Per-block core tests on subgames. Throws InfeasiblePair like the direct
// form and always agrees with it.
bool fission_resistant_decomposed(const Game& game, const PAPair& pair,
                                  Mode mode);

// Block-subset scan, O(2^|P|). Throws InfeasiblePair.
bool fusion_resistant(const Game& game, const PAPair& pair);

// Worth dominance over every coarsening of P (Bell(|P|) cost).
bool fusion_resistant_by_coarsenings(const Game& game, const Partition& p);

// x|_C lies in the mode's core of the subgame on C for every block C.
bool patched_core_contains(const Game& game, const Partition& p,
                           const Allocation& x, Mode mode);

// Every block's subgame has a nonempty core of the given mode.
bool partition_in_Pi(const Game& game, const Partition& p, Mode mode);

// w(P) >= w(P') for every coarsening P', via the block-subset scan.
bool partition_in_Pu(const Game& game, const Partition& p);

// Largest game for which stable_contains also runs the direct lattice scans
// and the patched-core characterization and throws std::logic_error if they
// disagree with the decomposed verdict.
inline constexpr int kStabilityCrossCheckCap = 6;

StabilityReport stable_contains(const Game& game, const PAPair& pair, Mode mode);

inline constexpr int kEnumerateStableCap = 8;

// Every partition in Pi(mode) and Pu, canonical order. Throws LimitExceeded
// above kEnumerateStableCap players.
std::vector<Partition> enumerate_stable_partitions(const Game& game, Mode mode);

}  // namespace partstab

#endif  // PARTSTAB_STABILITY_HPP_
