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

// Strong, medium and weak cores.
//
// All three live inside the imputation set: x(i) >= v({i}) for every player
// and x(N) = v(N). On top of that
//   strong  x(C) >= v(C) for every coalition C != N;
//   medium  v(N) >= w(P) for every partition P != {N};
//   weak    every partition P != {N} has a block C with x(C) >= v(C).
// A coalition is "deficient" under x when x(C) < v(C), strictly.

#ifndef PARTSTAB_CORES_HPP_
#define PARTSTAB_CORES_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "partstab/game.hpp"
#include "partstab/ratlp.hpp"

namespace partstab {

enum class Mode { kStrong, kMedium, kWeak };

std::string to_string(Mode mode);
// "strong" | "medium" | "weak"; throws InputError otherwise.
Mode parse_mode(std::string_view text);

enum class CoreVerdict {
  kMember,
  kNotIndividuallyRational,  // coalition = the lowest offending player
  kInefficient,              // coalition = N
  kBlockingCoalition,        // strong: coalition with x(C) < v(C)
  kDominatingPartition,      // medium: non-grand partition with w(P) > v(N)
  kDeficientPartition,       // weak: non-grand partition of deficient blocks
};

std::string to_string(CoreVerdict verdict);
CoreVerdict parse_core_verdict(std::string_view text);

struct CoreReport {
  Mode mode = Mode::kStrong;
  bool member = false;
  CoreVerdict verdict = CoreVerdict::kMember;
  std::optional<Coalition> coalition;
  std::optional<Partition> partition;
  // Weak members only: every coalition C != N with x(C) >= v(C). It meets
  // every non-grand partition.
  std::vector<Coalition> satisfied;

  friend bool operator==(const CoreReport&, const CoreReport&) = default;
};

struct CoreExistence {
  bool nonempty = false;
  std::optional<Allocation> witness;
};

// Throws InputError on a length mismatch. The certificate is the lowest
// bitmask C != N with x(C) < v(C); failing that, N when x(N) != v(N).
CoreReport strong_core_contains(const Game& game, const Allocation& x);

// Feasibility of the strong-core system, solved by adding violated coalition
// constraints to the imputation LP until its witness satisfies all of them.
CoreExistence strong_core_nonempty(const Game& game);

// The imputation system: n variables, x(i) >= v({i}), x(N) = v(N).
LinearProgram imputation_program(const Game& game);
// imputation_program plus x(C) >= v(C) for every C != N (2^n - 2 rows).
LinearProgram strong_core_program(const Game& game);

// Maximum partition worth and its canonical argmax (fewest blocks, then
// canonical order).
std::pair<Rational, Partition> optimal_structure_value(const Game& game);

// Maximum worth over partitions other than {N}, with the canonical argmax.
// Throws NoNonGrandPartition when n == 1.
std::pair<Rational, Partition> best_nongrand_partition(const Game& game);
Rational max_nongrand_worth(const Game& game);

CoreReport medium_core_contains(const Game& game, const Allocation& x);
bool medium_core_nonempty(const Game& game);

CoreReport weak_core_contains(const Game& game, const Allocation& x);

// Branch and prune over sets S of coalitions forced to x(C) >= v(C). Each
// node solves the imputation LP restricted by S; a witness that is already a
// weak-core member ends the search, otherwise the node branches on the
// blocks of the witness's canonical deficient partition. Any member must
// satisfy one of those blocks, so the search is complete.
CoreExistence weak_core_nonempty(const Game& game);

// Dispatch on mode.
CoreReport core_contains(const Game& game, const Allocation& x, Mode mode);
CoreExistence core_nonempty(const Game& game, Mode mode);

}  // namespace partstab

#endif  // PARTSTAB_CORES_HPP_
