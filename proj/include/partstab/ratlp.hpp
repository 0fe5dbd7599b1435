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

// Exact linear programming over the rationals.
//
// lp_solve runs a dense two-phase primal simplex with Bland's rule, so it
// terminates on degenerate problems and every reported witness satisfies its
// constraints with zero residual. Constraints are put in a canonical order
// before solving, which makes the outcome independent of the order in which
// they were added.

#ifndef PARTSTAB_RATLP_HPP_
#define PARTSTAB_RATLP_HPP_

#include <optional>
#include <string>
#include <vector>

#include "partstab/game.hpp"
#include "partstab/rational.hpp"

namespace partstab {

enum class Relation { kLessEqual, kEqual, kGreaterEqual };
enum class Sense { kMaximize, kMinimize, kFeasibility };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Relation relation;
  Rational rhs;
};

struct LinearProgram {
  // All variables start with lower bound 0 and no upper bound.
  explicit LinearProgram(int num_variables);

  // Throws InputError when row.size() != num_variables.
  void add_constraint(std::vector<Rational> row, Relation relation,
                      Rational rhs);
  // Removes both bounds of variable j.
  void make_free(int j);

  int num_variables;
  Sense sense = Sense::kFeasibility;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::kInfeasible;
  // Objective value at the witness; 0 for feasibility problems.
  Rational value;
  // One value per variable when status == kOptimal.
  std::vector<Rational> witness;
};

LpOutcome lp_solve(const LinearProgram& lp);

// Plain-text dump, one line for the objective, one per constraint and one for
// the bounds.
std::string to_debug_string(const LinearProgram& lp);

// True iff `x` satisfies every constraint and bound of `lp` exactly.
bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x);

// Largest game for which the covering LP below is built (2^n - 1 columns).
inline constexpr int kBalancednessCap = 12;

// The covering LP: maximize sum_C v(C) d(C) subject to sum_{C ni i} d(C) = 1
// for every player and d >= 0. Variable k is coalition bitmask k + 1.
LinearProgram balancedness_program(const Game& game);

// Its optimum z+. The game has a nonempty core iff v(N) >= z+.
// Throws LimitExceeded above kBalancednessCap players.
Rational balancedness_value(const Game& game);

}  // namespace partstab

#endif  // PARTSTAB_RATLP_HPP_
