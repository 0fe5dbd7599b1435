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

#include "partstab/ratlp.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "partstab/errors.hpp"

namespace partstab {

LinearProgram::LinearProgram(int num_variables)
    : num_variables(num_variables),
      objective(static_cast<std::size_t>(num_variables), Rational(0)),
      lower(static_cast<std::size_t>(num_variables), Rational(0)),
      upper(static_cast<std::size_t>(num_variables)) {
  if (num_variables < 0) throw InputError("negative variable count");
}

void LinearProgram::add_constraint(std::vector<Rational> row, Relation relation,
                                   Rational rhs) {
  if (row.size() != static_cast<std::size_t>(num_variables)) {
    throw InputError("constraint row has " + std::to_string(row.size()) +
                     " coefficients for " + std::to_string(num_variables) +
                     " variables");
  }
  constraints.push_back({std::move(row), relation, std::move(rhs)});
}

void LinearProgram::make_free(int j) {
  lower.at(static_cast<std::size_t>(j)).reset();
  upper.at(static_cast<std::size_t>(j)).reset();
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

namespace {

using Row = std::vector<Rational>;

// x_j = offset + sign * y[col] (- y[col + 1] when free).
struct VariableMap {
  Rational offset;
  int sign = 1;
  std::size_t col = 0;
  bool free = false;
};

int relation_rank(Relation r) {
  switch (r) {
    case Relation::kLessEqual: return 0;
    case Relation::kEqual: return 1;
    case Relation::kGreaterEqual: return 2;
  }
  return 3;
}

bool constraint_less(const LinearConstraint& a, const LinearConstraint& b) {
  if (a.relation != b.relation) {
    return relation_rank(a.relation) < relation_rank(b.relation);
  }
  for (std::size_t j = 0; j < a.coefficients.size(); ++j) {
    const int c = cmp(a.coefficients[j], b.coefficients[j]);
    if (c != 0) return c < 0;
  }
  return a.rhs < b.rhs;
}

// Dense tableau over standard-form columns y >= 0. Row `m` (the last) holds
// reduced costs; the last column holds right-hand sides.
class Tableau {
 public:
  Tableau(std::vector<Row> rows, std::vector<std::size_t> basis,
          std::size_t num_cols)
      : rows_(std::move(rows)), basis_(std::move(basis)), cols_(num_cols) {}

  std::size_t num_rows() const { return rows_.size(); }

  // Loads reduced costs for minimizing cost . y over the current basis.
  void set_costs(const Row& cost) {
    reduced_.assign(cols_ + 1, Rational(0));
    for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = cost[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (rows_[i][j] != 0) reduced_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Bland's rule simplex on the loaded costs, restricted to columns below
  // `allowed`. Returns false on unboundedness.
  bool minimize(std::size_t allowed) {
    while (true) {
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return true;
      std::size_t leaving = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i][entering] <= 0) continue;
        Rational ratio = rows_[i][cols_] / rows_[i][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    Row& pr = rows_[r];
    const Rational inv = 1 / pr[c];
    for (auto& e : pr) {
      if (e != 0) e *= inv;
    }
    Rational factor;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || rows_[i][c] == 0) continue;
      factor = rows_[i][c];
      eliminate(rows_[i], pr, factor);
    }
    if (!reduced_.empty() && reduced_[c] != 0) {
      factor = reduced_[c];
      eliminate(reduced_, pr, factor);
    }
    basis_[r] = c;
  }

  // After phase one: pivot basic artificials (columns >= first_artificial)
  // out, dropping rows that turn out to be redundant.
  void expel_artificials(std::size_t first_artificial) {
    for (std::size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t c = 0;
      while (c < first_artificial && rows_[i][c] == 0) ++c;
      if (c < first_artificial) {
        pivot(i, c);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  Row solution() const {
    Row y(cols_, Rational(0));
    for (std::size_t i = 0; i < rows_.size(); ++i) y[basis_[i]] = rows_[i][cols_];
    return y;
  }

 private:
  static void eliminate(Row& target, const Row& pivot_row, const Rational& factor) {
    Rational scratch;
    for (std::size_t j = 0; j < target.size(); ++j) {
      if (pivot_row[j] == 0) continue;
      scratch = factor * pivot_row[j];
      target[j] -= scratch;
    }
  }

  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
  Row reduced_;
};

}  // namespace

LpOutcome lp_solve(const LinearProgram& lp) {
  const auto nvars = static_cast<std::size_t>(lp.num_variables);
  if (lp.objective.size() != nvars || lp.lower.size() != nvars ||
      lp.upper.size() != nvars) {
    throw InputError("malformed linear program: vector sizes disagree");
  }
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != nvars) {
      throw InputError("malformed linear program: ragged constraint row");
    }
  }

  // Map original variables onto nonnegative structural columns.
  std::vector<VariableMap> vars(nvars);
  std::size_t structural = 0;
  std::vector<LinearConstraint> rows;
  for (std::size_t j = 0; j < nvars; ++j) {
    auto& v = vars[j];
    v.col = structural;
    if (lp.lower[j]) {
      v.offset = *lp.lower[j];
      structural += 1;
      if (lp.upper[j]) {
        if (*lp.upper[j] < *lp.lower[j]) return {};
        Row r(nvars, Rational(0));
        r[j] = 1;
        rows.push_back({std::move(r), Relation::kLessEqual, *lp.upper[j]});
      }
    } else if (lp.upper[j]) {
      v.offset = *lp.upper[j];
      v.sign = -1;
      structural += 1;
    } else {
      v.free = true;
      structural += 2;
    }
  }
  rows.insert(rows.end(), lp.constraints.begin(), lp.constraints.end());
  std::stable_sort(rows.begin(), rows.end(), constraint_less);

  // Rewrite each row over y and normalize to a nonnegative right-hand side.
  struct StdRow {
    Row coef;
    Relation relation;
    Rational rhs;
  };
  std::vector<StdRow> std_rows;
  std::size_t slack_count = 0;
  std::size_t artificial_count = 0;
  for (const auto& c : rows) {
    StdRow s{Row(structural, Rational(0)), c.relation, c.rhs};
    for (std::size_t j = 0; j < nvars; ++j) {
      const Rational& a = c.coefficients[j];
      if (a == 0) continue;
      s.rhs -= a * vars[j].offset;
      if (vars[j].free) {
        s.coef[vars[j].col] += a;
        s.coef[vars[j].col + 1] -= a;
      } else {
        s.coef[vars[j].col] += vars[j].sign * a;
      }
    }
    if (s.rhs < 0) {
      for (auto& e : s.coef) e = -e;
      s.rhs = -s.rhs;
      if (s.relation == Relation::kLessEqual) {
        s.relation = Relation::kGreaterEqual;
      } else if (s.relation == Relation::kGreaterEqual) {
        s.relation = Relation::kLessEqual;
      }
    }
    if (s.relation != Relation::kEqual) ++slack_count;
    if (s.relation != Relation::kLessEqual) ++artificial_count;
    std_rows.push_back(std::move(s));
  }

  const std::size_t first_slack = structural;
  const std::size_t first_artificial = structural + slack_count;
  const std::size_t cols = first_artificial + artificial_count;
  std::vector<Row> tableau_rows;
  std::vector<std::size_t> basis;
  std::size_t next_slack = first_slack;
  std::size_t next_artificial = first_artificial;
  for (auto& s : std_rows) {
    Row r(cols + 1, Rational(0));
    std::copy(s.coef.begin(), s.coef.end(), r.begin());
    r[cols] = s.rhs;
    switch (s.relation) {
      case Relation::kLessEqual:
        r[next_slack] = 1;
        basis.push_back(next_slack++);
        break;
      case Relation::kGreaterEqual:
        r[next_slack++] = -1;
        r[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
      case Relation::kEqual:
        r[next_artificial] = 1;
        basis.push_back(next_artificial++);
        break;
    }
    tableau_rows.push_back(std::move(r));
  }

  Tableau tableau(std::move(tableau_rows), std::move(basis), cols);
  if (artificial_count > 0) {
    Row phase_one(cols, Rational(0));
    for (std::size_t j = first_artificial; j < cols; ++j) phase_one[j] = 1;
    tableau.set_costs(phase_one);
    tableau.minimize(cols);
    const Row y = tableau.solution();
    for (std::size_t j = first_artificial; j < cols; ++j) {
      if (y[j] != 0) return {};
    }
    tableau.expel_artificials(first_artificial);
  }

  LpOutcome out;
  if (lp.sense != Sense::kFeasibility) {
    Row cost(cols, Rational(0));
    const int flip = lp.sense == Sense::kMaximize ? -1 : 1;
    for (std::size_t j = 0; j < nvars; ++j) {
      const Rational& c = lp.objective[j];
      if (c == 0) continue;
      if (vars[j].free) {
        cost[vars[j].col] += flip * c;
        cost[vars[j].col + 1] -= flip * c;
      } else {
        cost[vars[j].col] += flip * vars[j].sign * c;
      }
    }
    tableau.set_costs(cost);
    if (!tableau.minimize(first_artificial)) {
      out.status = LpStatus::kUnbounded;
      return out;
    }
  }

  const Row y = tableau.solution();
  out.status = LpStatus::kOptimal;
  out.witness.resize(nvars);
  for (std::size_t j = 0; j < nvars; ++j) {
    const auto& v = vars[j];
    Rational x = v.offset;
    if (v.free) {
      x += y[v.col] - y[v.col + 1];
    } else {
      x += v.sign * y[v.col];
    }
    out.witness[j] = std::move(x);
  }
  out.value = 0;
  if (lp.sense != Sense::kFeasibility) {
    for (std::size_t j = 0; j < nvars; ++j) {
      out.value += lp.objective[j] * out.witness[j];
    }
  }
  return out;
}

bool satisfies(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (x.size() != static_cast<std::size_t>(lp.num_variables)) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  for (const auto& c : lp.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += c.coefficients[j] * x[j];
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::string to_debug_string(const LinearProgram& lp) {
  std::ostringstream os;
  switch (lp.sense) {
    case Sense::kMaximize: os << "maximize"; break;
    case Sense::kMinimize: os << "minimize"; break;
    case Sense::kFeasibility: os << "feasibility"; break;
  }
  auto write_row = [&os](const std::vector<Rational>& row) {
    bool any = false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == 0) continue;
      if (any) os << " +";
      os << ' ' << row[j].get_str() << "*x" << j;
      any = true;
    }
    if (!any) os << " 0";
  };
  if (lp.sense != Sense::kFeasibility) write_row(lp.objective);
  os << '\n';
  for (const auto& c : lp.constraints) {
    write_row(c.coefficients);
    switch (c.relation) {
      case Relation::kLessEqual: os << " <= "; break;
      case Relation::kEqual: os << " = "; break;
      case Relation::kGreaterEqual: os << " >= "; break;
    }
    os << c.rhs.get_str() << '\n';
  }
  os << "bounds";
  for (std::size_t j = 0; j < lp.lower.size(); ++j) {
    os << " x" << j << " in [" << (lp.lower[j] ? lp.lower[j]->get_str() : "-inf")
       << ',' << (lp.upper[j] ? lp.upper[j]->get_str() : "+inf") << ']';
  }
  os << '\n';
  return os.str();
}

LinearProgram balancedness_program(const Game& game) {
  const int n = game.num_players();
  if (n > kBalancednessCap) {
    throw LimitExceeded("balancedness LP refused: " + std::to_string(n) +
                        " players exceeds the cap of " +
                        std::to_string(kBalancednessCap));
  }
  const std::size_t coalitions = (std::size_t{1} << n) - 1;
  LinearProgram lp(static_cast<int>(coalitions));
  lp.sense = Sense::kMaximize;
  for (std::size_t k = 0; k < coalitions; ++k) lp.objective[k] = game.values()[k + 1];
  for (int i = 0; i < n; ++i) {
    Row row(coalitions, Rational(0));
    for (std::size_t k = 0; k < coalitions; ++k) {
      if (Coalition(static_cast<Coalition::Mask>(k + 1)).contains(i)) row[k] = 1;
    }
    lp.add_constraint(std::move(row), Relation::kEqual, 1);
  }
  return lp;
}

Rational balancedness_value(const Game& game) {
  // Always feasible (singletons at weight 1) and bounded (d(C) <= 1).
  return lp_solve(balancedness_program(game)).value;
}

}  // namespace partstab
