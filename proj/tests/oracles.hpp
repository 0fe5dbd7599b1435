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

// Brute-force reference implementations for tests. Nothing here calls the
// library's DP kernels, lattice walks or LP solver; they work from the
// definitions directly and are only usable for small n.

#ifndef PARTSTAB_TESTS_ORACLES_HPP_
#define PARTSTAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "partstab/game.hpp"
#include "partstab/partition.hpp"

namespace partstab::oracle {

using Mask = Coalition::Mask;
using Blocks = std::vector<Mask>;

inline Game game_from(int n, const std::vector<long>& values,
                      std::vector<std::string> names = {}) {
  std::vector<Rational> v;
  for (long x : values) v.emplace_back(x);
  return Game(n, std::move(v), std::move(names));
}

// Game A: three symmetric players, pairs 5, grand 6.
inline Game game_a() { return game_from(3, {0, 0, 0, 5, 0, 5, 5, 6}); }
// Game B over A, B, C.
inline Game game_b() {
  return game_from(3, {0, 0, 4, 0, 0, 6, 0, 8}, {"A", "B", "C"});
}
// Two players, everything worth 1.
inline Game game_2() { return game_from(2, {0, 1, 1, 1}); }

inline std::uint64_t bell(int n) {
  // Bell triangle: each row starts with the last entry of the previous one.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (std::uint64_t x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

// Every partition of {0..n-1} by inserting players one at a time. Blocks
// are listed by ascending mask, as in to_blocks.
inline std::vector<Blocks> all_partitions(int n) {
  std::vector<Blocks> out;
  Blocks current;
  std::function<void(int)> place = [&](int i) {
    if (i == n) {
      out.push_back(current);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    for (std::size_t k = 0; k < current.size(); ++k) {
      current[k] |= Mask{1} << i;
      place(i + 1);
      current[k] &= ~(Mask{1} << i);
    }
    current.push_back(Mask{1} << i);
    place(i + 1);
    current.pop_back();
  };
  place(0);
  return out;
}

inline Partition to_partition(int n, const Blocks& blocks) {
  std::vector<Coalition> c;
  for (Mask b : blocks) c.emplace_back(b);
  return Partition(n, std::move(c));
}

inline Blocks to_blocks(const Partition& p) {
  Blocks out;
  for (Coalition c : p.blocks()) out.push_back(c.bits());
  std::sort(out.begin(), out.end());
  return out;
}

// Partitions of an arbitrary ground mask.
inline std::vector<Blocks> partitions_of(Mask ground) {
  std::vector<int> members;
  for (int i = 0; i < 32; ++i) {
    if ((ground >> i) & 1U) members.push_back(i);
  }
  std::vector<Blocks> out;
  for (const Blocks& local : all_partitions(static_cast<int>(members.size()))) {
    Blocks b;
    for (Mask m : local) {
      Mask g = 0;
      for (std::size_t k = 0; k < members.size(); ++k) {
        if ((m >> k) & 1U) g |= Mask{1} << members[k];
      }
      b.push_back(g);
    }
    out.push_back(std::move(b));
  }
  return out;
}

inline Rational value(const Game& g, Mask c) { return g.values()[c]; }

inline Rational worth(const Game& g, const Blocks& p) {
  Rational w = 0;
  for (Mask b : p) w += value(g, b);
  return w;
}

inline Rational sum(const Allocation& x, Mask c) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((c >> i) & 1U) s += x[i];
  }
  return s;
}

inline Mask grand_mask(const Game& g) { return (Mask{1} << g.num_players()) - 1; }

inline bool imputation(const Game& g, const Allocation& x) {
  for (int i = 0; i < g.num_players(); ++i) {
    if (x[static_cast<std::size_t>(i)] < value(g, Mask{1} << i)) return false;
  }
  return sum(x, grand_mask(g)) == value(g, grand_mask(g));
}

// x(C) = v(C) on every block plus individual rationality.
inline bool feasible_for(const Game& g, const Blocks& p, const Allocation& x) {
  for (int i = 0; i < g.num_players(); ++i) {
    if (x[static_cast<std::size_t>(i)] < value(g, Mask{1} << i)) return false;
  }
  for (Mask b : p) {
    if (sum(x, b) != value(g, b)) return false;
  }
  return true;
}

// Strong core as "every block of every non-grand partition is satisfied".
inline bool strong_member_by_partitions(const Game& g, const Allocation& x) {
  if (!imputation(g, x)) return false;
  for (const Blocks& p : all_partitions(g.num_players())) {
    if (p.size() == 1) continue;
    for (Mask b : p) {
      if (sum(x, b) < value(g, b)) return false;
    }
  }
  return true;
}

inline bool strong_member_by_coalitions(const Game& g, const Allocation& x) {
  if (!imputation(g, x)) return false;
  for (Mask c = 1; c < grand_mask(g); ++c) {
    if (sum(x, c) < value(g, c)) return false;
  }
  return true;
}

inline Rational max_worth(const Game& g) {
  std::optional<Rational> best;
  for (const Blocks& p : all_partitions(g.num_players())) {
    Rational w = worth(g, p);
    if (!best || w > *best) best = w;
  }
  return *best;
}

inline Rational max_nongrand(const Game& g) {
  std::optional<Rational> best;
  for (const Blocks& p : all_partitions(g.num_players())) {
    if (p.size() == 1) continue;
    Rational w = worth(g, p);
    if (!best || w > *best) best = w;
  }
  return *best;
}

// Medium core as "v(N) dominates the worth of every partition".
inline bool medium_member_by_partitions(const Game& g, const Allocation& x) {
  if (!imputation(g, x)) return false;
  for (const Blocks& p : all_partitions(g.num_players())) {
    if (p.size() > 1 && worth(g, p) > value(g, grand_mask(g))) return false;
  }
  return true;
}

inline bool weak_member_by_partitions(const Game& g, const Allocation& x) {
  if (!imputation(g, x)) return false;
  for (const Blocks& p : all_partitions(g.num_players())) {
    if (p.size() == 1) continue;
    bool blocked = false;
    for (Mask b : p) {
      if (sum(x, b) >= value(g, b)) blocked = true;
    }
    if (!blocked) return false;
  }
  return true;
}

// a . x >= b
struct Inequality {
  std::vector<Rational> a;
  Rational b;
};

// Fourier-Motzkin elimination. Exponential; only for a handful of variables.
inline bool fm_feasible(std::vector<Inequality> rows, int vars) {
  for (int j = vars - 1; j >= 0; --j) {
    std::vector<Inequality> pos, neg, rest;
    for (auto& r : rows) {
      const int s = sgn(r.a[static_cast<std::size_t>(j)]);
      (s > 0 ? pos : s < 0 ? neg : rest).push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        // Combine so that x_j cancels: p / p_j + q / (-q_j).
        const Rational cp = 1 / p.a[static_cast<std::size_t>(j)];
        const Rational cq = -1 / q.a[static_cast<std::size_t>(j)];
        Inequality c{std::vector<Rational>(static_cast<std::size_t>(vars)),
                     p.b * cp + q.b * cq};
        for (int k = 0; k < vars; ++k) {
          const auto kk = static_cast<std::size_t>(k);
          c.a[kk] = p.a[kk] * cp + q.a[kk] * cq;
        }
        c.a[static_cast<std::size_t>(j)] = 0;
        rest.push_back(std::move(c));
      }
    }
    // Drop exact duplicates to keep the blow-up in check.
    std::vector<Inequality> unique;
    std::set<std::string> seen;
    for (auto& r : rest) {
      std::string key = r.b.get_str();
      for (const auto& q : r.a) key += "|" + q.get_str();
      if (seen.insert(key).second) unique.push_back(std::move(r));
    }
    rows = std::move(unique);
  }
  for (const auto& r : rows) {
    if (r.b > 0) return false;  // 0 >= b
  }
  return true;
}

// Rows for x(i) >= v(i), x(N) = v(N), and x(C) >= v(C) for C in `forced`.
inline std::vector<Inequality> imputation_rows(const Game& g,
                                               const std::vector<Mask>& forced) {
  const int n = g.num_players();
  auto indicator = [n](Mask c, int sign) {
    std::vector<Rational> a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = ((c >> i) & 1U) ? sign : 0;
    return a;
  };
  std::vector<Inequality> rows;
  for (int i = 0; i < n; ++i) rows.push_back({indicator(Mask{1} << i, 1), value(g, Mask{1} << i)});
  rows.push_back({indicator(grand_mask(g), 1), value(g, grand_mask(g))});
  rows.push_back({indicator(grand_mask(g), -1), -value(g, grand_mask(g))});
  for (Mask c : forced) rows.push_back({indicator(c, 1), value(g, c)});
  return rows;
}

inline bool strong_nonempty_fm(const Game& g) {
  std::vector<Mask> all;
  for (Mask c = 1; c < grand_mask(g); ++c) all.push_back(c);
  return fm_feasible(imputation_rows(g, all), g.num_players());
}

// Weak core nonempty iff some set H of proper coalitions meets every
// non-grand partition and {x imputation, x(C) >= v(C) on H} is feasible.
inline bool weak_nonempty_by_hitting_sets(const Game& g) {
  const Mask grand = grand_mask(g);
  std::vector<Mask> proper;
  for (Mask c = 1; c < grand; ++c) proper.push_back(c);
  std::vector<Blocks> nongrand;
  for (auto& p : all_partitions(g.num_players())) {
    if (p.size() > 1) nongrand.push_back(std::move(p));
  }
  const std::uint64_t subsets = std::uint64_t{1} << proper.size();
  for (std::uint64_t h = 0; h < subsets; ++h) {
    std::vector<Mask> chosen;
    std::set<Mask> in_h;
    for (std::size_t k = 0; k < proper.size(); ++k) {
      if ((h >> k) & 1U) {
        chosen.push_back(proper[k]);
        in_h.insert(proper[k]);
      }
    }
    bool hits = true;
    for (const Blocks& p : nongrand) {
      bool any = false;
      for (Mask b : p) any = any || in_h.count(b) != 0;
      if (!any) {
        hits = false;
        break;
      }
    }
    if (hits && fm_feasible(imputation_rows(g, chosen), g.num_players())) return true;
  }
  return false;
}

// Strict refinement by definition: p != q and each block of p sits in a
// block of q.
inline bool refines(const Blocks& p, const Blocks& q) {
  if (p.size() <= q.size()) return false;
  for (Mask b : p) {
    bool inside = false;
    for (Mask c : q) inside = inside || (b & ~c) == 0;
    if (!inside) return false;
  }
  return true;
}

inline Game random_game(std::mt19937_64& rng, int n, long lo = -10, long hi = 10) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Rational> v(std::size_t{1} << n);
  v[0] = 0;
  for (std::size_t c = 1; c < v.size(); ++c) v[c] = d(rng);
  return Game(n, std::move(v));
}

// Allocations in X(N, v, P): per-block simplex vertices, the equal-surplus
// centre, and random convex combinations with denominators up to 6*|C|.
// Empty when some block has negative surplus.
inline std::vector<Allocation> sample_feasible(const Game& g, const Blocks& p,
                                               std::mt19937_64& rng,
                                               int random_count) {
  const int n = g.num_players();
  std::vector<Rational> base(static_cast<std::size_t>(n));
  std::vector<Rational> surplus_of_block(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) {
    Rational s = value(g, p[k]);
    for (int i = 0; i < n; ++i) {
      if ((p[k] >> i) & 1U) {
        base[static_cast<std::size_t>(i)] = value(g, Mask{1} << i);
        s -= base[static_cast<std::size_t>(i)];
      }
    }
    if (s < 0) return {};
    surplus_of_block[k] = s;
  }
  std::vector<Allocation> out;
  auto build = [&](const std::function<Rational(std::size_t, int)>& share) {
    std::vector<Rational> x = base;
    for (std::size_t k = 0; k < p.size(); ++k) {
      for (int i = 0; i < n; ++i) {
        if ((p[k] >> i) & 1U) x[static_cast<std::size_t>(i)] += share(k, i);
      }
    }
    out.emplace_back(std::move(x));
  };
  // Vertex j: the j-th member of every block takes the whole surplus.
  for (int j = 0; j < n; ++j) {
    bool any = false;
    for (Mask b : p) any = any || std::popcount(b) > j;
    if (!any) break;
    build([&](std::size_t k, int i) -> Rational {
      const int size = std::popcount(p[k]);
      const int pick = j % size;
      int rank = std::popcount(p[k] & ((Mask{1} << i) - 1));
      return rank == pick ? surplus_of_block[k] : Rational(0);
    });
  }
  build([&](std::size_t k, int) -> Rational {
    return surplus_of_block[k] / std::popcount(p[k]);
  });
  std::uniform_int_distribution<int> w(0, 6);
  for (int r = 0; r < random_count; ++r) {
    std::vector<int> weight(static_cast<std::size_t>(n));
    for (auto& x : weight) x = w(rng);
    build([&](std::size_t k, int i) -> Rational {
      int total = 0;
      for (int m = 0; m < n; ++m) {
        if ((p[k] >> m) & 1U) total += weight[static_cast<std::size_t>(m)];
      }
      if (total == 0) return surplus_of_block[k] / std::popcount(p[k]);
      return surplus_of_block[k] * weight[static_cast<std::size_t>(i)] / total;
    });
  }
  return out;
}

// Imputations (when any exist) followed by arbitrary integer vectors.
inline std::vector<Allocation> sample_allocations(const Game& g, std::mt19937_64& rng,
                                                  int count) {
  std::vector<Allocation> out =
      sample_feasible(g, Blocks{grand_mask(g)}, rng, count / 2);
  std::uniform_int_distribution<long> d(-10, 10);
  while (static_cast<int>(out.size()) < count) {
    std::vector<Rational> x(static_cast<std::size_t>(g.num_players()));
    for (auto& q : x) q = d(rng);
    out.emplace_back(std::move(x));
  }
  return out;
}

}  // namespace partstab::oracle

#endif  // PARTSTAB_TESTS_ORACLES_HPP_
