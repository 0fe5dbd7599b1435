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

// Game files, the `A,C|B` partition syntax, and JSON forms of reports.
//
// A game file looks like
//   {"players": ["A", "B", "C"],
//    "values": {"B": 4, "A,C": 6, "A,B,C": "8/1"}}
// Keys are comma-joined player names; values are integers or "p/q"
// strings. Coalitions that are not listed are worth 0.

#ifndef PARTSTAB_IO_HPP_
#define PARTSTAB_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "partstab/cores.hpp"
#include "partstab/game.hpp"
#include "partstab/sam.hpp"
#include "partstab/stability.hpp"

namespace partstab {

struct LoadedGame {
  Game game;
  // Coalitions absent from the file, bitmask ascending.
  std::vector<Coalition> defaulted;
};

// Throws InputError with line/column or key context on malformed input:
// bad JSON, duplicate keys, unknown or repeated player names, non-integer
// numbers. LimitExceeded when the player count is above `player_cap`.
LoadedGame parse_game_json(std::string_view text,
                           int player_cap = kDefaultPlayerCap);
LoadedGame load_game_file(const std::string& path,
                          int player_cap = kDefaultPlayerCap);

// Inverse of parse_game_json; lists every nonempty coalition.
std::string game_to_json(const Game& game);

// `A,C|B`: blocks separated by '|', members by ','.
Partition parse_partition(std::string_view text, const Game& game);
// Comma list of rationals, one per player.
Allocation parse_allocation(std::string_view text, const Game& game);

nlohmann::json coalition_to_json(Coalition c, const Game& game);
Coalition coalition_from_json(const nlohmann::json& j, const Game& game);
nlohmann::json partition_to_json(const Partition& p, const Game& game);
Partition partition_from_json(const nlohmann::json& j, const Game& game);
nlohmann::json allocation_to_json(const Allocation& x);
Allocation allocation_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CoreReport& r, const Game& game);
CoreReport core_report_from_json(const nlohmann::json& j, const Game& game);

nlohmann::json to_json(const CoreExistence& e, Mode mode);
CoreExistence core_existence_from_json(const nlohmann::json& j);

nlohmann::json to_json(const StabilityReport& r, const Game& game);
StabilityReport stability_report_from_json(const nlohmann::json& j,
                                           const Game& game);

nlohmann::json to_json(const SamTrace& t, const Game& game);
SamTrace sam_trace_from_json(const nlohmann::json& j, const Game& game);

}  // namespace partstab

#endif  // PARTSTAB_IO_HPP_
