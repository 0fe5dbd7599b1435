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

#ifndef PARTSTAB_CLI_HPP_
#define PARTSTAB_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "partstab/coalition.hpp"

namespace partstab {

// Exit codes.
inline constexpr int kExitPositive = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

struct CliConfig {
  std::string input;
  std::string command;     // "core check", "core find", "stability", ...
  std::string mode;        // strong | medium | weak
  std::string format = "table";
  std::uint64_t seed = 0;  // reserved for sampling commands
  int player_cap = kDefaultPlayerCap;
  std::string output;      // empty: standard output
  std::string alloc;
  std::string partition;
  std::string start;
  std::optional<int> graph_players;
};

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace partstab

#endif  // PARTSTAB_CLI_HPP_
