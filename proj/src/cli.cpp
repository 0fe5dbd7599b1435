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

#include "partstab/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "partstab/cores.hpp"
#include "partstab/errors.hpp"
#include "partstab/io.hpp"
#include "partstab/lattice.hpp"
#include "partstab/sam.hpp"
#include "partstab/stability.hpp"

namespace partstab {
namespace {

using nlohmann::json;

struct Result {
  std::string text;
  int code = kExitPositive;
};

std::string row(std::string_view key, std::string_view value) {
  std::string line(key);
  line.resize(std::max<std::size_t>(line.size() + 1, 20), ' ');
  line += value;
  line += '\n';
  return line;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

LoadedGame load(const CliConfig& cfg, std::ostream& err) {
  LoadedGame loaded = load_game_file(cfg.input, cfg.player_cap);
  if (!loaded.defaulted.empty()) {
    err << "warning: " << loaded.defaulted.size()
        << " coalition(s) not listed in " << cfg.input << ", set to 0:";
    for (Coalition c : loaded.defaulted) err << ' ' << to_string(c, loaded.game.names());
    err << '\n';
  }
  return loaded;
}

Result core_check(const CliConfig& cfg, const Game& game) {
  const Allocation x = parse_allocation(cfg.alloc, game);
  const CoreReport r = core_contains(game, x, parse_mode(cfg.mode));
  Result out;
  out.code = r.member ? kExitPositive : kExitNegative;
  if (cfg.format == "json") {
    out.text = to_json(r, game).dump(2) + "\n";
    return out;
  }
  out.text += row("mode", to_string(r.mode));
  out.text += row("allocation", to_string(x));
  out.text += row("member", yes_no(r.member));
  out.text += row("verdict", to_string(r.verdict));
  if (r.coalition) out.text += row("coalition", to_string(*r.coalition, game.names()));
  if (r.partition) out.text += row("partition", to_string(*r.partition, game.names()));
  if (r.member && r.mode == Mode::kWeak) {
    std::string listed;
    for (Coalition c : r.satisfied) {
      if (!listed.empty()) listed += ' ';
      listed += to_string(c, game.names());
    }
    out.text += row("satisfied", listed);
  }
  return out;
}

Result core_find(const CliConfig& cfg, const Game& game) {
  const Mode mode = parse_mode(cfg.mode);
  const CoreExistence e = core_nonempty(game, mode);
  Result out;
  out.code = e.nonempty ? kExitPositive : kExitNegative;
  if (cfg.format == "json") {
    out.text = to_json(e, mode).dump(2) + "\n";
    return out;
  }
  out.text += row("mode", to_string(mode));
  out.text += row("nonempty", yes_no(e.nonempty));
  if (e.witness) out.text += row("witness", to_string(*e.witness));
  return out;
}

Result stability(const CliConfig& cfg, const Game& game) {
  const Mode mode = parse_mode(cfg.mode);
  const Partition p = parse_partition(cfg.partition, game);
  StabilityReport r;
  std::optional<Allocation> x;
  if (!cfg.alloc.empty()) {
    x = parse_allocation(cfg.alloc, game);
  } else {
    try {
      x = equal_surplus_allocation(game, p);
    } catch (const EmptyBlockAllocation& e) {
      r.mode = mode;
      r.feasible = false;
      r.detail = std::string("no feasible allocation: ") + e.what();
    }
  }
  if (x) r = stable_contains(game, {p, *x}, mode);
  Result out;
  out.code = r.stable ? kExitPositive : kExitNegative;
  if (cfg.format == "json") {
    json j = to_json(r, game);
    j["partition"] = partition_to_json(p, game);
    j["allocation"] = x ? allocation_to_json(*x) : json(nullptr);
    out.text = j.dump(2) + "\n";
    return out;
  }
  const auto& names = game.names();
  out.text += row("mode", to_string(mode));
  out.text += row("partition", to_string(p, names));
  if (x) out.text += row("allocation", to_string(*x));
  out.text += row("feasible", yes_no(r.feasible));
  if (!r.feasible) {
    out.text += row("detail", r.detail);
    out.text += row("stable", "false");
    return out;
  }
  out.text += row("fission_resistant", yes_no(r.fission_resistant));
  if (r.fission_block) out.text += row("fission_block", to_string(*r.fission_block, names));
  if (r.fission_certificate) {
    out.text += row("fission_certificate", to_string(*r.fission_certificate, names));
  }
  out.text += row("fusion_resistant", yes_no(r.fusion_resistant));
  if (r.fusion_coalition) {
    out.text += row("fusion_coalition", to_string(*r.fusion_coalition, names));
  }
  if (r.fusion_certificate) {
    out.text += row("fusion_certificate", to_string(*r.fusion_certificate, names));
  }
  out.text += row("stable", yes_no(r.stable));
  return out;
}

Result sam(const CliConfig& cfg, const Game& game) {
  const Partition start = cfg.start.empty() ? Partition::singletons(game.num_players())
                                            : parse_partition(cfg.start, game);
  const SamTrace t = sam_run(game, start);
  Result out;
  if (cfg.format == "json") {
    out.text = to_json(t, game).dump(2) + "\n";
    return out;
  }
  const auto& names = game.names();
  out.text += row("start", to_string(t.start, names) + "  worth " +
                               to_string(worth(game, t.start)));
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const auto& s = t.steps[k];
    out.text += row("step " + std::to_string(k + 1),
                    to_string(s.direction) + "  " + to_string(s.from, names) + " (" +
                        to_string(s.from_worth) + ") -> " + to_string(s.to, names) +
                        " (" + to_string(s.to_worth) + ")");
  }
  out.text += row("moves", std::to_string(t.steps.size()));
  out.text += row("terminal", to_string(t.terminal, names) + "  worth " +
                                  to_string(t.terminal_worth));
  out.text += row("allocation", to_string(t.terminal_pair.allocation));
  return out;
}

Result enumerate(const CliConfig& cfg, const Game& game) {
  const Mode mode = parse_mode(cfg.mode);
  const auto stable = enumerate_stable_partitions(game, mode);
  Result out;
  out.code = stable.empty() ? kExitNegative : kExitPositive;
  if (cfg.format == "json") {
    json list = json::array();
    for (const auto& p : stable) {
      list.push_back({{"partition", partition_to_json(p, game)},
                      {"worth", to_string(worth(game, p))}});
    }
    out.text = json{{"mode", to_string(mode)}, {"partitions", list}}.dump(2) + "\n";
    return out;
  }
  for (const auto& p : stable) {
    out.text += row(to_string(p, game.names()), to_string(worth(game, p)));
  }
  return out;
}

Result graph(const CliConfig& cfg, std::ostream& err) {
  if (cfg.graph_players) {
    if (!cfg.input.empty()) throw InputError("graph takes either -n or a game file, not both");
    return {export_graph(*cfg.graph_players), kExitPositive};
  }
  if (cfg.input.empty()) throw InputError("graph needs -n or a game file");
  const LoadedGame loaded = load(cfg, err);
  return {export_graph(loaded.game.num_players(), loaded.game.names()), kExitPositive};
}

Result dispatch(const CliConfig& cfg, std::ostream& err) {
  if (cfg.command == "graph") return graph(cfg, err);
  const LoadedGame loaded = load(cfg, err);
  const Game& game = loaded.game;
  if (cfg.command == "core check") return core_check(cfg, game);
  if (cfg.command == "core find") return core_find(cfg, game);
  if (cfg.command == "stability") return stability(cfg, game);
  if (cfg.command == "sam") return sam(cfg, game);
  if (cfg.command == "enumerate") return enumerate(cfg, game);
  throw InputError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact cores and partition stability for TU games", "partstab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", cfg.seed, "Seed for sampling commands");
  app.add_option("--max-players", cfg.player_cap, "Player cap for loaded games")
      ->check(CLI::Range(1, kMaxPlayers));
  app.add_option("-o,--output", cfg.output, "Write the result to this file");

  const auto modes = CLI::IsMember({"strong", "medium", "weak"});
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "strong | medium | weak")->required()->check(modes);
  };
  auto add_game = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("game", cfg.input, "Game file (JSON)");
    if (required) opt->required();
  };

  auto* core = app.add_subcommand("core", "Core membership and nonemptiness");
  core->require_subcommand(1);
  core->fallthrough();
  auto* check = core->add_subcommand("check", "Test an allocation for core membership");
  add_mode(check);
  add_game(check, true);
  check->add_option("--alloc", cfg.alloc, "Comma list of payoffs")->required();
  auto* find = core->add_subcommand("find", "Decide nonemptiness and give a witness");
  add_mode(find);
  add_game(find, true);

  auto* stab = app.add_subcommand("stability", "Check a partition-allocation pair");
  add_mode(stab);
  add_game(stab, true);
  stab->add_option("--partition", cfg.partition, "Blocks as A,C|B")->required();
  stab->add_option("--alloc", cfg.alloc, "Comma list of payoffs (default: equal surplus)");

  auto* sam_cmd = app.add_subcommand("sam", "Run steepest ascent to a stable pair");
  add_game(sam_cmd, true);
  sam_cmd->add_option("--start", cfg.start, "Start partition (default: all singletons)");

  auto* graph_cmd = app.add_subcommand("graph", "Export the coalition-structure graph (DOT)");
  graph_cmd->add_option("-n", cfg.graph_players, "Player count");
  add_game(graph_cmd, false);

  auto* enum_cmd = app.add_subcommand("enumerate", "List stable partitions with worths");
  add_mode(enum_cmd);
  add_game(enum_cmd, true);

  for (auto* sub : {check, find, stab, sam_cmd, graph_cmd, enum_cmd}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPositive : kExitInputError;
  }
  if (check->parsed()) cfg.command = "core check";
  if (find->parsed()) cfg.command = "core find";
  if (stab->parsed()) cfg.command = "stability";
  if (sam_cmd->parsed()) cfg.command = "sam";
  if (graph_cmd->parsed()) cfg.command = "graph";
  if (enum_cmd->parsed()) cfg.command = "enumerate";

  Result result;
  try {
    result = dispatch(cfg, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const NoNonGrandPartition& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (cfg.output.empty()) {
    out << result.text;
  } else {
    std::ofstream file(cfg.output);
    if (!file) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kExitInputError;
    }
    file << result.text;
  }
  return result.code;
}

}  // namespace partstab
