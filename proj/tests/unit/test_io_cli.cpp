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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "partstab/cli.hpp"
#include "partstab/errors.hpp"
#include "partstab/io.hpp"

namespace partstab {
namespace {

using nlohmann::json;

std::string data(const std::string& file) { return std::string(PARTSTAB_DATA_DIR) + "/" + file; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& text, const std::string& piece) {
  return text.find(piece) != std::string::npos;
}

std::string parse_error(std::string_view text) {
  try {
    parse_game_json(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("game files parse") {
  const LoadedGame g = parse_game_json(R"({"players": ["A", "B", "C"],
      "values": {"B": 4, "A,C": 6, "A,B,C": "16/2"}})");
  CHECK(g.game.num_players() == 3);
  CHECK(g.game.value(Coalition::of({0, 2})) == 6);
  CHECK(g.game.value(Coalition::all(3)) == 8);
  CHECK(g.defaulted.size() == 4);
  CHECK(g.defaulted.front() == Coalition::of({0}));
  const LoadedGame b = load_game_file(data("gameB.json"));
  CHECK(b.game.values()[7] == 8);
  const LoadedGame again = parse_game_json(game_to_json(b.game));
  CHECK(again.defaulted.empty());
  CHECK(std::equal(again.game.values().begin(), again.game.values().end(),
                   b.game.values().begin()));
  CHECK(parse_game_json(R"({"players": ["x"], "values": {"x": "-3/6"}})").game.value(
            Coalition::of({0})) == Rational(-1, 2));
  CHECK(parse_game_json(R"({"players": ["P", "Q"], "values": {"Q,P": 3}})")
            .game.value(Coalition::all(2)) == 3);
}

TEST_CASE("game file errors carry context") {
  CHECK(contains(parse_error("{\"players\": [\"A\"],\n \"values\": {\"A\": 1,}}"), "line 2"));
  CHECK(contains(parse_error(R"({"players": ["A"], "values": {"A": 1, "A": 2}})"),
                 "duplicate key \"A\""));
  CHECK(contains(parse_error(R"({"players": ["A"], "values": {"B": 1}})"), "\"B\""));
  CHECK(contains(parse_error(R"({"players": ["A"], "values": {"A": 1.5}})"), "p/q"));
  CHECK(contains(parse_error(R"({"players": ["A", "A"], "values": {}})"), "\"A\""));
  CHECK(contains(parse_error(R"({"players": ["A,B"], "values": {}})"), "A,B"));
  CHECK(contains(parse_error(R"({"players": ["A", "B"], "values": {"A,B": 1, "B,A": 2}})"),
                 "same coalition"));
  CHECK(contains(parse_error(R"({"players": ["A"], "values": {}, "extra": 1})"), "extra"));
  CHECK(contains(parse_error(R"({"values": {}})"), "players"));
  CHECK(contains(parse_error(R"({"players": ["A"], "values": {"A": "1/0"}})"), "A"));
  std::string many = R"({"players": [)";
  for (int i = 0; i < 15; ++i) many += (i ? ",\"p" : "\"p") + std::to_string(i) + "\"";
  many += R"(], "values": {}})";
  CHECK_THROWS_AS(parse_game_json(many), LimitExceeded);
  CHECK(parse_game_json(many, 15).game.num_players() == 15);
  CHECK_THROWS_AS(load_game_file(data("missing.json")), InputError);
}

TEST_CASE("partition and allocation syntax") {
  const Game g = load_game_file(data("gameB.json")).game;
  CHECK(parse_partition("A,C|B", g) == Partition(3, {Coalition::of({0, 2}), Coalition::of({1})}));
  CHECK(parse_partition(" B | C,A ", g) == parse_partition("A,C|B", g));
  CHECK_THROWS_AS(parse_partition("A,C", g), InputError);
  CHECK_THROWS_AS(parse_partition("A,C|B|A", g), InputError);
  CHECK_THROWS_AS(parse_partition("A,C||B", g), InputError);
  CHECK_THROWS_AS(parse_partition("A,D|B,C", g), InputError);
  CHECK(parse_allocation("0, 6, 4/2", g) == Allocation{0, 6, 2});
  CHECK_THROWS_AS(parse_allocation("1,2", g), InputError);
  CHECK_THROWS_AS(parse_allocation("1,x,2", g), InputError);
}

TEST_CASE("reports round-trip through JSON") {
  const Game g = load_game_file(data("gameB.json")).game;
  std::mt19937_64 rng(103);
  for (Mode m : {Mode::kStrong, Mode::kMedium, Mode::kWeak}) {
    for (const Allocation& x : oracle::sample_allocations(g, rng, 8)) {
      const CoreReport r = core_contains(g, x, m);
      CHECK(core_report_from_json(json::parse(to_json(r, g).dump()), g) == r);
    }
    const CoreExistence e = core_nonempty(g, m);
    const CoreExistence back = core_existence_from_json(to_json(e, m));
    CHECK(back.nonempty == e.nonempty);
    CHECK(back.witness == e.witness);
    for (const Partition& p : enumerate_partitions(3)) {
      for (const Allocation& x : oracle::sample_feasible(g, oracle::to_blocks(p), rng, 2)) {
        const StabilityReport s = stable_contains(g, {p, x}, m);
        CHECK(stability_report_from_json(to_json(s, g), g) == s);
      }
    }
  }
  for (const Partition& p : enumerate_partitions(3)) {
    const SamTrace t = sam_run(g, p);
    CHECK(sam_trace_from_json(json::parse(to_json(t, g).dump()), g) == t);
  }
}

TEST_CASE("core commands") {
  const Run weak = cli({"core", "check", "--mode", "weak", data("gameB.json"), "--alloc", "0,6,2"});
  CHECK(weak.code == kExitPositive);
  CHECK(contains(weak.out, "true"));
  const Run find = cli({"core", "find", "--mode", "strong", data("gameA.json")});
  CHECK(find.code == kExitNegative);
  CHECK(contains(find.out, "false"));
  const Run mismatch =
      cli({"core", "check", "--mode", "strong", data("gameA.json"), "--alloc", "1,2"});
  CHECK(mismatch.code == kExitInputError);
  CHECK(contains(mismatch.err, "error"));
  const Run json_out = cli({"--format", "json", "core", "check", "--mode", "medium",
                            data("gameB.json"), "--alloc", "0,6,2"});
  CHECK(json_out.code == kExitNegative);
  const json j = json::parse(json_out.out);
  CHECK(j["verdict"] == "dominating_partition");
  CHECK(j["partition"] == json::parse(R"([["A", "C"], ["B"]])"));
  const Run no_mode = cli({"core", "find", data("gameA.json")});
  CHECK(no_mode.code == kExitInputError);
  const Run bad_mode = cli({"core", "find", "--mode", "mild", data("gameA.json")});
  CHECK(bad_mode.code == kExitInputError);
}

TEST_CASE("stability command") {
  const Run ok = cli({"stability", "--mode", "medium", data("gameB.json"), "--partition", "A,C|B",
                      "--alloc", "3,4,3"});
  CHECK(ok.code == kExitPositive);
  const Run grand = cli({"--format", "json", "stability", "--mode", "medium", data("gameB.json"),
                         "--partition", "A,B,C"});
  CHECK(grand.code == kExitNegative);
  const json j = json::parse(grand.out);
  CHECK(j["stable"] == false);
  CHECK(j["fission_certificate"] == json::parse(R"([["A", "C"], ["B"]])"));
  const Run two = cli({"stability", "--mode", "strong", data("game2.json"), "--partition", "1|2",
                       "--alloc", "1,1"});
  CHECK(two.code == kExitPositive);
  const Run infeasible = cli({"stability", "--mode", "medium", data("gameB.json"),
                              "--partition", "A,B|C", "--alloc", "0,0,0"});
  CHECK(infeasible.code == kExitNegative);
  CHECK(contains(infeasible.out, "feasible"));
  const Run syntax = cli({"stability", "--mode", "medium", data("gameB.json"), "--partition",
                          "A,C"});
  CHECK(syntax.code == kExitInputError);
}

TEST_CASE("sam, graph and enumerate commands") {
  const Run b = cli({"--format", "json", "sam", data("gameB.json")});
  CHECK(b.code == kExitPositive);
  const json tb = json::parse(b.out);
  CHECK(tb["terminal"] == json::parse(R"([["A", "C"], ["B"]])"));
  CHECK(tb["terminal_allocation"] == json::parse(R"(["3", "4", "3"])"));
  const Run a = cli({"sam", data("gameA.json")});
  CHECK(a.code == kExitPositive);
  CHECK((contains(a.out, "2,2,2") || contains(a.out, "(2, 2, 2)")));
  const Run turn = cli({"--format", "json", "sam", data("sam_turn.json"), "--start", "1,2|3"});
  CHECK(json::parse(turn.out)["steps"].size() == 2);
  const Run graph = cli({"graph", "-n", "3"});
  CHECK(graph.code == kExitPositive);
  CHECK(contains(graph.out, "digraph"));
  CHECK(cli({"graph"}).code == kExitInputError);
  const Run listed = cli({"enumerate", "--mode", "medium", data("gameB.json")});
  CHECK(listed.code == kExitPositive);
  CHECK(contains(listed.out, "10"));
  CHECK(cli({"enumerate", "--mode", "strong", data("gameA.json")}).code == kExitNegative);
}

TEST_CASE("defaults warn and output is repeatable") {
  const auto dir = std::filesystem::temp_directory_path() / "partstab_cli_test";
  std::filesystem::create_directories(dir);
  const auto sparse = dir / "sparse.json";
  std::ofstream(sparse) << R"({"players": ["A", "B"], "values": {"A,B": 3}})";
  const Run r = cli({"core", "find", "--mode", "strong", sparse.string()});
  CHECK(r.code == kExitPositive);
  CHECK(contains(r.err, "warning"));
  CHECK(contains(r.err, "{A}"));
  const std::vector<std::string> args{"--format", "json", "enumerate", "--mode", "weak",
                                      data("gameB.json")};
  CHECK(cli(args).out == cli(args).out);
  const auto target = dir / "out.json";
  const Run to_file = cli({"-o", target.string(), "--format", "json", "core", "find", "--mode",
                           "weak", data("gameB.json")});
  CHECK(to_file.out.empty());
  std::ifstream in(target);
  const json written = json::parse(in);
  CHECK(written["nonempty"] == true);
  const auto broken = dir / "broken.json";
  std::ofstream(broken) << "{\"players\": [\"A\"],\n\"values\": {\"A\" 1}}";
  const Run bad = cli({"core", "find", "--mode", "weak", broken.string()});
  CHECK(bad.code == kExitInputError);
  CHECK(contains(bad.err, "broken.json"));
  CHECK(contains(bad.err, "line 2"));
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace partstab
