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

#include "partstab/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "partstab/errors.hpp"

namespace partstab {

using nlohmann::json;

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(s.substr(start, at == std::string_view::npos ? at : at - start));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

class NameIndex {
 public:
  explicit NameIndex(std::span<const std::string> names) {
    for (std::size_t i = 0; i < names.size(); ++i) index_[names[i]] = static_cast<int>(i);
  }
  int at(std::string_view name, std::string_view context) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      throw InputError(std::string(context) + ": unknown player '" +
                       std::string(name) + "'");
    }
    return it->second;
  }

 private:
  std::unordered_map<std::string, int> index_;
};

// Comma-joined names to a coalition; rejects empty and repeated members.
Coalition parse_member_list(std::string_view text, const NameIndex& names,
                            std::string_view context) {
  Coalition::Mask bits = 0;
  for (std::string_view raw : split(text, ',')) {
    const std::string_view name = trim(raw);
    if (name.empty()) throw InputError(std::string(context) + ": empty player name");
    const int i = names.at(name, context);
    const Coalition::Mask bit = Coalition::Mask{1} << i;
    if (bits & bit) {
      throw InputError(std::string(context) + ": player '" + std::string(name) +
                       "' listed twice");
    }
    bits |= bit;
  }
  return Coalition(bits);
}

Rational value_from_json(const json& v, const std::string& key) {
  const std::string context = "values[\"" + key + "\"]";
  if (v.is_number_integer()) return Rational(v.dump());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(context + ": " + e.what());
    }
  }
  if (v.is_number_float()) {
    throw InputError(context + ": " + v.dump() +
                     " is not an integer; write fractions as \"p/q\"");
  }
  throw InputError(context + ": expected an integer or a \"p/q\" string");
}

const json& required(const json& j, const char* key) {
  if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.dump());
  if (!j.is_string()) throw InputError("expected a rational, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

template <typename T, typename F>
std::optional<T> optional_from_json(const json& j, const char* key, F&& convert) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return convert(j.at(key));
}

}  // namespace

LoadedGame parse_game_json(std::string_view text, int player_cap) {
  std::vector<std::set<std::string>> open_objects;
  const json::parser_callback_t reject_duplicates =
      [&](int, json::parse_event_t event, json& parsed) {
        switch (event) {
          case json::parse_event_t::object_start:
            open_objects.emplace_back();
            break;
          case json::parse_event_t::object_end:
            open_objects.pop_back();
            break;
          case json::parse_event_t::key: {
            const auto key = parsed.get<std::string>();
            if (!open_objects.back().insert(key).second) {
              throw InputError("duplicate key \"" + key + "\"");
            }
            break;
          }
          default:
            break;
        }
        return true;
      };
  json root;
  try {
    root = json::parse(text.begin(), text.end(), reject_duplicates);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw InputError("game file must hold a JSON object");
  for (const auto& [key, unused] : root.items()) {
    if (key != "players" && key != "values") {
      throw InputError("unexpected top-level field \"" + key + "\"");
    }
  }
  const json& players = required(root, "players");
  if (!players.is_array()) throw InputError("'players' must be an array of names");
  const int n = static_cast<int>(players.size());
  const int cap = std::min(player_cap, kMaxPlayers);
  if (n > cap) {
    throw LimitExceeded("game has " + std::to_string(n) +
                        " players; the cap is " + std::to_string(cap));
  }
  if (n == 0) throw InputError("'players' is empty");
  std::vector<std::string> names;
  for (const auto& p : players) {
    if (!p.is_string()) throw InputError("player names must be strings");
    std::string name = p.get<std::string>();
    if (trim(name) != name || name.empty() ||
        name.find_first_of(",|") != std::string::npos) {
      throw InputError("player name \"" + name +
                       "\" must be nonempty, unpadded, and free of ',' and '|'");
    }
    if (std::find(names.begin(), names.end(), name) != names.end()) {
      throw InputError("duplicate player name \"" + name + "\" in 'players'");
    }
    names.push_back(std::move(name));
  }
  const NameIndex index(names);

  std::vector<Rational> values(std::size_t{1} << n, Rational(0));
  std::vector<std::string> given(std::size_t{1} << n);
  const json& table = required(root, "values");
  if (!table.is_object()) throw InputError("'values' must be an object");
  for (const auto& [key, v] : table.items()) {
    const std::string context = "values[\"" + key + "\"]";
    const Coalition c = parse_member_list(key, index, context);
    if (!given[c.bits()].empty()) {
      throw InputError(context + ": same coalition as values[\"" +
                       given[c.bits()] + "\"]");
    }
    given[c.bits()] = key;
    values[c.bits()] = value_from_json(v, key);
  }
  std::vector<Coalition> defaulted;
  for (std::size_t c = 1; c < given.size(); ++c) {
    if (given[c].empty()) defaulted.emplace_back(static_cast<Coalition::Mask>(c));
  }
  return {Game(n, std::move(values), std::move(names), cap), std::move(defaulted)};
}

LoadedGame load_game_file(const std::string& path, int player_cap) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game_json(buffer.str(), player_cap);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string game_to_json(const Game& game) {
  json j;
  j["players"] = game.names();
  json values = json::object();
  for (std::size_t c = 1; c < game.values().size(); ++c) {
    const Coalition coalition(static_cast<Coalition::Mask>(c));
    std::string key;
    for (int i : coalition.members()) {
      if (!key.empty()) key += ',';
      key += game.name(i);
    }
    const Rational& v = game.values()[c];
    if (v.get_den() == 1) {
      values[key] = json::parse(v.get_str());
    } else {
      values[key] = v.get_str();
    }
  }
  j["values"] = std::move(values);
  return j.dump(2);
}

Partition parse_partition(std::string_view text, const Game& game) {
  const std::string context = "partition \"" + std::string(text) + "\"";
  const NameIndex index(game.names());
  std::vector<Coalition> blocks;
  for (std::string_view block : split(text, '|')) {
    if (trim(block).empty()) throw InputError(context + ": empty block");
    blocks.push_back(parse_member_list(block, index, context));
  }
  try {
    return Partition(game.num_players(), std::move(blocks));
  } catch (const InputError& e) {
    throw InputError(context + ": " + e.what());
  }
}

Allocation parse_allocation(std::string_view text, const Game& game) {
  Allocation x(parse_rational_list(text));
  require_allocation_size(game, x);
  return x;
}

json coalition_to_json(Coalition c, const Game& game) {
  json out = json::array();
  for (int i : c.members()) out.push_back(game.name(i));
  return out;
}

Coalition coalition_from_json(const json& j, const Game& game) {
  if (!j.is_array()) throw InputError("coalition must be an array of names");
  const NameIndex index(game.names());
  Coalition::Mask bits = 0;
  for (const auto& name : j) bits |= Coalition::Mask{1} << index.at(name.get<std::string>(), "coalition");
  return Coalition(bits);
}

json partition_to_json(const Partition& p, const Game& game) {
  json out = json::array();
  for (Coalition b : p.blocks()) out.push_back(coalition_to_json(b, game));
  return out;
}

Partition partition_from_json(const json& j, const Game& game) {
  if (!j.is_array()) throw InputError("partition must be an array of blocks");
  std::vector<Coalition> blocks;
  for (const auto& b : j) blocks.push_back(coalition_from_json(b, game));
  return Partition(game.num_players(), std::move(blocks));
}

json allocation_to_json(const Allocation& x) {
  json out = json::array();
  for (const auto& q : x.payoffs()) out.push_back(to_string(q));
  return out;
}

Allocation allocation_from_json(const json& j) {
  if (!j.is_array()) throw InputError("allocation must be an array");
  std::vector<Rational> payoffs;
  for (const auto& q : j) payoffs.push_back(rational_from_json(q));
  return Allocation(std::move(payoffs));
}

json to_json(const CoreReport& r, const Game& game) {
  json j;
  j["mode"] = to_string(r.mode);
  j["member"] = r.member;
  j["verdict"] = to_string(r.verdict);
  j["coalition"] = r.coalition ? coalition_to_json(*r.coalition, game) : json(nullptr);
  j["partition"] = r.partition ? partition_to_json(*r.partition, game) : json(nullptr);
  json satisfied = json::array();
  for (Coalition c : r.satisfied) satisfied.push_back(coalition_to_json(c, game));
  j["satisfied"] = std::move(satisfied);
  return j;
}

CoreReport core_report_from_json(const json& j, const Game& game) {
  CoreReport r;
  r.mode = parse_mode(required(j, "mode").get<std::string>());
  r.member = required(j, "member").get<bool>();
  r.verdict = parse_core_verdict(required(j, "verdict").get<std::string>());
  r.coalition = optional_from_json<Coalition>(
      j, "coalition", [&](const json& v) { return coalition_from_json(v, game); });
  r.partition = optional_from_json<Partition>(
      j, "partition", [&](const json& v) { return partition_from_json(v, game); });
  if (j.contains("satisfied")) {
    for (const auto& c : j.at("satisfied")) r.satisfied.push_back(coalition_from_json(c, game));
  }
  return r;
}

json to_json(const CoreExistence& e, Mode mode) {
  json j;
  j["mode"] = to_string(mode);
  j["nonempty"] = e.nonempty;
  j["witness"] = e.witness ? allocation_to_json(*e.witness) : json(nullptr);
  return j;
}

CoreExistence core_existence_from_json(const json& j) {
  CoreExistence e;
  e.nonempty = required(j, "nonempty").get<bool>();
  e.witness = optional_from_json<Allocation>(j, "witness", allocation_from_json);
  return e;
}

json to_json(const StabilityReport& r, const Game& game) {
  json j;
  j["mode"] = to_string(r.mode);
  j["feasible"] = r.feasible;
  j["fission_resistant"] = r.fission_resistant;
  j["fusion_resistant"] = r.fusion_resistant;
  j["stable"] = r.stable;
  j["fission_block"] =
      r.fission_block ? coalition_to_json(*r.fission_block, game) : json(nullptr);
  j["fission_certificate"] = r.fission_certificate
                                 ? partition_to_json(*r.fission_certificate, game)
                                 : json(nullptr);
  j["fusion_coalition"] =
      r.fusion_coalition ? coalition_to_json(*r.fusion_coalition, game) : json(nullptr);
  j["fusion_certificate"] = r.fusion_certificate
                                ? partition_to_json(*r.fusion_certificate, game)
                                : json(nullptr);
  j["detail"] = r.detail;
  return j;
}

StabilityReport stability_report_from_json(const json& j, const Game& game) {
  StabilityReport r;
  r.mode = parse_mode(required(j, "mode").get<std::string>());
  r.feasible = required(j, "feasible").get<bool>();
  r.fission_resistant = required(j, "fission_resistant").get<bool>();
  r.fusion_resistant = required(j, "fusion_resistant").get<bool>();
  r.stable = required(j, "stable").get<bool>();
  auto as_coalition = [&](const json& v) { return coalition_from_json(v, game); };
  auto as_partition = [&](const json& v) { return partition_from_json(v, game); };
  r.fission_block = optional_from_json<Coalition>(j, "fission_block", as_coalition);
  r.fission_certificate =
      optional_from_json<Partition>(j, "fission_certificate", as_partition);
  r.fusion_coalition = optional_from_json<Coalition>(j, "fusion_coalition", as_coalition);
  r.fusion_certificate =
      optional_from_json<Partition>(j, "fusion_certificate", as_partition);
  r.detail = j.value("detail", std::string());
  return r;
}

json to_json(const SamTrace& t, const Game& game) {
  json j;
  j["start"] = partition_to_json(t.start, game);
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"from", partition_to_json(s.from, game)},
                     {"to", partition_to_json(s.to, game)},
                     {"from_worth", to_string(s.from_worth)},
                     {"to_worth", to_string(s.to_worth)},
                     {"direction", to_string(s.direction)}});
  }
  j["steps"] = std::move(steps);
  j["terminal"] = partition_to_json(t.terminal, game);
  j["terminal_worth"] = to_string(t.terminal_worth);
  j["terminal_allocation"] = allocation_to_json(t.terminal_pair.allocation);
  return j;
}

SamTrace sam_trace_from_json(const json& j, const Game& game) {
  const Partition start = partition_from_json(required(j, "start"), game);
  const Partition terminal = partition_from_json(required(j, "terminal"), game);
  SamTrace t{start, {}, terminal, rational_from_json(required(j, "terminal_worth")),
             {terminal, allocation_from_json(required(j, "terminal_allocation"))}};
  for (const auto& s : required(j, "steps")) {
    const std::string direction = required(s, "direction").get<std::string>();
    if (direction != "fission" && direction != "fusion") {
      throw InputError("unknown step direction '" + direction + "'");
    }
    t.steps.push_back({partition_from_json(required(s, "from"), game),
                       partition_from_json(required(s, "to"), game),
                       rational_from_json(required(s, "from_worth")),
                       rational_from_json(required(s, "to_worth")),
                       direction == "fission" ? MoveKind::kFission : MoveKind::kFusion});
  }
  return t;
}

}  // namespace partstab
