//
// Copyright 2026 The Stratintent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "stratintent/cli/state_io.h"

#include <array>
#include <istream>

#include "json.hpp"

namespace stratintent::cli {

namespace {

using nlohmann::ordered_json;
using risk::GameState;
using risk::PlayerId;

constexpr std::array<std::string_view, risk::kNumPlayers> kPlayerNames = {"ego", "grey",
                                                                          "black"};

PlayerId parse_player(const ordered_json& j, int line) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    for (PlayerId p = 0; p < risk::kNumPlayers; ++p) {
      if (kPlayerNames[p] == name) return p;
    }
  }
  throw StateFormatError(line, "unknown player " + j.dump());
}

}  // namespace

std::string state_to_json_line(const risk::GameMap& map, const GameState& state) {
  ordered_json j;
  j["turn"] = state.turn_number;
  j["phase"] = risk::phase_name(state.phase);
  j["current_player"] = kPlayerNames[state.current_player];
  j["phase_budget"] = state.phase_budget;
  j["troops_to_place"] = state.troops_to_place;
  j["players_alive"] = state.players_alive;
  ordered_json board = ordered_json::object();
  for (risk::TerritoryId t = 0; t < risk::kNumTerritories; ++t) {
    if (state.owner[t] == risk::kNoOwner) continue;
    board[map.territory_name(t)] = {kPlayerNames[state.owner[t]], state.troops[t]};
  }
  j["board"] = board;
  return j.dump();
}

GameState state_from_json_line(const risk::GameMap& map, std::string_view text,
                               int line) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw StateFormatError(line, std::string("malformed JSON: ") + e.what());
  }
  GameState s;
  try {
    s.turn_number = j.at("turn").get<int>();
    const auto phase = risk::parse_phase(j.at("phase").get<std::string>());
    if (!phase) throw StateFormatError(line, "unknown phase " + j.at("phase").dump());
    s.phase = *phase;
    s.current_player = parse_player(j.at("current_player"), line);
    s.phase_budget = j.at("phase_budget").get<int>();
    s.troops_to_place = j.at("troops_to_place").get<std::array<int, risk::kNumPlayers>>();
    s.players_alive = j.at("players_alive").get<std::array<bool, risk::kNumPlayers>>();
    for (const auto& [name, cell] : j.at("board").items()) {
      const auto t = map.find_territory(name);
      if (!t) throw StateFormatError(line, "unknown territory " + name);
      if (!cell.is_array() || cell.size() != 2) {
        throw StateFormatError(line, name + " must be [player, troops]");
      }
      s.owner[*t] = parse_player(cell[0], line);
      s.troops[*t] = cell[1].get<int>();
    }
  } catch (const nlohmann::json::exception& e) {
    throw StateFormatError(line, e.what());
  }
  if (auto why = risk::find_invariant_violation(s)) throw StateFormatError(line, *why);
  return s;
}

std::vector<GameState> read_states(const risk::GameMap& map, std::istream& in) {
  std::vector<GameState> out;
  std::string text;
  for (int line = 1; std::getline(in, text); ++line) {
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(state_from_json_line(map, text, line));
  }
  return out;
}

}  // namespace stratintent::cli
