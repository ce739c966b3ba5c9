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

#include "stratintent/risk/game_state.h"

namespace stratintent::risk {

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kDraft:
      return "draft";
    case Phase::kReinforce:
      return "reinforce";
    case Phase::kAttack:
      return "attack";
    case Phase::kFreemove:
      return "freemove";
  }
  return "?";
}

std::optional<Phase> parse_phase(std::string_view name) {
  for (Phase p : {Phase::kDraft, Phase::kReinforce, Phase::kAttack,
                  Phase::kFreemove}) {
    if (phase_name(p) == name) return p;
  }
  return std::nullopt;
}

int GameState::territories_owned(PlayerId player) const {
  int n = 0;
  for (PlayerId o : owner) n += (o == player);
  return n;
}

int GameState::total_troops(PlayerId player) const {
  int n = 0;
  for (int t = 0; t < kNumTerritories; ++t) {
    if (owner[t] == player) n += troops[t];
  }
  return n;
}

std::optional<std::string> find_invariant_violation(const GameState& state) {
  for (int t = 0; t < kNumTerritories; ++t) {
    if (state.owner[t] < kNoOwner || state.owner[t] >= kNumPlayers) {
      return "territory " + territory_names()[t] + " has an invalid owner";
    }
    if (state.owner[t] != kNoOwner && state.troops[t] < 1) {
      return "owned territory " + territory_names()[t] + " has no troops";
    }
    if (state.owner[t] == kNoOwner && state.troops[t] != 0) {
      return "unowned territory " + territory_names()[t] + " has troops";
    }
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    if (state.troops_to_place[p] < 0) {
      return "player " + std::to_string(p) + " has negative troops to place";
    }
  }
  if (state.current_player < 0 || state.current_player >= kNumPlayers) {
    return "invalid current player";
  }
  if (state.phase == Phase::kDraft && state.turn_number != 0) {
    return "draft phase after the first turn";
  }
  if (state.turn_number < 0) return "negative turn number";
  return std::nullopt;
}

std::string describe(const Action& action, const GameMap& map) {
  std::string out(phase_name(action.phase));
  if (action.is_phase_end()) return out + " end";
  out += " " + map.territory_name(action.source);
  if (action.target) out += " -> " + map.territory_name(*action.target);
  if (action.troops) out += " x" + std::to_string(*action.troops);
  return out;
}

}  // namespace stratintent::risk
