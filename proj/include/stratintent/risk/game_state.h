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

#ifndef STRATINTENT_RISK_GAME_STATE_H_
#define STRATINTENT_RISK_GAME_STATE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "stratintent/risk/game_map.h"

namespace stratintent::risk {

inline constexpr int kNumPlayers = 3;
inline constexpr int kDraftTroops = 14;
inline constexpr int kTurnCap = 100;

// Seats. The ego player (white) is the one whose intent is modelled; grey
// and black are the scripted opponents.
using PlayerId = int;
inline constexpr PlayerId kEgo = 0;
inline constexpr PlayerId kGrey = 1;
inline constexpr PlayerId kBlack = 2;
inline constexpr PlayerId kNoOwner = -1;

enum class Phase { kDraft = 0, kReinforce = 1, kAttack = 2, kFreemove = 3 };

std::string_view phase_name(Phase phase);
std::optional<Phase> parse_phase(std::string_view name);

struct GameState {
  std::array<PlayerId, kNumTerritories> owner;
  std::array<int, kNumTerritories> troops{};
  Phase phase = Phase::kDraft;
  PlayerId current_player = kEgo;
  std::array<int, kNumPlayers> troops_to_place{};
  // Troops granted at the start of the current Draft/Reinforce phase.
  int phase_budget = 0;
  int turn_number = 0;
  std::array<bool, kNumPlayers> players_alive{true, true, true};

  GameState() { owner.fill(kNoOwner); }

  bool operator==(const GameState&) const = default;

  int territories_owned(PlayerId player) const;
  int total_troops(PlayerId player) const;
};

// Returns a description of the first violated invariant, or nullopt.
std::optional<std::string> find_invariant_violation(const GameState& state);

// The gameplay tuple <p, s, t, tr>. A phase-end action carries the phase
// and no source.
struct Action {
  Phase phase = Phase::kDraft;
  TerritoryId source = kNoTerritory;
  std::optional<TerritoryId> target;
  std::optional<int> troops;

  static Action draft(TerritoryId s) { return {Phase::kDraft, s, {}, {}}; }
  static Action reinforce(TerritoryId s) {
    return {Phase::kReinforce, s, {}, {}};
  }
  static Action attack(TerritoryId s, TerritoryId t, int tr) {
    return {Phase::kAttack, s, t, tr};
  }
  static Action freemove(TerritoryId s, TerritoryId t, int tr) {
    return {Phase::kFreemove, s, t, tr};
  }
  static Action end_phase(Phase p) { return {p, kNoTerritory, {}, {}}; }

  bool is_phase_end() const { return source == kNoTerritory; }

  bool operator==(const Action&) const = default;
};

std::string describe(const Action& action, const GameMap& map);

}  // namespace stratintent::risk

#endif  // STRATINTENT_RISK_GAME_STATE_H_
