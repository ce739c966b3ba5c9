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

#include "stratintent/risk/engine.h"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

namespace stratintent::risk {
namespace {

bool valid_territory(TerritoryId t) { return t >= 0 && t < kNumTerritories; }

void begin_turn(const GameMap& map, GameState& s, PlayerId player) {
  s.current_player = player;
  s.phase = Phase::kReinforce;
  const int n = reinforcement_count(map, s, player);
  s.troops_to_place[player] = n;
  s.phase_budget = n;
}

void refresh_alive(GameState& s, PlayerId player) {
  if (player != kNoOwner && s.territories_owned(player) == 0) {
    s.players_alive[player] = false;
  }
}

// Hands the turn to the next living seat; wrapping back to the ego player
// completes a game turn.
void pass_turn(const GameMap& map, GameState& s) {
  PlayerId next = s.current_player;
  for (int step = 0; step < kNumPlayers; ++step) {
    next = (next + 1) % kNumPlayers;
    if (next == kEgo) ++s.turn_number;
    if (s.players_alive[next]) break;
  }
  begin_turn(map, s, next);
}

void end_phase(const GameMap& map, GameState& s) {
  switch (s.phase) {
    case Phase::kDraft:
      // Opponents draft before the ego player; the ego's draft is followed
      // by its first turn.
      if (s.current_player == kGrey) {
        s.current_player = kBlack;
        s.phase_budget = s.troops_to_place[kBlack];
      } else if (s.current_player == kBlack) {
        s.current_player = kEgo;
        s.phase_budget = s.troops_to_place[kEgo];
      } else {
        begin_turn(map, s, kEgo);
      }
      break;
    case Phase::kReinforce:
      s.phase = Phase::kAttack;
      s.phase_budget = 0;
      break;
    case Phase::kAttack:
      s.phase = Phase::kFreemove;
      break;
    case Phase::kFreemove:
      pass_turn(map, s);
      break;
  }
}

bool is_border(const GameMap& map, const GameState& s, TerritoryId t) {
  const PlayerId p = s.owner[t];
  for (TerritoryId u : map.successors(t)) {
    if (s.owner[u] != p) return true;
  }
  for (TerritoryId u : map.predecessors(t)) {
    if (s.owner[u] != p) return true;
  }
  return false;
}

double attack_win_probability(const GameState& s, TerritoryId src,
                              TerritoryId dst) {
  if (s.owner[dst] == kNoOwner) return 1.0;
  return single_round_win_probability(attacker_dice_for(s.troops[src]),
                                      defender_dice_for(s.troops[dst]));
}

// Transition for an action already known to be legal; no opponent
// hand-off.
GameState step(const GameMap& map, const GameState& state,
               const Action& action, Rng& rng) {
  GameState s = state;
  const PlayerId p = s.current_player;
  if (action.is_phase_end()) {
    end_phase(map, s);
    return s;
  }
  const TerritoryId src = action.source;
  switch (s.phase) {
    case Phase::kDraft:
    case Phase::kReinforce:
      s.owner[src] = p;
      s.troops[src] += 1;
      s.troops_to_place[p] -= 1;
      break;
    case Phase::kAttack: {
      const TerritoryId dst = *action.target;
      const int tr = *action.troops;
      if (s.owner[dst] == kNoOwner) {
        s.owner[dst] = p;
        s.troops[dst] = tr;
        s.troops[src] -= tr;
        break;
      }
      const PlayerId defender = s.owner[dst];
      const BattleOutcome battle =
          resolve_battle(s.troops[src], s.troops[dst], tr, rng);
      s.troops[src] -= battle.attacker_losses;
      s.troops[dst] -= battle.defender_losses;
      if (battle.conquered) {
        s.owner[dst] = p;
        s.troops[dst] = battle.troops_moved;
        s.troops[src] -= battle.troops_moved;
        refresh_alive(s, defender);
      }
      break;
    }
    case Phase::kFreemove:
      s.troops[src] -= *action.troops;
      s.troops[*action.target] += *action.troops;
      end_phase(map, s);
      break;
  }
  return s;
}

}  // namespace

std::vector<Action> legal_actions(const GameMap& map, const GameState& s) {
  std::vector<Action> actions;
  const PlayerId p = s.current_player;
  switch (s.phase) {
    case Phase::kDraft:
      if (s.troops_to_place[p] > 0) {
        for (TerritoryId t = 0; t < kNumTerritories; ++t) {
          if (s.owner[t] == kNoOwner || s.owner[t] == p) {
            actions.push_back(Action::draft(t));
          }
        }
        return actions;
      }
      break;
    case Phase::kReinforce:
      if (s.troops_to_place[p] > 0) {
        for (TerritoryId t = 0; t < kNumTerritories; ++t) {
          if (s.owner[t] == p) actions.push_back(Action::reinforce(t));
        }
        return actions;
      }
      break;
    case Phase::kAttack:
    case Phase::kFreemove: {
      const bool attacking = s.phase == Phase::kAttack;
      for (const Edge& e : map.edges()) {
        if (s.owner[e.source] != p || s.troops[e.source] < 2) continue;
        if ((s.owner[e.target] == p) == attacking) continue;
        for (int tr = 1; tr < s.troops[e.source]; ++tr) {
          actions.push_back(attacking
                                ? Action::attack(e.source, e.target, tr)
                                : Action::freemove(e.source, e.target, tr));
        }
      }
      break;
    }
  }
  actions.push_back(Action::end_phase(s.phase));
  return actions;
}

bool is_legal(const GameMap& map, const GameState& s, const Action& a) {
  if (a.phase != s.phase) return false;
  const PlayerId p = s.current_player;
  if (a.is_phase_end()) {
    if (a.target || a.troops) return false;
    if (s.phase == Phase::kDraft || s.phase == Phase::kReinforce) {
      return s.troops_to_place[p] == 0;
    }
    return true;
  }
  if (!valid_territory(a.source)) return false;
  switch (s.phase) {
    case Phase::kDraft:
      return !a.target && !a.troops && s.troops_to_place[p] > 0 &&
             (s.owner[a.source] == kNoOwner || s.owner[a.source] == p);
    case Phase::kReinforce:
      return !a.target && !a.troops && s.troops_to_place[p] > 0 &&
             s.owner[a.source] == p;
    case Phase::kAttack:
    case Phase::kFreemove: {
      if (!a.target || !a.troops || !valid_territory(*a.target)) return false;
      const TerritoryId t = *a.target;
      const bool attacking = s.phase == Phase::kAttack;
      return map.has_edge(a.source, t) && s.owner[a.source] == p &&
             (s.owner[t] == p) != attacking && s.troops[a.source] >= 2 &&
             *a.troops >= 1 && *a.troops <= s.troops[a.source] - 1;
    }
  }
  return false;
}

GameState apply_action(const GameMap& map, const GameState& state,
                       const Action& action, Rng& rng) {
  if (!is_legal(map, state, action)) {
    throw IllegalActionError("illegal action '" + describe(action, map) +
                             "' for player " +
                             std::to_string(state.current_player) + " in " +
                             std::string(phase_name(state.phase)));
  }
  GameState s = step(map, state, action, rng);
  if (s.current_player != kEgo) s = run_opponents(map, std::move(s), rng);
  return s;
}

int reinforcement_count(const GameMap& map, const GameState& s,
                        PlayerId player) {
  const int owned = s.territories_owned(player);
  if (!s.players_alive[player] || owned == 0) return 0;
  int count = std::max(3, owned / 3);
  for (const Continent& c : map.continents()) {
    bool full = true;
    for (TerritoryId t : c.territories) full = full && s.owner[t] == player;
    if (full) count += c.bonus;
  }
  return count;
}

Outcome is_terminal(const GameState& s) {
  const int ego_owned = s.territories_owned(kEgo);
  if (ego_owned == kNumTerritories) return Outcome::kEgoWin;
  if (s.phase != Phase::kDraft && ego_owned == 0) return Outcome::kEgoLoss;
  if (s.turn_number >= kTurnCap) return Outcome::kDraw;
  return Outcome::kOngoing;
}

Action opponent_heuristic(const GameMap& map, const GameState& s,
                          Rng& /*rng*/) {
  const PlayerId p = s.current_player;
  switch (s.phase) {
    case Phase::kDraft: {
      if (s.troops_to_place[p] == 0) break;
      std::array<int, kNumContinents> own_troops{};
      for (TerritoryId t = 0; t < kNumTerritories; ++t) {
        if (s.owner[t] == p) own_troops[map.continent_of(t)] += s.troops[t];
      }
      TerritoryId best = kNoTerritory;
      for (PlayerId wanted : {kNoOwner, p}) {
        for (TerritoryId t = 0; t < kNumTerritories; ++t) {
          if (s.owner[t] != wanted) continue;
          if (best == kNoTerritory || own_troops[map.continent_of(t)] >
                                          own_troops[map.continent_of(best)]) {
            best = t;
          }
        }
        if (best != kNoTerritory) break;
      }
      return Action::draft(best);
    }
    case Phase::kReinforce: {
      if (s.troops_to_place[p] == 0) break;
      TerritoryId best = kNoTerritory;
      bool best_border = false;
      for (TerritoryId t = 0; t < kNumTerritories; ++t) {
        if (s.owner[t] != p) continue;
        const bool border = is_border(map, s, t);
        if (best == kNoTerritory || (border && !best_border) ||
            (border == best_border && s.troops[t] < s.troops[best])) {
          best = t;
          best_border = border;
        }
      }
      return Action::reinforce(best);
    }
    case Phase::kAttack: {
      const Edge* best = nullptr;
      double best_p = 0.5;
      for (const Edge& e : map.edges()) {
        if (s.owner[e.source] != p || s.owner[e.target] == p ||
            s.troops[e.source] < 2) {
          continue;
        }
        const double win = attack_win_probability(s, e.source, e.target);
        if (win > best_p || (!best && win >= best_p)) {
          best = &e;
          best_p = win;
        }
      }
      if (best) {
        return Action::attack(best->source, best->target,
                              s.troops[best->source] - 1);
      }
      break;
    }
    case Phase::kFreemove:
      break;
  }
  return Action::end_phase(s.phase);
}

GameState run_opponents(const GameMap& map, GameState s, Rng& rng) {
  while (s.current_player != kEgo && is_terminal(s) == Outcome::kOngoing) {
    const Action a = opponent_heuristic(map, s, rng);
    if (!is_legal(map, s, a)) {
      throw IllegalActionError("heuristic produced '" + describe(a, map) + "'");
    }
    s = step(map, s, a, rng);
  }
  return s;
}

GameState new_game(const GameMap& map, Rng& rng) {
  GameState s;
  s.phase = Phase::kDraft;
  s.current_player = kGrey;
  s.troops_to_place = {kDraftTroops, kDraftTroops, kDraftTroops};
  s.phase_budget = kDraftTroops;
  return run_opponents(map, std::move(s), rng);
}

}  // namespace stratintent::risk
