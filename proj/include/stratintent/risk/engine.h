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

#ifndef STRATINTENT_RISK_ENGINE_H_
#define STRATINTENT_RISK_ENGINE_H_

#include <vector>

#include "stratintent/error.h"
#include "stratintent/risk/combat.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"
#include "stratintent/rng.h"

namespace stratintent::risk {

class IllegalActionError : public Error {
 public:
  using Error::Error;
};

enum class Outcome { kOngoing, kEgoWin, kEgoLoss, kDraw };

// Actions available to state.current_player, in canonical order:
// placements by territory index, attacks and moves by edge order then
// troop count, and the phase-end action last.
//
// Draft placements go on territories not held by another player. Draft and
// Reinforce may only end once every troop is placed, so while troops remain
// the list has placements only. Attacks need troops[s] >= 2 along a
// directed edge into a territory the mover does not own; an unowned target
// is occupied without dice. Freemove runs along a directed edge between two
// owned territories and ends the phase.
std::vector<Action> legal_actions(const GameMap& map, const GameState& state);

bool is_legal(const GameMap& map, const GameState& state,
              const Action& action);

// Successor of `state` after the current player takes `action`. When the
// ego player finishes its turn the opponents' turns are simulated with
// opponent_heuristic before control returns. Throws IllegalActionError
// (leaving `state` untouched) when the action is not legal.
GameState apply_action(const GameMap& map, const GameState& state,
                       const Action& action, Rng& rng);

// max(3, floor(territories / 3)) plus the bonus of every fully owned
// continent; 0 for an eliminated player.
int reinforcement_count(const GameMap& map, const GameState& state,
                        PlayerId player);

Outcome is_terminal(const GameState& state);

// Scripted policy for any seat (normally an opponent):
//   draft     - the unowned territory with the most own troops on its
//               continent;
//   reinforce - the weakest owned territory touching a non-owned one;
//   attack    - the edge with the best single-round win probability,
//               if >= 0.5, moving all but one troop; unowned targets count
//               as certain wins;
//   freemove  - none.
// Ties go to the lowest territory index / earliest edge. The result does
// not depend on `rng`.
Action opponent_heuristic(const GameMap& map, const GameState& state,
                          Rng& rng);

// Plays opponent seats with opponent_heuristic until the ego player is to
// move or the game is over.
GameState run_opponents(const GameMap& map, GameState state, Rng& rng);

// Empty board where both opponents draft 14 troops with the heuristic,
// then the ego player drafts.
GameState new_game(const GameMap& map, Rng& rng);

}  // namespace stratintent::risk

#endif  // STRATINTENT_RISK_ENGINE_H_
