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

#ifndef STRATINTENT_AGENT_REWARDS_H_
#define STRATINTENT_AGENT_REWARDS_H_

#include <optional>
#include <string_view>

#include "stratintent/risk/game_state.h"

namespace stratintent::agent {

enum class RewardKind { kSparse, kTurnCount, kSurvival, kRulesBased };

// Stable ids: sparse, turn-count, survival, rules-based.
std::string_view reward_name(RewardKind kind);
std::optional<RewardKind> parse_reward(std::string_view name);

inline constexpr double kWinWeight = 10.0;
inline constexpr double kLossPenalty = -10.0;

// Reward for the ego player's transition prev --action--> next.
//
//   sparse      +1 on reaching a win, -1 on reaching a loss.
//   turn-count  +1 whenever the action finishes an ego turn (any Freemove
//               action does).
//   survival    turn-count, plus -10 on reaching a loss.
//   rules-based +1 for the (legal) action, +1 if it completes a phase,
//               +1 if it is an in-phase action that succeeded (a placement,
//               a move, or an attack that took the target), +10 on a win.
double reward(const risk::GameState& prev, const risk::Action& action,
              const risk::GameState& next, RewardKind kind);

}  // namespace stratintent::agent

#endif  // STRATINTENT_AGENT_REWARDS_H_
