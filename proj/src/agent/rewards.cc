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

#include "stratintent/agent/rewards.h"

#include "stratintent/risk/engine.h"

namespace stratintent::agent {

using risk::Outcome;
using risk::Phase;

std::string_view reward_name(RewardKind kind) {
  switch (kind) {
    case RewardKind::kSparse:
      return "sparse";
    case RewardKind::kTurnCount:
      return "turn-count";
    case RewardKind::kSurvival:
      return "survival";
    case RewardKind::kRulesBased:
      return "rules-based";
  }
  return "?";
}

std::optional<RewardKind> parse_reward(std::string_view name) {
  for (RewardKind k : {RewardKind::kSparse, RewardKind::kTurnCount,
                       RewardKind::kSurvival, RewardKind::kRulesBased}) {
    if (reward_name(k) == name) return k;
  }
  return std::nullopt;
}

double reward(const risk::GameState& prev, const risk::Action& action,
              const risk::GameState& next, RewardKind kind) {
  const bool was_over = risk::is_terminal(prev) != Outcome::kOngoing;
  const Outcome outcome = was_over ? Outcome::kOngoing : risk::is_terminal(next);
  const bool completes_turn =
      prev.current_player == risk::kEgo && prev.phase == Phase::kFreemove;

  switch (kind) {
    case RewardKind::kSparse:
      if (outcome == Outcome::kEgoWin) return 1.0;
      if (outcome == Outcome::kEgoLoss) return -1.0;
      return 0.0;
    case RewardKind::kTurnCount:
      return completes_turn ? 1.0 : 0.0;
    case RewardKind::kSurvival:
      return (completes_turn ? 1.0 : 0.0) +
             (outcome == Outcome::kEgoLoss ? kLossPenalty : 0.0);
    case RewardKind::kRulesBased: {
      double r = 1.0;
      if (action.is_phase_end() || action.phase == Phase::kFreemove) r += 1.0;
      if (!action.is_phase_end()) {
        const bool succeeded =
            action.phase != Phase::kAttack ||
            next.owner[*action.target] == prev.current_player;
        if (succeeded) r += 1.0;
      }
      if (outcome == Outcome::kEgoWin) r += kWinWeight;
      return r;
    }
  }
  return 0.0;
}

}  // namespace stratintent::agent
