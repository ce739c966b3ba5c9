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

#include "gtest/gtest.h"
#include "stratintent/risk/engine.h"
#include "stratintent/risk/initialization.h"
#include "support/state_gen.h"

namespace stratintent::agent {
namespace {

using risk::Action;
using risk::canonical_map;
using risk::GameState;
using risk::Phase;

TEST(RewardTest, NamesRoundTrip) {
  for (RewardKind k : {RewardKind::kSparse, RewardKind::kTurnCount,
                       RewardKind::kSurvival, RewardKind::kRulesBased}) {
    EXPECT_EQ(parse_reward(reward_name(k)), k);
  }
  EXPECT_FALSE(parse_reward("dense"));
}

// Ego holds everything but Red_C, which grey holds with one troop.
GameState one_step_from_win() {
  GameState s;
  s.phase = Phase::kAttack;
  s.turn_number = 5;
  s.owner.fill(risk::kEgo);
  s.troops.fill(1);
  s.troops[0] = 9;  // Red_A
  s.owner[2] = risk::kGrey;
  s.players_alive[risk::kBlack] = false;
  return s;
}

TEST(RewardTest, NonTerminalSparseIsZero) {
  Rng rng(1);
  const GameState s = one_step_from_win();
  const Action end = Action::end_phase(Phase::kAttack);
  const GameState next = risk::apply_action(canonical_map(), s, end, rng);
  EXPECT_EQ(reward(s, end, next, RewardKind::kSparse), 0.0);
}

TEST(RewardTest, WinningTransition) {
  const GameState s = one_step_from_win();
  const Action attack = Action::attack(0, 2, 8);
  // Find a seed for which the 3v1 attack takes Red_C.
  for (uint64_t seed = 0;; ++seed) {
    Rng rng(seed);
    const GameState next = risk::apply_action(canonical_map(), s, attack, rng);
    if (risk::is_terminal(next) != risk::Outcome::kEgoWin) continue;
    EXPECT_EQ(reward(s, attack, next, RewardKind::kSparse), 1.0);
    // action + successful attack + win.
    EXPECT_EQ(reward(s, attack, next, RewardKind::kRulesBased), 1 + 1 + 10);
    break;
  }
}

TEST(RewardTest, TurnCountAndSurvival) {
  Rng rng(2);
  GameState s = one_step_from_win();
  s.phase = Phase::kFreemove;
  const Action end = Action::end_phase(Phase::kFreemove);
  const GameState next = risk::apply_action(canonical_map(), s, end, rng);
  EXPECT_EQ(reward(s, end, next, RewardKind::kTurnCount), 1.0);
  EXPECT_EQ(reward(s, end, next, RewardKind::kSurvival), 1.0);
  // Phase end: action + phase completed.
  EXPECT_EQ(reward(s, end, next, RewardKind::kRulesBased), 2.0);

  GameState attack_phase = one_step_from_win();
  const Action attack_end = Action::end_phase(Phase::kAttack);
  EXPECT_EQ(reward(attack_phase, attack_end,
                   risk::apply_action(canonical_map(), attack_phase,
                                      attack_end, rng),
                   RewardKind::kTurnCount),
            0.0);
}

TEST(RewardTest, LossPenalties) {
  GameState prev;
  prev.phase = Phase::kFreemove;
  prev.turn_number = 3;
  prev.owner[0] = risk::kEgo;
  prev.troops[0] = 1;
  GameState next = prev;
  next.owner[0] = risk::kGrey;
  next.phase = Phase::kReinforce;
  const Action end = Action::end_phase(Phase::kFreemove);
  EXPECT_EQ(reward(prev, end, next, RewardKind::kSparse), -1.0);
  EXPECT_EQ(reward(prev, end, next, RewardKind::kSurvival), 1.0 - 10.0);
}

TEST(RewardTest, SparseEpisodeSumIsUnitOrZero) {
  Rng rng(9);
  const auto& map = canonical_map();
  for (int episode = 0; episode < 200; ++episode) {
    GameState s = risk::load_initialization(
        risk::builtin_initializations()[episode % 15], map);
    double total = 0;
    while (risk::is_terminal(s) == risk::Outcome::kOngoing) {
      const auto actions = risk::legal_actions(map, s);
      const Action a = rng.pick(actions);
      const GameState next = risk::apply_action(map, s, a, rng);
      total += reward(s, a, next, RewardKind::kSparse);
      s = next;
    }
    EXPECT_TRUE(total == 1.0 || total == -1.0 || total == 0.0) << total;
  }
}

}  // namespace
}  // namespace stratintent::agent
