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
#include <fstream>

#include "gtest/gtest.h"
#include "stratintent/risk/initialization.h"
#include "support/state_gen.h"

namespace stratintent::risk {
namespace {

const GameMap& kMap = canonical_map();

TerritoryId id(std::string_view name) { return *kMap.find_territory(name); }

GameState reference_start() {
  return load_initialization(*find_initialization(builtin_initializations(), 1),
                             kMap);
}

// The annotated example: the ego player's drafts on top of the reference map.
GameState reference_after_draft() {
  GameState s = reference_start();
  s.owner[id("Purple_E")] = kEgo;
  s.troops[id("Purple_E")] = 7;
  s.owner[id("Purple_C")] = kEgo;
  s.troops[id("Purple_C")] = 5;
  s.owner[id("Purple_D")] = kEgo;
  s.troops[id("Purple_D")] = 2;
  s.troops_to_place[kEgo] = 0;
  return s;
}

bool contains(const std::vector<Action>& actions, const Action& a) {
  return std::find(actions.begin(), actions.end(), a) != actions.end();
}

TEST(LoadInitializationTest, ReferenceScenario) {
  const GameState s = reference_start();
  EXPECT_FALSE(find_invariant_violation(s));
  EXPECT_EQ(s.troops[id("Yellow_C")], 5);
  EXPECT_EQ(s.owner[id("Yellow_C")], kGrey);
  EXPECT_EQ(s.troops[id("Purple_A")], 5);
  EXPECT_EQ(s.owner[id("Purple_A")], kBlack);
  EXPECT_EQ(s.total_troops(kGrey), 14);
  EXPECT_EQ(s.total_troops(kBlack), 14);
  EXPECT_EQ(s.phase, Phase::kDraft);
  EXPECT_EQ(s.current_player, kEgo);
  EXPECT_EQ(s.troops_to_place[kEgo], 14);
  // Ten territories are taken by the opponents.
  EXPECT_EQ(std::count(s.owner.begin(), s.owner.end(), kNoOwner), 11);
}

TEST(LoadInitializationTest, RejectsWrongTotals) {
  MapInitialization init = *find_initialization(builtin_initializations(), 1);
  init.grey.back().second -= 1;  // 13 troops
  EXPECT_THROW(load_initialization(init, kMap), InvalidInitializationError);
}

TEST(LoadInitializationTest, RejectsOverlap) {
  MapInitialization init = *find_initialization(builtin_initializations(), 1);
  init.black.back().first = id("Red_A");
  EXPECT_THROW(load_initialization(init, kMap), InvalidInitializationError);
}

TEST(LoadInitializationTest, AllBuiltinsValid) {
  const auto& inits = builtin_initializations();
  ASSERT_EQ(inits.size(), 15u);
  for (int i = 0; i < 15; ++i) {
    EXPECT_EQ(inits[i].id, i + 1);
    EXPECT_NO_THROW(validate_initialization(inits[i]));
    EXPECT_EQ(inits[i].source, i == 0 ? "reference" : "synthetic");
  }
}

TEST(LoadInitializationTest, ShippedFileMatchesBuiltins) {
  std::ifstream in(STRATINTENT_DATA_DIR "/initializations.txt");
  ASSERT_TRUE(in);
  EXPECT_EQ(parse_initializations(in, kMap), builtin_initializations());
}

TEST(LegalActionsTest, DraftWithOneTroopLeft) {
  GameState s = reference_start();
  s.troops_to_place[kEgo] = 1;
  const auto actions = legal_actions(kMap, s);
  ASSERT_EQ(actions.size(), 11u);
  for (const Action& a : actions) {
    EXPECT_EQ(a.phase, Phase::kDraft);
    EXPECT_EQ(s.owner[a.source], kNoOwner);
  }
}

TEST(LegalActionsTest, DraftMayStackOnOwnTerritory) {
  Rng rng(1);
  GameState s = apply_action(kMap, reference_start(),
                             Action::draft(id("Purple_E")), rng);
  EXPECT_TRUE(contains(legal_actions(kMap, s), Action::draft(id("Purple_E"))));
  EXPECT_FALSE(contains(legal_actions(kMap, s), Action::draft(id("Red_A"))));
}

TEST(LegalActionsTest, CompletedDraftOffersOnlyPhaseEnd) {
  const auto actions = legal_actions(kMap, reference_after_draft());
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_TRUE(actions[0].is_phase_end());
}

TEST(LegalActionsTest, NoEnemyEdgeMeansOnlyPhaseEnd) {
  GameState s;
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  // Ego holds all of Red; every edge out of Red leads to ego territory
  // too, and everything else is unowned.
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    s.owner[t] = kEgo;
    s.troops[t] = 1;
  }
  s.troops[id("Red_A")] = 5;
  const auto actions = legal_actions(kMap, s);
  ASSERT_EQ(actions.size(), 1u);
  EXPECT_TRUE(actions[0].is_phase_end());
}

TEST(LegalActionsTest, AttackEnumeratesTroopCounts) {
  GameState s = reference_after_draft();
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  // Purple_E may hit Purple_A (black, 5) and Purple_B (black, 1) with 1..6.
  const auto actions = legal_actions(kMap, s);
  int from_e = 0;
  for (const Action& a : actions) {
    if (a.source == id("Purple_E")) {
      ++from_e;
      EXPECT_GE(*a.troops, 1);
      EXPECT_LE(*a.troops, 6);
    }
  }
  // Targets: Purple_A, Purple_B (black). Purple_C/D are own.
  EXPECT_EQ(from_e, 2 * 6);
  EXPECT_TRUE(actions.back().is_phase_end());
}

TEST(ApplyActionTest, DraftOntoOccupiedTerritoryIsIllegal) {
  Rng rng(3);
  const GameState s = reference_start();
  const GameState before = s;
  EXPECT_THROW(apply_action(kMap, s, Action::draft(id("Yellow_C")), rng),
               IllegalActionError);
  EXPECT_EQ(s, before);
}

TEST(ApplyActionTest, FreemoveArithmetic) {
  // Opponents are eliminated so the turn hand-off leaves the board alone.
  Rng rng(3);
  GameState s;
  s.phase = Phase::kFreemove;
  s.turn_number = 1;
  s.players_alive = {true, false, false};
  s.owner[id("Red_A")] = kEgo;
  s.troops[id("Red_A")] = 4;
  s.owner[id("Red_B")] = kEgo;
  s.troops[id("Red_B")] = 1;
  const GameState next =
      apply_action(kMap, s, Action::freemove(id("Red_A"), id("Red_B"), 3), rng);
  EXPECT_EQ(next.troops[id("Red_A")], 1);
  EXPECT_EQ(next.troops[id("Red_B")], 4);
  EXPECT_EQ(next.phase, Phase::kReinforce);
  EXPECT_EQ(next.turn_number, 2);
}

TEST(ApplyActionTest, AttackFromSingleTroopIsIllegal) {
  Rng rng(5);
  GameState s = reference_after_draft();
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  s.troops[id("Purple_E")] = 1;
  EXPECT_THROW(apply_action(kMap, s,
                            Action::attack(id("Purple_E"), id("Purple_B"), 1),
                            rng),
               IllegalActionError);
  // tr must leave one troop behind as well.
  s.troops[id("Purple_E")] = 3;
  EXPECT_THROW(apply_action(kMap, s,
                            Action::attack(id("Purple_E"), id("Purple_B"), 3),
                            rng),
               IllegalActionError);
}

TEST(ApplyActionTest, AttackOnUnownedTerritoryOccupiesIt) {
  Rng rng(5);
  GameState s = reference_after_draft();
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  s.owner[id("Green_A")] = kEgo;
  s.troops[id("Green_A")] = 3;
  const GameState next = apply_action(
      kMap, s, Action::attack(id("Green_A"), id("Green_B"), 2), rng);
  EXPECT_EQ(next.owner[id("Green_B")], kEgo);
  EXPECT_EQ(next.troops[id("Green_B")], 2);
  EXPECT_EQ(next.troops[id("Green_A")], 1);
}

TEST(ApplyActionTest, PhaseSequence) {
  Rng rng(9);
  GameState s = reference_after_draft();
  s = apply_action(kMap, s, Action::end_phase(Phase::kDraft), rng);
  EXPECT_EQ(s.phase, Phase::kReinforce);
  EXPECT_EQ(s.troops_to_place[kEgo], 3);
  EXPECT_EQ(s.phase_budget, 3);
  EXPECT_EQ(s.turn_number, 0);
  EXPECT_THROW(apply_action(kMap, s, Action::end_phase(Phase::kReinforce), rng),
               IllegalActionError);
  for (int i = 0; i < 3; ++i) {
    s = apply_action(kMap, s, Action::reinforce(id("Purple_E")), rng);
  }
  EXPECT_EQ(s.troops[id("Purple_E")], 10);
  s = apply_action(kMap, s, Action::end_phase(Phase::kReinforce), rng);
  EXPECT_EQ(s.phase, Phase::kAttack);
  s = apply_action(kMap, s, Action::end_phase(Phase::kAttack), rng);
  EXPECT_EQ(s.phase, Phase::kFreemove);
  s = apply_action(kMap, s, Action::end_phase(Phase::kFreemove), rng);
  EXPECT_EQ(s.phase, Phase::kReinforce);
  EXPECT_EQ(s.current_player, kEgo);
  EXPECT_EQ(s.turn_number, 1);
  EXPECT_FALSE(find_invariant_violation(s));
}

TEST(ReinforcementTest, Formula) {
  GameState s;
  s.phase = Phase::kReinforce;
  s.owner[id("Red_A")] = kEgo;
  s.owner[id("Green_A")] = kEgo;
  s.owner[id("Blue_A")] = kEgo;
  for (TerritoryId t : {id("Red_A"), id("Green_A"), id("Blue_A")}) {
    s.troops[t] = 1;
  }
  EXPECT_EQ(reinforcement_count(kMap, s, kEgo), 3);

  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    s.owner[t] = kEgo;
    s.troops[t] = 1;
  }
  EXPECT_EQ(reinforcement_count(kMap, s, kEgo), 7 + (2 + 3 + 3 + 2 + 2));

  // Full Red continent plus 9 more territories: 12 owned -> 4 + 2.
  GameState partial;
  for (TerritoryId t = 0; t < 12; ++t) {
    partial.owner[t] = kEgo;
    partial.troops[t] = 1;
  }
  EXPECT_EQ(reinforcement_count(kMap, partial, kEgo), 4 + 2 + 3);
}

TEST(ReinforcementTest, DeadPlayerGetsNothing) {
  GameState s = reference_after_draft();
  s.players_alive[kGrey] = false;
  EXPECT_EQ(reinforcement_count(kMap, s, kGrey), 0);
}

TEST(TerminalTest, Outcomes) {
  GameState s;
  s.phase = Phase::kReinforce;
  s.turn_number = 3;
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    s.owner[t] = kEgo;
    s.troops[t] = 1;
  }
  EXPECT_EQ(is_terminal(s), Outcome::kEgoWin);

  s.owner.fill(kGrey);
  EXPECT_EQ(is_terminal(s), Outcome::kEgoLoss);

  GameState draw = reference_after_draft();
  draw.phase = Phase::kReinforce;
  draw.turn_number = 100;
  draw.owner[id("Green_A")] = kEgo;
  draw.troops[id("Green_A")] = 1;
  draw.owner[id("Green_B")] = kEgo;
  draw.troops[id("Green_B")] = 1;
  ASSERT_EQ(draw.territories_owned(kEgo), 5);
  EXPECT_EQ(is_terminal(draw), Outcome::kDraw);

  EXPECT_EQ(is_terminal(reference_start()), Outcome::kOngoing);
}

TEST(HeuristicTest, DraftConcentratesByContinent) {
  // Three-territory toy: only Red_A, Green_A and Green_B are empty; grey
  // already holds 4 troops on Green_C and 1 on Red_B.
  GameState s;
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    s.owner[t] = kBlack;
    s.troops[t] = 1;
  }
  for (TerritoryId t : {id("Red_A"), id("Green_A"), id("Green_B")}) {
    s.owner[t] = kNoOwner;
    s.troops[t] = 0;
  }
  s.owner[id("Green_C")] = kGrey;
  s.troops[id("Green_C")] = 4;
  s.owner[id("Red_B")] = kGrey;
  s.troops[id("Red_B")] = 1;
  s.current_player = kGrey;
  s.troops_to_place[kGrey] = 3;
  Rng rng(0);
  // Green has 4 own troops vs Red's 1; Green_A precedes Green_B.
  EXPECT_EQ(opponent_heuristic(kMap, s, rng), Action::draft(id("Green_A")));

  // With Green emptied of grey troops, Red wins on concentration.
  s.owner[id("Green_C")] = kBlack;
  s.troops[id("Green_C")] = 1;
  EXPECT_EQ(opponent_heuristic(kMap, s, rng), Action::draft(id("Red_A")));

  // No concentration anywhere: lowest index.
  s.owner[id("Red_B")] = kBlack;
  EXPECT_EQ(opponent_heuristic(kMap, s, rng), Action::draft(id("Red_A")));
}

TEST(HeuristicTest, NoFavourableAttackEndsPhase) {
  GameState s = reference_after_draft();
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  s.current_player = kBlack;
  // Black's options: Purple_A (5) -> Purple_C (5), Purple_D (2), Purple_E
  // (7), Green_E (own); Green_E (2) -> Purple_A (own) and Green_*
  // (unowned). Make every target defended and every odds bad.
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (s.owner[t] == kNoOwner) {
      s.owner[t] = kEgo;
      s.troops[t] = 2;
    }
  }
  Rng rng(0);
  // 3v2 (0.372) and 2v2 are below 0.5, and 1v* too.
  EXPECT_EQ(opponent_heuristic(kMap, s, rng), Action::end_phase(Phase::kAttack));
}

TEST(HeuristicTest, TakesFavourableAttack) {
  GameState s = reference_after_draft();
  s.phase = Phase::kAttack;
  s.turn_number = 1;
  s.current_player = kBlack;
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (s.owner[t] == kNoOwner) {
      s.owner[t] = kEgo;
      s.troops[t] = 2;
    }
  }
  // Purple_D drops to 1 troop: Purple_A (5 troops, 3 dice) vs 1 die wins
  // a round with probability 855/1296.
  s.troops[id("Purple_D")] = 1;
  Rng rng(0);
  EXPECT_EQ(opponent_heuristic(kMap, s, rng),
            Action::attack(id("Purple_A"), id("Purple_D"), 4));
}

TEST(HeuristicTest, Deterministic) {
  Rng state_rng(17);
  for (int i = 0; i < 200; ++i) {
    const GameState s = testing::random_valid_state(state_rng);
    Rng a(99), b(99);
    EXPECT_EQ(opponent_heuristic(kMap, s, a), opponent_heuristic(kMap, s, b));
    Rng c(5);
    EXPECT_TRUE(is_legal(kMap, s, opponent_heuristic(kMap, s, c)));
  }
}

TEST(EngineProperties, RolloutsKeepInvariants) {
  Rng rng(1234);
  int states = 0;
  while (states < 10000) {
    const auto visited =
        testing::random_rollout(rng, 1 + static_cast<int>(rng.uniform(15)));
    for (const GameState& s : visited) {
      ASSERT_FALSE(find_invariant_violation(s)) << *find_invariant_violation(s);
    }
    states += static_cast<int>(visited.size());
  }
}

TEST(EngineProperties, LegalActionsAlwaysApply) {
  Rng rng(77);
  for (int i = 0; i < 10000; ++i) {
    const GameState s = testing::random_valid_state(rng);
    ASSERT_FALSE(find_invariant_violation(s));
    const auto actions = legal_actions(kMap, s);
    ASSERT_FALSE(actions.empty());
    // Every action is accepted by is_legal; a sample is applied in full.
    for (const Action& a : actions) ASSERT_TRUE(is_legal(kMap, s, a));
    for (int k = 0; k < 3; ++k) {
      const Action& a = rng.pick(actions);
      GameState next;
      ASSERT_NO_THROW(next = apply_action(kMap, s, a, rng))
          << describe(a, kMap);
      ASSERT_FALSE(find_invariant_violation(next));
    }
  }
}

TEST(EngineProperties, DeterministicReplay) {
  for (uint64_t seed : {1u, 2u, 3u}) {
    Rng a(seed), b(seed);
    EXPECT_EQ(testing::random_rollout(a, 4).back(),
              testing::random_rollout(b, 4).back());
  }
}

TEST(EngineProperties, EgoDraftsFourteen) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    GameState s = reference_start();
    while (s.phase == Phase::kDraft) {
      const auto actions = legal_actions(kMap, s);
      if (actions.back().is_phase_end() && actions.size() == 1) {
        EXPECT_EQ(s.total_troops(kEgo), 14);
      }
      s = apply_action(kMap, s, rng.pick(actions), rng);
    }
    EXPECT_EQ(s.phase, Phase::kReinforce);
  }
}

TEST(NewGameTest, OpponentsDraftFirst) {
  Rng rng(4);
  const GameState s = new_game(kMap, rng);
  EXPECT_EQ(s.current_player, kEgo);
  EXPECT_EQ(s.phase, Phase::kDraft);
  EXPECT_EQ(s.total_troops(kGrey), 14);
  EXPECT_EQ(s.total_troops(kBlack), 14);
  EXPECT_EQ(s.troops_to_place[kEgo], 14);
}

}  // namespace
}  // namespace stratintent::risk
