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

#ifndef STRATINTENT_RISK_COMBAT_H_
#define STRATINTENT_RISK_COMBAT_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/rng.h"

namespace stratintent::risk {

class InvalidTroopCountError : public Error {
 public:
  using Error::Error;
};

struct CombatRound {
  int attacker_dice = 0;
  int defender_dice = 0;
  int attacker_losses = 0;
  int defender_losses = 0;
};

struct BattleOutcome {
  int attacker_losses = 0;
  int defender_losses = 0;
  bool conquered = false;
  int troops_moved = 0;
  std::vector<CombatRound> rounds;
};

// Dice counts for one round: the attacker keeps one troop at home.
inline int attacker_dice_for(int att_troops) {
  return std::min(3, att_troops - 1);
}
inline int defender_dice_for(int def_troops) { return std::min(2, def_troops); }

// One round: both sides roll, sort descending, compare pairwise, defender
// wins ties. `roll_die` must return a value in 1..6.
template <typename RollDie>
CombatRound resolve_round(int attacker_dice, int defender_dice,
                          RollDie&& roll_die) {
  int att[3];
  int def[2];
  for (int i = 0; i < attacker_dice; ++i) att[i] = roll_die();
  for (int i = 0; i < defender_dice; ++i) def[i] = roll_die();
  std::sort(att, att + attacker_dice, std::greater<>());
  std::sort(def, def + defender_dice, std::greater<>());
  CombatRound round{attacker_dice, defender_dice, 0, 0};
  const int comparisons = std::min(attacker_dice, defender_dice);
  for (int i = 0; i < comparisons; ++i) {
    if (att[i] > def[i]) {
      ++round.defender_losses;
    } else {
      ++round.attacker_losses;
    }
  }
  return round;
}

// Runs combat rounds until the attacker is down to its garrison troop or
// the defender is wiped out. On conquest `tr` troops move in, clamped so
// one survivor stays home. Attacker dice are rolled before defender dice
// within each round.
template <typename RollDie>
BattleOutcome resolve_battle(int att_troops, int def_troops, int tr,
                             RollDie&& roll_die) {
  if (att_troops < 2 || def_troops < 1 || tr < 1 || tr > att_troops - 1) {
    throw InvalidTroopCountError(
        "battle needs att >= 2, def >= 1, 1 <= tr <= att - 1 (got att=" +
        std::to_string(att_troops) + ", def=" + std::to_string(def_troops) +
        ", tr=" + std::to_string(tr) + ")");
  }
  BattleOutcome outcome;
  int att = att_troops;
  int def = def_troops;
  while (att >= 2 && def >= 1) {
    const CombatRound round = resolve_round(
        attacker_dice_for(att), defender_dice_for(def), roll_die);
    att -= round.attacker_losses;
    def -= round.defender_losses;
    outcome.attacker_losses += round.attacker_losses;
    outcome.defender_losses += round.defender_losses;
    outcome.rounds.push_back(round);
  }
  outcome.conquered = (def == 0);
  if (outcome.conquered) outcome.troops_moved = std::min(tr, att - 1);
  return outcome;
}

inline BattleOutcome resolve_battle(int att_troops, int def_troops, int tr,
                                    Rng& rng) {
  return resolve_battle(att_troops, def_troops, tr,
                        [&rng] { return rng.roll_die(); });
}

// Exact probability of one (attacker_losses, defender_losses) outcome,
// as count / total over all equally likely ordered rolls.
struct RoundProbability {
  int attacker_losses = 0;
  int defender_losses = 0;
  int64_t count = 0;
  int64_t total = 0;

  double probability() const {
    return static_cast<double>(count) / static_cast<double>(total);
  }
};

// Enumerates all 6^(att_dice + def_dice) ordered rolls. Outcomes are
// sorted by attacker losses ascending. Throws InvalidTroopCountError for
// dice counts outside 1..3 / 1..2.
std::vector<RoundProbability> combat_round_distribution(int att_dice,
                                                        int def_dice);

// Probability that the defender loses strictly more troops than the
// attacker in a single round.
double single_round_win_probability(int att_dice, int def_dice);

}  // namespace stratintent::risk

#endif  // STRATINTENT_RISK_COMBAT_H_
