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

#include "stratintent/risk/combat.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <utility>

namespace stratintent::risk {

std::vector<RoundProbability> combat_round_distribution(int att_dice,
                                                        int def_dice) {
  if (att_dice < 1 || att_dice > 3 || def_dice < 1 || def_dice > 2) {
    throw InvalidTroopCountError("dice counts must be 1..3 vs 1..2");
  }
  const int dice = att_dice + def_dice;
  int64_t total = 1;
  for (int i = 0; i < dice; ++i) total *= 6;

  std::map<std::pair<int, int>, int64_t> counts;
  std::array<int, 5> faces{};
  for (int64_t code = 0; code < total; ++code) {
    int64_t rest = code;
    for (int i = 0; i < dice; ++i) {
      faces[i] = static_cast<int>(rest % 6) + 1;
      rest /= 6;
    }
    // Kept independent of resolve_round: this table is the oracle the
    // sampler is tested against.
    std::array<int, 3> att{};
    std::array<int, 2> def{};
    std::copy(faces.begin(), faces.begin() + att_dice, att.begin());
    std::copy(faces.begin() + att_dice, faces.begin() + dice, def.begin());
    std::sort(att.begin(), att.begin() + att_dice, std::greater<>());
    std::sort(def.begin(), def.begin() + def_dice, std::greater<>());
    int att_losses = 0;
    int def_losses = 0;
    for (int i = 0; i < std::min(att_dice, def_dice); ++i) {
      (def[i] >= att[i] ? att_losses : def_losses) += 1;
    }
    ++counts[{att_losses, def_losses}];
  }
  std::vector<RoundProbability> table;
  for (const auto& [losses, count] : counts) {
    table.push_back({losses.first, losses.second, count, total});
  }
  return table;
}

double single_round_win_probability(int att_dice, int def_dice) {
  static const auto kTable = [] {
    std::array<std::array<double, 3>, 4> table{};
    for (int a = 1; a <= 3; ++a) {
      for (int d = 1; d <= 2; ++d) {
        for (const RoundProbability& p : combat_round_distribution(a, d)) {
          if (p.defender_losses > p.attacker_losses) {
            table[a][d] += p.probability();
          }
        }
      }
    }
    return table;
  }();
  if (att_dice < 1 || att_dice > 3 || def_dice < 1 || def_dice > 2) {
    throw InvalidTroopCountError("dice counts must be 1..3 vs 1..2");
  }
  return kTable[att_dice][def_dice];
}

}  // namespace stratintent::risk
