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

#ifndef STRATINTENT_AGENT_ENCODERS_H_
#define STRATINTENT_AGENT_ENCODERS_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"

namespace stratintent::agent {

enum class EncoderId { kF54, kF54N, kF132, kF132N, kF134N, kF298N };

inline constexpr std::array<EncoderId, 6> kAllEncoders = {
    EncoderId::kF54,   EncoderId::kF54N,  EncoderId::kF132,
    EncoderId::kF132N, EncoderId::kF134N, EncoderId::kF298N};

// Edge slots per flag block of f298n. The canonical map has 81 directed
// edges; the remaining slots stay zero.
inline constexpr int kEdgeSlots = 83;

// Normalizing constants for the *n encoders.
inline constexpr double kTroopScale = 40.0;
inline constexpr double kTurnScale = 100.0;

// Stable ids: f54, f54n, f132, f132n, f134n, f298n.
std::string_view encoder_name(EncoderId id);
std::optional<EncoderId> parse_encoder(std::string_view name);
int encoder_length(EncoderId id);
bool is_normalized(EncoderId id);

struct EncodedState {
  EncoderId encoder_id;
  std::vector<double> values;
};

// Encodes `state` from the ego player's point of view.
//
// f54:  per opponent, 21 signed troop counts (+ego, -that opponent, 0
//       otherwise); 5 continent owner codes (0 none, 1 ego, 2 grey,
//       3 black); 7 game scalars.
// f132: 84 ownership one-hots (21 each for ego, grey, black, nobody);
//       21 troop counts; 20 continent-ownership one-hots (5 each for ego,
//       grey, black, nobody); 7 game scalars.
// f134n: f132n plus phase index and the spent fraction of the current
//       phase's troop budget.
// f298n: f132n plus attack-possible and freemove-possible flags per
//       canonical edge slot for the player to move.
//
// The 7 game scalars are: territories held, troops left to draft, troops
// left to reinforce, players alive, turn number, ego-to-move, phase index.
// Normalized variants map every component into [0, 1]; signed f54 troop
// counts are shifted as (v / 40 + 1) / 2.
EncodedState encode(const risk::GameMap& map, const risk::GameState& state,
                    EncoderId id);

}  // namespace stratintent::agent

#endif  // STRATINTENT_AGENT_ENCODERS_H_
