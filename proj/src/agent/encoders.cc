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

#include "stratintent/agent/encoders.h"

#include <algorithm>

namespace stratintent::agent {
namespace {

using risk::GameMap;
using risk::GameState;
using risk::kNumContinents;
using risk::kNumPlayers;
using risk::kNumTerritories;
using risk::Phase;
using risk::PlayerId;
using risk::TerritoryId;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Owner of a whole continent, or kNoOwner.
PlayerId continent_owner(const GameMap& map, const GameState& s, int c) {
  const auto& territories = map.continents()[c].territories;
  const PlayerId first = s.owner[territories.front()];
  for (TerritoryId t : territories) {
    if (s.owner[t] != first) return risk::kNoOwner;
  }
  return first;
}

void append_scalars(const GameState& s, bool normalized,
                    std::vector<double>& out) {
  const double owned = s.territories_owned(risk::kEgo);
  const double to_draft =
      s.phase == Phase::kDraft ? s.troops_to_place[risk::kEgo] : 0;
  const double to_reinforce =
      s.phase == Phase::kReinforce ? s.troops_to_place[risk::kEgo] : 0;
  const double alive =
      std::count(s.players_alive.begin(), s.players_alive.end(), true);
  const double turn = s.turn_number;
  const double ego_turn = s.current_player == risk::kEgo ? 1 : 0;
  const double phase = static_cast<int>(s.phase);
  if (!normalized) {
    out.insert(out.end(),
               {owned, to_draft, to_reinforce, alive, turn, ego_turn, phase});
    return;
  }
  out.insert(out.end(), {owned / kNumTerritories,
                         clamp01(to_draft / risk::kDraftTroops),
                         clamp01(to_reinforce / kTroopScale),
                         alive / kNumPlayers, clamp01(turn / kTurnScale),
                         ego_turn, phase / 3.0});
}

void encode_f54(const GameMap& map, const GameState& s, bool normalized,
                std::vector<double>& out) {
  for (PlayerId opponent : {risk::kGrey, risk::kBlack}) {
    for (TerritoryId t = 0; t < kNumTerritories; ++t) {
      double v = 0;
      if (s.owner[t] == risk::kEgo) v = s.troops[t];
      if (s.owner[t] == opponent) v = -s.troops[t];
      if (normalized) v = (std::clamp(v / kTroopScale, -1.0, 1.0) + 1) / 2;
      out.push_back(v);
    }
  }
  for (int c = 0; c < kNumContinents; ++c) {
    const double code = continent_owner(map, s, c) + 1;
    out.push_back(normalized ? code / 3.0 : code);
  }
  append_scalars(s, normalized, out);
}

void encode_f132(const GameMap& map, const GameState& s, bool normalized,
                 std::vector<double>& out) {
  for (PlayerId who : {risk::kEgo, risk::kGrey, risk::kBlack, risk::kNoOwner}) {
    for (TerritoryId t = 0; t < kNumTerritories; ++t) {
      out.push_back(s.owner[t] == who ? 1 : 0);
    }
  }
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    out.push_back(normalized ? clamp01(s.troops[t] / kTroopScale)
                             : s.troops[t]);
  }
  for (PlayerId who : {risk::kEgo, risk::kGrey, risk::kBlack, risk::kNoOwner}) {
    for (int c = 0; c < kNumContinents; ++c) {
      out.push_back(continent_owner(map, s, c) == who ? 1 : 0);
    }
  }
  append_scalars(s, normalized, out);
}

// Flags are computed from the rules directly rather than from
// legal_actions so the two can be cross-checked.
void append_edge_flags(const GameMap& map, const GameState& s,
                       std::vector<double>& out) {
  const PlayerId p = s.current_player;
  std::vector<double> attack(kEdgeSlots, 0.0);
  std::vector<double> move(kEdgeSlots, 0.0);
  const auto& edges = map.edges();
  const size_t slots = std::min<size_t>(edges.size(), kEdgeSlots);
  for (size_t i = 0; i < slots; ++i) {
    const auto& e = edges[i];
    if (s.owner[e.source] != p || s.troops[e.source] < 2) continue;
    if (s.phase == Phase::kAttack && s.owner[e.target] != p) attack[i] = 1;
    if (s.phase == Phase::kFreemove && s.owner[e.target] == p) move[i] = 1;
  }
  out.insert(out.end(), attack.begin(), attack.end());
  out.insert(out.end(), move.begin(), move.end());
}

}  // namespace

std::string_view encoder_name(EncoderId id) {
  switch (id) {
    case EncoderId::kF54:
      return "f54";
    case EncoderId::kF54N:
      return "f54n";
    case EncoderId::kF132:
      return "f132";
    case EncoderId::kF132N:
      return "f132n";
    case EncoderId::kF134N:
      return "f134n";
    case EncoderId::kF298N:
      return "f298n";
  }
  return "?";
}

std::optional<EncoderId> parse_encoder(std::string_view name) {
  for (EncoderId id : kAllEncoders) {
    if (encoder_name(id) == name) return id;
  }
  return std::nullopt;
}

int encoder_length(EncoderId id) {
  switch (id) {
    case EncoderId::kF54:
    case EncoderId::kF54N:
      return 54;
    case EncoderId::kF132:
    case EncoderId::kF132N:
      return 132;
    case EncoderId::kF134N:
      return 134;
    case EncoderId::kF298N:
      return 298;
  }
  return 0;
}

bool is_normalized(EncoderId id) {
  return id != EncoderId::kF54 && id != EncoderId::kF132;
}

EncodedState encode(const GameMap& map, const GameState& s, EncoderId id) {
  EncodedState out{id, {}};
  out.values.reserve(encoder_length(id));
  switch (id) {
    case EncoderId::kF54:
    case EncoderId::kF54N:
      encode_f54(map, s, is_normalized(id), out.values);
      break;
    case EncoderId::kF132:
    case EncoderId::kF132N:
      encode_f132(map, s, is_normalized(id), out.values);
      break;
    case EncoderId::kF134N: {
      encode_f132(map, s, true, out.values);
      out.values.push_back(static_cast<int>(s.phase) / 3.0);
      double spent = 0;
      if ((s.phase == Phase::kDraft || s.phase == Phase::kReinforce) &&
          s.phase_budget > 0) {
        spent = clamp01(
            double(s.phase_budget - s.troops_to_place[s.current_player]) /
            s.phase_budget);
      }
      out.values.push_back(spent);
      break;
    }
    case EncoderId::kF298N:
      encode_f132(map, s, true, out.values);
      append_edge_flags(map, s, out.values);
      break;
  }
  return out;
}

}  // namespace stratintent::agent
