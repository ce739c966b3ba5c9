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

#ifndef STRATINTENT_CLI_SIMULATE_H_
#define STRATINTENT_CLI_SIMULATE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "stratintent/agent/rewards.h"
#include "stratintent/risk/engine.h"
#include "stratintent/risk/initialization.h"

namespace stratintent::cli {

enum class Policy { kRandom, kHeuristic };

std::string_view policy_name(Policy policy);
std::optional<Policy> parse_policy(std::string_view name);

struct SimulationOptions {
  int init_id = 1;
  int episodes = 100;
  Policy policy = Policy::kRandom;
  agent::RewardKind reward = agent::RewardKind::kSparse;
  uint64_t seed = 0;
};

struct EpisodeResult {
  risk::Outcome outcome = risk::Outcome::kOngoing;
  double reward = 0.0;
  int turns = 0;
  long steps = 0;  // ego actions taken
  std::optional<std::string> invariant_violation;
};

struct SimulationStats {
  int episodes = 0;
  int wins = 0;
  int losses = 0;
  int draws = 0;
  double total_reward = 0.0;
  long total_turns = 0;
  int max_turns = 0;
  int invariant_violations = 0;
  double mean_reward() const { return episodes ? total_reward / episodes : 0.0; }
  double mean_turns() const {
    return episodes ? static_cast<double>(total_turns) / episodes : 0.0;
  }
};

// Called with every state in which the ego player is to move.
using StateVisitor = std::function<void(int episode, const risk::GameState&)>;

// Plays one game from the initialization with the ego seat under `policy`.
// The invariant check runs on every visited state; a violation ends the
// episode.
EpisodeResult play_episode(const risk::GameMap& map,
                           const risk::MapInitialization& init, Policy policy,
                           agent::RewardKind reward, Rng& rng,
                           const std::function<void(const risk::GameState&)>&
                               visit = nullptr);

// Episode i uses Rng(derive(seed, i)). Throws Error on an unknown init id.
SimulationStats simulate(const risk::GameMap& map,
                         const std::vector<risk::MapInitialization>& inits,
                         const SimulationOptions& options,
                         const StateVisitor& visit = nullptr);

}  // namespace stratintent::cli

#endif  // STRATINTENT_CLI_SIMULATE_H_
