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

#include "stratintent/cli/simulate.h"

namespace stratintent::cli {

std::string_view policy_name(Policy policy) {
  return policy == Policy::kRandom ? "random" : "heuristic";
}

std::optional<Policy> parse_policy(std::string_view name) {
  if (name == "random") return Policy::kRandom;
  if (name == "heuristic") return Policy::kHeuristic;
  return std::nullopt;
}

EpisodeResult play_episode(const risk::GameMap& map, const risk::MapInitialization& init,
                           Policy policy, agent::RewardKind reward, Rng& rng,
                           const std::function<void(const risk::GameState&)>& visit) {
  EpisodeResult result;
  risk::GameState state = risk::load_initialization(init, map);
  while (true) {
    if (auto why = risk::find_invariant_violation(state)) {
      result.invariant_violation = *why;
      break;
    }
    result.outcome = risk::is_terminal(state);
    if (result.outcome != risk::Outcome::kOngoing) break;
    if (visit) visit(state);
    const risk::Action action = policy == Policy::kRandom
                                    ? rng.pick(risk::legal_actions(map, state))
                                    : risk::opponent_heuristic(map, state, rng);
    risk::GameState next = risk::apply_action(map, state, action, rng);
    result.reward += agent::reward(state, action, next, reward);
    ++result.steps;
    state = std::move(next);
  }
  result.turns = state.turn_number;
  return result;
}

SimulationStats simulate(const risk::GameMap& map,
                         const std::vector<risk::MapInitialization>& inits,
                         const SimulationOptions& options, const StateVisitor& visit) {
  const risk::MapInitialization* init = risk::find_initialization(inits, options.init_id);
  if (init == nullptr) {
    throw Error("unknown initialization id " + std::to_string(options.init_id));
  }
  SimulationStats stats;
  for (int e = 0; e < options.episodes; ++e) {
    Rng rng(Rng::derive(options.seed, static_cast<uint64_t>(e)));
    std::function<void(const risk::GameState&)> per_state;
    if (visit) per_state = [&](const risk::GameState& s) { visit(e, s); };
    const EpisodeResult r =
        play_episode(map, *init, options.policy, options.reward, rng, per_state);
    ++stats.episodes;
    stats.wins += r.outcome == risk::Outcome::kEgoWin;
    stats.losses += r.outcome == risk::Outcome::kEgoLoss;
    stats.draws += r.outcome == risk::Outcome::kDraw;
    stats.total_reward += r.reward;
    stats.total_turns += r.turns;
    stats.max_turns = std::max(stats.max_turns, r.turns);
    stats.invariant_violations += r.invariant_violation.has_value();
  }
  return stats;
}

}  // namespace stratintent::cli
