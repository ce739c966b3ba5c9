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

#ifndef STRATINTENT_CORPUS_GENERATE_H_
#define STRATINTENT_CORPUS_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stratintent/corpus/corpus.h"
#include "stratintent/corpus/templates.h"
#include "stratintent/error.h"
#include "stratintent/intent/intent.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"
#include "stratintent/risk/initialization.h"
#include "stratintent/rng.h"

namespace stratintent::corpus {

class InfeasibleIntentError : public Error {
 public:
  using Error::Error;
};

inline constexpr int kMinSampledConstraints = 3;

// Uniform goal values and 3..8 distinct constraints in the leading slots,
// resampled until the set is internally consistent.
intent::IntentSpec sample_intent(Rng& rng);

// Order-free identity of an intent: goals plus the sorted slot labels.
std::string intent_key(const intent::IntentSpec& spec);

// Ego selections on `start` satisfying every constraint of `spec`, or
// nullopt when none exists. The territory set is drawn by first picking a
// feasible set size uniformly, then a feasible set of that size uniformly;
// troops beyond one per territory are spread at random after meeting the
// concentration constraints.
std::optional<Selections> place_troops(const intent::IntentSpec& spec,
                                       const risk::GameState& start,
                                       const risk::GameMap& map, Rng& rng);

// One template sentence per constraint and per non-neutral goal, in random
// order.
std::string render_text(const intent::IntentSpec& spec,
                        const TemplateBank& bank, Rng& rng);

// Throws InfeasibleIntentError when no placement satisfies the intent.
CorpusExample realize(const intent::IntentSpec& spec,
                      const risk::MapInitialization& init,
                      const TemplateBank& bank, Rng& rng);

struct GenerateOptions {
  int count = 0;
  uint64_t seed = 0;
  std::vector<int> map_ids;  // empty: every builtin map
  int max_attempts_per_example = 100000;
};

// Example i draws from Rng(derive(seed, i)), resampling intents that are
// infeasible on the drawn map or repeat an earlier intent of the batch.
std::vector<CorpusExample> generate_corpus(const GenerateOptions& options,
                                           const TemplateBank& bank);

}  // namespace stratintent::corpus

#endif  // STRATINTENT_CORPUS_GENERATE_H_
