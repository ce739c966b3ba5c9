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

#ifndef STRATINTENT_EXTRACT_FEATURES_H_
#define STRATINTENT_EXTRACT_FEATURES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stratintent/corpus/corpus.h"

namespace stratintent::extract {

inline constexpr int kDefaultTextDim = 2048;
// 21 ego troop counts / 14, then (ego, grey, black) ownership per territory.
inline constexpr int kTroopFeatures = risk::kNumTerritories * 4;

struct FeatureConfig {
  int text_dim = kDefaultTextDim;

  int dimension() const { return text_dim + kTroopFeatures; }
  bool operator==(const FeatureConfig&) const = default;
};

// Sparse vector: (index, value) pairs with strictly increasing indices.
struct FeatureVector {
  int dimension = 0;
  std::vector<std::pair<int, double>> entries;

  bool operator==(const FeatureVector&) const = default;
};

// Lowercased runs of [a-z0-9_].
std::vector<std::string> tokenize(std::string_view text);

uint64_t fnv1a(std::string_view bytes);

// Hashed unigram and bigram counts, then troop features for the board
// the selections produce on map `map_id`.
FeatureVector featurize(std::string_view text, const corpus::Selections& selections,
                        int map_id, const FeatureConfig& config);
FeatureVector featurize(const corpus::CorpusExample& example,
                        const FeatureConfig& config);

}  // namespace stratintent::extract

#endif  // STRATINTENT_EXTRACT_FEATURES_H_
