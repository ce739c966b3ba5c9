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

#include "stratintent/extract/features.h"

#include <cctype>
#include <map>

namespace stratintent::extract {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || c == '_') {
      cur += static_cast<char>(std::tolower(c));
    } else if (!cur.empty()) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

uint64_t fnv1a(std::string_view bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

FeatureVector featurize(std::string_view text, const corpus::Selections& selections,
                        int map_id, const FeatureConfig& config) {
  if (config.text_dim < 1) throw Error("text_dim must be positive");
  std::map<int, double> counts;
  const auto tokens = tokenize(text);
  const auto dim = static_cast<uint64_t>(config.text_dim);
  for (size_t i = 0; i < tokens.size(); ++i) {
    counts[static_cast<int>(fnv1a("u " + tokens[i]) % dim)] += 1.0;
    if (i + 1 < tokens.size()) {
      counts[static_cast<int>(fnv1a("b " + tokens[i] + " " + tokens[i + 1]) % dim)] += 1.0;
    }
  }
  FeatureVector fv;
  fv.dimension = config.dimension();
  fv.entries.assign(counts.begin(), counts.end());

  corpus::CorpusExample board;
  board.map_id = map_id;
  board.selections = selections;
  const risk::GameState state = corpus::selections_state(board);
  const int troop_base = config.text_dim;
  const int owner_base = troop_base + risk::kNumTerritories;
  for (int t = 0; t < risk::kNumTerritories; ++t) {
    if (state.owner[t] == risk::kEgo) {
      fv.entries.emplace_back(troop_base + t,
                              state.troops[t] / static_cast<double>(risk::kDraftTroops));
    }
  }
  for (int t = 0; t < risk::kNumTerritories; ++t) {
    if (state.owner[t] != risk::kNoOwner) {
      fv.entries.emplace_back(owner_base + 3 * t + state.owner[t], 1.0);
    }
  }
  return fv;
}

FeatureVector featurize(const corpus::CorpusExample& example,
                        const FeatureConfig& config) {
  return featurize(example.text, example.selections, example.map_id, config);
}

}  // namespace stratintent::extract
