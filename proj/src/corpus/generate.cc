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

#include "stratintent/corpus/generate.h"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>

namespace stratintent::corpus {

using intent::Constraint;
using intent::ConstraintClass;
using intent::IntentSpec;
using risk::GameMap;
using risk::GameState;
using risk::kNumContinents;
using risk::kNumTerritories;
using risk::TerritoryId;

namespace {

using Mask = uint32_t;

Mask bit(TerritoryId t) { return Mask{1} << t; }

struct MapMasks {
  std::array<Mask, kNumContinents> continent{};
  std::array<Mask, kNumContinents> border{};
  // Territories with an edge into the continent.
  std::array<Mask, kNumContinents> feeds{};

  explicit MapMasks(const GameMap& map) {
    for (int k = 0; k < kNumContinents; ++k) {
      for (TerritoryId t : map.continents()[k].territories) continent[k] |= bit(t);
      for (TerritoryId t : map.border_territories(k)) border[k] |= bit(t);
    }
    for (const auto& e : map.edges()) {
      feeds[map.continent_of(e.target)] |= bit(e.source);
    }
  }
};

// Everything a placement must satisfy, folded from the constraint list.
struct Requirements {
  Mask must_touch_each[kNumContinents] = {};  // C1 / C3 targets
  int n_touch = 0;
  Mask forbidden = 0;      // C2
  Mask must_own = 0;       // C4
  int min_territories = 1; // C6
  int min_continents = 0;  // C7
  int max_continents = kNumContinents;  // C9
  int min_on_continent = 0;  // C5
  int min_on_territory = 0;  // C8
};

Requirements fold(const IntentSpec& spec, const MapMasks& m) {
  Requirements r;
  for (const Constraint& c : spec.active_constraints()) {
    switch (c.cls) {
      case ConstraintClass::kC1:
        r.must_touch_each[r.n_touch++] = m.continent[c.value];
        break;
      case ConstraintClass::kC2:
        r.forbidden |= m.continent[c.value];
        break;
      case ConstraintClass::kC3:
        r.must_touch_each[r.n_touch++] = m.continent[c.value] | m.feeds[c.value];
        break;
      case ConstraintClass::kC4:
        r.must_own |= m.border[c.value];
        break;
      case ConstraintClass::kC5:
        r.min_on_continent = std::max(r.min_on_continent, c.value);
        break;
      case ConstraintClass::kC6:
        r.min_territories = std::max(r.min_territories, c.value);
        break;
      case ConstraintClass::kC7:
        r.min_continents = std::max(r.min_continents, c.value);
        break;
      case ConstraintClass::kC8:
        r.min_on_territory = std::max(r.min_on_territory, c.value);
        break;
      case ConstraintClass::kC9:
        r.max_continents = std::min(r.max_continents, c.value);
        break;
    }
  }
  return r;
}

// Continents k on which all C5 troops could sit given territory set T.
Mask c5_continents(Mask T, const Requirements& r, const MapMasks& m) {
  Mask ok = 0;
  const int size = std::popcount(T);
  for (int k = 0; k < kNumContinents; ++k) {
    const int on_k = std::popcount(T & m.continent[k]);
    if (on_k == 0) continue;
    if (risk::kDraftTroops - (size - on_k) >= r.min_on_continent) ok |= 1u << k;
  }
  return ok;
}

bool feasible(Mask T, const Requirements& r, const MapMasks& m) {
  const int size = std::popcount(T);
  if (size < r.min_territories || size > risk::kDraftTroops) return false;
  if (T & r.forbidden) return false;
  if ((T & r.must_own) != r.must_own) return false;
  for (int i = 0; i < r.n_touch; ++i) {
    if (!(T & r.must_touch_each[i])) return false;
  }
  int touched = 0;
  for (int k = 0; k < kNumContinents; ++k) touched += (T & m.continent[k]) != 0;
  if (touched < r.min_continents || touched > r.max_continents) return false;
  if (risk::kDraftTroops - size + 1 < r.min_on_territory) return false;
  if (r.min_on_continent > 0 && c5_continents(T, r, m) == 0) return false;
  return true;
}

std::vector<TerritoryId> members(Mask T) {
  std::vector<TerritoryId> out;
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (T & bit(t)) out.push_back(t);
  }
  return out;
}

}  // namespace

IntentSpec sample_intent(Rng& rng) {
  std::vector<int> labels(intent::kNumConstraintLabels - 1);
  std::iota(labels.begin(), labels.end(), 1);
  while (true) {
    IntentSpec spec;
    for (int& g : spec.goals) g = rng.uniform_int(intent::kGoalMin, intent::kGoalMax);
    const int n = rng.uniform_int(kMinSampledConstraints, intent::kNumSlots);
    // Partial Fisher-Yates: the first n entries become a uniform n-subset
    // in uniform order.
    for (int i = 0; i < n; ++i) {
      const int j = i + static_cast<int>(rng.uniform(labels.size() - i));
      std::swap(labels[i], labels[j]);
      spec.constraints[i] = intent::constraint_from_label(labels[i]);
    }
    if (intent::check_consistency(spec).empty()) return spec;
  }
}

std::string intent_key(const IntentSpec& spec) {
  std::vector<int> labels;
  for (const auto& slot : spec.constraints) labels.push_back(intent::slot_label(slot));
  std::sort(labels.begin(), labels.end());
  std::string key;
  for (int g : spec.goals) key += std::to_string(g) + ",";
  key += "|";
  for (int l : labels) key += std::to_string(l) + ",";
  return key;
}

std::optional<Selections> place_troops(const IntentSpec& spec,
                                       const GameState& start,
                                       const GameMap& map, Rng& rng) {
  const MapMasks masks(map);
  const Requirements req = fold(spec, masks);
  std::vector<TerritoryId> open;
  for (TerritoryId t = 0; t < kNumTerritories; ++t) {
    if (start.owner[t] == risk::kNoOwner) open.push_back(t);
  }
  Mask open_mask = 0;
  for (TerritoryId t : open) open_mask |= bit(t);
  if ((req.must_own & open_mask) != req.must_own) return std::nullopt;

  std::array<std::vector<Mask>, risk::kDraftTroops + 1> by_size;
  // subset[s] extends subset[s without its lowest bit] by one territory.
  std::vector<Mask> subset(size_t{1} << open.size());
  for (size_t s = 1; s < subset.size(); ++s) {
    const Mask T = subset[s & (s - 1)] | bit(open[std::countr_zero(s)]);
    subset[s] = T;
    if (feasible(T, req, masks)) by_size[std::popcount(T)].push_back(T);
  }
  std::vector<int> sizes;
  for (int n = 1; n <= risk::kDraftTroops; ++n) {
    if (!by_size[n].empty()) sizes.push_back(n);
  }
  if (sizes.empty()) return std::nullopt;
  const Mask T = rng.pick(by_size[rng.pick(sizes)]);

  const std::vector<TerritoryId> chosen = members(T);
  Selections sel;
  for (TerritoryId t : chosen) sel[t] = 1;
  int spare = risk::kDraftTroops - static_cast<int>(chosen.size());

  // Meet C5 and C8 by stacking on one territory, inside a qualifying
  // continent when C5 is present.
  if (req.min_on_continent > 0 || req.min_on_territory > 1) {
    std::vector<TerritoryId> hosts = chosen;
    if (req.min_on_continent > 0) {
      const Mask ok = c5_continents(T, req, masks);
      std::vector<int> ks;
      for (int k = 0; k < kNumContinents; ++k) {
        if (ok & (1u << k)) ks.push_back(k);
      }
      hosts = members(T & masks.continent[rng.pick(ks)]);
    }
    const TerritoryId host = rng.pick(hosts);
    int on_host_continent = 0;
    for (TerritoryId t : chosen) {
      on_host_continent += map.continent_of(t) == map.continent_of(host);
    }
    const int extra = std::max({req.min_on_territory - 1,
                                req.min_on_continent - on_host_continent, 0});
    sel[host] += extra;
    spare -= extra;
  }
  for (; spare > 0; --spare) ++sel[rng.pick(chosen)];
  return sel;
}

std::string render_text(const IntentSpec& spec, const TemplateBank& bank,
                        Rng& rng) {
  std::vector<std::string> sentences;
  for (const Constraint& c : spec.active_constraints()) {
    sentences.push_back(render_constraint(rng.pick(bank.for_class(c.cls)), c));
  }
  for (int g = 0; g < intent::kNumGoals; ++g) {
    const int b = intent::bucketize(spec.goals[g]);
    if (b != intent::kNeutralBucket) sentences.push_back(rng.pick(bank.goals[g][b]));
  }
  rng.shuffle(sentences);
  std::string text;
  for (const auto& s : sentences) {
    if (!text.empty()) text += ' ';
    text += s;
  }
  return text;
}

CorpusExample realize(const IntentSpec& spec,
                      const risk::MapInitialization& init,
                      const TemplateBank& bank, Rng& rng) {
  const GameMap& map = risk::canonical_map();
  const GameState start = risk::load_initialization(init, map);
  auto selections = place_troops(spec, start, map, rng);
  if (!selections) {
    throw InfeasibleIntentError("no 14-troop placement on map " +
                                std::to_string(init.id) +
                                " satisfies the constraints");
  }
  CorpusExample ex;
  ex.map_id = init.id;
  ex.selections = std::move(*selections);
  ex.intent = spec;
  ex.source = Source::kSynthetic;
  ex.text = render_text(spec, bank, rng);
  // A spec with no constraints and only neutral goals has nothing to say.
  if (ex.text.empty()) ex.text = "I have no particular plan.";
  return ex;
}

std::vector<CorpusExample> generate_corpus(const GenerateOptions& options,
                                           const TemplateBank& bank) {
  const auto& inits = risk::builtin_initializations();
  std::vector<int> map_ids = options.map_ids;
  if (map_ids.empty()) {
    for (const auto& init : inits) map_ids.push_back(init.id);
  }
  for (int id : map_ids) {
    if (risk::find_initialization(inits, id) == nullptr) {
      throw Error("unknown map id " + std::to_string(id));
    }
  }
  std::vector<CorpusExample> out;
  out.reserve(options.count);
  std::set<std::string> seen;
  for (int i = 0; i < options.count; ++i) {
    Rng rng(Rng::derive(options.seed, static_cast<uint64_t>(i)));
    bool done = false;
    for (int attempt = 0; attempt < options.max_attempts_per_example && !done;
         ++attempt) {
      const IntentSpec spec = sample_intent(rng);
      const std::string key = intent_key(spec);
      if (seen.count(key)) continue;
      const int map_id = rng.pick(map_ids);
      try {
        out.push_back(realize(spec, *risk::find_initialization(inits, map_id),
                              bank, rng));
      } catch (const InfeasibleIntentError&) {
        continue;
      }
      seen.insert(key);
      done = true;
    }
    if (!done) {
      throw Error("example " + std::to_string(i) + ": no feasible intent after " +
                  std::to_string(options.max_attempts_per_example) + " attempts");
    }
  }
  return out;
}

}  // namespace stratintent::corpus
