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

#include "stratintent/intent/intent.h"

#include <algorithm>
#include <charconv>
#include <map>

namespace stratintent::intent {

using risk::ContinentId;
using risk::GameMap;
using risk::GameState;
using risk::PlayerId;
using risk::TerritoryId;

namespace {

constexpr std::array<std::string_view, kNumGoals> kGoalDescriptions = {
    "Surround enemy territories",
    "Maximize number of countries occupied",
    "Keep our troops close together",
    "Maximize battles throughout the game",
    "Fortify borders for the continents you control",
    "Battle opposing players one at a time",
};

constexpr int kNumericBase =
    1 + kNumContinentClasses * risk::kNumContinents;  // label of C5:1

std::optional<int> parse_small_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool holds(const GameState& s, TerritoryId t, PlayerId p) {
  return s.owner[t] == p && s.troops[t] > 0;
}

int continents_with_troops(const GameMap& map, const GameState& s,
                           PlayerId p) {
  int n = 0;
  for (const auto& continent : map.continents()) {
    n += std::any_of(continent.territories.begin(), continent.territories.end(),
                     [&](TerritoryId t) { return holds(s, t, p); });
  }
  return n;
}

}  // namespace

int bucketize(int value) {
  if (value < kGoalMin || value > kGoalMax) {
    throw OutOfRangeError("goal value " + std::to_string(value) +
                          " outside [-100, 100]");
  }
  if (value == kGoalMax) return kNumBuckets - 1;
  return (value - kGoalMin) / 40;
}

int bucket_midpoint(int bucket) {
  if (bucket < 0 || bucket >= kNumBuckets) {
    throw OutOfRangeError("bucket " + std::to_string(bucket));
  }
  return kGoalMin + 20 + 40 * bucket;
}

std::string goal_key(int goal) { return "G" + std::to_string(goal + 1); }

std::optional<int> parse_goal_key(std::string_view key) {
  if (key.size() != 2 || key[0] != 'G') return std::nullopt;
  const int g = key[1] - '1';
  if (g < 0 || g >= kNumGoals) return std::nullopt;
  return g;
}

std::string_view goal_description(int goal) { return kGoalDescriptions.at(goal); }

std::string class_key(ConstraintClass cls) {
  return "C" + std::to_string(static_cast<int>(cls));
}

std::optional<ConstraintClass> parse_class_key(std::string_view key) {
  if (key.size() != 2 || key[0] != 'C') return std::nullopt;
  const int c = key[1] - '0';
  if (c < 1 || c > kNumConstraintClasses) return std::nullopt;
  return static_cast<ConstraintClass>(c);
}

bool takes_continent(ConstraintClass cls) {
  return static_cast<int>(cls) <= kNumContinentClasses;
}

int constraint_label(const Constraint& c) {
  const int cls = static_cast<int>(c.cls);
  if (cls < 1 || cls > kNumConstraintClasses) {
    throw OutOfRangeError("constraint class " + std::to_string(cls));
  }
  if (takes_continent(c.cls)) {
    if (c.value < 0 || c.value >= risk::kNumContinents) {
      throw OutOfRangeError("continent index " + std::to_string(c.value));
    }
    return 1 + (cls - 1) * risk::kNumContinents + c.value;
  }
  if (c.value < 1 || c.value > kMaxConstraintNumber) {
    throw OutOfRangeError(class_key(c.cls) + " value " +
                          std::to_string(c.value));
  }
  return kNumericBase + (cls - 1 - kNumContinentClasses) * kMaxConstraintNumber +
         (c.value - 1);
}

Constraint constraint_from_label(int label) {
  if (label <= kNullLabel || label >= kNumConstraintLabels) {
    throw OutOfRangeError("constraint label " + std::to_string(label));
  }
  if (label < kNumericBase) {
    const int i = label - 1;
    return {static_cast<ConstraintClass>(1 + i / risk::kNumContinents),
            i % risk::kNumContinents};
  }
  const int i = label - kNumericBase;
  return {static_cast<ConstraintClass>(1 + kNumContinentClasses +
                                       i / kMaxConstraintNumber),
          1 + i % kMaxConstraintNumber};
}

int slot_label(const std::optional<Constraint>& slot) {
  return slot ? constraint_label(*slot) : kNullLabel;
}

std::string format_constraint(const Constraint& c) {
  constraint_label(c);  // validates
  const std::string value =
      takes_continent(c.cls)
          ? std::string(risk::continent_names()[c.value])
          : std::to_string(c.value);
  return class_key(c.cls) + ":" + value;
}

Constraint parse_constraint(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw IntentFormatError("constraint '" + std::string(text) +
                            "' is not CLASS:VALUE");
  }
  const auto cls = parse_class_key(text.substr(0, colon));
  if (!cls) {
    throw IntentFormatError("unknown constraint class in '" +
                            std::string(text) + "'");
  }
  const std::string_view value = text.substr(colon + 1);
  Constraint c{*cls, 0};
  if (takes_continent(*cls)) {
    const auto& names = risk::continent_names();
    const auto it = std::find(names.begin(), names.end(), value);
    if (it == names.end()) {
      throw IntentFormatError("unknown continent '" + std::string(value) + "'");
    }
    c.value = static_cast<int>(it - names.begin());
  } else {
    const auto n = parse_small_int(value);
    if (!n || *n < 1 || *n > kMaxConstraintNumber) {
      throw IntentFormatError("bad count '" + std::string(value) + "'");
    }
    c.value = *n;
  }
  return c;
}

std::string constraint_description(const Constraint& c) {
  const std::string v = takes_continent(c.cls)
                            ? std::string(risk::continent_names()[c.value])
                            : std::to_string(c.value);
  switch (c.cls) {
    case ConstraintClass::kC1:
      return "I must have troops on " + v;
    case ConstraintClass::kC2:
      return "I must not have troops on " + v;
    case ConstraintClass::kC3:
      return "I must be able to access " + v + " in one move";
    case ConstraintClass::kC4:
      return "I need to protect the borders of " + v;
    case ConstraintClass::kC5:
      return "I need a total of at least " + v + " troops to defend a continent";
    case ConstraintClass::kC6:
      return "I must have at least " + v + " countries";
    case ConstraintClass::kC7:
      return "I must have troops on at least " + v + " continents";
    case ConstraintClass::kC8:
      return "I must place at least " + v +
             " troops to effectively defend a country";
    case ConstraintClass::kC9:
      return "I must have troops on at most " + v + " continents";
  }
  return "?";
}

std::vector<Constraint> IntentSpec::active_constraints() const {
  std::vector<Constraint> out;
  for (const auto& slot : constraints) {
    if (slot) out.push_back(*slot);
  }
  return out;
}

std::optional<std::string> find_spec_violation(const IntentSpec& spec) {
  for (int g = 0; g < kNumGoals; ++g) {
    if (spec.goals[g] < kGoalMin || spec.goals[g] > kGoalMax) {
      return goal_key(g) + " value " + std::to_string(spec.goals[g]) +
             " out of range";
    }
  }
  for (int i = 0; i < kNumSlots; ++i) {
    if (!spec.constraints[i]) continue;
    try {
      constraint_label(*spec.constraints[i]);
    } catch (const OutOfRangeError& e) {
      return "slot " + std::to_string(i) + ": " + e.what();
    }
  }
  return std::nullopt;
}

bool evaluate_constraint(const GameMap& map, const GameState& state,
                         const Constraint& c, PlayerId player) {
  auto on_continent = [&](ContinentId k) {
    const auto& ts = map.continents()[k].territories;
    return std::any_of(ts.begin(), ts.end(),
                       [&](TerritoryId t) { return holds(state, t, player); });
  };
  switch (c.cls) {
    case ConstraintClass::kC1:
      return on_continent(c.value);
    case ConstraintClass::kC2:
      return !on_continent(c.value);
    case ConstraintClass::kC3: {
      if (on_continent(c.value)) return true;
      for (const auto& e : map.edges()) {
        if (holds(state, e.source, player) &&
            map.continent_of(e.target) == c.value) {
          return true;
        }
      }
      return false;
    }
    case ConstraintClass::kC4: {
      const auto& border = map.border_territories(c.value);
      return std::all_of(border.begin(), border.end(), [&](TerritoryId t) {
        return holds(state, t, player);
      });
    }
    case ConstraintClass::kC5:
      for (const auto& continent : map.continents()) {
        int total = 0;
        for (TerritoryId t : continent.territories) {
          if (holds(state, t, player)) total += state.troops[t];
        }
        if (total >= c.value) return true;
      }
      return false;
    case ConstraintClass::kC6: {
      int owned = 0;
      for (int t = 0; t < risk::kNumTerritories; ++t) {
        owned += holds(state, t, player);
      }
      return owned >= c.value;
    }
    case ConstraintClass::kC7:
      return continents_with_troops(map, state, player) >= c.value;
    case ConstraintClass::kC8:
      for (int t = 0; t < risk::kNumTerritories; ++t) {
        if (holds(state, t, player) && state.troops[t] >= c.value) return true;
      }
      return false;
    case ConstraintClass::kC9:
      return continents_with_troops(map, state, player) <= c.value;
  }
  return false;
}

ConflictReport check_consistency(const IntentSpec& spec) {
  ConflictReport report;
  for (int i = 0; i < kNumSlots; ++i) {
    if (!spec.constraints[i]) continue;
    const Constraint& a = *spec.constraints[i];
    for (int j = i + 1; j < kNumSlots; ++j) {
      if (!spec.constraints[j]) continue;
      const Constraint& b = *spec.constraints[j];
      const std::string pair = format_constraint(a) + " / " + format_constraint(b);
      if (a == b) {
        report.conflicts.push_back({i, j, "duplicate", pair + " repeated"});
        continue;
      }
      auto is = [](const Constraint& c, ConstraintClass k) { return c.cls == k; };
      const bool c7_c9 = (is(a, ConstraintClass::kC7) &&
                          is(b, ConstraintClass::kC9) && a.value > b.value) ||
                         (is(b, ConstraintClass::kC7) &&
                          is(a, ConstraintClass::kC9) && b.value > a.value);
      if (c7_c9) {
        report.conflicts.push_back(
            {i, j, "continent-count", pair + ": minimum exceeds maximum"});
      }
      const bool c1_c2 = a.value == b.value &&
                         ((is(a, ConstraintClass::kC1) &&
                           is(b, ConstraintClass::kC2)) ||
                          (is(a, ConstraintClass::kC2) &&
                           is(b, ConstraintClass::kC1)));
      if (c1_c2) {
        report.conflicts.push_back(
            {i, j, "presence", pair + ": required and forbidden"});
      }
    }
  }
  return report;
}

ConflictReport check_against_selections(const GameMap& map,
                                        const IntentSpec& spec,
                                        const GameState& state,
                                        PlayerId player) {
  ConflictReport report;
  for (int i = 0; i < kNumSlots; ++i) {
    const auto& slot = spec.constraints[i];
    if (slot && !evaluate_constraint(map, state, *slot, player)) {
      report.conflicts.push_back({i, -1, "unsatisfied",
                                  format_constraint(*slot) +
                                      " does not hold for the selections"});
    }
  }
  return report;
}

Score score_prediction(const IntentSpec& pred, const IntentSpec& gold) {
  Score score;
  for (int g = 0; g < kNumGoals; ++g) {
    score.goals_correct += bucketize(pred.goals[g]) == bucketize(gold.goals[g]);
  }
  // Slots only match on equal labels, so the bipartite graph splits into
  // complete components per label and the maximum matching is the sum of
  // per-label minimum counts.
  std::map<int, int> pred_counts, gold_counts;
  for (const auto& slot : pred.constraints) ++pred_counts[slot_label(slot)];
  for (const auto& slot : gold.constraints) ++gold_counts[slot_label(slot)];
  for (const auto& [label, n] : pred_counts) {
    const auto it = gold_counts.find(label);
    if (it != gold_counts.end()) score.constraints_correct += std::min(n, it->second);
  }
  return score;
}

}  // namespace stratintent::intent
