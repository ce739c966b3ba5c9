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

#ifndef STRATINTENT_INTENT_INTENT_H_
#define STRATINTENT_INTENT_INTENT_H_

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/risk/game_map.h"
#include "stratintent/risk/game_state.h"

namespace stratintent::intent {

inline constexpr int kNumGoals = 6;
inline constexpr int kNumBuckets = 5;
inline constexpr int kGoalMin = -100;
inline constexpr int kGoalMax = 100;
inline constexpr int kNeutralBucket = 2;

inline constexpr int kNumSlots = 8;
inline constexpr int kNumConstraintClasses = 9;
inline constexpr int kNumContinentClasses = 4;  // C1..C4
inline constexpr int kMaxConstraintNumber = 14;
// Null + 4 continent classes x 5 continents + 5 numeric classes x 14.
inline constexpr int kNullLabel = 0;
inline constexpr int kNumConstraintLabels =
    1 + kNumContinentClasses * risk::kNumContinents +
    (kNumConstraintClasses - kNumContinentClasses) * kMaxConstraintNumber;

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class IntentFormatError : public Error {
 public:
  using Error::Error;
};

// Maps [-100,100] onto five equal-width buckets; 100 falls in bucket 4.
int bucketize(int value);
// Representative value reported for a predicted bucket.
int bucket_midpoint(int bucket);

std::string goal_key(int goal);  // "G1".."G6" for goal index 0..5.
std::optional<int> parse_goal_key(std::string_view key);
std::string_view goal_description(int goal);

enum class ConstraintClass {
  kC1 = 1,  // troops on continent
  kC2,      // no troops on continent
  kC3,      // can reach continent in one move
  kC4,      // protect the borders of continent
  kC5,      // at least n troops on one continent
  kC6,      // at least n territories
  kC7,      // troops on at least n continents
  kC8,      // at least n troops on one territory
  kC9,      // troops on at most n continents
};

std::string class_key(ConstraintClass cls);  // "C1".."C9"
std::optional<ConstraintClass> parse_class_key(std::string_view key);
bool takes_continent(ConstraintClass cls);

struct Constraint {
  ConstraintClass cls = ConstraintClass::kC1;
  // Continent index for C1..C4, count 1..14 for C5..C9.
  int value = 0;

  auto operator<=>(const Constraint&) const = default;
};

// Dense label in 1..90; kNullLabel is reserved for an empty slot.
int constraint_label(const Constraint& c);
Constraint constraint_from_label(int label);
int slot_label(const std::optional<Constraint>& slot);

// "C1:Purple", "C8:7".
std::string format_constraint(const Constraint& c);
Constraint parse_constraint(std::string_view text);
std::string constraint_description(const Constraint& c);

struct IntentSpec {
  std::array<int, kNumGoals> goals{};
  std::array<std::optional<Constraint>, kNumSlots> constraints;

  std::vector<Constraint> active_constraints() const;
  bool operator==(const IntentSpec&) const = default;
};

// First structural problem (goal out of range, constraint value outside its
// class domain), or nullopt.
std::optional<std::string> find_spec_violation(const IntentSpec& spec);

struct Conflict {
  int slot_a = -1;
  int slot_b = -1;  // -1 when the conflict involves a single slot
  std::string rule;
  std::string message;
};

struct ConflictReport {
  std::vector<Conflict> conflicts;
  bool empty() const { return conflicts.empty(); }
};

bool evaluate_constraint(const risk::GameMap& map, const risk::GameState& state,
                         const Constraint& c, risk::PlayerId player);

// Pairwise rules: C7 a with C9 b where a > b, C1 and C2 on one continent,
// duplicate constraints.
ConflictReport check_consistency(const IntentSpec& spec);

ConflictReport check_against_selections(const risk::GameMap& map,
                                        const IntentSpec& spec,
                                        const risk::GameState& state,
                                        risk::PlayerId player);

struct Score {
  int goals_correct = 0;
  int constraints_correct = 0;
  bool operator==(const Score&) const = default;
};

Score score_prediction(const IntentSpec& pred, const IntentSpec& gold);

}  // namespace stratintent::intent

#endif  // STRATINTENT_INTENT_INTENT_H_
