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

#ifndef STRATINTENT_EXTRACT_MODEL_H_
#define STRATINTENT_EXTRACT_MODEL_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stratintent/error.h"
#include "stratintent/extract/features.h"
#include "stratintent/intent/intent.h"
#include "stratintent/losses/losses.h"

namespace stratintent::extract {

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class ModelFormatError : public Error {
 public:
  using Error::Error;
};

enum class Task { kGoals, kConstraints, kBoth };

std::string_view task_name(Task task);
std::optional<Task> parse_task(std::string_view name);
inline bool has_goals(Task t) { return t != Task::kConstraints; }
inline bool has_constraints(Task t) { return t != Task::kGoals; }

enum class HeadKind { kGoal, kConstraint };

// One linear softmax classifier per slot. Weights are stored feature-major
// (D x K) so a sparse input touches contiguous rows.
struct HeadGroup {
  std::vector<losses::Matrix> weights;
  losses::Matrix bias;  // heads x K

  int heads() const { return static_cast<int>(weights.size()); }
  int classes() const { return static_cast<int>(bias.cols()); }
  bool empty() const { return weights.empty(); }
  bool operator==(const HeadGroup&) const = default;
};

// Separate goal (6 x 5) and constraint (8 x 91) models over one feature
// space. A group is empty when the task does not include it.
struct ExtractionModel {
  FeatureConfig features;
  uint64_t seed = 0;
  Task task = Task::kBoth;
  HeadGroup goals;
  HeadGroup constraints;

  const HeadGroup& group(HeadKind kind) const {
    return kind == HeadKind::kGoal ? goals : constraints;
  }
  HeadGroup& group(HeadKind kind) {
    return kind == HeadKind::kGoal ? goals : constraints;
  }
  bool operator==(const ExtractionModel&) const = default;
};

// Uniform weights in [-init_scale, init_scale] from Rng(seed), zero bias.
ExtractionModel init_model(const FeatureConfig& features, Task task,
                           uint64_t seed, double init_scale);

// heads x K logits; throws DimensionMismatchError on a foreign vector and
// Error when the group is absent.
losses::Matrix logits(const HeadGroup& group, const FeatureVector& fv);

losses::Matrix forward(const ExtractionModel& model, HeadKind kind,
                       const FeatureVector& fv);

// Argmax bucket per goal head, reported as the bucket midpoint. Constraint
// heads in slot order take their most probable label not already taken by
// an earlier head; Null may repeat. Missing groups give zero goals / Null
// slots.
intent::IntentSpec predict(const ExtractionModel& model,
                           const FeatureVector& fv);

// Per-example targets: goal buckets (6) or slot labels (8).
std::vector<int> targets_for(HeadKind kind, const intent::IntentSpec& spec);

// Loss of one example and its gradient with respect to the group's logits
// (heads x K). `mix` as in loss_and_gradient.
losses::Matrix logit_gradient(const HeadGroup& group, HeadKind kind,
                              const FeatureVector& fv,
                              const std::vector<int>& targets, double mix,
                              double* loss);

struct GroupGradient {
  double loss = 0.0;  // summed over the batch
  std::vector<losses::Matrix> weights;  // dense, same shape as the group
  losses::Matrix bias;
};

// Summed loss and parameter gradient over a batch. `mix` is alpha for goal
// heads and the temperature for constraint heads; constraint alignments
// are recomputed at the current parameters and then held fixed.
GroupGradient loss_and_gradient(const ExtractionModel& model, HeadKind kind,
                                const std::vector<FeatureVector>& batch,
                                const std::vector<std::vector<int>>& targets,
                                double mix);

// Binary layout, all integers and doubles little-endian:
//   "SIXM" | u32 version=1 | u32 task | u64 seed | u32 text_dim |
//   per present group: u32 heads | u32 classes | weights | bias
void save_model(const ExtractionModel& model, std::ostream& out);
void save_model(const ExtractionModel& model, const std::string& path);
ExtractionModel load_model(std::istream& in);
ExtractionModel load_model(const std::string& path);

}  // namespace stratintent::extract

#endif  // STRATINTENT_EXTRACT_MODEL_H_
