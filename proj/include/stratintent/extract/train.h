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

#ifndef STRATINTENT_EXTRACT_TRAIN_H_
#define STRATINTENT_EXTRACT_TRAIN_H_

#include <cstdint>
#include <string>
#include <vector>

#include "stratintent/corpus/corpus.h"
#include "stratintent/error.h"
#include "stratintent/extract/model.h"

namespace stratintent::extract {

class EmptyCorpusError : public Error {
 public:
  using Error::Error;
};

class DivergedLossError : public Error {
 public:
  using Error::Error;
};

class TooFewExamplesError : public Error {
 public:
  using Error::Error;
};

struct TrainConfig {
  Task task = Task::kBoth;
  FeatureConfig features;
  int goal_epochs = 25;
  int goal_batch = 8;
  double goal_lr = 0.05;
  int constraint_epochs = 10;
  int constraint_batch = 16;
  double constraint_lr = 0.1;
  double momentum = 0.0;
  double alpha = 0.5;
  double anneal_k = 10.0;
  double anneal_mid = 0.5;
  double init_scale = 0.01;
  uint64_t seed = 0;
  int folds = 10;
};

// First invalid field, or empty.
std::string find_config_violation(const TrainConfig& config);

struct EpochLog {
  std::string stage;  // "pretrain" or "main"
  HeadKind kind = HeadKind::kGoal;
  int epoch = 0;
  double mean_loss = 0.0;
  double temperature = 1.0;  // at the epoch's last step; 1 for goal heads
};

struct TrainResult {
  ExtractionModel model;
  std::vector<EpochLog> log;
};

// Minibatch gradient descent (optional momentum), one pass of
// `*_epochs` over `pretrain` when given, then over `corpus`. The
// constraint temperature anneals over the steps of both passes together.
TrainResult train(const std::vector<corpus::CorpusExample>& corpus,
                  const TrainConfig& config,
                  const std::vector<corpus::CorpusExample>* pretrain = nullptr);

struct Metrics {
  int examples = 0;
  long goals_correct = 0;        // out of 6 * examples
  long constraints_correct = 0;  // out of 8 * examples
  long null_baseline_correct = 0;  // all-Null prediction, out of 8 * examples

  double goal_slot_accuracy() const;
  double constraint_slot_accuracy() const;
  double null_baseline_accuracy() const;
  double mean_goals_correct() const;
  double mean_constraints_correct() const;
  Metrics& operator+=(const Metrics& other);
};

Metrics evaluate(const ExtractionModel& model,
                 const std::vector<corpus::CorpusExample>& examples);

// fold_of[i] for example i: a seeded permutation dealt round-robin.
std::vector<int> assign_folds(size_t n, int folds, uint64_t seed);

struct KFoldReport {
  int folds = 0;
  uint64_t seed = 0;
  std::vector<Metrics> per_fold;
  Metrics pooled;
};

KFoldReport kfold_evaluate(const std::vector<corpus::CorpusExample>& corpus,
                           const TrainConfig& config);

// Structured-text reports: per-fold rows plus mean and sample std of each
// metric across folds.
std::string report_json(const KFoldReport& report);
std::string report_json(const Metrics& metrics);
std::string log_json(const std::vector<EpochLog>& log);

}  // namespace stratintent::extract

#endif  // STRATINTENT_EXTRACT_TRAIN_H_
