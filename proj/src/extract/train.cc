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

#include "stratintent/extract/train.h"

#include <cmath>
#include <numeric>

#include "json.hpp"
#include "stratintent/rng.h"

namespace stratintent::extract {

using corpus::CorpusExample;
using losses::Matrix;

namespace {

struct Prepared {
  std::vector<FeatureVector> features;
  std::vector<std::vector<int>> targets;
};

Prepared prepare(const std::vector<CorpusExample>& examples, HeadKind kind,
                 const FeatureConfig& config) {
  Prepared p;
  for (const auto& ex : examples) {
    p.features.push_back(featurize(ex, config));
    p.targets.push_back(targets_for(kind, ex.intent));
  }
  return p;
}

long batches_per_epoch(size_t n, int batch) {
  return static_cast<long>((n + batch - 1) / batch);
}

// Sparse SGD step, or dense momentum step when momentum > 0.
class Optimizer {
 public:
  Optimizer(HeadGroup& group, double lr, double momentum)
      : group_(group), lr_(lr), momentum_(momentum) {
    if (momentum_ > 0) {
      for (const Matrix& w : group.weights) velocity_.emplace_back(w.rows(), w.cols());
      bias_velocity_ = Matrix(group.bias.rows(), group.bias.cols());
    }
  }

  void step(const std::vector<const FeatureVector*>& batch,
            const std::vector<Matrix>& grads) {
    const double scale = 1.0 / static_cast<double>(batch.size());
    if (momentum_ > 0) {
      for (Matrix& v : velocity_) {
        for (double& x : v.data()) x *= momentum_;
      }
      for (double& x : bias_velocity_.data()) x *= momentum_;
      accumulate(batch, grads, scale, velocity_, bias_velocity_);
      for (size_t h = 0; h < velocity_.size(); ++h) {
        auto& w = group_.weights[h].data();
        const auto& v = velocity_[h].data();
        for (size_t k = 0; k < w.size(); ++k) w[k] -= lr_ * v[k];
      }
      auto& b = group_.bias.data();
      for (size_t k = 0; k < b.size(); ++k) b[k] -= lr_ * bias_velocity_.data()[k];
    } else {
      accumulate(batch, grads, -lr_ * scale, group_.weights, group_.bias);
    }
  }

 private:
  static void accumulate(const std::vector<const FeatureVector*>& batch,
                         const std::vector<Matrix>& grads, double scale,
                         std::vector<Matrix>& weights, Matrix& bias) {
    for (size_t n = 0; n < batch.size(); ++n) {
      const Matrix& g = grads[n];
      for (size_t h = 0; h < g.rows(); ++h) {
        const double* gh = g.row(h);
        double* b = bias.row(h);
        for (size_t c = 0; c < g.cols(); ++c) b[c] += scale * gh[c];
        for (const auto& [i, v] : batch[n]->entries) {
          double* w = weights[h].row(i);
          const double sv = scale * v;
          for (size_t c = 0; c < g.cols(); ++c) w[c] += sv * gh[c];
        }
      }
    }
  }

  HeadGroup& group_;
  double lr_;
  double momentum_;
  std::vector<Matrix> velocity_;
  Matrix bias_velocity_;
};

void train_group(ExtractionModel& model, HeadKind kind, const TrainConfig& config,
                 const std::vector<CorpusExample>& corpus,
                 const std::vector<CorpusExample>* pretrain,
                 std::vector<EpochLog>& log) {
  const bool goal = kind == HeadKind::kGoal;
  const int epochs = goal ? config.goal_epochs : config.constraint_epochs;
  const int batch = goal ? config.goal_batch : config.constraint_batch;
  const double lr = goal ? config.goal_lr : config.constraint_lr;

  std::vector<std::pair<std::string, Prepared>> stages;
  if (pretrain != nullptr) {
    stages.emplace_back("pretrain", prepare(*pretrain, kind, config.features));
  }
  stages.emplace_back("main", prepare(corpus, kind, config.features));

  long total_steps = 0;
  for (const auto& [name, data] : stages) {
    total_steps += epochs * batches_per_epoch(data.features.size(), batch);
  }
  const losses::AnnealSchedule schedule{std::max(total_steps, 1L), config.anneal_k,
                                        config.anneal_mid};
  Rng rng(Rng::derive(config.seed, goal ? 1 : 2));
  Optimizer optimizer(model.group(kind), lr, config.momentum);
  long step = 0;
  for (const auto& [name, data] : stages) {
    const size_t n = data.features.size();
    std::vector<size_t> order(n);
    for (int epoch = 1; epoch <= epochs; ++epoch) {
      std::iota(order.begin(), order.end(), 0);
      rng.shuffle(order);
      double epoch_loss = 0.0;
      double mix = goal ? config.alpha : 1.0;
      for (size_t start = 0; start < n; start += batch, ++step) {
        const size_t end = std::min(n, start + batch);
        if (!goal) mix = losses::anneal(step, schedule);
        std::vector<const FeatureVector*> members;
        std::vector<Matrix> grads;
        for (size_t k = start; k < end; ++k) {
          double loss = 0.0;
          grads.push_back(logit_gradient(model.group(kind), kind, data.features[order[k]],
                                         data.targets[order[k]], mix, &loss));
          members.push_back(&data.features[order[k]]);
          epoch_loss += loss;
        }
        if (!std::isfinite(epoch_loss)) {
          throw DivergedLossError(std::string(name) + " epoch " + std::to_string(epoch) +
                                  ": loss is not finite; lower the learning rate");
        }
        optimizer.step(members, grads);
      }
      log.push_back({name, kind, epoch, epoch_loss / static_cast<double>(n),
                     goal ? 1.0 : mix});
    }
  }
}

double mean_of(const std::vector<double>& xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double sample_std(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

nlohmann::ordered_json metrics_json(const Metrics& m) {
  nlohmann::ordered_json j;
  j["examples"] = m.examples;
  j["goals_correct"] = m.goals_correct;
  j["constraints_correct"] = m.constraints_correct;
  j["null_baseline_correct"] = m.null_baseline_correct;
  j["goal_slot_accuracy"] = m.goal_slot_accuracy();
  j["constraint_slot_accuracy"] = m.constraint_slot_accuracy();
  j["null_baseline_accuracy"] = m.null_baseline_accuracy();
  j["mean_goals_correct_of_6"] = m.mean_goals_correct();
  j["mean_constraints_correct_of_8"] = m.mean_constraints_correct();
  return j;
}

}  // namespace

std::string find_config_violation(const TrainConfig& c) {
  if (c.features.text_dim < 1) return "text_dim must be positive";
  if (c.goal_epochs < 1 || c.constraint_epochs < 1) return "epochs must be positive";
  if (c.goal_batch < 1 || c.constraint_batch < 1) return "batch size must be positive";
  if (!(c.goal_lr > 0) || !(c.constraint_lr > 0)) return "learning rate must be positive";
  if (!(c.momentum >= 0 && c.momentum < 1)) return "momentum must be in [0, 1)";
  if (!(c.alpha >= 0 && c.alpha <= 1)) return "alpha must be in [0, 1]";
  if (!(c.anneal_k > 0)) return "anneal steepness must be positive";
  if (!(c.anneal_mid > 0 && c.anneal_mid < 1)) return "anneal midpoint must be in (0, 1)";
  if (!(c.init_scale >= 0)) return "init scale must be non-negative";
  if (c.folds < 2) return "fold count must be at least 2";
  return "";
}

TrainResult train(const std::vector<CorpusExample>& corpus, const TrainConfig& config,
                  const std::vector<CorpusExample>* pretrain) {
  if (const std::string why = find_config_violation(config); !why.empty()) {
    throw Error("invalid training config: " + why);
  }
  if (corpus.empty()) throw EmptyCorpusError("training corpus is empty");
  if (pretrain != nullptr && pretrain->empty()) {
    throw EmptyCorpusError("pretraining corpus is empty");
  }
  for (const auto* set : {&corpus, pretrain}) {
    if (set == nullptr) continue;
    for (size_t i = 0; i < set->size(); ++i) {
      if (auto why = corpus::find_example_violation((*set)[i])) {
        throw corpus::ValidationError(0, "example " + std::to_string(i) + ": " + *why);
      }
    }
  }
  TrainResult result;
  result.model = init_model(config.features, config.task, config.seed, config.init_scale);
  if (has_goals(config.task)) {
    train_group(result.model, HeadKind::kGoal, config, corpus, pretrain, result.log);
  }
  if (has_constraints(config.task)) {
    train_group(result.model, HeadKind::kConstraint, config, corpus, pretrain, result.log);
  }
  return result;
}

double Metrics::goal_slot_accuracy() const {
  return examples ? goals_correct / (6.0 * examples) : 0.0;
}
double Metrics::constraint_slot_accuracy() const {
  return examples ? constraints_correct / (8.0 * examples) : 0.0;
}
double Metrics::null_baseline_accuracy() const {
  return examples ? null_baseline_correct / (8.0 * examples) : 0.0;
}
double Metrics::mean_goals_correct() const {
  return examples ? static_cast<double>(goals_correct) / examples : 0.0;
}
double Metrics::mean_constraints_correct() const {
  return examples ? static_cast<double>(constraints_correct) / examples : 0.0;
}

Metrics& Metrics::operator+=(const Metrics& o) {
  examples += o.examples;
  goals_correct += o.goals_correct;
  constraints_correct += o.constraints_correct;
  null_baseline_correct += o.null_baseline_correct;
  return *this;
}

Metrics evaluate(const ExtractionModel& model, const std::vector<CorpusExample>& examples) {
  Metrics m;
  const intent::IntentSpec all_null;
  for (const auto& ex : examples) {
    const intent::IntentSpec pred = predict(model, featurize(ex, model.features));
    const intent::Score s = intent::score_prediction(pred, ex.intent);
    ++m.examples;
    m.goals_correct += s.goals_correct;
    m.constraints_correct += s.constraints_correct;
    m.null_baseline_correct += intent::score_prediction(all_null, ex.intent).constraints_correct;
  }
  return m;
}

std::vector<int> assign_folds(size_t n, int folds, uint64_t seed) {
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(Rng::derive(seed, 0xF01D));
  rng.shuffle(order);
  std::vector<int> fold_of(n);
  for (size_t k = 0; k < n; ++k) fold_of[order[k]] = static_cast<int>(k % folds);
  return fold_of;
}

KFoldReport kfold_evaluate(const std::vector<CorpusExample>& corpus,
                           const TrainConfig& config) {
  if (config.folds < 2) throw TooFewExamplesError("need at least 2 folds");
  if (corpus.size() < static_cast<size_t>(config.folds)) {
    throw TooFewExamplesError(std::to_string(corpus.size()) + " examples for " +
                              std::to_string(config.folds) + " folds");
  }
  KFoldReport report;
  report.folds = config.folds;
  report.seed = config.seed;
  const std::vector<int> fold_of = assign_folds(corpus.size(), config.folds, config.seed);
  for (int f = 0; f < config.folds; ++f) {
    std::vector<CorpusExample> train_set, test_set;
    for (size_t i = 0; i < corpus.size(); ++i) {
      (fold_of[i] == f ? test_set : train_set).push_back(corpus[i]);
    }
    const TrainResult trained = train(train_set, config);
    report.per_fold.push_back(evaluate(trained.model, test_set));
    report.pooled += report.per_fold.back();
  }
  return report;
}

std::string report_json(const Metrics& metrics) { return metrics_json(metrics).dump(2) + "\n"; }

std::string report_json(const KFoldReport& report) {
  nlohmann::ordered_json j;
  j["folds"] = report.folds;
  j["seed"] = report.seed;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<double> goal_acc, con_acc, goals_mean, cons_mean;
  for (size_t f = 0; f < report.per_fold.size(); ++f) {
    const Metrics& m = report.per_fold[f];
    nlohmann::ordered_json row = metrics_json(m);
    row["fold"] = f;
    rows.push_back(row);
    goal_acc.push_back(m.goal_slot_accuracy());
    con_acc.push_back(m.constraint_slot_accuracy());
    goals_mean.push_back(m.mean_goals_correct());
    cons_mean.push_back(m.mean_constraints_correct());
  }
  j["per_fold"] = rows;
  auto summary = [](const std::vector<double>& xs) {
    nlohmann::ordered_json s;
    s["mean"] = mean_of(xs);
    s["std"] = sample_std(xs);
    return s;
  };
  nlohmann::ordered_json agg;
  agg["goal_slot_accuracy"] = summary(goal_acc);
  agg["constraint_slot_accuracy"] = summary(con_acc);
  agg["goals_correct_of_6"] = summary(goals_mean);
  agg["constraints_correct_of_8"] = summary(cons_mean);
  j["aggregate"] = agg;
  j["pooled"] = metrics_json(report.pooled);
  return j.dump(2) + "\n";
}

std::string log_json(const std::vector<EpochLog>& log) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& e : log) {
    nlohmann::ordered_json row;
    row["stage"] = e.stage;
    row["heads"] = e.kind == HeadKind::kGoal ? "goals" : "constraints";
    row["epoch"] = e.epoch;
    row["mean_loss"] = e.mean_loss;
    row["temperature"] = e.temperature;
    rows.push_back(row);
  }
  return rows.dump(2) + "\n";
}

}  // namespace stratintent::extract
