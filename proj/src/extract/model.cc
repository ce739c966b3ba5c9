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

#include "stratintent/extract/model.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

#include "stratintent/rng.h"

namespace stratintent::extract {

using losses::Matrix;

namespace {

constexpr char kMagic[4] = {'S', 'I', 'X', 'M'};
constexpr uint32_t kFormatVersion = 1;

HeadGroup make_group(int heads, int classes, int dim, Rng& rng, double scale) {
  HeadGroup g;
  g.bias = Matrix(heads, classes);
  for (int h = 0; h < heads; ++h) {
    Matrix w(dim, classes);
    for (int i = 0; i < dim; ++i) {
      for (int k = 0; k < classes; ++k) w(i, k) = rng.uniform_real(-scale, scale);
    }
    g.weights.push_back(std::move(w));
  }
  return g;
}

void put_u32(std::ostream& out, uint32_t v) {
  char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 4);
}

void put_u64(std::ostream& out, uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(b, 8);
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<uint64_t>(v)); }

uint64_t get_bytes(std::istream& in, int n) {
  unsigned char b[8] = {};
  if (!in.read(reinterpret_cast<char*>(b), n)) throw ModelFormatError("model file truncated");
  uint64_t v = 0;
  for (int i = n - 1; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

uint32_t get_u32(std::istream& in) { return static_cast<uint32_t>(get_bytes(in, 4)); }
uint64_t get_u64(std::istream& in) { return get_bytes(in, 8); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void write_matrix(std::ostream& out, const Matrix& m) {
  for (double v : m.data()) put_f64(out, v);
}

Matrix read_matrix(std::istream& in, size_t rows, size_t cols) {
  Matrix m(rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    for (size_t c = 0; c < cols; ++c) {
      m(r, c) = get_f64(in);
      if (!std::isfinite(m(r, c))) throw ModelFormatError("non-finite parameter");
    }
  }
  return m;
}

void write_group(std::ostream& out, const HeadGroup& g) {
  put_u32(out, static_cast<uint32_t>(g.heads()));
  put_u32(out, static_cast<uint32_t>(g.classes()));
  for (const Matrix& w : g.weights) write_matrix(out, w);
  write_matrix(out, g.bias);
}

HeadGroup read_group(std::istream& in, int dim, int want_heads, int want_classes) {
  const uint32_t heads = get_u32(in), classes = get_u32(in);
  if (static_cast<int>(heads) != want_heads || static_cast<int>(classes) != want_classes) {
    throw ModelFormatError("head shape " + std::to_string(heads) + "x" +
                           std::to_string(classes) + ", expected " +
                           std::to_string(want_heads) + "x" + std::to_string(want_classes));
  }
  HeadGroup g;
  for (uint32_t h = 0; h < heads; ++h) g.weights.push_back(read_matrix(in, dim, classes));
  g.bias = read_matrix(in, heads, classes);
  return g;
}

}  // namespace

std::string_view task_name(Task task) {
  switch (task) {
    case Task::kGoals:
      return "goals";
    case Task::kConstraints:
      return "constraints";
    case Task::kBoth:
      return "both";
  }
  return "?";
}

std::optional<Task> parse_task(std::string_view name) {
  for (Task t : {Task::kGoals, Task::kConstraints, Task::kBoth}) {
    if (task_name(t) == name) return t;
  }
  return std::nullopt;
}

ExtractionModel init_model(const FeatureConfig& features, Task task,
                           uint64_t seed, double init_scale) {
  ExtractionModel m;
  m.features = features;
  m.seed = seed;
  m.task = task;
  Rng rng(seed);
  const int dim = features.dimension();
  if (has_goals(task)) {
    m.goals = make_group(intent::kNumGoals, intent::kNumBuckets, dim, rng, init_scale);
  }
  if (has_constraints(task)) {
    m.constraints = make_group(intent::kNumSlots, intent::kNumConstraintLabels, dim,
                               rng, init_scale);
  }
  return m;
}

Matrix logits(const HeadGroup& group, const FeatureVector& fv) {
  if (group.empty()) throw Error("model has no heads of this kind");
  const int dim = static_cast<int>(group.weights[0].rows());
  if (fv.dimension != dim) {
    throw DimensionMismatchError("feature dimension " + std::to_string(fv.dimension) +
                                 ", model expects " + std::to_string(dim));
  }
  Matrix out = group.bias;
  const size_t k = out.cols();
  for (int h = 0; h < group.heads(); ++h) {
    double* row = out.row(h);
    for (const auto& [i, v] : fv.entries) {
      const double* w = group.weights[h].row(i);
      for (size_t c = 0; c < k; ++c) row[c] += v * w[c];
    }
  }
  return out;
}

Matrix forward(const ExtractionModel& model, HeadKind kind, const FeatureVector& fv) {
  return losses::softmax_rows(logits(model.group(kind), fv));
}

intent::IntentSpec predict(const ExtractionModel& model, const FeatureVector& fv) {
  intent::IntentSpec spec;
  if (!model.goals.empty()) {
    const Matrix p = forward(model, HeadKind::kGoal, fv);
    for (int g = 0; g < intent::kNumGoals; ++g) {
      const double* row = p.row(g);
      const int best = static_cast<int>(std::max_element(row, row + p.cols()) - row);
      spec.goals[g] = intent::bucket_midpoint(best);
    }
  }
  if (!model.constraints.empty()) {
    const Matrix p = forward(model, HeadKind::kConstraint, fv);
    std::vector<bool> taken(p.cols(), false);
    std::vector<int> order(p.cols());
    for (int s = 0; s < intent::kNumSlots; ++s) {
      std::iota(order.begin(), order.end(), 0);
      // Ties go to the lower label, so Null wins a tie.
      std::stable_sort(order.begin(), order.end(),
                       [&](int a, int b) { return p(s, a) > p(s, b); });
      for (int label : order) {
        if (label == intent::kNullLabel) break;
        if (taken[label]) continue;
        taken[label] = true;
        spec.constraints[s] = intent::constraint_from_label(label);
        break;
      }
    }
  }
  return spec;
}

std::vector<int> targets_for(HeadKind kind, const intent::IntentSpec& spec) {
  std::vector<int> t;
  if (kind == HeadKind::kGoal) {
    for (int v : spec.goals) t.push_back(intent::bucketize(v));
  } else {
    for (const auto& slot : spec.constraints) t.push_back(intent::slot_label(slot));
  }
  return t;
}

Matrix logit_gradient(const HeadGroup& group, HeadKind kind, const FeatureVector& fv,
                      const std::vector<int>& targets, double mix, double* loss) {
  const Matrix z = logits(group, fv);
  const Matrix p = losses::softmax_rows(z);
  if (kind == HeadKind::kGoal) {
    *loss = losses::goal_loss(p, targets, mix);
    return losses::goal_loss_gradient(z, targets, mix);
  }
  const losses::OaxeResult oaxe = losses::oaxe_loss(p, targets);
  *loss = mix * losses::default_order_ce(p, targets) + (1.0 - mix) * oaxe.loss;
  return losses::constraint_loss_gradient(z, targets, mix, oaxe.alignment);
}

GroupGradient loss_and_gradient(const ExtractionModel& model, HeadKind kind,
                                const std::vector<FeatureVector>& batch,
                                const std::vector<std::vector<int>>& targets,
                                double mix) {
  const HeadGroup& group = model.group(kind);
  GroupGradient out;
  out.bias = Matrix(group.bias.rows(), group.bias.cols());
  for (const Matrix& w : group.weights) out.weights.emplace_back(w.rows(), w.cols());
  for (size_t n = 0; n < batch.size(); ++n) {
    double loss = 0.0;
    const Matrix g = logit_gradient(group, kind, batch[n], targets[n], mix, &loss);
    out.loss += loss;
    for (int h = 0; h < group.heads(); ++h) {
      const double* gh = g.row(h);
      double* b = out.bias.row(h);
      for (size_t c = 0; c < g.cols(); ++c) b[c] += gh[c];
      for (const auto& [i, v] : batch[n].entries) {
        double* w = out.weights[h].row(i);
        for (size_t c = 0; c < g.cols(); ++c) w[c] += v * gh[c];
      }
    }
  }
  return out;
}

void save_model(const ExtractionModel& model, std::ostream& out) {
  out.write(kMagic, 4);
  put_u32(out, kFormatVersion);
  put_u32(out, static_cast<uint32_t>(model.task));
  put_u64(out, model.seed);
  put_u32(out, static_cast<uint32_t>(model.features.text_dim));
  if (has_goals(model.task)) write_group(out, model.goals);
  if (has_constraints(model.task)) write_group(out, model.constraints);
}

void save_model(const ExtractionModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelFormatError("cannot write " + path);
  save_model(model, out);
  if (!out) throw ModelFormatError("write failed for " + path);
}

ExtractionModel load_model(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, kMagic, 4) != 0) {
    throw ModelFormatError("not a model file");
  }
  const uint32_t version = get_u32(in);
  if (version != kFormatVersion) {
    throw ModelFormatError("unsupported model version " + std::to_string(version));
  }
  ExtractionModel m;
  const uint32_t task = get_u32(in);
  if (task > static_cast<uint32_t>(Task::kBoth)) throw ModelFormatError("bad task code");
  m.task = static_cast<Task>(task);
  m.seed = get_u64(in);
  m.features.text_dim = static_cast<int>(get_u32(in));
  if (m.features.text_dim < 1 || m.features.text_dim > (1 << 24)) {
    throw ModelFormatError("implausible text_dim");
  }
  const int dim = m.features.dimension();
  if (has_goals(m.task)) {
    m.goals = read_group(in, dim, intent::kNumGoals, intent::kNumBuckets);
  }
  if (has_constraints(m.task)) {
    m.constraints = read_group(in, dim, intent::kNumSlots, intent::kNumConstraintLabels);
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw ModelFormatError("trailing bytes after model");
  }
  return m;
}

ExtractionModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFormatError("cannot open " + path);
  return load_model(in);
}

}  // namespace stratintent::extract
