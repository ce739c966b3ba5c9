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

#include "stratintent/losses/losses.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace stratintent::losses {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Alignment hungarian(const Matrix& cost) {
  const size_t n = cost.rows();
  if (n != cost.cols()) {
    throw NonSquareError("hungarian needs a square matrix, got " +
                         std::to_string(cost.rows()) + "x" +
                         std::to_string(cost.cols()));
  }
  if (n == 0) throw NonSquareError("hungarian needs n >= 1");
  constexpr double kInf = std::numeric_limits<double>::infinity();
  // 1-based; column 0 is a virtual start node.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<size_t> owner(n + 1, 0), way(n + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    owner[0] = i;
    size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = owner[j0];
      double delta = kInf;
      size_t j1 = 0;
      for (size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[owner[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (owner[j0] != 0);
    do {
      const size_t j1 = way[j0];
      owner[j0] = owner[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Alignment out;
  out.assignment.assign(n, -1);
  for (size_t j = 1; j <= n; ++j) out.assignment[owner[j] - 1] = static_cast<int>(j - 1);
  // Sum the original cells rather than trusting the potentials.
  for (size_t i = 0; i < n; ++i) out.cost += cost(i, out.assignment[i]);
  return out;
}

double clamped_nll(double p) { return -std::log(std::max(p, kProbabilityFloor)); }

Matrix softmax_rows(const Matrix& logits) {
  Matrix out(logits.rows(), logits.cols());
  for (size_t r = 0; r < logits.rows(); ++r) {
    const double* z = logits.row(r);
    const double top = *std::max_element(z, z + logits.cols());
    double sum = 0.0;
    for (size_t c = 0; c < logits.cols(); ++c) sum += out(r, c) = std::exp(z[c] - top);
    for (size_t c = 0; c < logits.cols(); ++c) out(r, c) /= sum;
  }
  return out;
}

namespace {

void check_targets(const Matrix& dists, const std::vector<int>& targets) {
  if (targets.size() != dists.rows()) {
    throw Error("expected " + std::to_string(dists.rows()) + " targets, got " +
                std::to_string(targets.size()));
  }
  for (int t : targets) {
    if (t < 0 || static_cast<size_t>(t) >= dists.cols()) {
      throw Error("target label " + std::to_string(t) + " out of range");
    }
  }
}

}  // namespace

double default_order_ce(const Matrix& dists, const std::vector<int>& targets) {
  check_targets(dists, targets);
  double loss = 0.0;
  for (size_t k = 0; k < targets.size(); ++k) loss += clamped_nll(dists(k, targets[k]));
  return loss;
}

OaxeResult oaxe_loss(const Matrix& dists, const std::vector<int>& targets) {
  check_targets(dists, targets);
  const size_t n = targets.size();
  Matrix cost(n, n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) cost(i, j) = clamped_nll(dists(j, targets[i]));
  }
  OaxeResult out;
  out.alignment = hungarian(cost);
  // Summed in slot order so equal alignments give bit-equal losses.
  std::vector<int> target_of_slot(n);
  for (size_t i = 0; i < n; ++i) target_of_slot[out.alignment.assignment[i]] = targets[i];
  for (size_t j = 0; j < n; ++j) out.loss += clamped_nll(dists(j, target_of_slot[j]));
  return out;
}

double constraint_loss(const Matrix& dists, const std::vector<int>& targets,
                       double temperature) {
  return temperature * default_order_ce(dists, targets) +
         (1.0 - temperature) * oaxe_loss(dists, targets).loss;
}

double goal_loss(const Matrix& dists, const std::vector<int>& targets,
                 double alpha) {
  check_targets(dists, targets);
  double ce = 0.0, mse = 0.0;
  for (size_t g = 0; g < dists.rows(); ++g) {
    ce += clamped_nll(dists(g, targets[g]));
    double expected = 0.0;
    for (size_t m = 0; m < dists.cols(); ++m) expected += static_cast<double>(m) * dists(g, m);
    const double diff = expected - targets[g];
    mse += diff * diff;
  }
  const double rows = static_cast<double>(dists.rows());
  return alpha * ce / rows + (1.0 - alpha) * mse / rows;
}

Matrix goal_loss_gradient(const Matrix& logits, const std::vector<int>& targets,
                          double alpha) {
  const Matrix p = softmax_rows(logits);
  check_targets(p, targets);
  const double rows = static_cast<double>(p.rows());
  Matrix grad(p.rows(), p.cols());
  for (size_t g = 0; g < p.rows(); ++g) {
    double expected = 0.0;
    for (size_t m = 0; m < p.cols(); ++m) expected += static_cast<double>(m) * p(g, m);
    const double diff = expected - targets[g];
    for (size_t m = 0; m < p.cols(); ++m) {
      const double ce = p(g, m) - (static_cast<int>(m) == targets[g] ? 1.0 : 0.0);
      const double mse = 2.0 * diff * p(g, m) * (static_cast<double>(m) - expected);
      grad(g, m) = (alpha * ce + (1.0 - alpha) * mse) / rows;
    }
  }
  return grad;
}

Matrix constraint_loss_gradient(const Matrix& logits,
                                const std::vector<int>& targets,
                                double temperature, const Alignment& alignment) {
  Matrix grad = softmax_rows(logits);
  check_targets(grad, targets);
  for (size_t j = 0; j < grad.rows(); ++j) grad(j, targets[j]) -= temperature;
  for (size_t i = 0; i < targets.size(); ++i) {
    grad(alignment.assignment[i], targets[i]) -= 1.0 - temperature;
  }
  return grad;
}

double anneal(long step, const AnnealSchedule& schedule) {
  if (schedule.total_steps < 1) throw Error("anneal schedule needs total_steps >= 1");
  const auto raw = [&](double x) {
    return 1.0 - 1.0 / (1.0 + std::exp(-schedule.steepness * (x - schedule.midpoint)));
  };
  const double x = std::clamp(static_cast<double>(step) /
                                  static_cast<double>(schedule.total_steps),
                              0.0, 1.0);
  const double hi = raw(0.0), lo = raw(1.0);
  return std::clamp((raw(x) - lo) / (hi - lo), 0.0, 1.0);
}

}  // namespace stratintent::losses
