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

#ifndef STRATINTENT_LOSSES_LOSSES_H_
#define STRATINTENT_LOSSES_LOSSES_H_

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stratintent/error.h"

namespace stratintent::losses {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  double& operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
  double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }
  double* row(size_t r) { return data_.data() + r * cols_; }
  const double* row(size_t r) const { return data_.data() + r * cols_; }
  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

class NonSquareError : public Error {
 public:
  using Error::Error;
};

// assignment[i] is the column given to row i.
struct Alignment {
  std::vector<int> assignment;
  double cost = 0.0;
};

// Minimum-cost perfect assignment of an n x n matrix, O(n^3) shortest
// augmenting paths with row/column potentials.
Alignment hungarian(const Matrix& cost);

// Probabilities are floored here before taking logs, which caps a single
// cell's cost at about 27.6.
inline constexpr double kProbabilityFloor = 1e-12;
double clamped_nll(double p);

// Row-wise softmax, max-subtracted.
Matrix softmax_rows(const Matrix& logits);

// Cross entropy with target k scored against slot k.
double default_order_ce(const Matrix& dists, const std::vector<int>& targets);

struct OaxeResult {
  double loss = 0.0;
  // assignment[i] is the slot aligned with target i.
  Alignment alignment;
};

// Cross entropy under the best target-to-slot alignment. `targets` holds
// one label per slot, Null included.
OaxeResult oaxe_loss(const Matrix& dists, const std::vector<int>& targets);

// temperature * default-order CE + (1 - temperature) * OaXE.
double constraint_loss(const Matrix& dists, const std::vector<int>& targets,
                       double temperature);

// alpha * mean CE + (1 - alpha) * mean squared error between the expected
// bucket index and the target index, means taken over goal rows.
double goal_loss(const Matrix& dists, const std::vector<int>& targets,
                 double alpha);

// d goal_loss / d logits, where dists = softmax_rows(logits).
Matrix goal_loss_gradient(const Matrix& logits, const std::vector<int>& targets,
                          double alpha);

// d constraint_loss / d logits with the OaXE alignment held fixed.
Matrix constraint_loss_gradient(const Matrix& logits,
                                const std::vector<int>& targets,
                                double temperature, const Alignment& alignment);

struct AnnealSchedule {
  long total_steps = 1;
  double steepness = 10.0;
  double midpoint = 0.5;
};

// Logistic decay in step / total_steps, rescaled so that step 0 gives
// exactly 1 and the final step exactly 0.
double anneal(long step, const AnnealSchedule& schedule);

}  // namespace stratintent::losses

#endif  // STRATINTENT_LOSSES_LOSSES_H_
