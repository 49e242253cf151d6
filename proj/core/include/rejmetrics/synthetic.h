// Copyright 2026 The rejmetrics Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Four-class 2-D Gaussian benchmark (unit covariance, centers at (+-1, +-1),
// equal priors) and the two baseline confidence functions.

#ifndef REJMETRICS_SYNTHETIC_H_
#define REJMETRICS_SYNTHETIC_H_

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "rejmetrics/partition.h"

namespace rejmetrics {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline constexpr int kNumGaussianClasses = 4;

// Class k (1-based) is centered at kClassCenters[k - 1].
inline constexpr std::array<Point2, kNumGaussianClasses> kClassCenters = {{
    {1.0, 1.0},
    {-1.0, 1.0},
    {-1.0, -1.0},
    {1.0, -1.0},
}};

inline constexpr std::string_view kGeneratorName = "mt19937_64/box-muller";

// Row-major n x K matrix of class probabilities.
class PosteriorMatrix {
 public:
  PosteriorMatrix() = default;
  PosteriorMatrix(std::size_t rows, std::size_t cols);
  // Throws InputError if `values.size()` is not rows * cols or a row is
  // negative or does not sum to 1 within 1e-9.
  PosteriorMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * cols_, cols_};
  }
  std::span<double> mutable_row(std::size_t i) {
    return {values_.data() + i * cols_, cols_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

struct SyntheticDataset {
  std::vector<Point2> points;
  std::vector<ClassId> y_true;
  PosteriorMatrix posteriors;
  std::uint64_t seed = 0;
};

// Posterior of each class at `p` under equal priors and unit covariance.
std::array<double, kNumGaussianClasses> GaussianPosteriors(Point2 p);

// Sample i belongs to class (i mod 4) + 1. Deterministic in `seed`. Throws
// InputError when n < 4.
SyntheticDataset GenerateGaussians(std::size_t n, std::uint64_t seed);

// Argmax of the posterior row, ties to the lowest class id.
std::vector<ClassId> ClassifyNearestCenter(const SyntheticDataset& dataset);
std::vector<ClassId> ArgmaxClass(const PosteriorMatrix& posteriors);

// Largest class probability per row.
std::vector<double> ConfidenceMaxProbability(const PosteriorMatrix& posteriors);

// Difference between the two largest class probabilities per row. Throws
// InputError when there are fewer than two classes.
std::vector<double> ConfidenceBreakingTies(const PosteriorMatrix& posteriors);

}  // namespace rejmetrics

#endif  // REJMETRICS_SYNTHETIC_H_
