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

#include "rejmetrics/synthetic.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

// Uniform in (0, 1] from the top 53 bits. Written out instead of using
// std::uniform_real_distribution so the stream is identical across standard
// library implementations.
double UniformOpenClosed(std::mt19937_64& engine) {
  return (static_cast<double>(engine() >> 11) + 1.0) * 0x1.0p-53;
}

// One Box-Muller draw yields two independent standard normals.
Point2 StandardNormalPair(std::mt19937_64& engine) {
  const double u1 = UniformOpenClosed(engine);
  const double u2 = UniformOpenClosed(engine);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  return {radius * std::cos(angle), radius * std::sin(angle)};
}

}  // namespace

PosteriorMatrix::PosteriorMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

PosteriorMatrix::PosteriorMatrix(std::size_t rows, std::size_t cols,
                                 std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (values_.size() != rows * cols) {
    throw InputError("posterior matrix size does not match its shape");
  }
  for (std::size_t i = 0; i < rows_; ++i) {
    double sum = 0.0;
    for (double p : row(i)) {
      if (!(p >= 0.0)) {
        throw InputError("posterior row " + std::to_string(i) +
                         " has a negative entry");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
      throw InputError("posterior row " + std::to_string(i) +
                       " does not sum to 1");
    }
  }
}

std::array<double, kNumGaussianClasses> GaussianPosteriors(Point2 p) {
  // With equal priors and covariances the squared norms of the centers
  // cancel, leaving logits x . mu_k.
  std::array<double, kNumGaussianClasses> logits{};
  for (int k = 0; k < kNumGaussianClasses; ++k) {
    logits[k] = p.x * kClassCenters[k].x + p.y * kClassCenters[k].y;
  }
  const double top = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& l : logits) {
    l = std::exp(l - top);
    sum += l;
  }
  for (double& l : logits) l /= sum;
  return logits;
}

SyntheticDataset GenerateGaussians(std::size_t n, std::uint64_t seed) {
  if (n < kNumGaussianClasses) {
    throw InputError("synthetic dataset needs at least 4 samples");
  }
  std::mt19937_64 engine(seed);
  SyntheticDataset ds;
  ds.seed = seed;
  ds.points.reserve(n);
  ds.y_true.reserve(n);
  ds.posteriors = PosteriorMatrix(n, kNumGaussianClasses);
  for (std::size_t i = 0; i < n; ++i) {
    const int k = static_cast<int>(i % kNumGaussianClasses);
    const Point2 z = StandardNormalPair(engine);
    const Point2 p{kClassCenters[k].x + z.x, kClassCenters[k].y + z.y};
    ds.points.push_back(p);
    ds.y_true.push_back(k + 1);
    const auto post = GaussianPosteriors(p);
    std::copy(post.begin(), post.end(), ds.posteriors.mutable_row(i).begin());
  }
  return ds;
}

std::vector<ClassId> ArgmaxClass(const PosteriorMatrix& posteriors) {
  std::vector<ClassId> out(posteriors.rows());
  for (std::size_t i = 0; i < posteriors.rows(); ++i) {
    const auto row = posteriors.row(i);
    // max_element returns the first maximum, i.e. the lowest class id.
    out[i] = static_cast<ClassId>(std::max_element(row.begin(), row.end()) -
                                  row.begin()) +
             1;
  }
  return out;
}

std::vector<ClassId> ClassifyNearestCenter(const SyntheticDataset& dataset) {
  return ArgmaxClass(dataset.posteriors);
}

std::vector<double> ConfidenceMaxProbability(const PosteriorMatrix& posteriors) {
  std::vector<double> out(posteriors.rows());
  for (std::size_t i = 0; i < posteriors.rows(); ++i) {
    const auto row = posteriors.row(i);
    out[i] = *std::max_element(row.begin(), row.end());
  }
  return out;
}

std::vector<double> ConfidenceBreakingTies(const PosteriorMatrix& posteriors) {
  if (posteriors.cols() < 2) {
    throw InputError("breaking-ties confidence needs at least two classes");
  }
  std::vector<double> out(posteriors.rows());
  for (std::size_t i = 0; i < posteriors.rows(); ++i) {
    const auto row = posteriors.row(i);
    double first = -1.0;
    double second = -1.0;
    for (double p : row) {
      if (p > first) {
        second = first;
        first = p;
      } else if (p > second) {
        second = p;
      }
    }
    out[i] = first - second;
  }
  return out;
}

}  // namespace rejmetrics
