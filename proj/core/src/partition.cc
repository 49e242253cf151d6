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

#include "rejmetrics/partition.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

Count CountOnes(const std::vector<std::uint8_t>& bits) {
  Count total = 0;
  for (std::uint8_t b : bits) {
    if (b > 1) throw InputError("binary vector entry must be 0 or 1");
    total += b;
  }
  return total;
}

}  // namespace

void LabeledPredictions::Validate() const {
  if (y_true.empty()) throw InputError("predictions are empty");
  if (y_pred.size() != y_true.size()) {
    throw InputError("y_true and y_pred lengths differ");
  }
  if (!confidence.empty() && confidence.size() != y_true.size()) {
    throw InputError("confidence length differs from y_true");
  }
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 1 || y_pred[i] < 1) {
      std::ostringstream msg;
      msg << "sample " << i << ": class ids must be positive integers";
      throw InputError(msg.str());
    }
  }
}

AccuracyVector::AccuracyVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)), accurate_(CountOnes(bits_)) {}

RejectionMask::RejectionMask(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)), rejected_(CountOnes(bits_)) {}

void PartitionCounts::Validate() const {
  if (an < 0 || mn < 0 || ar < 0 || mr < 0) {
    throw InputError("partition counts must be nonnegative: " + ToString());
  }
  if (n() == 0) throw InputError("partition counts are all zero");
}

std::string PartitionCounts::ToString() const {
  std::ostringstream out;
  out << "(an=" << an << ", mn=" << mn << ", ar=" << ar << ", mr=" << mr << ")";
  return out.str();
}

AccuracyVector ComputeAccuracyVector(const LabeledPredictions& preds) {
  preds.Validate();
  return ComputeAccuracyVector(preds.y_true, preds.y_pred);
}

AccuracyVector ComputeAccuracyVector(std::span<const ClassId> y_true,
                                     std::span<const ClassId> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw InputError("y_true and y_pred lengths differ");
  }
  std::vector<std::uint8_t> bits(y_true.size());
  std::transform(y_true.begin(), y_true.end(), y_pred.begin(), bits.begin(),
                 [](ClassId t, ClassId p) { return std::uint8_t{t == p}; });
  return AccuracyVector(std::move(bits));
}

PartitionCounts ComputePartitionCounts(const AccuracyVector& accuracy,
                                       const RejectionMask& mask) {
  if (accuracy.size() != mask.size()) {
    throw InputError("accuracy vector and rejection mask lengths differ");
  }
  PartitionCounts c;
  for (std::size_t i = 0; i < accuracy.size(); ++i) {
    const bool ok = accuracy[i];
    if (mask[i]) {
      ++(ok ? c.ar : c.mr);
    } else {
      ++(ok ? c.an : c.mn);
    }
  }
  return c;
}

bool IsThresholdConsistent(const RejectionMask& mask,
                           std::span<const double> confidence) {
  if (mask.size() != confidence.size()) {
    throw InputError("rejection mask and confidence lengths differ");
  }
  double max_rejected = -std::numeric_limits<double>::infinity();
  double min_kept = std::numeric_limits<double>::infinity();
  bool any_rejected = false;
  bool any_kept = false;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) {
      any_rejected = true;
      max_rejected = std::max(max_rejected, confidence[i]);
    } else {
      any_kept = true;
      min_kept = std::min(min_kept, confidence[i]);
    }
  }
  return !any_rejected || !any_kept || max_rejected < min_kept;
}

}  // namespace rejmetrics
