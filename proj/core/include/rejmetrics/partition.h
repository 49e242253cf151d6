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

// Data model of a classifier with rejection: labeled predictions, the binary
// accuracy and rejection vectors, and the four-way partition of the samples
// into accurate/misclassified x kept/rejected.

#ifndef REJMETRICS_PARTITION_H_
#define REJMETRICS_PARTITION_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rejmetrics {

// Class ids are positive; 0 is reserved for "rejected".
using ClassId = std::int32_t;
using Count = std::int64_t;

struct LabeledPredictions {
  std::vector<ClassId> y_true;
  std::vector<ClassId> y_pred;
  // Higher means more confident. May be empty when no confidence is known.
  std::vector<double> confidence;

  std::size_t size() const { return y_true.size(); }

  // Throws InputError unless the sequences have equal nonzero length and all
  // class ids are positive. An empty `confidence` is accepted.
  void Validate() const;
};

// a[i] == 1 iff sample i is accurately classified.
class AccuracyVector {
 public:
  AccuracyVector() = default;
  explicit AccuracyVector(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  // ||a||, the number of accurately classified samples.
  Count accurate() const { return accurate_; }

  friend bool operator==(const AccuracyVector&, const AccuracyVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  Count accurate_ = 0;
};

// mask[i] == 1 iff sample i is rejected.
class RejectionMask {
 public:
  RejectionMask() = default;
  explicit RejectionMask(std::vector<std::uint8_t> bits);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }
  Count rejected() const { return rejected_; }

  friend bool operator==(const RejectionMask&, const RejectionMask&) = default;

 private:
  std::vector<std::uint8_t> bits_;
  Count rejected_ = 0;
};

// The rejector's confusion matrix.
struct PartitionCounts {
  Count an = 0;  // accurate, not rejected
  Count mn = 0;  // misclassified, not rejected
  Count ar = 0;  // accurate, rejected
  Count mr = 0;  // misclassified, rejected

  Count n() const { return an + mn + ar + mr; }
  Count kept() const { return an + mn; }
  Count rejected() const { return ar + mr; }
  Count accurate() const { return an + ar; }
  Count misclassified() const { return mn + mr; }

  // Throws InputError on a negative entry or n == 0.
  void Validate() const;

  std::string ToString() const;

  friend bool operator==(const PartitionCounts&, const PartitionCounts&) = default;
};

AccuracyVector ComputeAccuracyVector(const LabeledPredictions& preds);
AccuracyVector ComputeAccuracyVector(std::span<const ClassId> y_true,
                                     std::span<const ClassId> y_pred);

PartitionCounts ComputePartitionCounts(const AccuracyVector& accuracy,
                                       const RejectionMask& mask);

// True iff c[i] >= c[j] implies mask[i] <= mask[j] for all pairs, i.e. every
// kept sample is strictly more confident than every rejected one. Tied
// samples must share a decision.
bool IsThresholdConsistent(const RejectionMask& mask,
                           std::span<const double> confidence);

}  // namespace rejmetrics

#endif  // REJMETRICS_PARTITION_H_
