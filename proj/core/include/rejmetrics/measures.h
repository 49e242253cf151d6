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

// The three performance measures of a classifier with rejection:
//
//   nonrejected accuracy   A = an / (an + mn)
//   classification quality Q = (an + mr) / n
//   rejection quality      phi = (mr / ar) / (M / Acc)
//
// where M = mn + mr and Acc = an + ar. Count-based evaluation is exact
// (integer numerator and denominator, one rounding). The closed forms take
// (A(0), A(r), r) instead of counts.

#ifndef REJMETRICS_MEASURES_H_
#define REJMETRICS_MEASURES_H_

#include <optional>

#include "rejmetrics/partition.h"

namespace rejmetrics {

struct OperatingPoint {
  double rejected = 0.0;            // r
  std::optional<double> accuracy;   // A; empty when every sample is rejected
  double quality = 0.0;             // Q
  double rejection_quality = 1.0;   // phi, may be +inf
  Count n = 0;
};

double RejectedFraction(const PartitionCounts& counts);

// Empty when an + mn == 0.
std::optional<double> NonrejectedAccuracy(const PartitionCounts& counts);

double ClassificationQuality(const PartitionCounts& counts);

// Conventions for the degenerate quotients:
//   nothing rejected                 -> 1
//   rejected set has no accurate one -> +inf
//   classifier never errs (M == 0)   -> 1
double RejectionQuality(const PartitionCounts& counts);

OperatingPoint MakeOperatingPoint(const PartitionCounts& counts);

struct ClosedFormMeasures {
  double quality = 0.0;
  double rejection_quality = 1.0;
};

// Q and phi from the base accuracy A(0), the nonrejected accuracy A(r) and
// the rejected fraction r:
//
//   Q(r)   = 2 A(r)(1 - r) + r - A(0)
//   phi(r) = (r - A(0) + A(r)(1 - r)) / (A(0) - A(r)(1 - r)) * A(0) / (1 - A(0))
//
// Uses the same degenerate conventions as RejectionQuality. At r == 1 the
// A(r) term vanishes and `accuracy_at_r` is ignored. Throws InputError if an
// argument is outside [0, 1].
ClosedFormMeasures MeasuresClosedForm(double base_accuracy, double accuracy_at_r,
                                      double r);

}  // namespace rejmetrics

#endif  // REJMETRICS_MEASURES_H_
