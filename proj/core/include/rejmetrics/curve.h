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

#ifndef REJMETRICS_CURVE_H_
#define REJMETRICS_CURVE_H_

#include <span>
#include <string_view>
#include <vector>

#include "rejmetrics/measures.h"
#include "rejmetrics/partition.h"

namespace rejmetrics {

// How samples with equal confidence are treated when sweeping thresholds.
enum class TiePolicy {
  // Tied samples are kept or rejected together; only cuts between distinct
  // confidence values are achievable.
  kGroupTies,
  // Ties are ordered by original index (lower index kept first); every
  // rejected count 0..n is achievable.
  kStableIndex,
};

std::string_view TiePolicyName(TiePolicy policy);  // "group" / "stable"
TiePolicy ParseTiePolicy(std::string_view name);   // throws InputError

struct CurvePoint {
  PartitionCounts counts;
  OperatingPoint point;
};

struct RejectionCurve {
  TiePolicy tie_policy = TiePolicy::kGroupTies;
  // Strictly increasing in r; first point is r == 0, last is r == 1.
  std::vector<CurvePoint> points;
};

// Sweeps "keep the k most confident samples, reject the rest" over every
// achievable k. Throws InputError on a length mismatch, an empty input or a
// NaN confidence.
RejectionCurve ComputeRejectionCurve(const AccuracyVector& accuracy,
                                     std::span<const double> confidence,
                                     TiePolicy policy = TiePolicy::kGroupTies);

// Mask rejecting the least confident samples. The rejected count is the
// achievable one nearest to round(fraction * n); on a tie between two
// achievable counts the smaller wins.
RejectionMask RejectLowestFraction(std::span<const double> confidence,
                                   double fraction,
                                   TiePolicy policy = TiePolicy::kGroupTies);

// Keeps the curve points nearest to `intervals + 1` evenly spaced targets in
// [0, 1]. Endpoints are always kept; duplicates collapse. `intervals == 0`
// returns the curve unchanged.
RejectionCurve ThinCurve(const RejectionCurve& curve, std::size_t intervals);

}  // namespace rejmetrics

#endif  // REJMETRICS_CURVE_H_
