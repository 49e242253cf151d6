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

#include "rejmetrics/curve.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

// Indices sorted by decreasing confidence, ties by increasing index.
std::vector<std::size_t> ConfidenceOrder(std::span<const double> confidence) {
  for (std::size_t i = 0; i < confidence.size(); ++i) {
    if (std::isnan(confidence[i])) {
      throw InputError("confidence of sample " + std::to_string(i) + " is NaN");
    }
  }
  std::vector<std::size_t> order(confidence.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return confidence[a] > confidence[b];
  });
  return order;
}

// Achievable kept counts k in decreasing order (increasing rejection).
std::vector<std::size_t> AchievableKeptCounts(
    std::span<const double> confidence, const std::vector<std::size_t>& order,
    TiePolicy policy) {
  const std::size_t n = order.size();
  std::vector<std::size_t> kept;
  kept.reserve(n + 1);
  for (std::size_t k = n + 1; k-- > 0;) {
    const bool boundary = k == 0 || k == n ||
                          policy == TiePolicy::kStableIndex ||
                          confidence[order[k - 1]] != confidence[order[k]];
    if (boundary) kept.push_back(k);
  }
  return kept;
}

}  // namespace

std::string_view TiePolicyName(TiePolicy policy) {
  return policy == TiePolicy::kGroupTies ? "group" : "stable";
}

TiePolicy ParseTiePolicy(std::string_view name) {
  if (name == "group") return TiePolicy::kGroupTies;
  if (name == "stable") return TiePolicy::kStableIndex;
  throw InputError("unknown tie policy '" + std::string(name) +
                   "' (expected group or stable)");
}

RejectionCurve ComputeRejectionCurve(const AccuracyVector& accuracy,
                                     std::span<const double> confidence,
                                     TiePolicy policy) {
  if (accuracy.size() != confidence.size()) {
    throw InputError("accuracy vector and confidence lengths differ");
  }
  if (accuracy.size() == 0) throw InputError("cannot sweep an empty input");

  const auto order = ConfidenceOrder(confidence);
  const std::size_t n = order.size();

  // accurate_prefix[k] = accurate samples among the k most confident.
  std::vector<Count> accurate_prefix(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    accurate_prefix[k + 1] = accurate_prefix[k] + (accuracy[order[k]] ? 1 : 0);
  }
  const Count total_accurate = accurate_prefix[n];
  const Count total = static_cast<Count>(n);

  RejectionCurve curve;
  curve.tie_policy = policy;
  for (std::size_t k : AchievableKeptCounts(confidence, order, policy)) {
    PartitionCounts c;
    c.an = accurate_prefix[k];
    c.mn = static_cast<Count>(k) - c.an;
    c.ar = total_accurate - c.an;
    c.mr = (total - static_cast<Count>(k)) - c.ar;
    curve.points.push_back({c, MakeOperatingPoint(c)});
  }
  return curve;
}

RejectionMask RejectLowestFraction(std::span<const double> confidence,
                                   double fraction, TiePolicy policy) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw InputError("reject fraction must lie in [0, 1]");
  }
  if (confidence.empty()) throw InputError("confidence is empty");
  const auto order = ConfidenceOrder(confidence);
  const std::size_t n = order.size();
  const double target = std::round(fraction * static_cast<double>(n));

  std::size_t best_kept = n;
  double best_gap = std::numeric_limits<double>::infinity();
  // Visits rejected counts in increasing order, so a tie keeps the smaller.
  for (std::size_t k : AchievableKeptCounts(confidence, order, policy)) {
    const double gap = std::abs(static_cast<double>(n - k) - target);
    if (gap < best_gap) {
      best_gap = gap;
      best_kept = k;
    }
  }
  std::vector<std::uint8_t> bits(n, 0);
  for (std::size_t i = best_kept; i < n; ++i) bits[order[i]] = 1;
  return RejectionMask(std::move(bits));
}

RejectionCurve ThinCurve(const RejectionCurve& curve, std::size_t intervals) {
  if (intervals == 0 || curve.points.size() <= 2) return curve;
  RejectionCurve out;
  out.tie_policy = curve.tie_policy;
  const auto& pts = curve.points;
  std::size_t prev = pts.size();
  std::size_t j = 0;
  for (std::size_t t = 0; t <= intervals; ++t) {
    const double target = static_cast<double>(t) / static_cast<double>(intervals);
    while (j + 1 < pts.size() &&
           std::abs(pts[j + 1].point.rejected - target) <=
               std::abs(pts[j].point.rejected - target)) {
      ++j;
    }
    if (j != prev) {
      out.points.push_back(pts[j]);
      prev = j;
    }
  }
  return out;
}

}  // namespace rejmetrics
