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

#include "rejmetrics/measures.h"

#include <cmath>
#include <limits>
#include <string>

#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Quotients of two integers rounded once.
double Ratio(long double num, long double den) {
  return static_cast<double>(num / den);
}

void CheckUnit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(std::string(name) + " must lie in [0, 1], got " +
                     std::to_string(v));
  }
}

}  // namespace

double RejectedFraction(const PartitionCounts& counts) {
  counts.Validate();
  return Ratio(counts.rejected(), counts.n());
}

std::optional<double> NonrejectedAccuracy(const PartitionCounts& counts) {
  counts.Validate();
  if (counts.kept() == 0) return std::nullopt;
  return Ratio(counts.an, counts.kept());
}

double ClassificationQuality(const PartitionCounts& counts) {
  counts.Validate();
  return Ratio(counts.an + counts.mr, counts.n());
}

double RejectionQuality(const PartitionCounts& counts) {
  counts.Validate();
  if (counts.rejected() == 0) return 1.0;
  if (counts.ar == 0) return kInf;
  if (counts.misclassified() == 0) return 1.0;
  // (mr / ar) / (M / Acc) = mr Acc / (ar M); products fit a long double
  // mantissa for n < 2^32.
  const long double num =
      static_cast<long double>(counts.mr) * counts.accurate();
  const long double den =
      static_cast<long double>(counts.ar) * counts.misclassified();
  return Ratio(num, den);
}

OperatingPoint MakeOperatingPoint(const PartitionCounts& counts) {
  OperatingPoint p;
  p.rejected = RejectedFraction(counts);
  p.accuracy = NonrejectedAccuracy(counts);
  p.quality = ClassificationQuality(counts);
  p.rejection_quality = RejectionQuality(counts);
  p.n = counts.n();
  return p;
}

ClosedFormMeasures MeasuresClosedForm(double base_accuracy, double accuracy_at_r,
                                      double r) {
  CheckUnit(base_accuracy, "A(0)");
  CheckUnit(r, "r");
  if (r < 1.0) CheckUnit(accuracy_at_r, "A(r)");

  // Extended precision keeps the cancellation in r - A(0) + A(r)(1 - r) well
  // below double resolution.
  using Real = long double;
  const Real a0 = base_accuracy;
  const Real rr = r;
  const Real kept_accurate = r < 1.0 ? Real{accuracy_at_r} * (1 - rr) : Real{0};

  ClosedFormMeasures out;
  out.quality = static_cast<double>(2 * kept_accurate + rr - a0);

  // Numerator and denominator are mr/n and ar/n; a true nonzero value is at
  // least 1/n, far above this.
  constexpr Real kZero = 64 * std::numeric_limits<double>::epsilon();
  const Real rejected_misclassified = rr - a0 + kept_accurate;
  const Real rejected_accurate = a0 - kept_accurate;
  if (r == 0.0) {
    out.rejection_quality = 1.0;
  } else if (rejected_accurate <= kZero) {
    out.rejection_quality = kInf;
  } else if (base_accuracy == 1.0) {
    out.rejection_quality = 1.0;
  } else if (rejected_misclassified <= kZero) {
    out.rejection_quality = 0.0;
  } else {
    out.rejection_quality = static_cast<double>(
        rejected_misclassified / rejected_accurate * a0 / (1 - a0));
  }
  return out;
}

}  // namespace rejmetrics
