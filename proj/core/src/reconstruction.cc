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

#include "rejmetrics/reconstruction.h"

#include <array>
#include <cmath>
#include <sstream>
#include <string>

#include "rejmetrics/errors.h"
#include "rejmetrics/measures.h"

namespace rejmetrics {
namespace {

struct RawCount {
  const char* name;
  const char* bound;  // inequality that keeps the count nonnegative
  long double value;
};

}  // namespace

PartitionCounts Reconstruct(const MeasureTriplet& t) {
  if (t.n < 1) throw InputError("sample count must be positive");
  if (!(t.accuracy >= 0.0 && t.accuracy <= 1.0)) {
    throw InputError("A must lie in [0, 1]");
  }
  if (!(t.quality >= 0.0 && t.quality <= 1.0)) {
    throw InputError("Q must lie in [0, 1]");
  }
  if (!(t.rejected >= 0.0 && t.rejected < 1.0)) {
    throw InputError("r must lie in [0, 1)");
  }

  using Real = long double;
  const Real n = static_cast<Real>(t.n);
  const Real r = t.rejected;
  const Real q = t.quality;
  const Real kept_accurate = Real{t.accuracy} * (1 - r);  // A(1 - r)

  const std::array<RawCount, 4> raw = {{
      {"an", "A(1-r) >= 0", n * kept_accurate},
      {"mn", "A <= 1", n * (1 - r) * (1 - Real{t.accuracy})},
      {"ar", "Q <= A(1-r) + r", n * (r - q + kept_accurate)},
      {"mr", "Q >= A(1-r)", n * (q - kept_accurate)},
  }};

  const Real tolerance = kReconstructionTolerance * n;
  // All bounds are checked before integrality so an infeasible triplet is
  // reported as such even when n does not fit it.
  for (const RawCount& count : raw) {
    if (count.value < -tolerance) {
      std::ostringstream msg;
      msg << "infeasible triplet: violates " << count.bound << " ("
          << count.name << " = " << static_cast<double>(count.value) << ")";
      throw InfeasibleError(count.bound, msg.str());
    }
  }
  std::array<Count, 4> rounded{};
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Real v = raw[i].value;
    const Real nearest = std::round(v);
    if (std::abs(v - nearest) > tolerance) {
      std::ostringstream msg;
      msg << "triplet is not consistent with n = " << t.n << ": " << raw[i].name
          << " = " << static_cast<double>(v) << " is not an integer";
      throw InconsistentCountError(msg.str());
    }
    rounded[i] = static_cast<Count>(nearest);
  }

  PartitionCounts c{rounded[0], rounded[1], rounded[2], rounded[3]};
  if (c.n() != t.n) {
    throw InconsistentCountError("reconstructed counts do not sum to n");
  }
  return c;
}

MeasureTriplet ToTriplet(const PartitionCounts& counts) {
  const OperatingPoint p = MakeOperatingPoint(counts);
  if (!p.accuracy) {
    throw InputError(
        "every sample is rejected; the triplet needs a defined nonrejected "
        "accuracy");
  }
  return {*p.accuracy, p.quality, p.rejected, counts.n()};
}

}  // namespace rejmetrics
