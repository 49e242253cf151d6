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

// The triplet (A(r), Q(r), r) together with n determines the rejector's
// confusion matrix:
//
//   an = n A (1 - r)          mn = n (1 - r)(1 - A)
//   ar = n (r - Q + A(1 - r)) mr = n (Q - A(1 - r))

#ifndef REJMETRICS_RECONSTRUCTION_H_
#define REJMETRICS_RECONSTRUCTION_H_

#include "rejmetrics/partition.h"

namespace rejmetrics {

struct MeasureTriplet {
  double accuracy = 0.0;  // A(r)
  double quality = 0.0;   // Q(r)
  double rejected = 0.0;  // r, in [0, 1)
  Count n = 0;
};

// Counts are accepted within 1e-6 * n of an integer.
inline constexpr double kReconstructionTolerance = 1e-6;

// Throws InputError for out-of-range arguments, InfeasibleError when a count
// would be negative beyond tolerance, InconsistentCountError when a count is
// not an integer within tolerance.
PartitionCounts Reconstruct(const MeasureTriplet& triplet);

// Throws InputError when every sample is rejected (A undefined).
MeasureTriplet ToTriplet(const PartitionCounts& counts);

}  // namespace rejmetrics

#endif  // REJMETRICS_RECONSTRUCTION_H_
