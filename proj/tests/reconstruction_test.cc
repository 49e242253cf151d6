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

#include <random>

#include "gtest/gtest.h"
#include "rejmetrics/errors.h"
#include "rejmetrics/measures.h"

namespace rejmetrics {
namespace {

TEST(ReconstructTest, ReferenceTriplet) {
  EXPECT_EQ(Reconstruct({0.625, 0.65, 0.2, 100}), (PartitionCounts{50, 30, 5, 15}));
}

TEST(ReconstructTest, PerfectClassifierWithoutRejection) {
  EXPECT_EQ(Reconstruct({1.0, 1.0, 0.0, 10}), (PartitionCounts{10, 0, 0, 0}));
}

TEST(ReconstructTest, InfeasibleTripletNamesBound) {
  try {
    Reconstruct({0.5, 0.9, 0.2, 10});
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.bound(), "Q <= A(1-r) + r");
  }
  try {
    Reconstruct({0.9, 0.1, 0.2, 10});
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.bound(), "Q >= A(1-r)");
  }
}

TEST(ReconstructTest, NonIntegerCountsAreInconsistent) {
  EXPECT_THROW(Reconstruct({0.625, 0.65, 0.2, 99}), InconsistentCountError);
}

TEST(ReconstructTest, OutOfRangeInputs) {
  EXPECT_THROW(Reconstruct({0.5, 0.5, 1.0, 10}), InputError);
  EXPECT_THROW(Reconstruct({1.5, 0.5, 0.1, 10}), InputError);
  EXPECT_THROW(Reconstruct({0.5, -0.5, 0.1, 10}), InputError);
  EXPECT_THROW(Reconstruct({0.5, 0.5, 0.1, 0}), InputError);
}

TEST(ReconstructTest, ToleratesSerializationNoise) {
  EXPECT_EQ(Reconstruct({0.625 + 1e-12, 0.65 - 1e-12, 0.2 + 1e-13, 100}),
            (PartitionCounts{50, 30, 5, 15}));
}

TEST(ToTripletTest, Examples) {
  const MeasureTriplet t = ToTriplet({50, 30, 5, 15});
  EXPECT_EQ(t.accuracy, 0.625);
  EXPECT_EQ(t.quality, 0.65);
  EXPECT_EQ(t.rejected, 0.2);
  EXPECT_EQ(t.n, 100);
  const MeasureTriplet perfect = ToTriplet({8, 0, 0, 0});
  EXPECT_EQ(perfect.accuracy, 1.0);
  EXPECT_EQ(perfect.quality, 1.0);
  EXPECT_EQ(perfect.rejected, 0.0);
  EXPECT_THROW(ToTriplet({0, 0, 2, 3}), InputError);
}

TEST(ReconstructTest, RoundTripAndPhiRedundancyOnRandomCounts) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 3000; ++trial) {
    const PartitionCounts c{static_cast<Count>(rng() % 5000),
                            static_cast<Count>(rng() % 5000),
                            static_cast<Count>(rng() % 5000),
                            static_cast<Count>(rng() % 5000)};
    if (c.kept() == 0) continue;
    const PartitionCounts back = Reconstruct(ToTriplet(c));
    ASSERT_EQ(back, c) << c.ToString();
    EXPECT_EQ(RejectionQuality(back), RejectionQuality(c));
  }
}

}  // namespace
}  // namespace rejmetrics
