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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

RejectionMask Mask(std::vector<std::uint8_t> bits) { return RejectionMask(std::move(bits)); }
AccuracyVector Acc(std::vector<std::uint8_t> bits) { return AccuracyVector(std::move(bits)); }

TEST(AccuracyVectorTest, ComparesLabels) {
  const std::vector<ClassId> t = {1, 2, 2};
  const std::vector<ClassId> p = {1, 2, 1};
  const AccuracyVector a = ComputeAccuracyVector(t, p);
  EXPECT_EQ(a, Acc({1, 1, 0}));
  EXPECT_EQ(a.accurate(), 2);
}

TEST(AccuracyVectorTest, IdenticalLabelsAreAllAccurate) {
  const std::vector<ClassId> t = {3, 1, 4, 1, 5};
  EXPECT_EQ(ComputeAccuracyVector(t, t), Acc({1, 1, 1, 1, 1}));
}

TEST(AccuracyVectorTest, TotalMisclassification) {
  const std::vector<ClassId> t = {1, 1, 1, 1};
  const std::vector<ClassId> p = {2, 2, 2, 2};
  EXPECT_EQ(ComputeAccuracyVector(t, p).accurate(), 0);
}

TEST(AccuracyVectorTest, LengthMismatchIsInputError) {
  const std::vector<ClassId> t = {1, 2};
  const std::vector<ClassId> p = {1};
  EXPECT_THROW(ComputeAccuracyVector(t, p), InputError);
}

TEST(LabeledPredictionsTest, RejectsNonPositiveClassIds) {
  LabeledPredictions preds{{1, 0}, {1, 1}, {}};
  EXPECT_THROW(preds.Validate(), InputError);
  preds.y_true = {1, 2};
  EXPECT_NO_THROW(preds.Validate());
  preds.confidence = {0.5};
  EXPECT_THROW(preds.Validate(), InputError);
}

TEST(BinaryVectorTest, RejectsEntriesOtherThanZeroOrOne) {
  EXPECT_THROW(Mask({0, 2}), InputError);
  EXPECT_THROW(Acc({1, 7}), InputError);
}

TEST(PartitionCountsTest, EnumeratesFourCells) {
  const PartitionCounts c = ComputePartitionCounts(Acc({1, 1, 0, 0}), Mask({0, 1, 0, 1}));
  EXPECT_EQ(c, (PartitionCounts{1, 1, 1, 1}));
}

TEST(PartitionCountsTest, NoRejectionKeepsEverything) {
  const PartitionCounts c = ComputePartitionCounts(Acc({1, 0, 1, 1, 0}), Mask({0, 0, 0, 0, 0}));
  EXPECT_EQ(c, (PartitionCounts{3, 2, 0, 0}));
}

TEST(PartitionCountsTest, ReferenceInstance) {
  // 55 accurate of 100; reject 5 accurate and 15 misclassified samples.
  std::vector<std::uint8_t> a(100, 0), m(100, 0);
  for (int i = 0; i < 55; ++i) a[i] = 1;
  for (int i = 0; i < 5; ++i) m[i] = 1;
  for (int i = 55; i < 70; ++i) m[i] = 1;
  EXPECT_EQ(ComputePartitionCounts(Acc(a), Mask(m)), (PartitionCounts{50, 30, 5, 15}));
}

TEST(PartitionCountsTest, LengthMismatchIsInputError) {
  EXPECT_THROW(ComputePartitionCounts(Acc({1, 0}), Mask({0})), InputError);
}

TEST(PartitionCountsTest, ValidateRejectsNegativeAndEmpty) {
  EXPECT_THROW((PartitionCounts{-1, 2, 0, 0}).Validate(), InputError);
  EXPECT_THROW((PartitionCounts{0, 0, 0, 0}).Validate(), InputError);
  EXPECT_NO_THROW((PartitionCounts{0, 0, 0, 1}).Validate());
}

TEST(PartitionCountsTest, CompletenessAndFundamentalIdentityOnRandomMasks) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 60;
    std::vector<std::uint8_t> a(n), m(n);
    for (auto& b : a) b = rng() & 1;
    for (auto& b : m) b = rng() & 1;
    const AccuracyVector acc = Acc(a);
    const RejectionMask mask = Mask(m);
    const PartitionCounts c = ComputePartitionCounts(acc, mask);
    EXPECT_EQ(c.n(), static_cast<Count>(n));
    EXPECT_EQ(c.an + c.ar, acc.accurate());
    EXPECT_EQ(c.rejected(), mask.rejected());
  }
}

TEST(ThresholdConsistencyTest, RejectedMustBeStrictlyLessConfident) {
  const std::vector<double> c = {0.9, 0.2, 0.5, 0.2};
  EXPECT_TRUE(IsThresholdConsistent(Mask({0, 1, 0, 1}), c));
  EXPECT_FALSE(IsThresholdConsistent(Mask({0, 1, 0, 0}), c));  // splits a tie
  EXPECT_FALSE(IsThresholdConsistent(Mask({1, 0, 0, 0}), c));
  EXPECT_TRUE(IsThresholdConsistent(Mask({0, 0, 0, 0}), c));
  EXPECT_TRUE(IsThresholdConsistent(Mask({1, 1, 1, 1}), c));
}

}  // namespace
}  // namespace rejmetrics
