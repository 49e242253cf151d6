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

#include "rejmetrics/comparison.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "rejmetrics/errors.h"

namespace rejmetrics {
namespace {

const AccuracyPoint kP1{0.625, 0.2};
const AccuracyPoint kP0{0.55, 0.0};

// Per-sample loss: 1 for a kept misclassified sample, rho for a rejected one.
double LossOracle(const PartitionCounts& c, double rho) {
  double total = 0.0;
  for (Count i = 0; i < c.mn; ++i) total += 1.0;
  for (Count i = 0; i < c.rejected(); ++i) total += rho;
  return total;
}

PartitionCounts RandomCounts(std::mt19937_64& rng, Count n, Count accurate) {
  const Count ar = static_cast<Count>(rng() % (accurate + 1));
  const Count mr = static_cast<Count>(rng() % (n - accurate + 1));
  return {accurate - ar, n - accurate - mr, ar, mr};
}

TEST(RelativeOptimalityTest, ReferenceExample) {
  const RelativeOptimality b = ComputeRelativeOptimality(kP1, kP0);
  EXPECT_NEAR(b.beta, 0.5, 1e-12);
  EXPECT_EQ(b.direction, Direction::kHigherRejection);
  EXPECT_EQ(ComputeRelativeOptimality(kP0, kP1).direction, Direction::kLowerRejection);
}

TEST(RelativeOptimalityTest, EqualFractionIsNotApplicable) {
  EXPECT_THROW(ComputeRelativeOptimality(kP1, AccuracyPoint{0.7, 0.2}), NotApplicableError);
  EXPECT_THROW(ComputeRelativeOptimality(PartitionCounts{5, 5, 1, 1}, PartitionCounts{6, 4, 0, 2}),
               NotApplicableError);
}

TEST(RelativeOptimalityTest, OutOfRangePointIsInputError) {
  EXPECT_THROW(ComputeRelativeOptimality(AccuracyPoint{1.5, 0.2}, kP0), InputError);
  EXPECT_THROW(ComputeRelativeOptimality(AccuracyPoint{0.5, -0.2}, kP0), InputError);
}

TEST(RelativeOptimalityTest, AntisymmetricAndCountsAgree) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Count n = 2 + static_cast<Count>(rng() % 300);
    const Count accurate = static_cast<Count>(rng() % (n + 1));
    const PartitionCounts c1 = RandomCounts(rng, n, accurate);
    const PartitionCounts c0 = RandomCounts(rng, n, accurate);
    if (c1.rejected() == c0.rejected() || c1.kept() == 0 || c0.kept() == 0) continue;
    const double exact = ComputeRelativeOptimality(c1, c0).beta;
    EXPECT_EQ(ComputeRelativeOptimality(c0, c1).beta, -exact);
    const auto p1 = ToAccuracyPoint(MakeOperatingPoint(c1));
    const auto p0 = ToAccuracyPoint(MakeOperatingPoint(c0));
    EXPECT_NEAR(ComputeRelativeOptimality(p1, p0).beta, exact, 1e-9);
  }
}

TEST(CostTest, Examples) {
  EXPECT_NEAR(Cost(kP1, 100, CostSpec(0.3)), 36.0, 1e-12);
  for (double rho : {0.0, 0.4, 1.0}) EXPECT_NEAR(Cost(kP0, 100, CostSpec(rho)), 45.0, 1e-12);
  EXPECT_EQ(Cost(AccuracyPoint{1.0, 0.0}, 77, CostSpec(0.5)), 0.0);
  EXPECT_EQ(Cost(PartitionCounts{50, 30, 5, 15}, CostSpec(0.3)), 36.0);
}

TEST(CostTest, MatchesPerSampleLossAndIsAffine) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const Count n = 1 + static_cast<Count>(rng() % 200);
    const PartitionCounts c = RandomCounts(rng, n, static_cast<Count>(rng() % (n + 1)));
    for (int k = 0; k <= 10; ++k) {
      const double rho = k / 10.0;
      EXPECT_NEAR(Cost(c, CostSpec(rho)), LossOracle(c, rho), 1e-9);
    }
    // Slope in rho is r n; slope in A is -(1 - r) n.
    const AccuracyPoint p{0.25 + 0.5 * (rng() % 100) / 100.0, (rng() % 90) / 100.0};
    const double d_rho = Cost(p, n, CostSpec(0.75)) - Cost(p, n, CostSpec(0.25));
    EXPECT_NEAR(d_rho / 0.5, p.rejected * n, 1e-9);
    const AccuracyPoint q{p.accuracy + 0.125, p.rejected};
    const double d_a = Cost(q, n, CostSpec(0.5)) - Cost(p, n, CostSpec(0.5));
    EXPECT_NEAR(d_a / 0.125, -(1.0 - p.rejected) * n, 1e-9);
  }
}

TEST(CostSpecTest, RangeIsChecked) {
  EXPECT_THROW(CostSpec(-0.01), InputError);
  EXPECT_THROW(CostSpec(1.01), InputError);
  EXPECT_THROW(CostSpec(std::nan("")), InputError);
  EXPECT_NO_THROW(CostSpec(0.0));
  EXPECT_NO_THROW(CostSpec(1.0));
}

TEST(DeltaCostSignTest, Examples) {
  EXPECT_EQ(DeltaCostSign(kP1, kP0, CostSpec(0.3)), 1);
  EXPECT_EQ(DeltaCostSign(kP1, kP0, CostSpec(0.75)), 0);
  EXPECT_EQ(DeltaCostSign(kP1, kP0, CostSpec(0.9)), -1);
  EXPECT_THROW(DeltaCostSign(kP1, AccuracyPoint{0.1, 0.2}, CostSpec(0.5)), NotApplicableError);
}

TEST(DeltaCostSignTest, SignLawOnRandomCounts) {
  std::mt19937_64 rng(29);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Count n = 2 + static_cast<Count>(rng() % 500);
    const Count accurate = static_cast<Count>(rng() % (n + 1));
    PartitionCounts c1 = RandomCounts(rng, n, accurate);
    PartitionCounts c0 = RandomCounts(rng, n, accurate);
    if (c1.rejected() == c0.rejected() || c1.kept() == 0 || c0.kept() == 0) continue;
    if (c1.rejected() < c0.rejected()) std::swap(c1, c0);
    const double beta = ComputeRelativeOptimality(c1, c0).beta;
    for (int k = 0; k <= 100; ++k) {
      const double rho = k / 100.0;
      const double gap = RhoThreshold(beta) - rho;
      if (std::abs(gap) < 1e-9) continue;
      const double dl = LossOracle(c0, rho) - LossOracle(c1, rho);
      const int expected = gap > 0 ? 1 : -1;
      ASSERT_EQ(dl > 0 ? 1 : -1, expected) << c1.ToString() << c0.ToString() << rho;
      const auto p1 = ToAccuracyPoint(MakeOperatingPoint(c1));
      const auto p0 = ToAccuracyPoint(MakeOperatingPoint(c0));
      ASSERT_EQ(DeltaCostSign(p1, p0, CostSpec(rho)), expected);
      ++checked;
    }
  }
  EXPECT_GT(checked, 10000);
}

TEST(RhoThresholdTest, Examples) {
  EXPECT_EQ(RhoThreshold(0.5), 0.75);
  EXPECT_EQ(RhoThreshold(1.0), 1.0);
  EXPECT_EQ(RhoThreshold(-1.0), 0.0);
}

TEST(EnvelopesTest, Examples) {
  // 100 samples, 55 accurate. Rejecting 20 misclassified samples keeps
  // 55 of 80; rejecting 20 accurate ones keeps 35 of 80.
  const Envelopes e = ComputeEnvelopes(kP0, 0.2);
  EXPECT_DOUBLE_EQ(e.best, 55.0 / 80.0);
  EXPECT_DOUBLE_EQ(e.worst, 35.0 / 80.0);
  EXPECT_TRUE(e.best_feasible);
  EXPECT_TRUE(e.worst_feasible);
  EXPECT_NEAR(ComputeRelativeOptimality({e.best, 0.2}, kP0).beta, 1.0, 1e-12);
  EXPECT_NEAR(ComputeRelativeOptimality({e.worst, 0.2}, kP0).beta, -1.0, 1e-12);
  EXPECT_DOUBLE_EQ(*MakeOperatingPoint({55, 25, 0, 20}).accuracy, e.best);
  EXPECT_DOUBLE_EQ(*MakeOperatingPoint({35, 45, 20, 0}).accuracy, e.worst);

  // Lowering the fraction from the reference point: keeping 20 more accurate
  // samples gives 70 of 100, keeping 20 more misclassified gives 50 of 100.
  const Envelopes down = ComputeEnvelopes(kP1, 0.0);
  EXPECT_DOUBLE_EQ(down.best, 0.7);
  EXPECT_DOUBLE_EQ(down.worst, 0.5);
  EXPECT_NEAR(ComputeRelativeOptimality({down.best, 0.0}, kP1).beta, 1.0, 1e-12);
  EXPECT_NEAR(ComputeRelativeOptimality({down.worst, 0.0}, kP1).beta, -1.0, 1e-12);

  const Envelopes clamped = ComputeEnvelopes({0.9, 0.1}, 0.5);
  EXPECT_DOUBLE_EQ(clamped.best_raw, 1.62);
  EXPECT_EQ(clamped.best, 1.0);
  EXPECT_FALSE(clamped.best_feasible);
  EXPECT_DOUBLE_EQ(clamped.worst_raw, 0.82);
  EXPECT_TRUE(clamped.worst_feasible);

  const Envelopes negative = ComputeEnvelopes({0.1, 0.0}, 0.5);
  EXPECT_LT(negative.worst_raw, 0.0);
  EXPECT_EQ(negative.worst, 0.0);
  EXPECT_FALSE(negative.worst_feasible);

  EXPECT_THROW(ComputeEnvelopes(kP1, 0.2), NotApplicableError);
  EXPECT_THROW(ComputeEnvelopes(kP1, 1.0), InputError);
}

TEST(EnvelopesTest, RoundTripInBothDirections) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.0, 0.95);
  for (int trial = 0; trial < 1000; ++trial) {
    const AccuracyPoint p0{u(rng) / 0.95, u(rng)};
    const double r1 = u(rng);
    if (r1 == p0.rejected) continue;
    const Envelopes e = ComputeEnvelopes(p0, r1);
    if (e.best_feasible) {
      EXPECT_NEAR(ComputeRelativeOptimality({e.best, r1}, p0).beta, 1.0, 1e-9);
    }
    if (e.worst_feasible) {
      EXPECT_NEAR(ComputeRelativeOptimality({e.worst, r1}, p0).beta, -1.0, 1e-9);
    }
  }
}

TEST(DominanceTest, Cases) {
  auto v = Dominance({50, 30, 5, 15}, {45, 35, 10, 10});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, VerdictKind::kDominates);
  EXPECT_EQ(v->dominance_case, DominanceCase::kEqualRejected);

  v = Dominance({50, 25, 5, 20}, {50, 30, 5, 15});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, VerdictKind::kDominates);
  EXPECT_EQ(v->dominance_case, DominanceCase::kEqualAccurateKept);

  v = Dominance({45, 30, 10, 15}, {50, 30, 5, 15});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, VerdictKind::kDominated);
  EXPECT_EQ(v->dominance_case, DominanceCase::kEqualMisclassifiedKept);

  EXPECT_FALSE(Dominance({50, 30, 5, 15}, {50, 30, 5, 15}));
  EXPECT_FALSE(Dominance({50, 30, 5, 15}, {52, 20, 3, 25}));
}

TEST(DominanceTest, IncomparableInputsAreInputErrors) {
  EXPECT_THROW(Dominance({50, 30, 5, 15}, {50, 30, 5, 16}), InputError);
  EXPECT_THROW(Dominance({50, 30, 5, 15}, {51, 29, 5, 15}), InputError);
}

TEST(DominanceTest, DominantNeverCostsMore) {
  std::mt19937_64 rng(37);
  int verdicts = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Count n = 1 + static_cast<Count>(rng() % 40);
    const Count accurate = static_cast<Count>(rng() % (n + 1));
    const PartitionCounts c1 = RandomCounts(rng, n, accurate);
    const PartitionCounts c2 = RandomCounts(rng, n, accurate);
    const auto v = Dominance(c1, c2);
    if (!v) continue;
    ++verdicts;
    const auto& winner = v->kind == VerdictKind::kDominates ? c1 : c2;
    const auto& loser = v->kind == VerdictKind::kDominates ? c2 : c1;
    for (int k = 0; k <= 100; ++k) {
      EXPECT_LE(LossOracle(winner, k / 100.0), LossOracle(loser, k / 100.0) + 1e-9);
    }
  }
  EXPECT_GT(verdicts, 500);
}

TEST(CompareRejectorsTest, ReferenceExample) {
  const OperatingPoint first = OperatingPointFromAccuracy(kP1, 0.55);
  const OperatingPoint second = OperatingPointFromAccuracy(kP0, 0.55);
  ComparisonVerdict v = CompareRejectors(first, second, CostSpec(0.3));
  EXPECT_EQ(v.kind, VerdictKind::kCostDependent);
  EXPECT_NEAR(*v.beta, 0.5, 1e-12);
  EXPECT_NEAR(*v.rho_threshold, 0.75, 1e-12);
  EXPECT_EQ(v.outcome, Outcome::kOutperforms);

  v = CompareRejectors(first, second, CostSpec(0.75));
  EXPECT_EQ(v.outcome, Outcome::kEquivalent);
  EXPECT_EQ(v.forms->accuracy_form, Outcome::kEquivalent);
  EXPECT_EQ(v.forms->quality_form, Outcome::kEquivalent);

  // Swapping the arguments inverts the outcome but keeps the threshold.
  v = CompareRejectors(second, first, CostSpec(0.3));
  EXPECT_EQ(v.outcome, Outcome::kOutperformed);
  EXPECT_NEAR(*v.beta, -0.5, 1e-12);
  EXPECT_NEAR(*v.rho_threshold, 0.75, 1e-12);

  v = CompareRejectors(first, second, std::nullopt);
  EXPECT_FALSE(v.outcome);
  EXPECT_TRUE(v.rho_threshold);
}

TEST(CompareRejectorsTest, IdenticalAndEqualFractionPoints) {
  const OperatingPoint p = OperatingPointFromAccuracy(kP1, 0.55);
  EXPECT_EQ(CompareRejectors(p, p, CostSpec(0.5)).kind, VerdictKind::kEquivalent);
  const PartitionCounts c{50, 30, 5, 15};
  const ComparisonVerdict same = CompareRejectors(c, c, CostSpec(0.5));
  EXPECT_EQ(same.kind, VerdictKind::kEquivalent);
  EXPECT_EQ(same.outcome, Outcome::kEquivalent);

  const ComparisonVerdict v = CompareRejectors(PartitionCounts{45, 35, 10, 10}, c, std::nullopt);
  EXPECT_EQ(v.kind, VerdictKind::kDominated);
  EXPECT_EQ(v.dominance_case, DominanceCase::kEqualRejected);
  EXPECT_FALSE(v.rho_threshold);
}

TEST(CompareRejectorsTest, FormsAgreeOnRandomInputs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    const Count n = 2 + static_cast<Count>(rng() % 400);
    const Count accurate = static_cast<Count>(rng() % (n + 1));
    const PartitionCounts c1 = RandomCounts(rng, n, accurate);
    const PartitionCounts c2 = RandomCounts(rng, n, accurate);
    if (c1.rejected() == c2.rejected()) continue;
    const double rho = (rng() % 101) / 100.0;
    const ComparisonForms f =
        EvaluateComparisonForms(MakeOperatingPoint(c1), MakeOperatingPoint(c2), CostSpec(rho));
    ASSERT_EQ(f.accuracy_form, f.beta_form) << c1.ToString() << c2.ToString() << rho;
    ASSERT_EQ(f.quality_form, f.beta_form) << c1.ToString() << c2.ToString() << rho;
    // The verdict also matches the cost oracle.
    const double d = LossOracle(c2, rho) - LossOracle(c1, rho);
    const Outcome expected = std::abs(d) < 1e-9 ? Outcome::kEquivalent
                             : d > 0             ? Outcome::kOutperforms
                                                 : Outcome::kOutperformed;
    ASSERT_EQ(f.beta_form, expected) << c1.ToString() << c2.ToString() << rho;
  }
}

TEST(RelativeOptimalityMatrixTest, MatchesPairwiseAndIsThreadIndependent) {
  std::mt19937_64 rng(43);
  std::vector<PartitionCounts> pts;
  for (int i = 0; i < 40; ++i) pts.push_back(RandomCounts(rng, 100, 60));
  const auto serial = RelativeOptimalityMatrix(pts, 1);
  const auto parallel = RelativeOptimalityMatrix(pts, 4);
  EXPECT_EQ(serial, parallel);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (pts[i].rejected() == pts[j].rejected()) {
        EXPECT_FALSE(serial[i][j]);
      } else {
        EXPECT_EQ(*serial[i][j], ComputeRelativeOptimality(pts[i], pts[j]).beta);
      }
    }
  }
}

}  // namespace
}  // namespace rejmetrics
