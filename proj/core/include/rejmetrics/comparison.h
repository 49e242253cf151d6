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

// Comparing two rejectors of the same classifier.
//
// Cost model: a kept misclassified sample costs 1, a rejected sample costs
// rho in [0, 1], a kept accurate sample costs 0. Over n samples at operating
// point (A, r) this totals L = (1 - r)(1 - A) n + rho r n.
//
// Relative optimality beta places a point between the worst (-1) and best
// (+1) behavior reachable from a reference point. For a point at higher
// rejection than the reference, the point is cheaper exactly when
// rho < (beta + 1) / 2.

#ifndef REJMETRICS_COMPARISON_H_
#define REJMETRICS_COMPARISON_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rejmetrics/measures.h"
#include "rejmetrics/partition.h"

namespace rejmetrics {

// (A, r) pair. `accuracy` is ignored when rejected == 1.
struct AccuracyPoint {
  double accuracy = 0.0;
  double rejected = 0.0;

  // A(1 - r): fraction of all samples that are kept and accurate.
  double KeptAccurateMass() const;
};

AccuracyPoint ToAccuracyPoint(const OperatingPoint& point);

class CostSpec {
 public:
  // Throws InputError unless 0 <= rho <= 1.
  explicit CostSpec(double rho);
  double rho() const { return rho_; }

 private:
  double rho_;
};

enum class Direction {
  kHigherRejection,  // r1 > r0
  kLowerRejection,   // r1 < r0
};

struct RelativeOptimality {
  double beta = 0.0;
  Direction direction = Direction::kHigherRejection;
};

// Relative optimality of `point` w.r.t. `reference`. Throws
// NotApplicableError when both share a rejected fraction; use Dominance.
RelativeOptimality ComputeRelativeOptimality(const AccuracyPoint& point,
                                             const AccuracyPoint& reference);

// Exact version for counts of the same n: the sign and the ratio come from
// integers, so beta == 0 or beta == +-1 are reproduced exactly.
RelativeOptimality ComputeRelativeOptimality(const PartitionCounts& point,
                                             const PartitionCounts& reference);

double Cost(const AccuracyPoint& point, Count n, const CostSpec& spec);
double Cost(const PartitionCounts& counts, const CostSpec& spec);

// sgn(L(reference) - L(point)) with costs evaluated per sample. A difference
// within rounding noise of the affine formula is reported as 0. Throws
// NotApplicableError at equal rejected fractions.
int DeltaCostSign(const AccuracyPoint& point, const AccuracyPoint& reference,
                  const CostSpec& spec);

// (beta + 1) / 2.
double RhoThreshold(double beta);

struct Envelopes {
  double best_raw = 0.0;
  double worst_raw = 0.0;
  double best = 0.0;   // clamped to [0, 1]
  double worst = 0.0;  // clamped to [0, 1]
  bool best_feasible = true;
  bool worst_feasible = true;
};

// Nonrejected accuracy at `r1` of the best (beta = 1) and worst (beta = -1)
// behavior relative to `reference`. Throws InputError unless 0 <= r1 < 1 and
// NotApplicableError when r1 equals the reference fraction.
Envelopes ComputeEnvelopes(const AccuracyPoint& reference, double r1);

enum class DominanceCase {
  kEqualRejected,          // same |R|: more accurate kept wins
  kEqualAccurateKept,      // same an: more rejected wins
  kEqualMisclassifiedKept, // same mn: fewer rejected wins
};

enum class VerdictKind {
  kDominates,
  kDominated,
  kCostDependent,
  kEquivalent,
};

enum class Outcome {
  kOutperforms,
  kOutperformed,
  kEquivalent,
};

std::string_view DominanceCaseName(DominanceCase c);
std::string_view VerdictKindName(VerdictKind k);
std::string_view OutcomeName(Outcome o);

struct ComparisonForms {
  Outcome accuracy_form;
  Outcome quality_form;
  Outcome beta_form;
};

// Verdict on the first point w.r.t. the second.
struct ComparisonVerdict {
  VerdictKind kind = VerdictKind::kEquivalent;
  std::optional<DominanceCase> dominance_case;
  // beta of the first point relative to the second.
  std::optional<double> beta;
  // Threshold on rho below which the higher-rejection point is cheaper.
  std::optional<double> rho_threshold;
  std::optional<double> rho;
  std::optional<Outcome> outcome;  // at `rho`
  std::optional<ComparisonForms> forms;
};

// Cost-free dominance between two partitions of the same classifier output.
// Empty when none of the three equal-coordinate cases decides. Throws
// InputError when n or ||a|| differ.
std::optional<ComparisonVerdict> Dominance(const PartitionCounts& first,
                                           const PartitionCounts& second);

// Evaluates "first outperforms second under rho" three ways: against the
// accuracy threshold A0 (1 - r0)/(1 - r1) + (rho - 1)(r1 - r0)/(1 - r1),
// against the quality threshold Q0 + (2 rho - 1)(r1 - r0), and beta against
// 2 rho - 1. The higher-rejection point plays R1; the outcome is stated for
// `first`. Requires accuracy and quality on both points.
ComparisonForms EvaluateComparisonForms(const OperatingPoint& first,
                                        const OperatingPoint& second,
                                        const CostSpec& spec);

// Full comparison of `first` against `second`. At equal rejected fractions
// the nonrejected accuracies decide cost-free; otherwise reports beta, the
// rho threshold and, when `spec` is given, the outcome and all three forms.
ComparisonVerdict CompareRejectors(const OperatingPoint& first,
                                   const OperatingPoint& second,
                                   const std::optional<CostSpec>& spec);

// Same, from counts: dominance when one of the cost-free cases applies,
// otherwise the cost-dependent comparison with exact beta.
ComparisonVerdict CompareRejectors(const PartitionCounts& first,
                                   const PartitionCounts& second,
                                   const std::optional<CostSpec>& spec);

// OperatingPoint rebuilt from (A, r) and the shared base accuracy A(0) via
// the closed forms. Used when only (A, r) pairs are known.
OperatingPoint OperatingPointFromAccuracy(const AccuracyPoint& point,
                                          double base_accuracy);

// beta[i][j] is point i relative to reference j; the diagonal and pairs with
// equal rejected fractions are empty. Rows are computed on up to `threads`
// threads.
std::vector<std::vector<std::optional<double>>> RelativeOptimalityMatrix(
    std::span<const PartitionCounts> points, std::size_t threads = 1);

}  // namespace rejmetrics

#endif  // REJMETRICS_COMPARISON_H_
