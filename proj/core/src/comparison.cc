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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rejmetrics/errors.h"
#include "rejmetrics/parallel.h"

namespace rejmetrics {
namespace {

// Per-sample costs are at most 2; this absorbs the rounding of the affine
// cost formula.
constexpr double kCostTieTolerance = 32 * std::numeric_limits<double>::epsilon();

// Comparison margins are expressed in units of beta.
constexpr double kBetaTieTolerance = 1e-9;

void CheckPoint(const AccuracyPoint& p) {
  if (!(p.rejected >= 0.0 && p.rejected <= 1.0)) {
    throw InputError("rejected fraction must lie in [0, 1], got " +
                     std::to_string(p.rejected));
  }
  if (p.rejected < 1.0 && !(p.accuracy >= 0.0 && p.accuracy <= 1.0)) {
    throw InputError("nonrejected accuracy must lie in [0, 1], got " +
                     std::to_string(p.accuracy));
  }
}

Outcome OutcomeFromMargin(double margin) {
  if (margin > kBetaTieTolerance) return Outcome::kOutperforms;
  if (margin < -kBetaTieTolerance) return Outcome::kOutperformed;
  return Outcome::kEquivalent;
}

Outcome Invert(Outcome o) {
  switch (o) {
    case Outcome::kOutperforms:
      return Outcome::kOutperformed;
    case Outcome::kOutperformed:
      return Outcome::kOutperforms;
    case Outcome::kEquivalent:
      return Outcome::kEquivalent;
  }
  return o;
}

void CheckComparable(const PartitionCounts& a, const PartitionCounts& b) {
  a.Validate();
  b.Validate();
  if (a.n() != b.n()) {
    throw InputError("partitions have different sample counts: " +
                     std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
  if (a.accurate() != b.accurate()) {
    throw InputError(
        "partitions come from different classifier outputs (accurate counts " +
        std::to_string(a.accurate()) + " vs " + std::to_string(b.accurate()) +
        ")");
  }
}

}  // namespace

double AccuracyPoint::KeptAccurateMass() const {
  return rejected >= 1.0 ? 0.0 : accuracy * (1.0 - rejected);
}

AccuracyPoint ToAccuracyPoint(const OperatingPoint& point) {
  if (!point.accuracy && point.rejected < 1.0) {
    throw InputError("operating point has no nonrejected accuracy");
  }
  return {point.accuracy.value_or(0.0), point.rejected};
}

CostSpec::CostSpec(double rho) : rho_(rho) {
  if (!(rho >= 0.0 && rho <= 1.0)) {
    throw InputError("rejection cost rho must lie in [0, 1], got " +
                     std::to_string(rho));
  }
}

RelativeOptimality ComputeRelativeOptimality(const AccuracyPoint& point,
                                             const AccuracyPoint& reference) {
  CheckPoint(point);
  CheckPoint(reference);
  const double dr = point.rejected - reference.rejected;
  if (dr == 0.0) {
    throw NotApplicableError(
        "relative optimality is undefined at equal rejected fractions; "
        "compare by dominance instead");
  }
  const double dmass = point.KeptAccurateMass() - reference.KeptAccurateMass();
  if (dr > 0.0) return {2.0 * dmass / dr + 1.0, Direction::kHigherRejection};
  return {-2.0 * dmass / dr - 1.0, Direction::kLowerRejection};
}

RelativeOptimality ComputeRelativeOptimality(const PartitionCounts& point,
                                             const PartitionCounts& reference) {
  point.Validate();
  reference.Validate();
  if (point.n() != reference.n()) {
    throw InputError("partitions have different sample counts");
  }
  // With dR = |R1| - |R0| and dan = an1 - an0 the mass difference over the
  // fraction difference is dan / dR.
  const Count d_rejected = point.rejected() - reference.rejected();
  if (d_rejected == 0) {
    throw NotApplicableError(
        "relative optimality is undefined at equal rejected fractions; "
        "compare by dominance instead");
  }
  const Count d_an = point.an - reference.an;
  if (d_rejected > 0) {
    return {static_cast<double>(2 * d_an + d_rejected) /
                static_cast<double>(d_rejected),
            Direction::kHigherRejection};
  }
  return {static_cast<double>(-2 * d_an - d_rejected) /
              static_cast<double>(d_rejected),
          Direction::kLowerRejection};
}

double Cost(const AccuracyPoint& point, Count n, const CostSpec& spec) {
  CheckPoint(point);
  const double r = point.rejected;
  const double misclassified_kept =
      r >= 1.0 ? 0.0 : (1.0 - r) * (1.0 - point.accuracy);
  const double samples = static_cast<double>(n);
  return misclassified_kept * samples + spec.rho() * r * samples;
}

double Cost(const PartitionCounts& counts, const CostSpec& spec) {
  counts.Validate();
  return static_cast<double>(counts.mn) +
         spec.rho() * static_cast<double>(counts.rejected());
}

int DeltaCostSign(const AccuracyPoint& point, const AccuracyPoint& reference,
                  const CostSpec& spec) {
  CheckPoint(point);
  CheckPoint(reference);
  if (point.rejected == reference.rejected) {
    throw NotApplicableError(
        "cost sign relation needs distinct rejected fractions");
  }
  const double delta = Cost(reference, 1, spec) - Cost(point, 1, spec);
  if (delta > kCostTieTolerance) return 1;
  if (delta < -kCostTieTolerance) return -1;
  return 0;
}

double RhoThreshold(double beta) { return (beta + 1.0) / 2.0; }

Envelopes ComputeEnvelopes(const AccuracyPoint& reference, double r1) {
  CheckPoint(reference);
  if (!(r1 >= 0.0 && r1 < 1.0)) {
    throw InputError("envelope fraction must lie in [0, 1), got " +
                     std::to_string(r1));
  }
  if (r1 == reference.rejected) {
    throw NotApplicableError("envelopes need a fraction distinct from the reference");
  }
  // Raising the fraction, the best case rejects only misclassified samples
  // (kept-accurate mass unchanged) and the worst only accurate ones. Lowering
  // it, the best case keeps only accurate samples.
  const double mass = reference.KeptAccurateMass();
  const double dr = r1 - reference.rejected;
  Envelopes e;
  if (dr > 0.0) {
    e.best_raw = mass / (1.0 - r1);
    e.worst_raw = (mass - dr) / (1.0 - r1);
  } else {
    e.best_raw = (mass - dr) / (1.0 - r1);
    e.worst_raw = mass / (1.0 - r1);
  }
  e.best = std::clamp(e.best_raw, 0.0, 1.0);
  e.worst = std::clamp(e.worst_raw, 0.0, 1.0);
  e.best_feasible = e.best_raw >= 0.0 && e.best_raw <= 1.0;
  e.worst_feasible = e.worst_raw >= 0.0 && e.worst_raw <= 1.0;
  return e;
}

std::string_view DominanceCaseName(DominanceCase c) {
  switch (c) {
    case DominanceCase::kEqualRejected:
      return "equal-R";
    case DominanceCase::kEqualAccurateKept:
      return "equal-AN";
    case DominanceCase::kEqualMisclassifiedKept:
      return "equal-MN";
  }
  return "?";
}

std::string_view VerdictKindName(VerdictKind k) {
  switch (k) {
    case VerdictKind::kDominates:
      return "dominates";
    case VerdictKind::kDominated:
      return "dominated";
    case VerdictKind::kCostDependent:
      return "cost-dependent";
    case VerdictKind::kEquivalent:
      return "equivalent";
  }
  return "?";
}

std::string_view OutcomeName(Outcome o) {
  switch (o) {
    case Outcome::kOutperforms:
      return "outperforms";
    case Outcome::kOutperformed:
      return "outperformed";
    case Outcome::kEquivalent:
      return "equivalent";
  }
  return "?";
}

std::optional<ComparisonVerdict> Dominance(const PartitionCounts& first,
                                           const PartitionCounts& second) {
  CheckComparable(first, second);
  ComparisonVerdict v;
  auto decide = [&](bool first_wins, DominanceCase c) {
    v.kind = first_wins ? VerdictKind::kDominates : VerdictKind::kDominated;
    v.dominance_case = c;
    return v;
  };
  if (first.rejected() == second.rejected()) {
    if (first.an == second.an) return std::nullopt;
    return decide(first.an > second.an, DominanceCase::kEqualRejected);
  }
  if (first.an == second.an) {
    return decide(first.rejected() > second.rejected(),
                  DominanceCase::kEqualAccurateKept);
  }
  if (first.mn == second.mn) {
    return decide(first.rejected() < second.rejected(),
                  DominanceCase::kEqualMisclassifiedKept);
  }
  return std::nullopt;
}

ComparisonForms EvaluateComparisonForms(const OperatingPoint& first,
                                        const OperatingPoint& second,
                                        const CostSpec& spec) {
  if (first.rejected == second.rejected) {
    throw NotApplicableError(
        "cost-dependent comparison needs distinct rejected fractions");
  }
  const bool first_is_higher = first.rejected > second.rejected;
  const OperatingPoint& hi = first_is_higher ? first : second;
  const OperatingPoint& lo = first_is_higher ? second : first;
  const AccuracyPoint hi_acc = ToAccuracyPoint(hi);
  const AccuracyPoint lo_acc = ToAccuracyPoint(lo);
  const double r1 = hi.rejected;
  const double r0 = lo.rejected;
  const double dr = r1 - r0;
  const double rho = spec.rho();

  // Every margin is rescaled to beta units so one tolerance applies.
  double accuracy_margin;
  if (r1 < 1.0) {
    const double threshold = lo_acc.KeptAccurateMass() / (1.0 - r1) +
                             (rho - 1.0) * dr / (1.0 - r1);
    accuracy_margin = (hi_acc.accuracy - threshold) * 2.0 * (1.0 - r1) / dr;
  } else {
    // A(1) is undefined; compare the kept-accurate masses instead.
    accuracy_margin = (0.0 - lo_acc.KeptAccurateMass() - (rho - 1.0) * dr) * 2.0 / dr;
  }
  const double quality_margin =
      (hi.quality - lo.quality - (2.0 * rho - 1.0) * dr) / dr;
  const double beta = ComputeRelativeOptimality(hi_acc, lo_acc).beta;
  const double beta_margin = beta - (2.0 * rho - 1.0);

  ComparisonForms forms{OutcomeFromMargin(accuracy_margin),
                        OutcomeFromMargin(quality_margin),
                        OutcomeFromMargin(beta_margin)};
  if (!first_is_higher) {
    forms.accuracy_form = Invert(forms.accuracy_form);
    forms.quality_form = Invert(forms.quality_form);
    forms.beta_form = Invert(forms.beta_form);
  }
  return forms;
}

namespace {

void FillCostDependent(ComparisonVerdict& v, double beta, double beta_higher,
                       const OperatingPoint& first, const OperatingPoint& second,
                       const std::optional<CostSpec>& spec) {
  v.kind = VerdictKind::kCostDependent;
  v.beta = beta;
  v.rho_threshold = RhoThreshold(beta_higher);
  if (spec) {
    v.rho = spec->rho();
    v.forms = EvaluateComparisonForms(first, second, *spec);
    v.outcome = v.forms->beta_form;
  }
}

}  // namespace

ComparisonVerdict CompareRejectors(const OperatingPoint& first,
                                   const OperatingPoint& second,
                                   const std::optional<CostSpec>& spec) {
  ComparisonVerdict v;
  if (first.rejected == second.rejected) {
    // Same fraction: larger nonrejected accuracy means more accurate kept
    // samples, which wins for every rho.
    const double a1 = ToAccuracyPoint(first).KeptAccurateMass();
    const double a2 = ToAccuracyPoint(second).KeptAccurateMass();
    if (a1 == a2) {
      v.kind = VerdictKind::kEquivalent;
    } else {
      v.kind = a1 > a2 ? VerdictKind::kDominates : VerdictKind::kDominated;
      v.dominance_case = DominanceCase::kEqualRejected;
    }
    if (spec) {
      v.rho = spec->rho();
      v.outcome = v.kind == VerdictKind::kEquivalent ? Outcome::kEquivalent
                  : v.kind == VerdictKind::kDominates ? Outcome::kOutperforms
                                                      : Outcome::kOutperformed;
    }
    return v;
  }
  const AccuracyPoint p1 = ToAccuracyPoint(first);
  const AccuracyPoint p0 = ToAccuracyPoint(second);
  const double beta = ComputeRelativeOptimality(p1, p0).beta;
  const double beta_higher = first.rejected > second.rejected
                                 ? beta
                                 : ComputeRelativeOptimality(p0, p1).beta;
  FillCostDependent(v, beta, beta_higher, first, second, spec);
  return v;
}

ComparisonVerdict CompareRejectors(const PartitionCounts& first,
                                   const PartitionCounts& second,
                                   const std::optional<CostSpec>& spec) {
  CheckComparable(first, second);
  const bool same_fraction = first.rejected() == second.rejected();
  if (auto dominance = Dominance(first, second)) {
    if (!same_fraction) {
      dominance->beta = ComputeRelativeOptimality(first, second).beta;
    }
    if (spec) {
      dominance->rho = spec->rho();
      dominance->outcome = dominance->kind == VerdictKind::kDominates
                               ? Outcome::kOutperforms
                               : Outcome::kOutperformed;
    }
    return *dominance;
  }
  ComparisonVerdict v;
  if (same_fraction) {  // identical partitions
    v.kind = VerdictKind::kEquivalent;
    if (spec) {
      v.rho = spec->rho();
      v.outcome = Outcome::kEquivalent;
    }
    return v;
  }
  const double beta = ComputeRelativeOptimality(first, second).beta;
  const double beta_higher = first.rejected() > second.rejected()
                                 ? beta
                                 : ComputeRelativeOptimality(second, first).beta;
  FillCostDependent(v, beta, beta_higher, MakeOperatingPoint(first),
                    MakeOperatingPoint(second), spec);
  return v;
}

OperatingPoint OperatingPointFromAccuracy(const AccuracyPoint& point,
                                          double base_accuracy) {
  CheckPoint(point);
  const ClosedFormMeasures m =
      MeasuresClosedForm(base_accuracy, point.accuracy, point.rejected);
  OperatingPoint p;
  p.rejected = point.rejected;
  if (point.rejected < 1.0) p.accuracy = point.accuracy;
  p.quality = m.quality;
  p.rejection_quality = m.rejection_quality;
  return p;
}

std::vector<std::vector<std::optional<double>>> RelativeOptimalityMatrix(
    std::span<const PartitionCounts> points, std::size_t threads) {
  const std::size_t m = points.size();
  for (const auto& p : points) {
    p.Validate();
    if (p.n() != points.front().n()) {
      throw InputError("curve points have different sample counts");
    }
  }
  std::vector<std::vector<std::optional<double>>> beta(
      m, std::vector<std::optional<double>>(m));
  ParallelFor(m, threads, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (points[i].rejected() == points[j].rejected()) continue;
      beta[i][j] = ComputeRelativeOptimality(points[i], points[j]).beta;
    }
  });
  return beta;
}

}  // namespace rejmetrics
