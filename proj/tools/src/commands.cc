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

#include "rejmetrics/cli/commands.h"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rejmetrics/cli/digest.h"
#include "rejmetrics/cli/io.h"
#include "rejmetrics/cli/svg.h"
#include "rejmetrics/comparison.h"
#include "rejmetrics/curve.h"
#include "rejmetrics/errors.h"
#include "rejmetrics/measures.h"
#include "rejmetrics/parallel.h"
#include "rejmetrics/reconstruction.h"
#include "rejmetrics/synthetic.h"

namespace rejmetrics::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kFormats = {"json", "csv"};
const std::vector<std::string> kTiePolicies = {"group", "stable"};

json NewReport(std::string_view command) {
  json report;
  report["meta"] = {{"tool", "rejmetrics"}, {"version", kVersion},
                    {"command", command}};
  report["points"] = json::array();
  report["comparisons"] = json::array();
  return report;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

void Emit(const std::string& path, std::string_view content, std::ostream& out) {
  if (path == "-") {
    out << content;
  } else {
    WriteOutput(path, content);
  }
}

json InputMeta(const std::string& path, const std::string& text,
               const PredictionTable& table) {
  return {{"path", path},
          {"digest", Sha256Hex(text)},
          {"classifier_digest", ClassifierOutputDigest(table)},
          {"n", table.size()}};
}

template <typename T>
json OptionalToJson(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json VerdictToJson(const ComparisonVerdict& v) {
  json j;
  j["kind"] = VerdictKindName(v.kind);
  j["dominance_case"] = v.dominance_case
                            ? json(DominanceCaseName(*v.dominance_case))
                            : json(nullptr);
  j["beta"] = OptionalToJson(v.beta);
  j["rho_threshold"] = OptionalToJson(v.rho_threshold);
  j["rho"] = OptionalToJson(v.rho);
  j["outcome"] = v.outcome ? json(OutcomeName(*v.outcome)) : json(nullptr);
  if (v.forms) {
    j["forms"] = {{"accuracy", OutcomeName(v.forms->accuracy_form)},
                  {"quality", OutcomeName(v.forms->quality_form)},
                  {"beta", OutcomeName(v.forms->beta_form)}};
  } else {
    j["forms"] = nullptr;
  }
  return j;
}

std::string OptionalReal(const std::optional<double>& v) {
  return v ? FormatReal(*v) : std::string();
}

// Picks the rejection mask for a predictions table: the file's `rejected`
// column or the least confident fraction, never both.
RejectionMask ResolveMask(const PredictionTable& table, bool column_requested,
                          const std::optional<double>& fraction, TiePolicy tie,
                          json& source) {
  if (fraction) {
    if (column_requested) {
      throw UsageError("--rejected-col and --reject-fraction are conflicting "
                       "rejection sources");
    }
    if (table.has_rejected_column) {
      throw UsageError("input carries a 'rejected' column; it conflicts with "
                       "--reject-fraction");
    }
    const auto confidence = table.Confidences();
    source = {{"kind", "reject-fraction"},
              {"fraction", *fraction},
              {"tie_policy", TiePolicyName(tie)}};
    return RejectLowestFraction(confidence, *fraction, tie);
  }
  if (column_requested || table.has_rejected_column) {
    RejectionMask mask = table.RejectedColumnMask();
    source = {{"kind", "rejected-column"}};
    if (table.HasAllConfidences()) {
      source["threshold_consistent"] =
          IsThresholdConsistent(mask, table.Confidences());
    }
    return mask;
  }
  throw UsageError(
      "no rejection source: give --reject-fraction or an input with a "
      "'rejected' column");
}

// ---------------------------------------------------------------- measures

struct MeasuresOptions {
  std::string input;
  bool rejected_col = false;
  std::optional<double> reject_fraction;
  std::string tie_policy = "group";
  std::string format = "json";
  std::string out = "-";
};

int RunMeasures(const MeasuresOptions& o, std::ostream& out) {
  const std::string text = ReadInput(o.input);
  const PredictionTable table = ParsePredictions(text);
  json source;
  const RejectionMask mask = ResolveMask(table, o.rejected_col, o.reject_fraction,
                                         ParseTiePolicy(o.tie_policy), source);
  const PartitionCounts counts = ComputePartitionCounts(table.Accuracy(), mask);
  const CurvePoint point{counts, MakeOperatingPoint(counts)};
  if (o.format == "csv") {
    Emit(o.out, WriteCurveCsv({point}), out);
    return kExitOk;
  }
  json report = NewReport("measures");
  report["meta"]["inputs"] = json::array({InputMeta(o.input, text, table)});
  report["meta"]["rejection_source"] = source;
  report["points"].push_back(PointToJson(point));
  Emit(o.out, Dump(report), out);
  return kExitOk;
}

// ------------------------------------------------------------------- curve

struct CurveOptions {
  std::string input;
  std::string tie_policy = "group";
  std::size_t grid = 0;
  std::string format = "csv";
  std::string out = "-";
  std::string svg;
};

int RunCurve(const CurveOptions& o, std::ostream& out) {
  const std::string text = ReadInput(o.input);
  const PredictionTable table = ParsePredictions(text);
  const TiePolicy tie = ParseTiePolicy(o.tie_policy);
  const RejectionCurve curve = ThinCurve(
      ComputeRejectionCurve(table.Accuracy(), table.Confidences(), tie), o.grid);
  if (!o.svg.empty()) {
    WriteOutput(o.svg, RenderCurveSvg({{o.input, curve.points}}));
  }
  if (o.format == "csv") {
    Emit(o.out, WriteCurveCsv(curve.points), out);
    return kExitOk;
  }
  json report = NewReport("curve");
  report["meta"]["inputs"] = json::array({InputMeta(o.input, text, table)});
  report["meta"]["tie_policy"] = TiePolicyName(tie);
  report["meta"]["grid"] = o.grid;
  for (const auto& p : curve.points) report["points"].push_back(PointToJson(p));
  Emit(o.out, Dump(report), out);
  return kExitOk;
}

// ----------------------------------------------------------------- compare

struct CompareOptions {
  std::string file[2];
  std::string point[2];
  std::string counts[2];
  std::optional<double> reject_fraction[2];
  std::string tie_policy = "group";
  std::optional<double> rho;
  std::string format = "json";
  std::string out = "-";
};

struct Side {
  std::optional<PartitionCounts> counts;
  std::optional<AccuracyPoint> point;
  std::optional<std::string> classifier_digest;
  json meta;
};

std::vector<double> ParseNumberList(const std::string& text, std::size_t expected,
                                    const char* what) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(ParseReal(item));
  if (values.size() != expected) {
    throw UsageError(std::string(what) + " expects " + std::to_string(expected) +
                     " comma-separated numbers, got '" + text + "'");
  }
  return values;
}

Side ResolveSide(const CompareOptions& o, int k, TiePolicy tie) {
  const std::string label = std::to_string(k == 0 ? 1 : 0);
  const int given = !o.file[k].empty() + !o.point[k].empty() + !o.counts[k].empty();
  if (given != 1) {
    throw UsageError("give exactly one of --file" + label + ", --point" + label +
                     ", --counts" + label);
  }
  Side side;
  if (!o.file[k].empty()) {
    const std::string text = ReadInput(o.file[k]);
    const PredictionTable table = ParsePredictions(text);
    json source;
    const RejectionMask mask =
        ResolveMask(table, false, o.reject_fraction[k], tie, source);
    side.counts = ComputePartitionCounts(table.Accuracy(), mask);
    side.classifier_digest = ClassifierOutputDigest(table);
    side.meta = InputMeta(o.file[k], text, table);
    side.meta["rejection_source"] = source;
    return side;
  }
  if (o.reject_fraction[k]) {
    throw UsageError("--reject-fraction" + label + " needs --file" + label);
  }
  if (!o.counts[k].empty()) {
    const auto v = ParseNumberList(o.counts[k], 4, "--counts");
    for (double x : v) {
      if (x < 0 || x != std::floor(x)) {
        throw UsageError("--counts" + label + " entries must be nonnegative integers");
      }
    }
    side.counts = PartitionCounts{static_cast<Count>(v[0]), static_cast<Count>(v[1]),
                                  static_cast<Count>(v[2]), static_cast<Count>(v[3])};
    side.counts->Validate();
    side.meta = {{"counts", o.counts[k]}};
    return side;
  }
  const auto v = ParseNumberList(o.point[k], 2, "--point");
  side.point = AccuracyPoint{v[0], v[1]};
  side.meta = {{"point", o.point[k]}};
  return side;
}

json SideToJson(const Side& s) {
  if (s.counts) return PointToJson({*s.counts, MakeOperatingPoint(*s.counts)});
  json j;
  j["r"] = s.point->rejected;
  j["A"] = s.point->rejected < 1.0 ? json(s.point->accuracy) : json(nullptr);
  return j;
}

int RunCompare(const CompareOptions& o, std::ostream& out) {
  const TiePolicy tie = ParseTiePolicy(o.tie_policy);
  const Side first = ResolveSide(o, 0, tie);
  const Side second = ResolveSide(o, 1, tie);
  std::optional<CostSpec> spec;
  if (o.rho) spec.emplace(*o.rho);

  if (first.classifier_digest && second.classifier_digest &&
      *first.classifier_digest != *second.classifier_digest) {
    throw InputError("the two files hold different classifier outputs; "
                     "rejectors are only comparable on the same output");
  }

  ComparisonVerdict verdict;
  if (first.counts && second.counts) {
    verdict = CompareRejectors(*first.counts, *second.counts, spec);
  } else {
    // Q in the quality form needs a shared base accuracy; any value cancels,
    // so take it from a counts side when there is one.
    double base = 0.0;
    for (const Side* s : {&first, &second}) {
      if (s->counts) {
        base = static_cast<double>(s->counts->accurate()) /
               static_cast<double>(s->counts->n());
      }
    }
    auto to_point = [&](const Side& s) {
      if (s.counts) return MakeOperatingPoint(*s.counts);
      return OperatingPointFromAccuracy(*s.point, base);
    };
    verdict = CompareRejectors(to_point(first), to_point(second), spec);
  }

  if (o.format == "csv") {
    std::string csv = "kind,dominance_case,beta,rho_threshold,rho,outcome\n";
    csv += std::string(VerdictKindName(verdict.kind)) + ",";
    if (verdict.dominance_case) csv += DominanceCaseName(*verdict.dominance_case);
    csv += "," + OptionalReal(verdict.beta) + "," + OptionalReal(verdict.rho_threshold) +
           "," + OptionalReal(verdict.rho) + ",";
    if (verdict.outcome) csv += OutcomeName(*verdict.outcome);
    csv += "\n";
    Emit(o.out, csv, out);
    return kExitOk;
  }
  json report = NewReport("compare");
  report["meta"]["inputs"] = json::array({first.meta, second.meta});
  report["points"].push_back(SideToJson(first));
  report["points"].push_back(SideToJson(second));
  json c = VerdictToJson(verdict);
  c["first"] = 0;
  c["second"] = 1;
  report["comparisons"].push_back(c);
  Emit(o.out, Dump(report), out);
  return kExitOk;
}

// -------------------------------------------------------------- relopt-map

struct ReloptOptions {
  std::string input;
  std::string tie_policy = "group";
  std::size_t grid = 100;
  std::string format = "csv";
  std::string out = "-";
};

int RunReloptMap(const ReloptOptions& o, std::ostream& out) {
  const std::string text = ReadInput(o.input);
  const TiePolicy tie = ParseTiePolicy(o.tie_policy);
  RejectionCurve curve;
  curve.tie_policy = tie;
  json input_meta;
  if (LooksLikeCurveCsv(text)) {
    curve.points = ParseCurveCsv(text);
    input_meta = {{"path", o.input}, {"digest", Sha256Hex(text)}, {"kind", "curve"}};
  } else {
    const PredictionTable table = ParsePredictions(text);
    curve = ComputeRejectionCurve(table.Accuracy(), table.Confidences(), tie);
    input_meta = InputMeta(o.input, text, table);
  }
  curve = ThinCurve(curve, o.grid);
  const auto& pts = curve.points;
  if (pts.size() < 2) {
    throw InputError("relative optimality map needs at least two operating points");
  }
  std::vector<PartitionCounts> counts;
  for (const auto& p : pts) counts.push_back(p.counts);
  const auto beta = RelativeOptimalityMatrix(counts, SweepThreadLimit());

  // Minimum rho at which not rejecting is at least as good, per point.
  std::vector<std::optional<double>> rho_min(pts.size());
  const auto no_reject = std::find_if(counts.begin(), counts.end(), [](const auto& c) {
    return c.rejected() == 0;
  });
  if (no_reject != counts.end()) {
    const std::size_t z = static_cast<std::size_t>(no_reject - counts.begin());
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (beta[i][z]) rho_min[i] = RhoThreshold(*beta[i][z]);
    }
  }

  if (o.format == "csv") {
    std::string csv = "r,rho_min_no_reject";
    for (std::size_t j = 0; j < pts.size(); ++j) csv += ",beta_vs_" + std::to_string(j);
    csv += '\n';
    for (std::size_t i = 0; i < pts.size(); ++i) {
      csv += FormatReal(pts[i].point.rejected) + "," + OptionalReal(rho_min[i]);
      for (std::size_t j = 0; j < pts.size(); ++j) csv += "," + OptionalReal(beta[i][j]);
      csv += '\n';
    }
    Emit(o.out, csv, out);
    return kExitOk;
  }
  json report = NewReport("relopt-map");
  report["meta"]["inputs"] = json::array({input_meta});
  report["meta"]["tie_policy"] = TiePolicyName(tie);
  report["meta"]["grid"] = o.grid;
  for (const auto& p : pts) report["points"].push_back(PointToJson(p));
  json matrix = json::array();
  for (const auto& row : beta) {
    json jr = json::array();
    for (const auto& b : row) jr.push_back(OptionalToJson(b));
    matrix.push_back(std::move(jr));
  }
  json rho_col = json::array();
  for (const auto& v : rho_min) rho_col.push_back(OptionalToJson(v));
  report["beta_matrix"] = {{"beta", matrix}, {"rho_min_no_reject", rho_col}};
  Emit(o.out, Dump(report), out);
  return kExitOk;
}

// ------------------------------------------------------------------- synth

struct SynthOptions {
  std::size_t n = 10000;
  std::uint64_t seed = 1;
  std::string rejector = "both";
  std::string out_dir;
  std::string tie_policy = "group";
  std::size_t grid = 0;
  bool svg = false;
};

json SummarizeCurve(const RejectionCurve& curve) {
  const auto& pts = curve.points;
  const auto near_20 = std::min_element(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return std::abs(a.point.rejected - 0.2) < std::abs(b.point.rejected - 0.2);
  });
  const auto best_q = std::max_element(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.point.quality < b.point.quality;
  });
  return {{"no_rejection", PointToJson(pts.front())},
          {"near_r_0.2", PointToJson(*near_20)},
          {"max_quality", PointToJson(*best_q)}};
}

int RunSynth(const SynthOptions& o, std::ostream& out) {
  const TiePolicy tie = ParseTiePolicy(o.tie_policy);
  const SyntheticDataset ds = GenerateGaussians(o.n, o.seed);
  const std::vector<ClassId> pred = ClassifyNearestCenter(ds);
  const AccuracyVector accuracy = ComputeAccuracyVector(ds.y_true, pred);

  namespace fs = std::filesystem;
  const fs::path dir(o.out_dir);
  fs::create_directories(dir);

  std::string points_csv = "id,x1,x2,y_true\n";
  for (std::size_t i = 0; i < ds.points.size(); ++i) {
    points_csv += std::to_string(i) + "," + FormatReal(ds.points[i].x) + "," +
                  FormatReal(ds.points[i].y) + "," + std::to_string(ds.y_true[i]) + "\n";
  }
  WriteOutput((dir / "points.csv").string(), points_csv);

  json report = NewReport("synth");
  report["meta"]["seed"] = o.seed;
  report["meta"]["generator"] = kGeneratorName;
  report["meta"]["n"] = o.n;
  report["meta"]["class_priors"] = "equal";
  report["meta"]["tie_policy"] = TiePolicyName(tie);
  report["rejectors"] = json::object();

  std::vector<std::string> rejectors;
  if (o.rejector == "both") {
    rejectors = {"maxprob", "bt"};
  } else {
    rejectors = {o.rejector};
  }
  std::vector<CurveSeries> series;
  for (const auto& name : rejectors) {
    const std::vector<double> confidence = name == "maxprob"
                                               ? ConfidenceMaxProbability(ds.posteriors)
                                               : ConfidenceBreakingTies(ds.posteriors);
    PredictionTable table;
    table.records.reserve(o.n);
    for (std::size_t i = 0; i < o.n; ++i) {
      table.records.push_back({std::to_string(i), ds.y_true[i], pred[i], confidence[i], {}});
    }
    const std::string dataset_csv = WritePredictionsCsv(table);
    WriteOutput((dir / ("dataset_" + name + ".csv")).string(), dataset_csv);

    const RejectionCurve full = ComputeRejectionCurve(accuracy, confidence, tie);
    const RejectionCurve shown = ThinCurve(full, o.grid);
    WriteOutput((dir / ("curve_" + name + ".csv")).string(), WriteCurveCsv(shown.points));

    json summary = SummarizeCurve(full);
    summary["dataset_digest"] = Sha256Hex(dataset_csv);
    report["rejectors"][name] = summary;
    series.push_back({name, shown.points});
  }
  if (o.svg) WriteOutput((dir / "curves.svg").string(), RenderCurveSvg(series));
  const std::string text = Dump(report);
  WriteOutput((dir / "report.json").string(), text);
  out << text;
  return kExitOk;
}

// ------------------------------------------------------------- reconstruct

struct ReconstructOptions {
  double accuracy = 0.0;
  double quality = 0.0;
  double rejected = 0.0;
  Count n = 0;
  std::string format = "json";
  std::string out = "-";
};

int RunReconstruct(const ReconstructOptions& o, std::ostream& out) {
  const PartitionCounts counts =
      Reconstruct({o.accuracy, o.quality, o.rejected, o.n});
  const CurvePoint point{counts, MakeOperatingPoint(counts)};
  if (o.format == "csv") {
    Emit(o.out, WriteCurveCsv({point}), out);
    return kExitOk;
  }
  json report = NewReport("reconstruct");
  report["meta"]["triplet"] = {{"A", o.accuracy}, {"Q", o.quality}, {"r", o.rejected}, {"n", o.n}};
  report["points"].push_back(PointToJson(point));
  Emit(o.out, Dump(report), out);
  return kExitOk;
}

void AddOutputOptions(CLI::App* cmd, std::string& format, std::string& path) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember(kFormats))
      ->capture_default_str();
  cmd->add_option("--out", path, "Output file ('-' for stdout)")->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Evaluate classifiers with a reject option", "rejmetrics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  MeasuresOptions measures;
  auto* measures_cmd = app.add_subcommand(
      "measures", "Rejected fraction, A, Q and phi of one rejection decision");
  measures_cmd->add_option("input", measures.input, "Predictions CSV/JSON ('-' for stdin)")
      ->required();
  measures_cmd->add_flag("--rejected-col", measures.rejected_col,
                         "Use the input's 'rejected' column");
  measures_cmd->add_option("--reject-fraction", measures.reject_fraction,
                           "Reject this fraction of least confident samples");
  measures_cmd->add_option("--tie-policy", measures.tie_policy)
      ->check(CLI::IsMember(kTiePolicies))
      ->capture_default_str();
  AddOutputOptions(measures_cmd, measures.format, measures.out);

  CurveOptions curve;
  auto* curve_cmd = app.add_subcommand(
      "curve", "A, Q and phi at every achievable rejected fraction");
  curve_cmd->add_option("input", curve.input)->required();
  curve_cmd->add_option("--tie-policy", curve.tie_policy)
      ->check(CLI::IsMember(kTiePolicies))
      ->capture_default_str();
  curve_cmd->add_option("--grid", curve.grid,
                        "Keep the points nearest to GRID+1 evenly spaced r (0 = all)")
      ->capture_default_str();
  curve_cmd->add_option("--svg", curve.svg, "Also write an SVG chart to this file");
  curve.format = "csv";
  AddOutputOptions(curve_cmd, curve.format, curve.out);

  CompareOptions compare;
  auto* compare_cmd = app.add_subcommand(
      "compare", "Compare rejector 1 against rejector 0");
  for (int k = 0; k < 2; ++k) {
    const std::string label = k == 0 ? "1" : "0";
    compare_cmd->add_option("--file" + label, compare.file[k], "Predictions file");
    compare_cmd->add_option("--point" + label, compare.point[k], "Operating point 'A,r'");
    compare_cmd->add_option("--counts" + label, compare.counts[k],
                            "Partition counts 'an,mn,ar,mr'");
    compare_cmd->add_option("--reject-fraction" + label, compare.reject_fraction[k],
                            "Reject this fraction of --file" + label);
  }
  compare_cmd->add_option("--rho", compare.rho, "Rejection cost in [0, 1]");
  compare_cmd->add_option("--tie-policy", compare.tie_policy)
      ->check(CLI::IsMember(kTiePolicies))
      ->capture_default_str();
  AddOutputOptions(compare_cmd, compare.format, compare.out);

  ReloptOptions relopt;
  auto* relopt_cmd = app.add_subcommand(
      "relopt-map", "Relative optimality between all pairs of curve points");
  relopt_cmd->add_option("input", relopt.input, "Predictions file or curve CSV")
      ->required();
  relopt_cmd->add_option("--tie-policy", relopt.tie_policy)
      ->check(CLI::IsMember(kTiePolicies))
      ->capture_default_str();
  relopt_cmd->add_option("--grid", relopt.grid,
                         "Thin the curve to GRID+1 target fractions (0 = all)")
      ->capture_default_str();
  relopt.format = "csv";
  AddOutputOptions(relopt_cmd, relopt.format, relopt.out);

  SynthOptions synth;
  auto* synth_cmd = app.add_subcommand(
      "synth", "Four-Gaussian benchmark with max-probability / breaking-ties rejectors");
  synth_cmd->add_option("--n", synth.n, "Sample count")
      ->check(CLI::Range(std::size_t{4}, std::numeric_limits<std::size_t>::max()))
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth.seed)->capture_default_str();
  synth_cmd->add_option("--rejector", synth.rejector)
      ->check(CLI::IsMember({"maxprob", "bt", "both"}))
      ->capture_default_str();
  synth_cmd->add_option("--out-dir", synth.out_dir, "Directory for CSV/JSON outputs")
      ->required();
  synth_cmd->add_option("--tie-policy", synth.tie_policy)
      ->check(CLI::IsMember(kTiePolicies))
      ->capture_default_str();
  synth_cmd->add_option("--grid", synth.grid, "Thin written curves (0 = all)")
      ->capture_default_str();
  synth_cmd->add_flag("--svg", synth.svg, "Also write curves.svg");

  ReconstructOptions recon;
  auto* recon_cmd = app.add_subcommand(
      "reconstruct", "Confusion matrix of the rejector from (A, Q, r, n)");
  recon_cmd->add_option("--A", recon.accuracy, "Nonrejected accuracy")->required();
  recon_cmd->add_option("--Q", recon.quality, "Classification quality")->required();
  recon_cmd->add_option("--r", recon.rejected, "Rejected fraction")->required();
  recon_cmd->add_option("--n", recon.n, "Sample count")->required();
  AddOutputOptions(recon_cmd, recon.format, recon.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*measures_cmd) return RunMeasures(measures, out);
    if (*curve_cmd) return RunCurve(curve, out);
    if (*compare_cmd) return RunCompare(compare, out);
    if (*relopt_cmd) return RunReloptMap(relopt, out);
    if (*synth_cmd) return RunSynth(synth, out);
    if (*recon_cmd) return RunReconstruct(recon, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace rejmetrics::cli
