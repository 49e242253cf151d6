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

// File formats.
//
// Predictions: UTF-8 CSV, LF line endings, header exactly
//   id,y_true,y_pred,confidence          or
//   id,y_true,y_pred,confidence,rejected
// An empty confidence field means "unknown". The JSON mirror is an array of
// objects with the same field names.
//
// Curves: CSV with header r,A,Q,phi,an,mn,ar,mr, one row per operating point.
// phi = +inf is written "inf"; an undefined A is an empty field (null in JSON).

#ifndef REJMETRICS_CLI_IO_H_
#define REJMETRICS_CLI_IO_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rejmetrics/curve.h"
#include "rejmetrics/errors.h"
#include "rejmetrics/partition.h"

namespace rejmetrics::cli {

// Bad command-line usage (conflicting or missing options).
class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr std::string_view kPredictionsHeader = "id,y_true,y_pred,confidence";
inline constexpr std::string_view kPredictionsHeaderWithRejected =
    "id,y_true,y_pred,confidence,rejected";
inline constexpr std::string_view kCurveHeader = "r,A,Q,phi,an,mn,ar,mr";

struct PredictionRecord {
  std::string id;
  ClassId y_true = 1;
  ClassId y_pred = 1;
  std::optional<double> confidence;
  std::optional<bool> rejected;
};

struct PredictionTable {
  std::vector<PredictionRecord> records;
  bool has_rejected_column = false;

  std::size_t size() const { return records.size(); }
  bool HasAllConfidences() const;

  AccuracyVector Accuracy() const;
  // Throws UsageError when a confidence is missing.
  std::vector<double> Confidences() const;
  // Throws UsageError without a rejected column.
  RejectionMask RejectedColumnMask() const;
};

// Shortest round-trip decimal; +-inf as "inf" / "-inf".
std::string FormatReal(double v);
// Accepts what FormatReal writes. Throws InputError otherwise.
double ParseReal(std::string_view text);

// Throws InputError naming the offending line.
PredictionTable ParsePredictionsCsv(std::string_view text);
PredictionTable ParsePredictionsJson(std::string_view text);
// JSON when the first non-blank character is '[', CSV otherwise.
PredictionTable ParsePredictions(std::string_view text);

std::string WritePredictionsCsv(const PredictionTable& table);
nlohmann::json PredictionsToJson(const PredictionTable& table);

// Digest of the classifier output alone (ids and labels), so two files that
// differ only in their rejection decisions compare equal.
std::string ClassifierOutputDigest(const PredictionTable& table);

nlohmann::json PointToJson(const CurvePoint& point);
CurvePoint PointFromJson(const nlohmann::json& j);

std::string WriteCurveCsv(const std::vector<CurvePoint>& points);
// Counts are authoritative; r, A, Q, phi are recomputed from them and must
// match the stored values.
std::vector<CurvePoint> ParseCurveCsv(std::string_view text);
bool LooksLikeCurveCsv(std::string_view text);

// "-" is stdin / stdout.
std::string ReadInput(const std::string& path);
void WriteOutput(const std::string& path, std::string_view content);

}  // namespace rejmetrics::cli

#endif  // REJMETRICS_CLI_IO_H_
