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

#include "rejmetrics/cli/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

#include "rejmetrics/cli/digest.h"
#include "rejmetrics/measures.h"

namespace rejmetrics::cli {
namespace {

using nlohmann::json;

[[noreturn]] void FailAtLine(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

// Splits one CSV record. Fields may be double-quoted with "" as an escaped
// quote; quoted fields cannot span lines.
std::vector<std::string> SplitCsvLine(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (ch == '"' && field.empty() && !was_quoted) {
      quoted = true;
      was_quoted = true;
    } else {
      field += ch;
    }
  }
  if (quoted) FailAtLine(line_no, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

// Yields (line number, content) for each nonblank line; CR before LF is
// dropped.
std::vector<std::pair<std::size_t, std::string_view>> Lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.emplace_back(line_no, line);
  }
  return out;
}

template <typename Int>
Int ParseInt(std::string_view text, std::size_t line_no, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    FailAtLine(line_no, std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

ClassId ParseClass(std::string_view text, std::size_t line_no, const char* what) {
  const auto id = ParseInt<ClassId>(text, line_no, what);
  if (id < 1) {
    FailAtLine(line_no, std::string(what) + " must be a positive class id");
  }
  return id;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

json RealToJson(double v) {
  if (std::isinf(v)) return v > 0 ? json("inf") : json("-inf");
  return json(v);
}

double RealFromJson(const json& j, const char* what) {
  if (j.is_string()) return ParseReal(j.get<std::string>());
  if (j.is_number()) return j.get<double>();
  throw InputError(std::string("field '") + what + "' must be a number");
}

}  // namespace

bool PredictionTable::HasAllConfidences() const {
  for (const auto& r : records) {
    if (!r.confidence) return false;
  }
  return true;
}

AccuracyVector PredictionTable::Accuracy() const {
  std::vector<std::uint8_t> bits(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    bits[i] = records[i].y_true == records[i].y_pred ? 1 : 0;
  }
  return AccuracyVector(std::move(bits));
}

std::vector<double> PredictionTable::Confidences() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    if (!r.confidence) {
      throw UsageError("record '" + r.id +
                       "' has no confidence; this command needs a confidence "
                       "for every record");
    }
    out.push_back(*r.confidence);
  }
  return out;
}

RejectionMask PredictionTable::RejectedColumnMask() const {
  if (!has_rejected_column) {
    throw UsageError("input has no 'rejected' column");
  }
  std::vector<std::uint8_t> bits(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    bits[i] = records[i].rejected.value_or(false) ? 1 : 0;
  }
  return RejectionMask(std::move(bits));
}

std::string FormatReal(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

double ParseReal(std::string_view text) {
  if (text == "inf" || text == "+inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
      std::isnan(v)) {
    throw InputError("bad number '" + std::string(text) + "'");
  }
  return v;
}

PredictionTable ParsePredictionsCsv(std::string_view text) {
  const auto lines = Lines(text);
  if (lines.empty()) throw InputError("predictions file is empty");
  PredictionTable table;
  const auto [header_no, header] = lines.front();
  if (header == kPredictionsHeaderWithRejected) {
    table.has_rejected_column = true;
  } else if (header != kPredictionsHeader) {
    FailAtLine(header_no, "expected header '" + std::string(kPredictionsHeader) +
                              "[,rejected]', got '" + std::string(header) + "'");
  }
  const std::size_t width = table.has_rejected_column ? 5 : 4;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto fields = SplitCsvLine(line, line_no);
    if (fields.size() != width) {
      FailAtLine(line_no, "expected " + std::to_string(width) + " fields, got " +
                              std::to_string(fields.size()));
    }
    PredictionRecord rec;
    rec.id = fields[0];
    rec.y_true = ParseClass(fields[1], line_no, "y_true");
    rec.y_pred = ParseClass(fields[2], line_no, "y_pred");
    if (!fields[3].empty()) {
      try {
        rec.confidence = ParseReal(fields[3]);
      } catch (const InputError& e) {
        FailAtLine(line_no, std::string("confidence: ") + e.what());
      }
    }
    if (table.has_rejected_column) {
      if (fields[4] == "0") {
        rec.rejected = false;
      } else if (fields[4] == "1") {
        rec.rejected = true;
      } else {
        FailAtLine(line_no, "rejected must be 0 or 1, got '" + fields[4] + "'");
      }
    }
    table.records.push_back(std::move(rec));
  }
  if (table.records.empty()) throw InputError("predictions file has no records");
  return table;
}

PredictionTable ParsePredictionsJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InputError("predictions JSON must be an array");
  PredictionTable table;
  std::size_t with_rejected = 0;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& obj = doc[i];
    const std::string where = "record " + std::to_string(i) + ": ";
    try {
      PredictionRecord rec;
      const json& id = obj.at("id");
      rec.id = id.is_string() ? id.get<std::string>() : id.dump();
      rec.y_true = obj.at("y_true").get<ClassId>();
      rec.y_pred = obj.at("y_pred").get<ClassId>();
      if (rec.y_true < 1 || rec.y_pred < 1) {
        throw InputError("class ids must be positive");
      }
      if (auto it = obj.find("confidence"); it != obj.end() && !it->is_null()) {
        rec.confidence = RealFromJson(*it, "confidence");
      }
      if (auto it = obj.find("rejected"); it != obj.end() && !it->is_null()) {
        const int flag = it->is_boolean() ? int{it->get<bool>()} : it->get<int>();
        if (flag != 0 && flag != 1) throw InputError("rejected must be 0 or 1");
        rec.rejected = flag == 1;
        ++with_rejected;
      }
      table.records.push_back(std::move(rec));
    } catch (const json::exception& e) {
      throw InputError(where + e.what());
    } catch (const InputError& e) {
      throw InputError(where + e.what());
    }
  }
  if (table.records.empty()) throw InputError("predictions JSON has no records");
  if (with_rejected != 0 && with_rejected != table.records.size()) {
    throw InputError("'rejected' must be present on every record or on none");
  }
  table.has_rejected_column = with_rejected != 0;
  return table;
}

PredictionTable ParsePredictions(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '[') {
    return ParsePredictionsJson(text);
  }
  return ParsePredictionsCsv(text);
}

std::string WritePredictionsCsv(const PredictionTable& table) {
  std::string out(table.has_rejected_column ? kPredictionsHeaderWithRejected
                                            : kPredictionsHeader);
  out += '\n';
  for (const auto& r : table.records) {
    out += CsvField(r.id);
    out += ',';
    out += std::to_string(r.y_true);
    out += ',';
    out += std::to_string(r.y_pred);
    out += ',';
    if (r.confidence) out += FormatReal(*r.confidence);
    if (table.has_rejected_column) {
      out += ',';
      out += r.rejected.value_or(false) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

json PredictionsToJson(const PredictionTable& table) {
  json arr = json::array();
  for (const auto& r : table.records) {
    json obj = {{"id", r.id}, {"y_true", r.y_true}, {"y_pred", r.y_pred}};
    obj["confidence"] = r.confidence ? RealToJson(*r.confidence) : json(nullptr);
    if (table.has_rejected_column) obj["rejected"] = r.rejected.value_or(false) ? 1 : 0;
    arr.push_back(std::move(obj));
  }
  return arr;
}

std::string ClassifierOutputDigest(const PredictionTable& table) {
  std::string canonical;
  for (const auto& r : table.records) {
    canonical += CsvField(r.id);
    canonical += ',';
    canonical += std::to_string(r.y_true);
    canonical += ',';
    canonical += std::to_string(r.y_pred);
    canonical += '\n';
  }
  return Sha256Hex(canonical);
}

json PointToJson(const CurvePoint& p) {
  json j;
  j["r"] = p.point.rejected;
  j["A"] = p.point.accuracy ? json(*p.point.accuracy) : json(nullptr);
  j["Q"] = p.point.quality;
  j["phi"] = RealToJson(p.point.rejection_quality);
  j["n"] = p.counts.n();
  j["an"] = p.counts.an;
  j["mn"] = p.counts.mn;
  j["ar"] = p.counts.ar;
  j["mr"] = p.counts.mr;
  return j;
}

CurvePoint PointFromJson(const json& j) {
  try {
    PartitionCounts c{j.at("an").get<Count>(), j.at("mn").get<Count>(),
                      j.at("ar").get<Count>(), j.at("mr").get<Count>()};
    CurvePoint p{c, MakeOperatingPoint(c)};
    const bool same =
        RealFromJson(j.at("r"), "r") == p.point.rejected &&
        RealFromJson(j.at("Q"), "Q") == p.point.quality &&
        RealFromJson(j.at("phi"), "phi") == p.point.rejection_quality &&
        (j.at("A").is_null() ? !p.point.accuracy
                             : p.point.accuracy &&
                                   RealFromJson(j.at("A"), "A") == *p.point.accuracy);
    if (!same) throw InputError("measures do not match counts " + c.ToString());
    return p;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad point: ") + e.what());
  }
}

std::string WriteCurveCsv(const std::vector<CurvePoint>& points) {
  std::string out(kCurveHeader);
  out += '\n';
  for (const auto& p : points) {
    out += FormatReal(p.point.rejected);
    out += ',';
    if (p.point.accuracy) out += FormatReal(*p.point.accuracy);
    out += ',';
    out += FormatReal(p.point.quality);
    out += ',';
    out += FormatReal(p.point.rejection_quality);
    for (Count v : {p.counts.an, p.counts.mn, p.counts.ar, p.counts.mr}) {
      out += ',';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

bool LooksLikeCurveCsv(std::string_view text) {
  const auto lines = Lines(text);
  return !lines.empty() && lines.front().second == kCurveHeader;
}

std::vector<CurvePoint> ParseCurveCsv(std::string_view text) {
  const auto lines = Lines(text);
  if (lines.empty() || lines.front().second != kCurveHeader) {
    throw InputError("expected curve header '" + std::string(kCurveHeader) + "'");
  }
  std::vector<CurvePoint> points;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto [line_no, line] = lines[i];
    const auto f = SplitCsvLine(line, line_no);
    if (f.size() != 8) FailAtLine(line_no, "expected 8 fields");
    PartitionCounts c{ParseInt<Count>(f[4], line_no, "an"),
                      ParseInt<Count>(f[5], line_no, "mn"),
                      ParseInt<Count>(f[6], line_no, "ar"),
                      ParseInt<Count>(f[7], line_no, "mr")};
    try {
      c.Validate();
    } catch (const InputError& e) {
      FailAtLine(line_no, e.what());
    }
    CurvePoint p{c, MakeOperatingPoint(c)};
    try {
      const bool same = ParseReal(f[0]) == p.point.rejected &&
                        ParseReal(f[2]) == p.point.quality &&
                        ParseReal(f[3]) == p.point.rejection_quality &&
                        (f[1].empty() ? !p.point.accuracy
                                      : p.point.accuracy &&
                                            ParseReal(f[1]) == *p.point.accuracy);
      if (!same) FailAtLine(line_no, "measures do not match counts " + c.ToString());
    } catch (const InputError& e) {
      if (std::string_view(e.what()).starts_with("line ")) throw;
      FailAtLine(line_no, e.what());
    }
    points.push_back(p);
  }
  return points;
}

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, std::string_view content) {
  if (path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace rejmetrics::cli
