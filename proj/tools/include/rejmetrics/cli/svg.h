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

#ifndef REJMETRICS_CLI_SVG_H_
#define REJMETRICS_CLI_SVG_H_

#include <string>
#include <vector>

#include "rejmetrics/curve.h"

namespace rejmetrics::cli {

struct CurveSeries {
  std::string name;
  std::vector<CurvePoint> points;
};

// Static SVG with three side-by-side panels: A, Q and phi against r. phi is
// clipped to the panel top; points with undefined A are skipped.
std::string RenderCurveSvg(const std::vector<CurveSeries>& series);

}  // namespace rejmetrics::cli

#endif  // REJMETRICS_CLI_SVG_H_
