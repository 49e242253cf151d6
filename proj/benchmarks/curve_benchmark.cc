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

#include <vector>

#include "benchmark/benchmark.h"
#include "rejmetrics/comparison.h"
#include "rejmetrics/curve.h"
#include "rejmetrics/parallel.h"
#include "rejmetrics/synthetic.h"

namespace rejmetrics {
namespace {

struct Fixture {
  AccuracyVector accuracy;
  std::vector<double> confidence;
};

Fixture MakeFixture(std::size_t n) {
  const SyntheticDataset ds = GenerateGaussians(n, 1);
  return {ComputeAccuracyVector(ds.y_true, ClassifyNearestCenter(ds)),
          ConfidenceMaxProbability(ds.posteriors)};
}

void BM_GenerateGaussians(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GenerateGaussians(n, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GenerateGaussians)->Arg(10000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_RejectionCurve(benchmark::State& state) {
  const Fixture f = MakeFixture(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ComputeRejectionCurve(f.accuracy, f.confidence));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RejectionCurve)->Arg(10000)->Arg(200000)->Unit(benchmark::kMillisecond);

void BM_RelativeOptimalityMatrix(benchmark::State& state) {
  const Fixture f = MakeFixture(200000);
  const RejectionCurve curve =
      ThinCurve(ComputeRejectionCurve(f.accuracy, f.confidence),
                static_cast<std::size_t>(state.range(0)));
  std::vector<PartitionCounts> counts;
  for (const auto& p : curve.points) counts.push_back(p.counts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(RelativeOptimalityMatrix(counts, SweepThreadLimit()));
  }
  state.SetComplexityN(static_cast<std::int64_t>(counts.size()));
}
BENCHMARK(BM_RelativeOptimalityMatrix)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace rejmetrics

BENCHMARK_MAIN();
