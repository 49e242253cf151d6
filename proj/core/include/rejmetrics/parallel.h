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

#ifndef REJMETRICS_PARALLEL_H_
#define REJMETRICS_PARALLEL_H_

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rejmetrics {

inline constexpr const char* kThreadsEnvVar = "REJECT_METRICS_THREADS";

// Hardware concurrency capped by REJECT_METRICS_THREADS when set to a
// positive integer. Never returns 0.
std::size_t SweepThreadLimit();

// Calls fn(i) for i in [0, count), striding indices over up to `threads`
// workers. fn must be safe to call concurrently for distinct i.
template <typename Fn>
void ParallelFor(std::size_t count, std::size_t threads, Fn fn) {
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(count, 1));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&fn, t, threads, count] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
}

}  // namespace rejmetrics

#endif  // REJMETRICS_PARALLEL_H_
