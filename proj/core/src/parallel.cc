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

#include "rejmetrics/parallel.h"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace rejmetrics {

std::size_t SweepThreadLimit() {
  std::size_t limit = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv(kThreadsEnvVar)) {
    const std::string_view text(env);
    std::size_t cap = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec == std::errc() && ptr == text.data() + text.size() && cap > 0) {
      limit = std::min(limit, cap);
    }
  }
  return limit;
}

}  // namespace rejmetrics
