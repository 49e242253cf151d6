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

#ifndef REJMETRICS_ERRORS_H_
#define REJMETRICS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace rejmetrics {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input data (length mismatch, out-of-range value,
// unparseable row).
class InputError : public Error {
 public:
  using Error::Error;
};

// The requested computation is undefined for these arguments and a different
// operation answers the question (e.g. relative optimality at equal rejected
// fractions belongs to the dominance test).
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

// A measure triplet implies a negative count. `bound()` names the violated
// inequality.
class InfeasibleError : public Error {
 public:
  InfeasibleError(std::string bound, const std::string& what)
      : Error(what), bound_(std::move(bound)) {}

  const std::string& bound() const { return bound_; }

 private:
  std::string bound_;
};

// A measure triplet is feasible but does not correspond to integer counts for
// the stated sample count.
class InconsistentCountError : public Error {
 public:
  using Error::Error;
};

}  // namespace rejmetrics

#endif  // REJMETRICS_ERRORS_H_
