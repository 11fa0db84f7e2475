// Copyright 2026 The satprob Authors
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

#ifndef SATPROB_ERRORS_HPP
#define SATPROB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satprob {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (expressions, specification strings, model files).
// `offset` is a byte offset into the offending text where known.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : Error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  explicit ParseError(const std::string& msg) : Error(msg), offset_(0) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Structurally invalid model or specification (dangling states, empty
// action sets, thresholds out of range, ...).
class ModelError : public Error {
 public:
  using Error::Error;
};

// A transition row does not sum to one under a valuation.
class NotStochasticError : public ModelError {
 public:
  NotStochasticError(int state, const std::string& action, double sum)
      : ModelError("row (state " + std::to_string(state) + ", action " +
                   action + ") sums to " + std::to_string(sum) +
                   ", expected 1"),
        state_(state),
        action_(action),
        sum_(sum) {}

  int state() const { return state_; }
  const std::string& action() const { return action_; }
  double sum() const { return sum_; }

 private:
  int state_;
  std::string action_;
  double sum_;
};

// A syntactically present edge evaluated outside (0, 1].
class NotGraphPreservingError : public ModelError {
 public:
  NotGraphPreservingError(int state, const std::string& action, int target,
                          double value)
      : ModelError("edge (state " + std::to_string(state) + ", action " +
                   action + ", target " + std::to_string(target) +
                   ") evaluates to " + std::to_string(value) +
                   ", outside (0,1]"),
        state_(state),
        action_(action),
        target_(target),
        value_(value) {}

  int state() const { return state_; }
  const std::string& action() const { return action_; }
  int target() const { return target_; }
  double value() const { return value_; }

 private:
  int state_;
  std::string action_;
  int target_;
  double value_;
};

// Expected cumulative reward is unbounded because the target is not
// reached almost surely from some relevant state.
class InfiniteRewardError : public Error {
 public:
  using Error::Error;
};

// File system / CSV / JSON I/O failures.
class IoError : public Error {
 public:
  using Error::Error;
};

// Internal numerical failure: rational overflow, non-convergence, ...
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace satprob

#endif  // SATPROB_ERRORS_HPP
