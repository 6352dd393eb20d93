// Copyright 2026 The qgwalk Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgwalk {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural precondition (graph shape, coin dimensions,
/// probability rows, parameter ranges). The message names the offending item.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Enumeration refused because the result set is larger than the cap.
class CapExceededError : public Error {
 public:
  CapExceededError(std::uint64_t count, std::uint64_t cap)
      : Error("partition count " + std::to_string(count) +
              " exceeds enumeration cap " + std::to_string(cap)),
        count_(count),
        cap_(cap) {}

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t count_;
  std::uint64_t cap_;
};

/// Reduced secular determinant evaluated too close to 1 - t^2 e^{2ikL} = 0.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed to produce a usable answer.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgwalk
