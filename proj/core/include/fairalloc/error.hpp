// Copyright 2026 The fairalloc Authors.
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

#ifndef FAIRALLOC_ERROR_HPP_
#define FAIRALLOC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairalloc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Agent or good index outside the profile.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: dimension mismatch, negative utility,
// unassigned good, unsorted grid and the like.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed text. `location` is a human-readable position such as
// "line 3, column 7" or "utilities[1][2]".
class ParseError : public Error {
 public:
  ParseError(const std::string& location, const std::string& message)
      : Error(location + ": " + message), location_(location) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

// Raised when n^m exceeds the enumeration budget.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A welfare function that is not increasing, or that evaluates to NaN/+inf.
class InvalidFunctionError : public Error {
 public:
  using Error::Error;
};

}  // namespace fairalloc

#endif  // FAIRALLOC_ERROR_HPP_
