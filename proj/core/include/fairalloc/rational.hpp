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

#ifndef FAIRALLOC_RATIONAL_HPP_
#define FAIRALLOC_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fairalloc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" (q > 0). Surrounding whitespace is allowed.
// Throws ParseError with `location` on malformed input.
Rational parse_rational(std::string_view text,
                        const std::string& location = "rational");

// Canonical text: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& value);

// Nearest double (round-to-nearest; monotone in the argument).
double to_double(const Rational& value);

}  // namespace fairalloc

#endif  // FAIRALLOC_RATIONAL_HPP_
