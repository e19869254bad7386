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

#ifndef FAIRALLOC_WELFARE_FUNCTION_HPP_
#define FAIRALLOC_WELFARE_FUNCTION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fairalloc/expression.hpp"
#include "fairalloc/rational.hpp"

namespace fairalloc {

// f(x) = a ln x + b, a > 0. f(0) = -inf. The MNW family.
struct LogAffine {
  double a = 1.0;
  double b = 0.0;
};

// f(x) = a x + b, a > 0. The MUW family.
struct Affine {
  double a = 1.0;
  double b = 0.0;
};

// f(x) = x^p, p > 0.
struct Power {
  double p = 1.0;
};

// f(x) = e^x.
struct Exp {};

struct CustomExpression {
  Expression expr;
};

// An increasing f: [0, inf) -> [-inf, inf). Immutable; cheap to copy.
class WelfareFunction {
 public:
  using Spec = std::variant<LogAffine, Affine, Power, Exp, CustomExpression>;

  // Throw InvalidFunctionError on a non-positive or non-finite parameter.
  static WelfareFunction log_affine(double a = 1.0, double b = 0.0);
  static WelfareFunction affine(double a = 1.0, double b = 0.0);
  static WelfareFunction power(double p);
  static WelfareFunction exp();
  // Checked for strict increase on default_validation_grid() and for
  // f(0) < f(grid[0]); throws InvalidFunctionError otherwise.
  static WelfareFunction custom(Expression expr);

  // Command-line syntax: "log", "log:a,b", "affine:a,b", "power:p", "exp",
  // "expr:<expression>". Numbers accept integers, decimals and "p/q".
  // Throws ParseError / InvalidFunctionError.
  static WelfareFunction parse(std::string_view text);

  const Spec& spec() const noexcept { return spec_; }
  bool is_log_affine() const noexcept { return std::holds_alternative<LogAffine>(spec_); }

  // f(x) for x >= 0. Throws InvalidFunctionError on NaN or +inf.
  double operator()(double x) const;

  // Canonical spec text accepted by parse().
  std::string describe() const;

 private:
  explicit WelfareFunction(Spec spec) : spec_(std::move(spec)) {}
  Spec spec_;
};

// f(x) via the nearest double to x.
double evaluate_f(const WelfareFunction& f, const Rational& x);

// Geometric grid 2^(k/4), k = -40..24, roughly [0.001, 64].
std::span<const double> default_validation_grid();

// Welfare on [-inf, inf): the number of -inf terms and the sum of the rest.
// Fewer -inf terms is strictly better; equal counts compare by finite_part.
struct ExtendedWelfare {
  std::size_t neg_inf_count = 0;
  double finite_part = 0.0;

  void add_term(double term);

  bool is_finite() const noexcept { return neg_inf_count == 0; }

  // Same -inf count and finite parts within `tolerance`.
  bool ties_with(const ExtendedWelfare& other, double tolerance) const;

  friend bool operator==(const ExtendedWelfare& a, const ExtendedWelfare& b) {
    return a.neg_inf_count == b.neg_inf_count && a.finite_part == b.finite_part;
  }
  friend std::weak_ordering operator<=>(const ExtendedWelfare& a, const ExtendedWelfare& b);
};

// Sum of f(u_i) in agent order.
ExtendedWelfare welfare_of_utilities(std::span<const Rational> utilities,
                                     const WelfareFunction& f);

std::string to_string(const ExtendedWelfare& welfare);

}  // namespace fairalloc

#endif  // FAIRALLOC_WELFARE_FUNCTION_HPP_
