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

#ifndef FAIRALLOC_EXPRESSION_HPP_
#define FAIRALLOC_EXPRESSION_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fairalloc/error.hpp"

namespace fairalloc {

// Syntax error in an expression string. `position` is the 0-based offset of
// the offending character; `expected` lists what would have been accepted.
class ExpressionSyntaxError : public ParseError {
 public:
  ExpressionSyntaxError(std::size_t position, const std::string& message,
                        std::vector<std::string> expected = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// Evaluation produced NaN, +inf, or hit a domain violation such as the
// square root of a negative intermediate.
class EvaluationError : public InvalidFunctionError {
 public:
  enum class Kind { kDomain, kNonFiniteAbove };

  EvaluationError(Kind kind, const std::string& message)
      : InvalidFunctionError(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

// Immutable AST over the single variable x.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func    := 'ln' | 'exp' | 'sqrt' | 'neg'
class Expression {
 public:
  enum class Kind { kNumber, kVariable, kAdd, kSub, kMul, kDiv, kPow, kNeg, kLn, kExp, kSqrt };

  static Expression number(double value);
  static Expression variable();
  static Expression binary(Kind kind, Expression lhs, Expression rhs);
  static Expression unary(Kind kind, Expression operand);

  Kind kind() const noexcept;
  double value() const noexcept;
  // Binary nodes: lhs/rhs. Unary nodes: operand (same as lhs).
  const Expression& lhs() const;
  const Expression& rhs() const;
  const Expression& operand() const { return lhs(); }

  // Fully parenthesised canonical form; parse_expression(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Expression& a, const Expression& b);

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Throws ExpressionSyntaxError (malformed input, unknown identifier).
Expression parse_expression(std::string_view text);

// IEEE semantics, ln(0) = -inf. Throws EvaluationError on NaN, on +inf, on
// ln/sqrt of a negative intermediate, and ValidationError for x < 0.
double evaluate_expression(const Expression& expr, double x);

struct IncreasingCheck {
  bool increasing = true;
  // First adjacent grid pair (x_k, x_{k+1}) with f(x_k) >= f(x_{k+1}).
  std::optional<std::pair<double, double>> failing_pair;
  std::optional<std::pair<double, double>> failing_values;
};

// Strict comparison of consecutive evaluations along `grid`, which must be
// positive and ascending (ValidationError otherwise).
IncreasingCheck validate_increasing(const Expression& expr, std::span<const double> grid);

}  // namespace fairalloc

#endif  // FAIRALLOC_EXPRESSION_HPP_
