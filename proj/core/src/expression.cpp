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

#include "fairalloc/expression.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <string>
#include <system_error>

namespace fairalloc {

struct Expression::Node {
  Kind kind;
  double value = 0.0;
  std::vector<Expression> children;
};

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k != 0) out += ", ";
    out += items[k];
  }
  return out;
}

const char* binary_symbol(Expression::Kind kind) {
  switch (kind) {
    case Expression::Kind::kAdd: return "+";
    case Expression::Kind::kSub: return "-";
    case Expression::Kind::kMul: return "*";
    case Expression::Kind::kDiv: return "/";
    case Expression::Kind::kPow: return "^";
    default: return "?";
  }
}

bool is_binary(Expression::Kind kind) {
  switch (kind) {
    case Expression::Kind::kAdd:
    case Expression::Kind::kSub:
    case Expression::Kind::kMul:
    case Expression::Kind::kDiv:
    case Expression::Kind::kPow:
      return true;
    default:
      return false;
  }
}

bool is_unary(Expression::Kind kind) {
  switch (kind) {
    case Expression::Kind::kNeg:
    case Expression::Kind::kLn:
    case Expression::Kind::kExp:
    case Expression::Kind::kSqrt:
      return true;
    default:
      return false;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    skip_space();
    Expression e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'",
           {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"});
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::vector<std::string> expected) const {
    throw ExpressionSyntaxError(pos_, message, std::move(expected));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'"
                               : "unexpected end of input",
           {"'" + std::string(1, c) + "'"});
    }
  }

  Expression parse_expr() {
    Expression lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = Expression::binary(Expression::Kind::kAdd, std::move(lhs), parse_term());
      } else if (accept('-')) {
        lhs = Expression::binary(Expression::Kind::kSub, std::move(lhs), parse_term());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_term() {
    Expression lhs = parse_unary();
    for (;;) {
      if (accept('*')) {
        lhs = Expression::binary(Expression::Kind::kMul, std::move(lhs), parse_unary());
      } else if (accept('/')) {
        lhs = Expression::binary(Expression::Kind::kDiv, std::move(lhs), parse_unary());
      } else {
        return lhs;
      }
    }
  }

  Expression parse_unary() {
    if (accept('-')) return Expression::unary(Expression::Kind::kNeg, parse_unary());
    if (accept('+')) return parse_unary();
    return parse_power();
  }

  Expression parse_power() {
    Expression base = parse_primary();
    if (accept('^')) {
      return Expression::binary(Expression::Kind::kPow, std::move(base), parse_unary());
    }
    return base;
  }

  Expression parse_primary() {
    skip_space();
    static const std::vector<std::string> kOperand = {"number", "'x'", "'ln'", "'exp'",
                                                      "'sqrt'", "'neg'", "'('"};
    if (pos_ == text_.size()) fail("unexpected end of input", kOperand);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expression inner = parse_expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return Expression::variable();
      Expression::Kind kind;
      if (name == "ln") {
        kind = Expression::Kind::kLn;
      } else if (name == "exp") {
        kind = Expression::Kind::kExp;
      } else if (name == "sqrt") {
        kind = Expression::Kind::kSqrt;
      } else if (name == "neg") {
        kind = Expression::Kind::kNeg;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'", kOperand);
      }
      expect('(');
      Expression arg = parse_expr();
      expect(')');
      return Expression::unary(kind, std::move(arg));
    }
    fail("unexpected '" + std::string(1, c) + "'", kOperand);
  }

  Expression parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t count = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++count;
      }
      return count;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      pos_ = start;
      fail("malformed number", {"digit"});
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent", {"digit"});
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      pos_ = start;
      fail("number out of range", {"finite number"});
    }
    return Expression::number(value);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const Expression& e, std::string& out) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::kNumber: {
      char buf[64];
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, e.value());
      (void)ec;
      out.append(buf, ptr);
      return;
    }
    case Kind::kVariable:
      out += 'x';
      return;
    case Kind::kNeg:
      out += "(-";
      print(e.operand(), out);
      out += ')';
      return;
    case Kind::kLn:
    case Kind::kExp:
    case Kind::kSqrt:
      out += e.kind() == Kind::kLn ? "ln(" : e.kind() == Kind::kExp ? "exp(" : "sqrt(";
      print(e.operand(), out);
      out += ')';
      return;
    default:
      out += '(';
      print(e.lhs(), out);
      out += ' ';
      out += binary_symbol(e.kind());
      out += ' ';
      print(e.rhs(), out);
      out += ')';
      return;
  }
}

[[noreturn]] void domain_error(const std::string& what) {
  throw EvaluationError(EvaluationError::Kind::kDomain, what);
}

double checked(double v, const char* op) {
  if (std::isnan(v)) domain_error(std::string("NaN produced by ") + op);
  return v;
}

double eval(const Expression& e, double x) {
  using Kind = Expression::Kind;
  switch (e.kind()) {
    case Kind::kNumber: return e.value();
    case Kind::kVariable: return x;
    case Kind::kAdd: return checked(eval(e.lhs(), x) + eval(e.rhs(), x), "'+'");
    case Kind::kSub: return checked(eval(e.lhs(), x) - eval(e.rhs(), x), "'-'");
    case Kind::kMul: return checked(eval(e.lhs(), x) * eval(e.rhs(), x), "'*'");
    case Kind::kDiv: return checked(eval(e.lhs(), x) / eval(e.rhs(), x), "'/'");
    case Kind::kPow: return checked(std::pow(eval(e.lhs(), x), eval(e.rhs(), x)), "'^'");
    case Kind::kNeg: return -eval(e.operand(), x);
    case Kind::kExp: return checked(std::exp(eval(e.operand(), x)), "exp");
    case Kind::kLn: {
      const double v = eval(e.operand(), x);
      if (v < 0) domain_error("ln of negative value " + std::to_string(v));
      return checked(std::log(v), "ln");
    }
    case Kind::kSqrt: {
      const double v = eval(e.operand(), x);
      if (v < 0) domain_error("sqrt of negative value " + std::to_string(v));
      return checked(std::sqrt(v), "sqrt");
    }
  }
  domain_error("corrupt expression node");
}

}  // namespace

ExpressionSyntaxError::ExpressionSyntaxError(std::size_t position, const std::string& message,
                                             std::vector<std::string> expected)
    : ParseError("position " + std::to_string(position),
                 expected.empty() ? message : message + " (expected " + join(expected) + ")"),
      position_(position),
      expected_(std::move(expected)) {}

Expression Expression::number(double value) {
  return Expression(std::make_shared<const Node>(Node{Kind::kNumber, value, {}}));
}

Expression Expression::variable() {
  return Expression(std::make_shared<const Node>(Node{Kind::kVariable, 0.0, {}}));
}

Expression Expression::binary(Kind kind, Expression lhs, Expression rhs) {
  if (!is_binary(kind)) throw ValidationError("not a binary operator");
  return Expression(std::make_shared<const Node>(
      Node{kind, 0.0, {std::move(lhs), std::move(rhs)}}));
}

Expression Expression::unary(Kind kind, Expression operand) {
  if (!is_unary(kind)) throw ValidationError("not a unary function");
  return Expression(std::make_shared<const Node>(Node{kind, 0.0, {std::move(operand)}}));
}

Expression::Kind Expression::kind() const noexcept { return node_->kind; }
double Expression::value() const noexcept { return node_->value; }

const Expression& Expression::lhs() const {
  if (node_->children.empty()) throw ValidationError("leaf node has no operands");
  return node_->children[0];
}

const Expression& Expression::rhs() const {
  if (node_->children.size() < 2) throw ValidationError("node has no right operand");
  return node_->children[1];
}

std::string Expression::to_string() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Expression::Kind::kNumber) return a.value() == b.value();
  return a.node_->children == b.node_->children;
}

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

double evaluate_expression(const Expression& expr, double x) {
  if (!(x >= 0)) throw ValidationError("expressions are evaluated at x >= 0 only");
  const double v = eval(expr, x);
  if (v == HUGE_VAL) {
    throw EvaluationError(EvaluationError::Kind::kNonFiniteAbove,
                          expr.to_string() + " evaluates to +inf at x = " + std::to_string(x));
  }
  return v;
}

IncreasingCheck validate_increasing(const Expression& expr, std::span<const double> grid) {
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0)) throw ValidationError("grid points must be positive");
    if (k > 0 && !(grid[k - 1] < grid[k])) {
      throw ValidationError("grid must be strictly ascending");
    }
  }
  IncreasingCheck check;
  double previous = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double value = evaluate_expression(expr, grid[k]);
    if (k > 0 && !(previous < value)) {
      check.increasing = false;
      check.failing_pair.emplace(grid[k - 1], grid[k]);
      check.failing_values.emplace(previous, value);
      return check;
    }
    previous = value;
  }
  return check;
}

}  // namespace fairalloc
