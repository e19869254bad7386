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

#include "fairalloc/welfare_function.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "fairalloc/error.hpp"

namespace fairalloc {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0)) {
    throw InvalidFunctionError(std::string(name) + " must be a positive finite number, got " +
                               std::to_string(v));
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidFunctionError(std::string(name) + " must be finite, got " + std::to_string(v));
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

// Integer, decimal or "p/q".
double parse_number(std::string_view text, const std::string& location) {
  if (text.find('/') != std::string_view::npos) return to_double(parse_rational(text, location));
  double v = 0.0;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError(location, "expected a number, got \"" + std::string(text) + "\"");
  }
  return v;
}

std::vector<double> parse_params(std::string_view text, std::size_t count,
                                 const std::string& family) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma - start), "--f " + family));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.size() != count) {
    throw ParseError("--f " + family, "expected " + std::to_string(count) + " parameter(s), got " +
                                          std::to_string(out.size()));
  }
  return out;
}

double check_result(double v, const WelfareFunction& f, double x) {
  if (std::isnan(v) || v == HUGE_VAL) {
    throw InvalidFunctionError(f.describe() + " evaluates to " + format_double(v) + " at x = " +
                               format_double(x));
  }
  return v;
}

}  // namespace

WelfareFunction WelfareFunction::log_affine(double a, double b) {
  require_positive(a, "log:a");
  require_finite(b, "log:b");
  return WelfareFunction(LogAffine{a, b});
}

WelfareFunction WelfareFunction::affine(double a, double b) {
  require_positive(a, "affine:a");
  require_finite(b, "affine:b");
  return WelfareFunction(Affine{a, b});
}

WelfareFunction WelfareFunction::power(double p) {
  require_positive(p, "power:p");
  return WelfareFunction(Power{p});
}

WelfareFunction WelfareFunction::exp() { return WelfareFunction(Exp{}); }

WelfareFunction WelfareFunction::custom(Expression expr) {
  const auto grid = default_validation_grid();
  IncreasingCheck check;
  try {
    check = validate_increasing(expr, grid);
  } catch (const EvaluationError& e) {
    throw InvalidFunctionError("expr:" + expr.to_string() + " is not usable on (0, 64]: " +
                               e.what());
  }
  if (!check.increasing) {
    std::ostringstream msg;
    msg << "expr:" << expr.to_string() << " is not increasing: f(" << check.failing_pair->first
        << ") = " << check.failing_values->first << " >= f(" << check.failing_pair->second
        << ") = " << check.failing_values->second;
    throw InvalidFunctionError(msg.str());
  }
  double at_zero = 0.0;
  try {
    at_zero = evaluate_expression(expr, 0.0);
  } catch (const EvaluationError& e) {
    throw InvalidFunctionError("expr:" + expr.to_string() + " is undefined at x = 0: " + e.what());
  }
  const double first = evaluate_expression(expr, grid.front());
  if (!(at_zero < first)) {
    throw InvalidFunctionError("expr:" + expr.to_string() + " is not increasing: f(0) = " +
                               format_double(at_zero) + " >= f(" + format_double(grid.front()) +
                               ")");
  }
  return WelfareFunction(CustomExpression{std::move(expr)});
}

WelfareFunction WelfareFunction::parse(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view family = text.substr(0, colon);
  const std::string_view args =
      colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  const bool has_args = colon != std::string_view::npos;

  if (family == "log" || family == "ln" || family == "mnw") {
    if (!has_args) return log_affine();
    const auto p = parse_params(args, 2, "log");
    return log_affine(p[0], p[1]);
  }
  if (family == "affine" || family == "muw") {
    if (!has_args) return affine();
    const auto p = parse_params(args, 2, "affine");
    return affine(p[0], p[1]);
  }
  if (family == "power") {
    if (!has_args) throw ParseError("--f power", "expected power:p");
    return power(parse_params(args, 1, "power")[0]);
  }
  if (family == "exp" && !has_args) return exp();
  if (family == "expr") return custom(parse_expression(args));
  throw ParseError("--f", "unknown function spec \"" + std::string(text) +
                              "\" (expected log, log:a,b, affine:a,b, power:p, exp, expr:...)");
}

double WelfareFunction::operator()(double x) const {
  if (!(x >= 0)) throw ValidationError("welfare functions are defined on x >= 0");
  const double v = std::visit(
      Overloaded{
          [x](const LogAffine& s) { return x == 0 ? -HUGE_VAL : s.a * std::log(x) + s.b; },
          [x](const Affine& s) { return s.a * x + s.b; },
          [x](const Power& s) { return std::pow(x, s.p); },
          [x](const Exp&) { return std::exp(x); },
          [x](const CustomExpression& s) { return evaluate_expression(s.expr, x); },
      },
      spec_);
  return check_result(v, *this, x);
}

std::string WelfareFunction::describe() const {
  return std::visit(
      Overloaded{
          [](const LogAffine& s) {
            return "log:" + format_double(s.a) + "," + format_double(s.b);
          },
          [](const Affine& s) {
            return "affine:" + format_double(s.a) + "," + format_double(s.b);
          },
          [](const Power& s) { return "power:" + format_double(s.p); },
          [](const Exp&) { return std::string("exp"); },
          [](const CustomExpression& s) { return "expr:" + s.expr.to_string(); },
      },
      spec_);
}

double evaluate_f(const WelfareFunction& f, const Rational& x) {
  if (x < 0) throw ValidationError("welfare functions are defined on x >= 0");
  return f(to_double(x));
}

std::span<const double> default_validation_grid() {
  static const std::array<double, 65> grid = [] {
    std::array<double, 65> g{};
    for (int k = -40; k <= 24; ++k) g[k + 40] = std::exp2(k / 4.0);
    return g;
  }();
  return grid;
}

void ExtendedWelfare::add_term(double term) {
  if (term == -HUGE_VAL) {
    ++neg_inf_count;
  } else {
    finite_part += term;
  }
}

bool ExtendedWelfare::ties_with(const ExtendedWelfare& other, double tolerance) const {
  return neg_inf_count == other.neg_inf_count &&
         std::fabs(finite_part - other.finite_part) <= tolerance;
}

std::weak_ordering operator<=>(const ExtendedWelfare& a, const ExtendedWelfare& b) {
  if (a.neg_inf_count != b.neg_inf_count) {
    return a.neg_inf_count < b.neg_inf_count ? std::weak_ordering::greater
                                             : std::weak_ordering::less;
  }
  if (a.finite_part < b.finite_part) return std::weak_ordering::less;
  if (a.finite_part > b.finite_part) return std::weak_ordering::greater;
  return std::weak_ordering::equivalent;
}

ExtendedWelfare welfare_of_utilities(std::span<const Rational> utilities,
                                     const WelfareFunction& f) {
  ExtendedWelfare w;
  for (const Rational& u : utilities) w.add_term(evaluate_f(f, u));
  return w;
}

std::string to_string(const ExtendedWelfare& welfare) {
  if (welfare.neg_inf_count > 0) return "-inf";
  return format_double(welfare.finite_part);
}

}  // namespace fairalloc
