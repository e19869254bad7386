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

#ifndef FAIRALLOC_THEOREMLAB_HPP_
#define FAIRALLOC_THEOREMLAB_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fairalloc/fairness.hpp"
#include "fairalloc/model.hpp"
#include "fairalloc/welfare_function.hpp"
#include "fairalloc/welfarist.hpp"

namespace fairalloc {

// Samples of the difference function h_k(x) = f((k+1)x) - f(kx).
struct ConstancyReport {
  unsigned k = 1;
  std::vector<std::pair<double, double>> samples;  // (x, h_k(x))
  double spread = 0.0;                             // max - min over samples
  bool constant = false;                           // spread <= tolerance
  std::optional<double> c_k;                       // mean of samples, if constant
};

// h_k(x) = f((k+1)x) - f(kx).
double difference_function(const WelfareFunction& f, unsigned k, double x);

// Throws ValidationError on an empty grid, a non-positive point, k = 0 or a
// non-positive tolerance; InvalidFunctionError if f fails on the grid.
ConstancyReport constancy_check(const WelfareFunction& f, unsigned k,
                                std::span<const double> grid, double tolerance);

// f ~ a ln x + b with a = k_max * c_{k_max} and b = f(1).
struct LogFit {
  double a = 0.0;
  double b = 0.0;
  double max_residual = 0.0;  // max over the grid of |f(x) - (a ln x + b)|
  unsigned k_used = 0;
  std::vector<ConstancyReport> reports;  // one per k = 1..k_max
};

// Some h_k is not constant; `failing` is the first such report.
struct NotLogVerdict {
  ConstancyReport failing;
};

using LogFitOutcome = std::variant<LogFit, NotLogVerdict>;

LogFitOutcome fit_log(const WelfareFunction& f, unsigned k_max, std::span<const double> grid,
                      double tolerance);

// Central difference (f(x+h) - f(x-h)) / 2h.
double central_difference(const WelfareFunction& f, double x, double h);

struct CounterexampleOptions {
  // h_k(y) and h_k(z) count as different only if they differ by more than
  // this; below it the gap is indistinguishable from rounding.
  double difference_tolerance = 1e-9;
  // Fixed epsilon instead of the halving search. Must lie in (0, z).
  std::optional<Rational> epsilon;
  unsigned max_halvings = 60;
  SolveOptions solve;
};

// Two agents, 2k+1 goods:
//   u_1 = (0, y, ..., y),  u_2 = (z - eps, z, ..., z).
Profile counterexample_profile(unsigned k, const Rational& y, const Rational& z,
                               const Rational& epsilon);

struct CounterexampleReport {
  unsigned k = 1;
  Rational y, z, epsilon;
  // Both sides of f((k+1)y) - f(ky) > f((k+1)z - eps) - f(kz - eps).
  double gap_y = 0.0;
  double gap_z_shifted = 0.0;
  Profile profile;
  SolveResult solver_output;
  Ef1Verdict ef1_verdict;
  bool all_maximizers_violate = false;
  std::uint64_t maximizers_checked = 0;
};

struct CounterexampleSearch {
  std::optional<CounterexampleReport> report;
  // Candidates where the strict inequality held but some maximizer was EF1.
  std::vector<std::string> diagnostics;
  std::uint64_t candidates_examined = 0;
};

// Scans k = 1..k_max and grid pairs for h_k(y) > h_k(z), picks epsilon, builds
// the two-agent profile and certifies by enumeration that every
// welfare-maximizing allocation violates EF1. Returns the first certified
// report in scan order.
CounterexampleSearch find_counterexample(const WelfareFunction& f, unsigned k_max,
                                         std::span<const Rational> search_grid,
                                         const CounterexampleOptions& options = {});

// Re-derives every claim of `report` from scratch: the profile shape, the
// strict inequality, the solver output and the EF1 violations. Returns the
// list of failed checks (empty when sound).
std::vector<std::string> audit_counterexample(const WelfareFunction& f,
                                              const CounterexampleReport& report,
                                              const SolveOptions& options = {});

// Adds n-2 agents and n-2 goods; extra agent t values only extra good t (at
// 1), the original agents value the extra goods at 0. Throws ValidationError
// unless base has two agents and n >= 3.
Profile extend_profile(const Profile& base, std::size_t n);

// lo, lo + step, ..., up to and including hi when it lands on the grid.
std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi, const Rational& step);

// {1/2, 1, 3/2, ..., 5}.
std::vector<Rational> default_search_grid();

// {0.5, 1, 2, 5, 10}.
std::vector<double> default_constancy_grid();

}  // namespace fairalloc

#endif  // FAIRALLOC_THEOREMLAB_HPP_
