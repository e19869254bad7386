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

#include "fairalloc/theoremlab.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fairalloc/error.hpp"

namespace fairalloc {
namespace {

// h_k at a rational point, each argument rounded once from its exact value.
double difference_at(const WelfareFunction& f, unsigned k, const Rational& x) {
  return evaluate_f(f, Rational(k + 1) * x) - evaluate_f(f, Rational(k) * x);
}

std::string assignment_text(const Allocation& allocation) {
  std::string out = "[";
  for (std::size_t g = 0; g < allocation.good_count(); ++g) {
    if (g != 0) out += ",";
    out += std::to_string(allocation.assignment()[g] + 1);
  }
  return out + "]";
}

std::string candidate_text(unsigned k, const Rational& y, const Rational& z,
                           const Rational& epsilon) {
  return "k=" + std::to_string(k) + ", y=" + to_string(y) + ", z=" + to_string(z) +
         ", epsilon=" + to_string(epsilon);
}

}  // namespace

double difference_function(const WelfareFunction& f, unsigned k, double x) {
  return f((k + 1) * x) - f(k * x);
}

ConstancyReport constancy_check(const WelfareFunction& f, unsigned k,
                                std::span<const double> grid, double tolerance) {
  if (k == 0) throw ValidationError("k must be a positive integer");
  if (grid.empty()) throw ValidationError("constancy grid is empty");
  if (!(tolerance > 0)) throw ValidationError("tolerance must be positive");

  ConstancyReport report;
  report.k = k;
  double lo = HUGE_VAL;
  double hi = -HUGE_VAL;
  for (double x : grid) {
    if (!(x > 0)) throw ValidationError("constancy grid points must be positive");
    const double h = difference_function(f, k, x);
    report.samples.emplace_back(x, h);
    lo = std::min(lo, h);
    hi = std::max(hi, h);
  }
  report.spread = hi - lo;
  report.constant = report.spread <= tolerance;
  if (report.constant) {
    double sum = 0.0;
    for (const auto& [x, h] : report.samples) sum += h;
    report.c_k = sum / static_cast<double>(report.samples.size());
  }
  return report;
}

LogFitOutcome fit_log(const WelfareFunction& f, unsigned k_max, std::span<const double> grid,
                      double tolerance) {
  if (k_max == 0) throw ValidationError("k_max must be a positive integer");
  LogFit fit;
  for (unsigned k = 1; k <= k_max; ++k) {
    ConstancyReport report = constancy_check(f, k, grid, tolerance);
    if (!report.constant) return NotLogVerdict{std::move(report)};
    fit.reports.push_back(std::move(report));
  }
  // k * c_k -> a as k grows (x f'(x) is the limit of k (f((1+1/k)x) - f(x))).
  fit.k_used = k_max;
  fit.a = k_max * *fit.reports.back().c_k;
  fit.b = f(1.0);
  for (double x : grid) {
    fit.max_residual =
        std::max(fit.max_residual, std::fabs(f(x) - (fit.a * std::log(x) + fit.b)));
  }
  return fit;
}

double central_difference(const WelfareFunction& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2 * h);
}

Profile counterexample_profile(unsigned k, const Rational& y, const Rational& z,
                               const Rational& epsilon) {
  if (k == 0) throw ValidationError("k must be a positive integer");
  if (!(y > 0) || !(z > 0)) throw ValidationError("y and z must be positive");
  if (!(epsilon > 0) || !(epsilon < z)) throw ValidationError("epsilon must lie in (0, z)");
  const std::size_t m = 2 * static_cast<std::size_t>(k) + 1;
  std::vector<Rational> utilities;
  utilities.reserve(2 * m);
  utilities.emplace_back(0);
  for (std::size_t j = 1; j < m; ++j) utilities.push_back(y);
  utilities.push_back(z - epsilon);
  for (std::size_t j = 1; j < m; ++j) utilities.push_back(z);
  return Profile(2, m, std::move(utilities));
}

CounterexampleSearch find_counterexample(const WelfareFunction& f, unsigned k_max,
                                         std::span<const Rational> search_grid,
                                         const CounterexampleOptions& options) {
  for (const Rational& x : search_grid) {
    if (!(x > 0)) throw ValidationError("search grid points must be positive");
  }
  CounterexampleSearch search;
  for (unsigned k = 1; k <= k_max; ++k) {
    std::vector<double> h(search_grid.size());
    for (std::size_t i = 0; i < search_grid.size(); ++i) h[i] = difference_at(f, k, search_grid[i]);

    for (std::size_t i = 0; i < search_grid.size(); ++i) {
      for (std::size_t j = i + 1; j < search_grid.size(); ++j) {
        if (std::fabs(h[i] - h[j]) <= options.difference_tolerance) continue;
        // Orient the pair so that h_k(y) > h_k(z).
        const bool forward = h[i] > h[j];
        const Rational& y = forward ? search_grid[i] : search_grid[j];
        const Rational& z = forward ? search_grid[j] : search_grid[i];
        const double gap_y = forward ? h[i] : h[j];
        ++search.candidates_examined;

        std::vector<Rational> epsilons;
        if (options.epsilon) {
          if (!(*options.epsilon > 0) || !(*options.epsilon < z)) {
            throw ValidationError("epsilon " + to_string(*options.epsilon) +
                                  " is outside (0, z) for z = " + to_string(z));
          }
          epsilons.push_back(*options.epsilon);
        } else {
          Rational eps = z / 2;
          for (unsigned t = 0; t < options.max_halvings; ++t, eps /= 2) epsilons.push_back(eps);
        }

        for (const Rational& eps : epsilons) {
          const double gap_z_shifted = evaluate_f(f, Rational(k + 1) * z - eps) -
                                       evaluate_f(f, Rational(k) * z - eps);
          if (!(gap_y > gap_z_shifted)) continue;

          Profile profile = counterexample_profile(k, y, z, eps);
          const std::vector<Allocation> maximizers = rule_maximizers(profile, f, options.solve);
          const auto ef1_maximizer =
              std::find_if(maximizers.begin(), maximizers.end(),
                           [&](const Allocation& a) { return is_ef1(profile, a).holds; });
          if (ef1_maximizer != maximizers.end()) {
            search.diagnostics.push_back(candidate_text(k, y, z, eps) +
                                         ": strict inequality holds but maximizer " +
                                         assignment_text(*ef1_maximizer) + " is EF1");
            continue;
          }

          SolveResult solved = solve_rule(profile, f, options.solve);
          Ef1Verdict verdict = is_ef1(profile, solved.allocation);
          search.report = CounterexampleReport{k,
                                               y,
                                               z,
                                               eps,
                                               gap_y,
                                               gap_z_shifted,
                                               std::move(profile),
                                               std::move(solved),
                                               std::move(verdict),
                                               true,
                                               maximizers.size()};
          return search;
        }
      }
    }
  }
  return search;
}

std::vector<std::string> audit_counterexample(const WelfareFunction& f,
                                              const CounterexampleReport& report,
                                              const SolveOptions& options) {
  std::vector<std::string> failures;
  const unsigned k = report.k;
  if (!(report.profile == counterexample_profile(k, report.y, report.z, report.epsilon))) {
    failures.push_back("profile does not match the two-agent construction");
  }
  const double gap_y = difference_at(f, k, report.y);
  const double gap_z = evaluate_f(f, Rational(k + 1) * report.z - report.epsilon) -
                       evaluate_f(f, Rational(k) * report.z - report.epsilon);
  if (!(gap_y > gap_z)) failures.push_back("strict difference inequality does not hold");

  const SolveResult solved = solve_rule(report.profile, f, options);
  if (!(solved.allocation == report.solver_output.allocation)) {
    failures.push_back("solver output is not reproducible");
  }
  const Ef1Verdict verdict = is_ef1(report.profile, report.solver_output.allocation);
  if (verdict.holds) failures.push_back("solver output is EF1");
  for (const Ef1Violation& v : report.ef1_verdict.violations) {
    const Bundle envied = report.solver_output.allocation.bundle(v.envied);
    const Rational own =
        bundle_utility(report.profile, v.envier, report.solver_output.allocation.bundle(v.envier));
    for (GoodIndex g : envied) {
      if (own >= bundle_utility(report.profile, v.envier, envied.without(g))) {
        failures.push_back("witness pair (" + std::to_string(v.envier + 1) + ", " +
                           std::to_string(v.envied + 1) + ") is rescued by removing g" +
                           std::to_string(g + 1));
      }
    }
  }
  for (const Allocation& a : rule_maximizers(report.profile, f, options)) {
    if (is_ef1(report.profile, a).holds) {
      failures.push_back("maximizer " + assignment_text(a) + " is EF1");
    }
  }
  return failures;
}

Profile extend_profile(const Profile& base, std::size_t n) {
  if (base.agent_count() != 2) {
    throw ValidationError("extend_profile needs a two-agent base profile, got " +
                          std::to_string(base.agent_count()) + " agents");
  }
  if (n < 3) throw ValidationError("target agent count must be at least 3");
  const std::size_t m0 = base.good_count();
  const std::size_t extra = n - 2;
  const std::size_t m = m0 + extra;
  std::vector<Rational> utilities(n * m);
  for (AgentIndex i = 0; i < 2; ++i) {
    for (GoodIndex g = 0; g < m0; ++g) utilities[i * m + g] = base.utility(i, g);
  }
  for (std::size_t t = 0; t < extra; ++t) utilities[(2 + t) * m + (m0 + t)] = 1;
  return Profile(n, m, std::move(utilities));
}

std::vector<Rational> rational_grid(const Rational& lo, const Rational& hi,
                                    const Rational& step) {
  if (!(step > 0)) throw ValidationError("grid step must be positive");
  if (hi < lo) throw ValidationError("grid upper bound is below the lower bound");
  std::vector<Rational> out;
  for (Rational x = lo; x <= hi; x += step) out.push_back(x);
  return out;
}

std::vector<Rational> default_search_grid() {
  return rational_grid(Rational(1, 2), Rational(5), Rational(1, 2));
}

std::vector<double> default_constancy_grid() { return {0.5, 1.0, 2.0, 5.0, 10.0}; }

}  // namespace fairalloc
