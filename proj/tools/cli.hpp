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

#ifndef FAIRALLOC_TOOLS_CLI_HPP_
#define FAIRALLOC_TOOLS_CLI_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fairalloc/random_profile.hpp"
#include "fairalloc/welfare_function.hpp"
#include "fairalloc/welfarist.hpp"

namespace fairalloc::cli {

// 1 means "a requested property is false", never an error.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInputError = 2,
  kExitCapacity = 3,
};

enum class OutputFormat { kText, kStructured, kCsv };

struct Checks {
  bool ef = true;
  bool ef1 = true;
  bool po = true;
};

struct SolveConfig {
  std::string profile_path;
  WelfareFunction f = WelfareFunction::log_affine();
  SolveOptions solve;
  OutputFormat format = OutputFormat::kStructured;
  std::optional<std::string> allocation_out;
};

struct CheckConfig {
  std::string profile_path;
  std::string allocation_path;
  Checks checks;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
  OutputFormat format = OutputFormat::kStructured;
};

struct CounterexampleConfig {
  WelfareFunction f = WelfareFunction::affine();
  unsigned k_max = 5;
  Rational grid_min{1, 2};
  Rational grid_max{5};
  Rational grid_step{1, 2};
  std::optional<Rational> epsilon;
  std::optional<std::size_t> extend_to;
  SolveOptions solve;
  OutputFormat format = OutputFormat::kStructured;
  std::optional<std::string> profile_out;
  std::optional<std::string> allocation_out;
  std::optional<std::string> report_out;
};

struct LemmaConfig {
  WelfareFunction f = WelfareFunction::log_affine();
  unsigned k_min = 1;
  unsigned k_max = 5;
  unsigned fit_k_max = 50;
  std::vector<double> grid = {0.5, 1.0, 2.0, 5.0, 10.0};
  double tolerance = 1e-9;
  OutputFormat format = OutputFormat::kStructured;
};

// Either a profile file or a seeded batch of random profiles.
struct ExperimentConfig {
  std::optional<std::string> profile_path;
  RandomProfileSpec random;
  std::uint64_t count = 0;
  std::uint64_t seed = 0;
  std::vector<WelfareFunction> functions;
  Checks checks;
  OutputFormat format = OutputFormat::kCsv;
  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
};

int run_solve(const SolveConfig& config, std::ostream& out, std::ostream& err);
int run_check(const CheckConfig& config, std::ostream& out, std::ostream& err);
int run_counterexample(const CounterexampleConfig& config, std::ostream& out, std::ostream& err);
int run_lemma_check(const LemmaConfig& config, std::ostream& out, std::ostream& err);
// Rows are ordered by instance index whatever the thread count.
int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to one of the run_* functions. Library errors
// become exit codes 2 (input) and 3 (budget) with a message on `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fairalloc::cli

#endif  // FAIRALLOC_TOOLS_CLI_HPP_
