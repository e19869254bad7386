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

#include "cli.hpp"

#include <atomic>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>
#include <utility>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fairalloc/error.hpp"
#include "fairalloc/fairness.hpp"
#include "fairalloc/profile_io.hpp"
#include "fairalloc/report.hpp"
#include "fairalloc/theoremlab.hpp"

namespace fairalloc::cli {
namespace {

using nlohmann::json;

std::string format_double(double v) {
  if (v == -HUGE_VAL) return "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_real(const std::string& text, const std::string& what) {
  if (text.find('/') != std::string::npos) return to_double(parse_rational(text, what));
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw ParseError(what, "expected a number, got \"" + text + "\"");
  }
  return v;
}

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last) {
    throw ParseError(what, "expected an integer, got \"" + text + "\"");
  }
  return v;
}

std::vector<double> parse_real_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_real(item, what));
  return out;
}

Checks parse_checks(const std::string& text) {
  Checks checks{false, false, false};
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "ef") {
      checks.ef = true;
    } else if (item == "ef1") {
      checks.ef1 = true;
    } else if (item == "po") {
      checks.po = true;
    } else {
      throw ParseError("--checks", "unknown check \"" + item + "\" (expected ef, ef1, po)");
    }
  }
  return checks;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "text") return OutputFormat::kText;
  if (text == "structured" || text == "json") return OutputFormat::kStructured;
  if (text == "csv") return OutputFormat::kCsv;
  throw ParseError("--format", "unknown format \"" + text + "\" (expected text, structured, csv)");
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ParseError(path, "cannot open file for writing");
  file << contents;
}

std::string allocation_text(const Allocation& allocation) {
  std::string out;
  const auto bundles = allocation.bundles();
  for (AgentIndex i = 0; i < bundles.size(); ++i) {
    if (i != 0) out += ", ";
    out += "A" + std::to_string(i + 1) + " = " + format_bundle(bundles[i]);
  }
  return out;
}

std::string utilities_text(const std::vector<Rational>& utilities) {
  std::string out;
  for (AgentIndex i = 0; i < utilities.size(); ++i) {
    if (i != 0) out += ", ";
    out += "u" + std::to_string(i + 1) + " = " + to_string(utilities[i]);
  }
  return out;
}

void print_solve_text(const SolveResult& result, std::ostream& out) {
  out << "allocation: " << allocation_text(result.allocation) << "\n";
  out << "utilities: " << utilities_text(result.utilities) << "\n";
  out << "welfare: " << to_string(result.welfare);
  if (result.welfare.neg_inf_count > 0) {
    out << " (" << result.welfare.neg_inf_count << " -inf terms, finite part "
        << format_double(result.welfare.finite_part) << ")";
  }
  out << "\n";
  if (result.nash_product) {
    out << "nash product: " << to_string(*result.nash_product) << " over "
        << *result.positive_agents << " positive agents\n";
  }
  out << "maximizers: " << result.maximizer_set_size << "\n";
}

void print_ef1_text(const Ef1Verdict& verdict, std::ostream& out) {
  out << "EF1: " << (verdict.holds ? "holds" : "violated") << "\n";
  for (const Ef1Violation& v : verdict.violations) {
    out << "  agent " << v.envier + 1 << " envies agent " << v.envied + 1 << ": own "
        << to_string(v.own_value) << ", envied bundle " << to_string(v.envied_value) << "\n";
    for (const RemovalGap& gap : v.gaps) {
      out << "    without g" << gap.good + 1 << ": still short by " << to_string(gap.gap)
          << "\n";
    }
  }
}

void print_ef_text(const EfVerdict& verdict, std::ostream& out) {
  out << "EF: " << (verdict.holds ? "holds" : "violated") << "\n";
  if (verdict.witness) {
    out << "  agent " << verdict.witness->envier + 1 << " envies agent "
        << verdict.witness->envied + 1 << ": " << to_string(verdict.witness->own_value) << " < "
        << to_string(verdict.witness->envied_value) << "\n";
  }
}

void print_pareto_text(const ParetoVerdict& verdict, std::ostream& out) {
  out << "PO: " << (verdict.optimal ? "holds" : "violated") << "\n";
  if (verdict.dominating_allocation) {
    out << "  dominated by " << allocation_text(*verdict.dominating_allocation) << "\n";
  }
}

void print_constancy_text(const ConstancyReport& report, std::ostream& out) {
  out << "k = " << report.k << ": spread " << format_double(report.spread) << " -> "
      << (report.constant ? "constant" : "not constant");
  if (report.c_k) out << ", c_k = " << format_double(*report.c_k);
  out << "\n";
}

struct ExperimentRow {
  std::uint64_t instance = 0;
  std::optional<std::uint64_t> seed;
  std::string function;
  std::optional<bool> ef1, ef, po;
  ExtendedWelfare welfare;
};

std::string flag(const std::optional<bool>& v) {
  if (!v) return "NA";
  return *v ? "true" : "false";
}

std::vector<ExperimentRow> evaluate_instance(const Profile& profile, std::uint64_t instance,
                                             std::optional<std::uint64_t> seed,
                                             const ExperimentConfig& config) {
  std::vector<ExperimentRow> rows;
  SolveOptions options;
  options.budget = config.budget;
  for (const WelfareFunction& f : config.functions) {
    const SolveResult solved = solve_rule(profile, f, options);
    ExperimentRow row{instance, seed, f.describe(), std::nullopt, std::nullopt, std::nullopt,
                      solved.welfare};
    if (config.checks.ef1) row.ef1 = is_ef1(profile, solved.allocation).holds;
    if (config.checks.ef) row.ef = is_ef(profile, solved.allocation).holds;
    if (config.checks.po) {
      row.po = is_pareto_optimal(profile, solved.allocation, {config.budget, 1}).optimal;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int run_solve(const SolveConfig& config, std::ostream& out, std::ostream&) {
  const Profile profile = load_profile_file(config.profile_path);
  const SolveResult result = solve_rule(profile, config.f, config.solve);
  if (config.allocation_out) write_file(*config.allocation_out, serialize_allocation(result.allocation));
  if (config.format == OutputFormat::kText) {
    out << "function: " << config.f.describe() << "\n";
    print_solve_text(result, out);
  } else {
    json report = solve_json(result);
    report["function"] = config.f.describe();
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

int run_check(const CheckConfig& config, std::ostream& out, std::ostream&) {
  const Profile profile = load_profile_file(config.profile_path);
  const Allocation allocation = load_allocation_file(config.allocation_path, profile);
  bool all_hold = true;
  json report = json::object();
  report["allocation"] = allocation_json(allocation);
  if (config.format == OutputFormat::kText) {
    out << "allocation: " << allocation_text(allocation) << "\n";
  }
  if (config.checks.ef) {
    const EfVerdict v = is_ef(profile, allocation);
    all_hold = all_hold && v.holds;
    report["ef"] = ef_json(v);
    if (config.format == OutputFormat::kText) print_ef_text(v, out);
  }
  if (config.checks.ef1) {
    const Ef1Verdict v = is_ef1(profile, allocation);
    all_hold = all_hold && v.holds;
    report["ef1"] = ef1_json(v);
    if (config.format == OutputFormat::kText) print_ef1_text(v, out);
  }
  if (config.checks.po) {
    const ParetoVerdict v = is_pareto_optimal(profile, allocation, {config.budget, config.threads});
    all_hold = all_hold && v.optimal;
    report["po"] = pareto_json(v);
    if (config.format == OutputFormat::kText) print_pareto_text(v, out);
  }
  report["all_hold"] = all_hold;
  if (config.format != OutputFormat::kText) out << report.dump(2) << "\n";
  return all_hold ? kExitOk : kExitPropertyFails;
}

int run_counterexample(const CounterexampleConfig& config, std::ostream& out, std::ostream& err) {
  const std::vector<Rational> grid =
      rational_grid(config.grid_min, config.grid_max, config.grid_step);
  CounterexampleOptions options;
  options.epsilon = config.epsilon;
  options.solve = config.solve;
  const CounterexampleSearch search = find_counterexample(config.f, config.k_max, grid, options);
  for (const std::string& d : search.diagnostics) err << "diagnostic: " << d << "\n";

  json report = {{"function", config.f.describe()},
                 {"k_max", config.k_max},
                 {"candidates_examined", search.candidates_examined},
                 {"diagnostics", search.diagnostics}};
  if (!search.report) {
    report["found"] = false;
    if (config.format == OutputFormat::kText) {
      out << "function: " << config.f.describe() << "\n"
          << "no counterexample for k <= " << config.k_max << " on the grid ("
          << search.candidates_examined << " candidate pairs)\n";
    } else {
      out << report.dump(2) << "\n";
    }
    if (config.report_out) write_file(*config.report_out, report.dump(2) + "\n");
    return kExitPropertyFails;
  }

  const CounterexampleReport& found = *search.report;
  report["found"] = true;
  report["counterexample"] = counterexample_json(found);

  Profile emitted_profile = found.profile;
  Allocation emitted_allocation = found.solver_output.allocation;
  std::optional<SolveResult> extended_result;
  std::optional<Ef1Verdict> extended_verdict;
  if (config.extend_to) {
    emitted_profile = extend_profile(found.profile, *config.extend_to);
    extended_result = solve_rule(emitted_profile, config.f, config.solve);
    extended_verdict = is_ef1(emitted_profile, extended_result->allocation);
    emitted_allocation = extended_result->allocation;
    report["extended"] = {{"agents", *config.extend_to},
                          {"profile", profile_json(emitted_profile)},
                          {"solver_output", solve_json(*extended_result)},
                          {"ef1", ef1_json(*extended_verdict)}};
  }

  if (config.profile_out) write_file(*config.profile_out, serialize_profile(emitted_profile));
  if (config.allocation_out) {
    write_file(*config.allocation_out, serialize_allocation(emitted_allocation));
  }
  if (config.report_out) write_file(*config.report_out, report.dump(2) + "\n");

  if (config.format == OutputFormat::kText) {
    out << "function: " << config.f.describe() << "\n"
        << "k = " << found.k << ", y = " << to_string(found.y) << ", z = " << to_string(found.z)
        << ", epsilon = " << to_string(found.epsilon) << "\n"
        << "f((k+1)y) - f(ky) = " << format_double(found.gap_y)
        << " > f((k+1)z - eps) - f(kz - eps) = " << format_double(found.gap_z_shifted) << "\n"
        << "profile: " << found.profile.agent_count() << " agents, "
        << found.profile.good_count() << " goods\n";
    for (AgentIndex i = 0; i < found.profile.agent_count(); ++i) {
      out << "  u" << i + 1 << " = (";
      const auto row = found.profile.row(i);
      for (std::size_t g = 0; g < row.size(); ++g) out << (g ? ", " : "") << to_string(row[g]);
      out << ")\n";
    }
    print_solve_text(found.solver_output, out);
    print_ef1_text(found.ef1_verdict, out);
    out << "all " << found.maximizers_checked << " maximizers violate EF1: "
        << (found.all_maximizers_violate ? "yes" : "no") << "\n";
    if (extended_result) {
      out << "extended to " << *config.extend_to << " agents:\n";
      print_solve_text(*extended_result, out);
      print_ef1_text(*extended_verdict, out);
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

int run_lemma_check(const LemmaConfig& config, std::ostream& out, std::ostream&) {
  if (config.k_min == 0 || config.k_max < config.k_min) {
    throw ValidationError("need 1 <= k-min <= k-max");
  }
  json reports = json::array();
  std::vector<ConstancyReport> constancy;
  for (unsigned k = config.k_min; k <= config.k_max; ++k) {
    constancy.push_back(constancy_check(config.f, k, config.grid, config.tolerance));
    reports.push_back(constancy_json(constancy.back()));
  }
  const LogFitOutcome fit = fit_log(config.f, config.fit_k_max, config.grid, config.tolerance);
  const bool is_log = std::holds_alternative<LogFit>(fit);
  if (config.format == OutputFormat::kText) {
    out << "function: " << config.f.describe() << "\n";
    for (const auto& r : constancy) print_constancy_text(r, out);
    if (const auto* log_fit = std::get_if<LogFit>(&fit)) {
      out << "log fit (k = " << log_fit->k_used << "): a = " << format_double(log_fit->a)
          << ", b = " << format_double(log_fit->b)
          << ", max residual = " << format_double(log_fit->max_residual) << "\n";
    } else {
      out << "not log-affine: h_" << std::get<NotLogVerdict>(fit).failing.k
          << " is not constant\n";
    }
  } else {
    json report = {{"function", config.f.describe()},
                   {"tolerance", config.tolerance},
                   {"constancy", std::move(reports)},
                   {"fit", log_fit_json(fit)}};
    out << report.dump(2) << "\n";
  }
  return is_log ? kExitOk : kExitPropertyFails;
}

int run_experiment(const ExperimentConfig& config, std::ostream& out, std::ostream&) {
  if (config.functions.empty()) throw ValidationError("experiment needs at least one --f");

  std::vector<Profile> fixed;
  std::uint64_t count = config.count;
  if (config.profile_path) {
    fixed.push_back(load_profile_file(*config.profile_path));
    count = 1;
  } else {
    checked_allocation_count(config.random.agents, config.random.goods, config.budget);
    // Surface spec errors before spawning workers.
    if (count > 0) (void)random_profile(config.random, config.seed, 0);
  }

  std::vector<std::vector<ExperimentRow>> rows(count);
  auto work = [&](std::uint64_t idx) {
    if (!fixed.empty()) {
      rows[idx] = evaluate_instance(fixed.front(), idx, std::nullopt, config);
    } else {
      rows[idx] = evaluate_instance(random_profile(config.random, config.seed, idx), idx,
                                    config.seed, config);
    }
  };
  const unsigned threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                               : config.threads;
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t idx = 0; idx < count; ++idx) work(idx);
  } else {
    std::atomic<std::uint64_t> next{0};
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (std::uint64_t idx; (idx = next.fetch_add(1)) < count;) work(idx);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  if (config.format == OutputFormat::kStructured) {
    json list = json::array();
    for (const auto& instance : rows) {
      for (const auto& r : instance) {
        json row = {{"instance", r.instance}, {"function", r.function},
                    {"welfare", welfare_json(r.welfare)}};
        row["seed"] = r.seed ? json(*r.seed) : json(nullptr);
        if (r.ef1) row["ef1"] = *r.ef1;
        if (r.ef) row["ef"] = *r.ef;
        if (r.po) row["po"] = *r.po;
        list.push_back(std::move(row));
      }
    }
    out << list.dump(2) << "\n";
  } else if (config.format == OutputFormat::kText) {
    out << std::left << std::setw(9) << "instance" << std::setw(24) << "function" << std::setw(7)
        << "ef1" << std::setw(7) << "ef" << std::setw(7) << "po"
        << "welfare\n";
    for (const auto& instance : rows) {
      for (const auto& r : instance) {
        out << std::left << std::setw(9) << r.instance << std::setw(24) << r.function
            << std::setw(7) << flag(r.ef1) << std::setw(7) << flag(r.ef) << std::setw(7)
            << flag(r.po) << to_string(r.welfare) << "\n";
      }
    }
  } else {
    out << "instance,seed,function,ef1,ef,po,welfare\n";
    for (const auto& instance : rows) {
      for (const auto& r : instance) {
        out << r.instance << "," << (r.seed ? std::to_string(*r.seed) : "") << ",\""
            << r.function << "\"," << flag(r.ef1) << "," << flag(r.ef) << "," << flag(r.po)
            << "," << to_string(r.welfare) << "\n";
      }
    }
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact fair allocation of indivisible goods under additive welfarist rules"};
  app.require_subcommand(1);

  std::uint64_t budget = kDefaultEnumerationBudget;
  unsigned threads = 1;
  std::string format_text;
  std::string f_text = "log";

  // solve
  SolveConfig solve_config;
  bool branch_and_bound = false;
  auto* solve = app.add_subcommand("solve", "Maximize welfare over all allocations");
  solve->add_option("--profile", solve_config.profile_path, "Profile file")->required();
  solve->add_option("--f", f_text,
                    "Welfare function: log, log:a,b, affine:a,b, power:p, exp, expr:'...'");
  solve->add_option("--budget", budget, "Maximum number of allocations to enumerate");
  solve->add_option("--threads", threads, "Worker threads (0 = all cores)");
  solve->add_flag("--branch-and-bound", branch_and_bound, "Use the pruned search");
  solve->add_option("--format", format_text, "text | structured");
  solve->add_option("--allocation-out", solve_config.allocation_out,
                    "Write the chosen allocation here");

  // check
  CheckConfig check_config;
  std::string checks_text = "ef,ef1,po";
  auto* check = app.add_subcommand("check", "Check EF, EF1 and Pareto optimality");
  check->add_option("--profile", check_config.profile_path, "Profile file")->required();
  check->add_option("--allocation", check_config.allocation_path, "Allocation file")->required();
  check->add_option("--checks", checks_text, "Comma-separated subset of ef,ef1,po");
  check->add_option("--budget", budget, "Maximum number of allocations to enumerate");
  check->add_option("--threads", threads, "Worker threads for the Pareto scan");
  check->add_option("--format", format_text, "text | structured");

  // counterexample
  CounterexampleConfig cx_config;
  std::string grid_min = "1/2", grid_max = "5", grid_step = "1/2";
  std::optional<std::string> epsilon_text;
  auto* counterexample =
      app.add_subcommand("counterexample", "Build a profile on which the rule for f is not EF1");
  counterexample->add_option("--f", f_text, "Welfare function spec")->required();
  counterexample->add_option("--k-max", cx_config.k_max, "Largest k to try");
  counterexample->add_option("--grid-min", grid_min, "Smallest y/z candidate");
  counterexample->add_option("--grid-max", grid_max, "Largest y/z candidate");
  counterexample->add_option("--grid-step", grid_step, "Candidate spacing");
  counterexample->add_option("--epsilon", epsilon_text, "Fixed epsilon in (0, z)");
  counterexample->add_option("--extend", cx_config.extend_to,
                             "Extend the profile to this many agents (>= 3)");
  counterexample->add_option("--budget", budget, "Maximum number of allocations to enumerate");
  counterexample->add_option("--profile-out", cx_config.profile_out, "Write the profile here");
  counterexample->add_option("--allocation-out", cx_config.allocation_out,
                             "Write the solver's allocation here");
  counterexample->add_option("--report-out", cx_config.report_out, "Write the report here");
  counterexample->add_option("--format", format_text, "text | structured");

  // lemma-check
  LemmaConfig lemma_config;
  std::optional<std::string> grid_text;
  std::string tolerance_text = "1e-9";
  auto* lemma = app.add_subcommand("lemma-check",
                                   "Test whether f((k+1)x) - f(kx) is constant and fit a ln x + b");
  lemma->add_option("--f", f_text, "Welfare function spec")->required();
  lemma->add_option("--k-min", lemma_config.k_min, "Smallest k");
  lemma->add_option("--k-max", lemma_config.k_max, "Largest k");
  lemma->add_option("--fit-k-max", lemma_config.fit_k_max, "k used for the estimate a = k c_k");
  lemma->add_option("--grid", grid_text, "Comma-separated positive sample points");
  lemma->add_option("--tolerance", tolerance_text, "Spread tolerance");
  lemma->add_option("--format", format_text, "text | structured");

  // experiment
  ExperimentConfig exp_config;
  std::vector<std::string> function_texts;
  std::string utility_range = "0,9";
  bool positive = false;
  auto* experiment = app.add_subcommand("experiment", "Batch solve and check, one row per instance");
  experiment->add_option("--profile", exp_config.profile_path, "Single profile file");
  experiment->add_option("--agents", exp_config.random.agents, "Agents per random profile");
  experiment->add_option("--goods", exp_config.random.goods, "Goods per random profile");
  experiment->add_option("--utilities", utility_range, "Integer utility range min,max");
  experiment->add_option("--count", exp_config.count, "Number of random profiles");
  experiment->add_option("--seed", exp_config.seed, "Random seed");
  experiment->add_flag("--positive", positive, "Resample all-zero utility rows");
  experiment->add_option("--f", function_texts, "Welfare function spec (repeatable)")->required();
  experiment->add_option("--checks", checks_text, "Comma-separated subset of ef,ef1,po");
  experiment->add_option("--budget", budget, "Maximum number of allocations to enumerate");
  experiment->add_option("--threads", threads, "Worker threads (0 = all cores)");
  experiment->add_option("--format", format_text, "csv | text | structured");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (solve->parsed()) {
      solve_config.f = WelfareFunction::parse(f_text);
      solve_config.solve.budget = budget;
      solve_config.solve.threads = threads;
      if (branch_and_bound) solve_config.solve.strategy = SearchStrategy::kBranchAndBound;
      if (!format_text.empty()) solve_config.format = parse_format(format_text);
      return run_solve(solve_config, out, err);
    }
    if (check->parsed()) {
      check_config.checks = parse_checks(checks_text);
      check_config.budget = budget;
      check_config.threads = threads;
      if (!format_text.empty()) check_config.format = parse_format(format_text);
      return run_check(check_config, out, err);
    }
    if (counterexample->parsed()) {
      cx_config.f = WelfareFunction::parse(f_text);
      cx_config.grid_min = parse_rational(grid_min, "--grid-min");
      cx_config.grid_max = parse_rational(grid_max, "--grid-max");
      cx_config.grid_step = parse_rational(grid_step, "--grid-step");
      if (epsilon_text) cx_config.epsilon = parse_rational(*epsilon_text, "--epsilon");
      cx_config.solve.budget = budget;
      if (!format_text.empty()) cx_config.format = parse_format(format_text);
      return run_counterexample(cx_config, out, err);
    }
    if (lemma->parsed()) {
      lemma_config.f = WelfareFunction::parse(f_text);
      if (grid_text) lemma_config.grid = parse_real_list(*grid_text, "--grid");
      lemma_config.tolerance = parse_real(tolerance_text, "--tolerance");
      if (!format_text.empty()) lemma_config.format = parse_format(format_text);
      return run_lemma_check(lemma_config, out, err);
    }
    if (experiment->parsed()) {
      for (const auto& text : function_texts) {
        exp_config.functions.push_back(WelfareFunction::parse(text));
      }
      const auto range = utility_range.find(',');
      if (range == std::string::npos) {
        throw ParseError("--utilities", "expected min,max");
      }
      exp_config.random.min_utility = parse_integer(utility_range.substr(0, range), "--utilities");
      exp_config.random.max_utility = parse_integer(utility_range.substr(range + 1), "--utilities");
      exp_config.random.positive_rows = positive;
      exp_config.checks = parse_checks(checks_text);
      exp_config.budget = budget;
      exp_config.threads = threads;
      if (!format_text.empty()) exp_config.format = parse_format(format_text);
      return run_experiment(exp_config, out, err);
    }
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace fairalloc::cli
