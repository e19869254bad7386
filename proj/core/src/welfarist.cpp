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

#include "fairalloc/welfarist.hpp"

#include <utility>

#include "fairalloc/error.hpp"
#include "parallel.hpp"

namespace fairalloc {
namespace {

struct Best {
  bool found = false;
  ExtendedWelfare welfare;
  std::uint64_t index = 0;
};

Best keep_better(Best left, Best right) {
  if (!left.found) return right;
  if (right.found && right.welfare > left.welfare) return right;
  return left;
}

Allocation allocation_at(const Profile& profile, std::uint64_t index) {
  AssignmentOdometer odometer(profile.agent_count(), profile.good_count(), index);
  return Allocation(profile.agent_count(), odometer.assignment());
}

// Visits [first, last) with a cursor; `visit(cursor)` is called once per index.
template <typename Visit>
void scan_range(const Profile& profile, std::uint64_t first, std::uint64_t last, Visit&& visit) {
  if (first == last) return;
  AllocationCursor cursor(profile, first);
  for (std::uint64_t idx = first;;) {
    visit(cursor);
    if (++idx == last) break;
    cursor.advance();
  }
}

// f(u_i) per agent, re-evaluated only for agents whose utility changed since
// the previous call. Terms are summed in agent order, as in
// welfare_of_utilities.
class TermCache {
 public:
  explicit TermCache(const WelfareFunction& f) : f_(f) {}

  ExtendedWelfare operator()(const std::vector<Rational>& utilities) {
    if (seen_.size() != utilities.size()) {
      seen_ = utilities;
      terms_.resize(utilities.size());
      for (std::size_t i = 0; i < utilities.size(); ++i) terms_[i] = evaluate_f(f_, utilities[i]);
    } else {
      for (std::size_t i = 0; i < utilities.size(); ++i) {
        if (utilities[i] != seen_[i]) {
          seen_[i] = utilities[i];
          terms_[i] = evaluate_f(f_, utilities[i]);
        }
      }
    }
    ExtendedWelfare w;
    for (double t : terms_) w.add_term(t);
    return w;
  }

 private:
  const WelfareFunction& f_;
  std::vector<Rational> seen_;
  std::vector<double> terms_;
};

Best exhaustive_best(const Profile& profile, const WelfareFunction& f, std::uint64_t count,
                     unsigned threads) {
  return internal::partitioned_reduce(
      count, threads,
      [&](std::uint64_t first, std::uint64_t last) {
        Best best;
        TermCache welfare(f);
        scan_range(profile, first, last, [&](const AllocationCursor& c) {
          const ExtendedWelfare w = welfare(c.utilities());
          if (!best.found || w > best.welfare) best = {true, w, c.index()};
        });
        return best;
      },
      keep_better);
}

// Indices within the tie band of `target`; `collect` decides whether they are
// kept or only counted.
struct TieScan {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> indices;
};

TieScan exhaustive_ties(const Profile& profile, const WelfareFunction& f, std::uint64_t count,
                        const SolveOptions& options, const ExtendedWelfare& target,
                        bool collect) {
  return internal::partitioned_reduce(
      count, options.threads,
      [&](std::uint64_t first, std::uint64_t last) {
        TieScan ties;
        TermCache welfare(f);
        scan_range(profile, first, last, [&](const AllocationCursor& c) {
          if (welfare(c.utilities()).ties_with(target, options.tie_tolerance)) {
            ++ties.count;
            if (collect) ties.indices.push_back(c.index());
          }
        });
        return ties;
      },
      [](TieScan left, TieScan right) {
        left.count += right.count;
        left.indices.insert(left.indices.end(), right.indices.begin(), right.indices.end());
        return left;
      });
}

// Depth-first search over goods in index order and agents in index order, so
// leaves are met in lexicographic order. A subtree is skipped only when its
// bound is strictly below the incumbent and outside the tie band; such a
// subtree contains neither a new maximum nor a tie.
class BranchAndBound {
 public:
  BranchAndBound(const Profile& profile, const WelfareFunction& f, double tolerance)
      : profile_(profile),
        f_(f),
        tolerance_(tolerance),
        n_(profile.agent_count()),
        m_(profile.good_count()),
        remaining_(m_ + 1, std::vector<Rational>(n_)),
        current_(n_),
        assignment_(m_, 0) {
    for (std::size_t pos = m_; pos-- > 0;) {
      for (AgentIndex i = 0; i < n_; ++i) {
        remaining_[pos][i] = remaining_[pos + 1][i] + profile.utility(i, pos);
      }
    }
  }

  Best find_best() {
    mode_ = Mode::kBest;
    best_ = {};
    descend(0);
    return best_;
  }

  TieScan find_ties(const ExtendedWelfare& target, bool collect) {
    mode_ = Mode::kTies;
    best_ = {true, target, 0};
    ties_ = {};
    collect_ = collect;
    descend(0);
    return std::move(ties_);
  }

 private:
  enum class Mode { kBest, kTies };

  void descend(std::size_t pos) {
    if (pos == m_) {
      visit_leaf();
      return;
    }
    for (AgentIndex a = 0; a < n_; ++a) {
      assignment_[pos] = a;
      current_[a] += profile_.utility(a, pos);
      if (!prunable(pos + 1)) descend(pos + 1);
      current_[a] -= profile_.utility(a, pos);
    }
  }

  bool prunable(std::size_t next) const {
    if (!best_.found) return false;
    ExtendedWelfare bound;
    for (AgentIndex i = 0; i < n_; ++i) {
      bound.add_term(evaluate_f(f_, current_[i] + remaining_[next][i]));
    }
    return bound < best_.welfare && !bound.ties_with(best_.welfare, tolerance_);
  }

  std::uint64_t index_of_assignment() const {
    std::uint64_t idx = 0;
    for (AgentIndex a : assignment_) idx = idx * n_ + a;
    return idx;
  }

  void visit_leaf() {
    const ExtendedWelfare w = welfare_of_utilities(current_, f_);
    if (mode_ == Mode::kBest) {
      if (!best_.found || w > best_.welfare) best_ = {true, w, index_of_assignment()};
    } else if (w.ties_with(best_.welfare, tolerance_)) {
      ++ties_.count;
      if (collect_) ties_.indices.push_back(index_of_assignment());
    }
  }

  const Profile& profile_;
  const WelfareFunction& f_;
  double tolerance_;
  std::size_t n_;
  std::size_t m_;
  // remaining_[pos][i] = u_i({g_pos, ..., g_m}).
  std::vector<std::vector<Rational>> remaining_;
  std::vector<Rational> current_;
  std::vector<AgentIndex> assignment_;
  Mode mode_ = Mode::kBest;
  Best best_;
  TieScan ties_;
  bool collect_ = false;
};

struct FloatSolve {
  Best best;
  TieScan ties;
};

FloatSolve solve_float(const Profile& profile, const WelfareFunction& f,
                       const SolveOptions& options, bool collect) {
  const std::uint64_t count =
      checked_allocation_count(profile.agent_count(), profile.good_count(), options.budget);
  FloatSolve out;
  if (options.strategy == SearchStrategy::kBranchAndBound) {
    BranchAndBound search(profile, f, options.tie_tolerance);
    out.best = search.find_best();
    out.ties = search.find_ties(out.best.welfare, collect);
  } else {
    out.best = exhaustive_best(profile, f, count, options.threads);
    out.ties = exhaustive_ties(profile, f, count, options, out.best.welfare, collect);
  }
  return out;
}

// Lexicographic key (number of positive agents, product of positive
// utilities), compared exactly.
struct NashKey {
  std::size_t positive = 0;
  Rational product = 1;

  friend bool operator==(const NashKey&, const NashKey&) = default;
  friend bool operator<(const NashKey& a, const NashKey& b) {
    if (a.positive != b.positive) return a.positive < b.positive;
    return a.product < b.product;
  }
};

NashKey nash_key(const std::vector<Rational>& utilities) {
  NashKey key;
  for (const Rational& u : utilities) {
    if (u > 0) {
      ++key.positive;
      key.product *= u;
    }
  }
  return key;
}

struct NashBest {
  bool found = false;
  NashKey key;
  std::uint64_t index = 0;
  std::uint64_t ties = 0;
  std::vector<std::uint64_t> tie_indices;
};

NashBest solve_nash(const Profile& profile, const SolveOptions& options, bool collect) {
  const std::uint64_t count =
      checked_allocation_count(profile.agent_count(), profile.good_count(), options.budget);
  return internal::partitioned_reduce(
      count, options.threads,
      [&](std::uint64_t first, std::uint64_t last) {
        NashBest best;
        scan_range(profile, first, last, [&](const AllocationCursor& c) {
          NashKey key = nash_key(c.utilities());
          if (!best.found || best.key < key) {
            best.found = true;
            best.key = std::move(key);
            best.index = c.index();
            best.ties = 1;
            best.tie_indices.clear();
            if (collect) best.tie_indices.push_back(c.index());
          } else if (key == best.key) {
            ++best.ties;
            if (collect) best.tie_indices.push_back(c.index());
          }
        });
        return best;
      },
      [](NashBest left, NashBest right) {
        if (!left.found) return right;
        if (!right.found || right.key < left.key) return left;
        if (left.key < right.key) return right;
        left.ties += right.ties;
        left.tie_indices.insert(left.tie_indices.end(), right.tie_indices.begin(),
                                right.tie_indices.end());
        return left;
      });
}

std::vector<Allocation> to_allocations(const Profile& profile,
                                       const std::vector<std::uint64_t>& indices) {
  std::vector<Allocation> out;
  out.reserve(indices.size());
  for (std::uint64_t idx : indices) out.push_back(allocation_at(profile, idx));
  return out;
}

}  // namespace

ExtendedWelfare allocation_welfare(const Profile& profile, const Allocation& allocation,
                                   const WelfareFunction& f) {
  return welfare_of_utilities(agent_utilities(profile, allocation), f);
}

SolveResult maximize_welfare(const Profile& profile, const WelfareFunction& f,
                             const SolveOptions& options) {
  FloatSolve solved = solve_float(profile, f, options, false);
  Allocation allocation = allocation_at(profile, solved.best.index);
  std::vector<Rational> utilities = agent_utilities(profile, allocation);
  return SolveResult{std::move(allocation), std::move(utilities), solved.best.welfare,
                     solved.ties.count, std::nullopt, std::nullopt};
}

SolveResult mnw(const Profile& profile, const SolveOptions& options) {
  NashBest best = solve_nash(profile, options, false);
  Allocation allocation = allocation_at(profile, best.index);
  std::vector<Rational> utilities = agent_utilities(profile, allocation);
  ExtendedWelfare welfare = welfare_of_utilities(utilities, WelfareFunction::log_affine());
  return SolveResult{std::move(allocation), std::move(utilities), welfare, best.ties,
                     std::move(best.key.product), best.key.positive};
}

SolveResult solve_rule(const Profile& profile, const WelfareFunction& f,
                       const SolveOptions& options) {
  if (!f.is_log_affine()) return maximize_welfare(profile, f, options);
  SolveResult result = mnw(profile, options);
  result.welfare = welfare_of_utilities(result.utilities, f);
  return result;
}

std::vector<Allocation> welfare_maximizers(const Profile& profile, const WelfareFunction& f,
                                           const SolveOptions& options) {
  return to_allocations(profile, solve_float(profile, f, options, true).ties.indices);
}

std::vector<Allocation> mnw_maximizers(const Profile& profile, const SolveOptions& options) {
  return to_allocations(profile, solve_nash(profile, options, true).tie_indices);
}

std::vector<Allocation> rule_maximizers(const Profile& profile, const WelfareFunction& f,
                                        const SolveOptions& options) {
  return f.is_log_affine() ? mnw_maximizers(profile, options)
                           : welfare_maximizers(profile, f, options);
}

}  // namespace fairalloc
