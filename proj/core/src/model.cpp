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

#include "fairalloc/model.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "fairalloc/error.hpp"

namespace fairalloc {

Profile::Profile(std::size_t agents, std::size_t goods, std::vector<Rational> utilities)
    : agents_(agents), goods_(goods), utilities_(std::move(utilities)) {
  if (agents_ == 0) throw ValidationError("a profile needs at least one agent");
  if (utilities_.size() != agents_ * goods_) {
    throw ValidationError("utility matrix has " + std::to_string(utilities_.size()) +
                          " entries, expected " + std::to_string(agents_) + "x" +
                          std::to_string(goods_));
  }
  for (std::size_t k = 0; k < utilities_.size(); ++k) {
    if (utilities_[k] < 0) {
      throw ValidationError("negative utility " + to_string(utilities_[k]) + " for agent " +
                            std::to_string(k / goods_ + 1) + ", good g" +
                            std::to_string(k % goods_ + 1));
    }
  }
}

Profile Profile::from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t goods) {
  std::vector<Rational> flat;
  flat.reserve(rows.size() * goods);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != goods) {
      throw ValidationError("row " + std::to_string(i + 1) + " has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(goods));
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return Profile(rows.size(), goods, std::move(flat));
}

Profile Profile::from_rows(const std::vector<std::vector<Rational>>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

const Rational& Profile::utility(AgentIndex agent, GoodIndex good) const {
  if (agent >= agents_) {
    throw IndexError("agent " + std::to_string(agent + 1) + " out of range [1, " +
                     std::to_string(agents_) + "]");
  }
  if (good >= goods_) {
    throw IndexError("good g" + std::to_string(good + 1) + " out of range [g1, g" +
                     std::to_string(goods_) + "]");
  }
  return utilities_[agent * goods_ + good];
}

std::span<const Rational> Profile::row(AgentIndex agent) const {
  if (agent >= agents_) {
    throw IndexError("agent " + std::to_string(agent + 1) + " out of range [1, " +
                     std::to_string(agents_) + "]");
  }
  return std::span<const Rational>(utilities_).subspan(agent * goods_, goods_);
}

Bundle::Bundle(std::vector<GoodIndex> goods) : goods_(std::move(goods)) {
  std::sort(goods_.begin(), goods_.end());
  if (std::adjacent_find(goods_.begin(), goods_.end()) != goods_.end()) {
    throw ValidationError("bundle lists a good twice");
  }
}

bool Bundle::contains(GoodIndex good) const {
  return std::binary_search(goods_.begin(), goods_.end(), good);
}

Bundle Bundle::without(GoodIndex good) const {
  Bundle out;
  out.goods_.reserve(goods_.size());
  for (GoodIndex g : goods_) {
    if (g != good) out.goods_.push_back(g);
  }
  return out;
}

Allocation::Allocation(std::size_t agents, std::vector<AgentIndex> assignment)
    : agents_(agents), assignment_(std::move(assignment)) {
  if (agents_ == 0) throw ValidationError("an allocation needs at least one agent");
  for (std::size_t g = 0; g < assignment_.size(); ++g) {
    if (assignment_[g] >= agents_) {
      throw ValidationError("good g" + std::to_string(g + 1) + " assigned to agent " +
                            std::to_string(assignment_[g] + 1) + ", but there are only " +
                            std::to_string(agents_) + " agents");
    }
  }
}

Allocation Allocation::from_bundles(const std::vector<Bundle>& bundles, std::size_t goods) {
  constexpr AgentIndex kUnassigned = std::numeric_limits<AgentIndex>::max();
  std::vector<AgentIndex> assignment(goods, kUnassigned);
  for (AgentIndex i = 0; i < bundles.size(); ++i) {
    for (GoodIndex g : bundles[i]) {
      if (g >= goods) {
        throw ValidationError("bundle of agent " + std::to_string(i + 1) +
                              " names unknown good g" + std::to_string(g + 1));
      }
      if (assignment[g] != kUnassigned) {
        throw ValidationError("good g" + std::to_string(g + 1) +
                              " appears in more than one bundle");
      }
      assignment[g] = i;
    }
  }
  for (GoodIndex g = 0; g < goods; ++g) {
    if (assignment[g] == kUnassigned) {
      throw ValidationError("good g" + std::to_string(g + 1) + " is not assigned");
    }
  }
  return Allocation(bundles.size(), std::move(assignment));
}

AgentIndex Allocation::owner(GoodIndex good) const {
  if (good >= assignment_.size()) {
    throw IndexError("good g" + std::to_string(good + 1) + " out of range");
  }
  return assignment_[good];
}

Bundle Allocation::bundle(AgentIndex agent) const {
  if (agent >= agents_) {
    throw IndexError("agent " + std::to_string(agent + 1) + " out of range");
  }
  std::vector<GoodIndex> goods;
  for (GoodIndex g = 0; g < assignment_.size(); ++g) {
    if (assignment_[g] == agent) goods.push_back(g);
  }
  return Bundle(std::move(goods));
}

std::vector<Bundle> Allocation::bundles() const {
  std::vector<std::vector<GoodIndex>> goods(agents_);
  for (GoodIndex g = 0; g < assignment_.size(); ++g) goods[assignment_[g]].push_back(g);
  std::vector<Bundle> out;
  out.reserve(agents_);
  for (auto& list : goods) out.emplace_back(std::move(list));
  return out;
}

void Allocation::check_compatible(const Profile& profile) const {
  if (agents_ != profile.agent_count() || assignment_.size() != profile.good_count()) {
    throw ValidationError("allocation is " + std::to_string(agents_) + " agents x " +
                          std::to_string(assignment_.size()) + " goods, profile is " +
                          std::to_string(profile.agent_count()) + " x " +
                          std::to_string(profile.good_count()));
  }
}

Rational bundle_utility(const Profile& profile, AgentIndex agent, const Bundle& bundle) {
  const auto row = profile.row(agent);
  Rational total = 0;
  for (GoodIndex g : bundle) {
    if (g >= row.size()) (void)profile.utility(agent, g);
    total += row[g];
  }
  return total;
}

std::vector<Rational> agent_utilities(const Profile& profile, const Allocation& allocation) {
  allocation.check_compatible(profile);
  std::vector<Rational> out(profile.agent_count());
  const auto& assignment = allocation.assignment();
  for (GoodIndex g = 0; g < assignment.size(); ++g) {
    out[assignment[g]] += profile.utility(assignment[g], g);
  }
  return out;
}

std::uint64_t checked_allocation_count(std::size_t agents, std::size_t goods,
                                       std::uint64_t budget) {
  std::uint64_t count = 1;
  bool overflow = false;
  for (std::size_t g = 0; g < goods && !overflow; ++g) {
    if (agents != 0 && count > std::numeric_limits<std::uint64_t>::max() / agents) {
      overflow = true;
    } else {
      count *= agents;
    }
  }
  if (overflow || count > budget) {
    std::ostringstream msg;
    msg << "n^m = " << agents << "^" << goods << " = ";
    if (overflow) {
      msg << "more than 2^64";
    } else {
      msg << count;
    }
    msg << " allocations exceeds the enumeration budget of " << budget;
    throw CapacityError(msg.str());
  }
  return count;
}

AssignmentOdometer::AssignmentOdometer(std::size_t agents, std::size_t goods,
                                       std::uint64_t first_index)
    : agents_(agents), digits_(goods, 0), index_(first_index) {
  std::uint64_t rest = first_index;
  for (std::size_t pos = goods; pos-- > 0;) {
    digits_[pos] = static_cast<AgentIndex>(rest % agents_);
    rest /= agents_;
  }
}

std::size_t AssignmentOdometer::advance() {
  ++index_;
  for (std::size_t pos = digits_.size(); pos-- > 0;) {
    if (++digits_[pos] < agents_) return pos;
    digits_[pos] = 0;
  }
  return digits_.size();
}

AllocationCursor::AllocationCursor(const Profile& profile, std::uint64_t first_index)
    : profile_(&profile),
      odometer_(profile.agent_count(), profile.good_count(), first_index),
      utilities_(profile.agent_count()) {
  const auto& digits = odometer_.assignment();
  for (GoodIndex g = 0; g < digits.size(); ++g) {
    utilities_[digits[g]] += profile.utility(digits[g], g);
  }
}

Allocation AllocationCursor::allocation() const {
  return Allocation(profile_->agent_count(), odometer_.assignment());
}

void AllocationCursor::advance() {
  // The digit at `first_changed` went up by one; every later digit wrapped
  // from n-1 to 0.
  const std::size_t first_changed = odometer_.advance();
  const auto& after = odometer_.assignment();
  if (first_changed == after.size()) {
    // Wrapped around to index 0: every good sits with agent 1 again.
    std::fill(utilities_.begin(), utilities_.end(), Rational(0));
    for (GoodIndex g = 0; g < after.size(); ++g) utilities_[0] += profile_->utility(0, g);
    return;
  }
  const AgentIndex last = profile_->agent_count() - 1;
  for (GoodIndex g = first_changed; g < after.size(); ++g) {
    const AgentIndex before = g == first_changed ? after[g] - 1 : last;
    if (before == after[g]) continue;
    utilities_[before] -= profile_->utility(before, g);
    utilities_[after[g]] += profile_->utility(after[g], g);
  }
}

AllocationStream::iterator& AllocationStream::iterator::operator++() {
  --remaining_;
  if (remaining_ != 0) odometer_->advance();
  return *this;
}

AllocationStream enumerate_allocations(const Profile& profile, std::uint64_t budget) {
  const std::uint64_t count =
      checked_allocation_count(profile.agent_count(), profile.good_count(), budget);
  return AllocationStream(profile.agent_count(), profile.good_count(), count);
}

std::string format_bundle(const Bundle& bundle) {
  std::string out = "{";
  bool first = true;
  for (GoodIndex g : bundle) {
    if (!first) out += ", ";
    out += "g" + std::to_string(g + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace fairalloc
