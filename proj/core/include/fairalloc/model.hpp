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

#ifndef FAIRALLOC_MODEL_HPP_
#define FAIRALLOC_MODEL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "fairalloc/rational.hpp"

namespace fairalloc {

// Agents and goods are 0-based everywhere in the API. Reports and files
// present them 1-based (agent 1, good g1).
using AgentIndex = std::size_t;
using GoodIndex = std::size_t;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Agents, goods, and an additive utility function per agent, stored as an
// n x m matrix of nonnegative rationals. Immutable after construction.
class Profile {
 public:
  // `utilities` is row-major, size agents * goods.
  Profile(std::size_t agents, std::size_t goods, std::vector<Rational> utilities);

  static Profile from_rows(const std::vector<std::vector<Rational>>& rows,
                           std::size_t goods);
  static Profile from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t agent_count() const noexcept { return agents_; }
  std::size_t good_count() const noexcept { return goods_; }

  // Checked access; throws IndexError.
  const Rational& utility(AgentIndex agent, GoodIndex good) const;
  std::span<const Rational> row(AgentIndex agent) const;

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::size_t agents_;
  std::size_t goods_;
  std::vector<Rational> utilities_;
};

// A set of goods, kept sorted.
class Bundle {
 public:
  Bundle() = default;
  // Throws ValidationError on duplicates.
  explicit Bundle(std::vector<GoodIndex> goods);
  Bundle(std::initializer_list<GoodIndex> goods)
      : Bundle(std::vector<GoodIndex>(goods)) {}

  bool empty() const noexcept { return goods_.empty(); }
  std::size_t size() const noexcept { return goods_.size(); }
  bool contains(GoodIndex good) const;
  auto begin() const noexcept { return goods_.begin(); }
  auto end() const noexcept { return goods_.end(); }
  const std::vector<GoodIndex>& goods() const noexcept { return goods_; }

  // Copy of this bundle without `good`.
  Bundle without(GoodIndex good) const;

  friend bool operator==(const Bundle&, const Bundle&) = default;

 private:
  std::vector<GoodIndex> goods_;
};

// Every good assigned to exactly one agent. Ordered by the assignment vector,
// which is also the tie-breaking order of every solver.
class Allocation {
 public:
  // Throws ValidationError if some entry is >= agents.
  Allocation(std::size_t agents, std::vector<AgentIndex> assignment);

  // Throws ValidationError unless the bundles partition {0..goods-1}.
  static Allocation from_bundles(const std::vector<Bundle>& bundles,
                                 std::size_t goods);

  std::size_t agent_count() const noexcept { return agents_; }
  std::size_t good_count() const noexcept { return assignment_.size(); }
  const std::vector<AgentIndex>& assignment() const noexcept { return assignment_; }
  AgentIndex owner(GoodIndex good) const;

  Bundle bundle(AgentIndex agent) const;
  std::vector<Bundle> bundles() const;

  // Throws ValidationError if the dimensions disagree with `profile`.
  void check_compatible(const Profile& profile) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
  friend auto operator<=>(const Allocation& a, const Allocation& b) {
    return a.assignment_ <=> b.assignment_;
  }

 private:
  std::size_t agents_;
  std::vector<AgentIndex> assignment_;
};

// Exact sum of `agent`'s utilities over `bundle`. Throws IndexError.
Rational bundle_utility(const Profile& profile, AgentIndex agent, const Bundle& bundle);

// u_i(A_i) for every agent.
std::vector<Rational> agent_utilities(const Profile& profile, const Allocation& allocation);

// n^m, or throws CapacityError naming n^m when it exceeds `budget`.
std::uint64_t checked_allocation_count(std::size_t agents, std::size_t goods,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// Position-by-position counter over assignment vectors in lexicographic
// order (good 0 most significant). Index i corresponds to the base-n
// expansion of i.
class AssignmentOdometer {
 public:
  AssignmentOdometer(std::size_t agents, std::size_t goods, std::uint64_t first_index = 0);

  const std::vector<AgentIndex>& assignment() const noexcept { return digits_; }
  std::uint64_t index() const noexcept { return index_; }

  // Steps to the next assignment. Returns the lowest position that changed,
  // or `goods` once the sequence is exhausted (the digits wrap to zero).
  std::size_t advance();

 private:
  std::size_t agents_;
  std::vector<AgentIndex> digits_;
  std::uint64_t index_;
};

// Odometer that also maintains u_i(A_i) for every agent incrementally.
class AllocationCursor {
 public:
  AllocationCursor(const Profile& profile, std::uint64_t first_index = 0);

  const std::vector<AgentIndex>& assignment() const noexcept { return odometer_.assignment(); }
  const std::vector<Rational>& utilities() const noexcept { return utilities_; }
  std::uint64_t index() const noexcept { return odometer_.index(); }
  Allocation allocation() const;

  void advance();

 private:
  const Profile* profile_;
  AssignmentOdometer odometer_;
  std::vector<Rational> utilities_;
};

// Input range over all n^m allocations in lexicographic order.
class AllocationStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Allocation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Allocation*;
    using reference = Allocation;

    iterator() = default;
    Allocation operator*() const {
      return Allocation(agents_, odometer_->assignment());
    }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class AllocationStream;
    iterator(std::size_t agents, AssignmentOdometer* odometer, std::uint64_t remaining)
        : agents_(agents), odometer_(odometer), remaining_(remaining) {}

    std::size_t agents_ = 0;
    AssignmentOdometer* odometer_ = nullptr;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() { return iterator(agents_, &odometer_, count_); }
  iterator end() { return iterator(agents_, &odometer_, 0); }
  std::uint64_t size() const noexcept { return count_; }

 private:
  friend AllocationStream enumerate_allocations(const Profile&, std::uint64_t);
  AllocationStream(std::size_t agents, std::size_t goods, std::uint64_t count)
      : agents_(agents), count_(count), odometer_(agents, goods) {}

  std::size_t agents_;
  std::uint64_t count_;
  AssignmentOdometer odometer_;
};

// Every assignment vector exactly once, lexicographic. Throws CapacityError.
AllocationStream enumerate_allocations(const Profile& profile,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

// "{g1, g3}" style rendering, 1-based.
std::string format_bundle(const Bundle& bundle);

}  // namespace fairalloc

#endif  // FAIRALLOC_MODEL_HPP_
