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

#ifndef FAIRALLOC_RANDOM_PROFILE_HPP_
#define FAIRALLOC_RANDOM_PROFILE_HPP_

#include <cstddef>
#include <cstdint>

#include "fairalloc/model.hpp"

namespace fairalloc {

struct RandomProfileSpec {
  std::size_t agents = 2;
  std::size_t goods = 4;
  std::int64_t min_utility = 0;
  std::int64_t max_utility = 9;
  // Resample any all-zero row so every agent can get positive utility.
  bool positive_rows = false;
};

// Uniform integer utilities in [min_utility, max_utility]. Instance `index`
// of `seed` does not depend on which other instances were generated.
Profile random_profile(const RandomProfileSpec& spec, std::uint64_t seed, std::uint64_t index);

}  // namespace fairalloc

#endif  // FAIRALLOC_RANDOM_PROFILE_HPP_
