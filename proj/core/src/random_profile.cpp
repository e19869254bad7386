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

#include "fairalloc/random_profile.hpp"

#include <random>
#include <vector>

#include "fairalloc/error.hpp"

namespace fairalloc {

Profile random_profile(const RandomProfileSpec& spec, std::uint64_t seed, std::uint64_t index) {
  if (spec.min_utility < 0 || spec.max_utility < spec.min_utility) {
    throw ValidationError("random utilities need 0 <= min <= max");
  }
  if (spec.positive_rows && spec.max_utility == 0 && spec.goods > 0) {
    throw ValidationError("cannot draw positive rows with max utility 0");
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::int64_t> draw(spec.min_utility, spec.max_utility);

  std::vector<Rational> utilities;
  utilities.reserve(spec.agents * spec.goods);
  for (std::size_t i = 0; i < spec.agents; ++i) {
    std::vector<std::int64_t> row(spec.goods);
    bool positive = false;
    do {
      positive = false;
      for (auto& u : row) {
        u = draw(rng);
        positive = positive || u > 0;
      }
    } while (spec.positive_rows && spec.goods > 0 && !positive);
    for (auto u : row) utilities.emplace_back(u);
  }
  return Profile(spec.agents, spec.goods, std::move(utilities));
}

}  // namespace fairalloc
