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

#ifndef FAIRALLOC_PROFILE_IO_HPP_
#define FAIRALLOC_PROFILE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "fairalloc/model.hpp"

namespace fairalloc {

// Profile files are JSON objects:
//
//   {"agents": 2, "goods": 3, "utilities": [[0, 2, 2], ["1/2", 1, 1]]}
//
// Each utility is a JSON integer or a string "p" / "p/q" with q > 0.
// Throws ParseError (with line/column or a field path) or ValidationError.
Profile load_profile(std::string_view text);
Profile load_profile_file(const std::filesystem::path& path);

// Integers that fit in 64 bits are written as JSON numbers, everything else
// as "p/q" strings, so load_profile(serialize_profile(p)) == p.
std::string serialize_profile(const Profile& profile);

// Allocation files are JSON objects with either a 1-based assignment vector
//
//   {"assignment": [2, 1, 1]}
//
// or 1-based bundles, one per agent:
//
//   {"bundles": [[2, 3], [1]]}
//
// The result is checked against `profile`.
Allocation load_allocation(std::string_view text, const Profile& profile);
Allocation load_allocation_file(const std::filesystem::path& path, const Profile& profile);

// Writes the assignment form.
std::string serialize_allocation(const Allocation& allocation);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace fairalloc

#endif  // FAIRALLOC_PROFILE_IO_HPP_
