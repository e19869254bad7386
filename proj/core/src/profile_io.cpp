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

#include "fairalloc/profile_io.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fairalloc/error.hpp"
#include "fairalloc/report.hpp"

namespace fairalloc {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    if (auto cut = what.find("syntax error"); cut != std::string::npos) what = what.substr(cut);
    throw ParseError(line_column(text, byte), what);
  }
}

std::size_t read_count(const json& doc, const char* key, std::size_t minimum) {
  if (!doc.contains(key)) throw ParseError(key, "missing field");
  const json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(key, "expected a nonnegative integer");
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u < minimum) {
      throw ParseError(key, "must be at least " + std::to_string(minimum));
    }
    return static_cast<std::size_t>(u);
  }
  const auto s = v.get<std::int64_t>();
  if (s < static_cast<std::int64_t>(minimum)) {
    throw ParseError(key, "must be at least " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(s);
}

Rational read_rational(const json& v, const std::string& location) {
  if (v.is_number_unsigned()) return Rational(v.get<std::uint64_t>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return parse_rational(v.get<std::string>(), location);
  if (v.is_number_float()) {
    throw ParseError(location, "floating-point literal; write the value as an integer or \"p/q\"");
  }
  throw ParseError(location, "expected an integer or a \"p/q\" string");
}

std::size_t read_index(const json& v, std::size_t upper, const std::string& location,
                       const char* what) {
  if (!v.is_number_integer()) throw ParseError(location, std::string("expected ") + what);
  const auto raw = v.get<std::int64_t>();
  if (raw < 1 || static_cast<std::uint64_t>(raw) > upper) {
    throw ValidationError(location + ": " + what + " " + std::to_string(raw) +
                          " out of range [1, " + std::to_string(upper) + "]");
  }
  return static_cast<std::size_t>(raw - 1);
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Profile load_profile(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("line 1, column 1", "profile must be a JSON object");
  const std::size_t agents = read_count(doc, "agents", 1);
  const std::size_t goods = read_count(doc, "goods", 0);
  if (!doc.contains("utilities")) throw ParseError("utilities", "missing field");
  const json& rows = doc.at("utilities");
  if (!rows.is_array()) throw ParseError("utilities", "expected an array of rows");
  if (rows.size() != agents) {
    throw ParseError("utilities", "has " + std::to_string(rows.size()) + " rows but agents = " +
                                      std::to_string(agents));
  }
  std::vector<Rational> flat;
  flat.reserve(agents * goods);
  for (std::size_t i = 0; i < agents; ++i) {
    const std::string row_loc = "utilities[" + std::to_string(i) + "]";
    const json& row = rows[i];
    if (!row.is_array()) throw ParseError(row_loc, "expected an array");
    if (row.size() != goods) {
      throw ParseError(row_loc, "has " + std::to_string(row.size()) + " entries but goods = " +
                                    std::to_string(goods));
    }
    for (std::size_t j = 0; j < goods; ++j) {
      const std::string loc = row_loc + "[" + std::to_string(j) + "]";
      Rational value = read_rational(row[j], loc);
      if (value < 0) {
        throw ValidationError(loc + ": negative utility " + to_string(value) + " for agent " +
                              std::to_string(i + 1) + ", good g" + std::to_string(j + 1));
      }
      flat.push_back(std::move(value));
    }
  }
  return Profile(agents, goods, std::move(flat));
}

Profile load_profile_file(const std::filesystem::path& path) {
  try {
    return load_profile(read_text_file(path));
  } catch (const ParseError& e) {
    if (e.location() == path.string()) throw;
    throw ParseError(path.string() + ": " + e.location(),
                     std::string(e.what()).substr(e.location().size() + 2));
  }
}

std::string serialize_profile(const Profile& profile) {
  return profile_json(profile).dump(2) + "\n";
}

Allocation load_allocation(std::string_view text, const Profile& profile) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("line 1, column 1", "allocation must be a JSON object");
  const std::size_t n = profile.agent_count();
  const std::size_t m = profile.good_count();
  if (doc.contains("assignment")) {
    const json& list = doc.at("assignment");
    if (!list.is_array()) throw ParseError("assignment", "expected an array");
    if (list.size() != m) {
      throw ValidationError("assignment: has " + std::to_string(list.size()) +
                            " entries but the profile has " + std::to_string(m) + " goods");
    }
    std::vector<AgentIndex> assignment;
    assignment.reserve(m);
    for (std::size_t g = 0; g < m; ++g) {
      const std::string loc = "assignment[" + std::to_string(g) + "]";
      if (list[g].is_null()) throw ValidationError(loc + ": good g" + std::to_string(g + 1) +
                                                   " is not assigned");
      assignment.push_back(read_index(list[g], n, loc, "agent"));
    }
    return Allocation(n, std::move(assignment));
  }
  if (doc.contains("bundles")) {
    const json& list = doc.at("bundles");
    if (!list.is_array()) throw ParseError("bundles", "expected an array");
    if (list.size() != n) {
      throw ValidationError("bundles: has " + std::to_string(list.size()) +
                            " bundles but the profile has " + std::to_string(n) + " agents");
    }
    std::vector<Bundle> bundles;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string loc = "bundles[" + std::to_string(i) + "]";
      if (!list[i].is_array()) throw ParseError(loc, "expected an array");
      std::vector<GoodIndex> goods;
      for (std::size_t k = 0; k < list[i].size(); ++k) {
        goods.push_back(read_index(list[i][k], m, loc + "[" + std::to_string(k) + "]", "good"));
      }
      bundles.emplace_back(std::move(goods));
    }
    return Allocation::from_bundles(bundles, m);
  }
  throw ParseError("line 1, column 1", "allocation needs an \"assignment\" or \"bundles\" field");
}

Allocation load_allocation_file(const std::filesystem::path& path, const Profile& profile) {
  return load_allocation(read_text_file(path), profile);
}

std::string serialize_allocation(const Allocation& allocation) {
  json list = json::array();
  for (AgentIndex a : allocation.assignment()) list.push_back(a + 1);
  json doc;
  doc["assignment"] = std::move(list);
  return doc.dump() + "\n";
}

}  // namespace fairalloc
