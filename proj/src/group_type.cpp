// Copyright 2026 The gdd4 Authors
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

#include "gdd4/group_type.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "gdd4/error.hpp"

namespace gdd4 {
namespace {

bool parse_positive(std::string_view digits, int& out) {
  if (digits.empty()) return false;
  for (char c : digits) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), out);
  return ec == std::errc() && ptr == digits.data() + digits.size() && out > 0;
}

}  // namespace

GroupType::GroupType(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error("group type must contain at least one group");
  for (int g : sizes_) {
    if (g < 1) throw Error("group sizes must be positive, got " + std::to_string(g));
  }
  std::sort(sizes_.begin(), sizes_.end());
}

std::vector<std::pair<int, int>> GroupType::terms() const {
  std::vector<std::pair<int, int>> out;
  for (int g : sizes_) {
    if (!out.empty() && out.back().first == g) {
      ++out.back().second;
    } else {
      out.emplace_back(g, 1);
    }
  }
  return out;
}

bool GroupType::contains(int size) const {
  return std::binary_search(sizes_.begin(), sizes_.end(), size);
}

std::int64_t GroupType::sum_of_squares() const {
  std::int64_t s = 0;
  for (int g : sizes_) s += static_cast<std::int64_t>(g) * g;
  return s;
}

GroupType parse_type(std::string_view text) {
  std::vector<int> sizes;
  std::istringstream in{std::string(text)};
  std::string term;
  while (in >> term) {
    const auto caret = term.find('^');
    int base = 0;
    int exponent = 1;
    const std::string_view view(term);
    bool ok = caret == std::string::npos
                  ? parse_positive(view, base)
                  : parse_positive(view.substr(0, caret), base) &&
                        parse_positive(view.substr(caret + 1), exponent);
    if (!ok) throw ParseError("malformed group type term '" + term + "'");
    if (exponent > 100000) throw ParseError("exponent too large in term '" + term + "'");
    sizes.insert(sizes.end(), exponent, base);
  }
  if (sizes.empty()) throw ParseError("empty group type");
  return GroupType(std::move(sizes));
}

std::string format_type(const GroupType& type) {
  std::string out;
  for (auto [g, u] : type.terms()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(g) + '^' + std::to_string(u);
  }
  return out;
}

int point_count(const GroupType& type) {
  return std::accumulate(type.sizes().begin(), type.sizes().end(), 0);
}

std::int64_t cross_pair_count(const GroupType& type) {
  const std::int64_t v = point_count(type);
  return (v * v - type.sum_of_squares()) / 2;
}

std::int64_t block_count(const GroupType& type) {
  const std::int64_t v = point_count(type);
  const std::int64_t numerator = v * v - type.sum_of_squares();
  if (numerator % 12 != 0) {
    throw ArithmeticError("type " + format_type(type) +
                          " fails the pair-count condition: v^2 - sum g^2 = " +
                          std::to_string(numerator) + " is not divisible by 12");
  }
  return numerator / 12;
}

int replication(const GroupType& type, int group_size) {
  if (!type.contains(group_size)) {
    throw Error("group size " + std::to_string(group_size) + " does not occur in type " +
                format_type(type));
  }
  const int rest = point_count(type) - group_size;
  if (rest % 3 != 0) {
    throw ArithmeticError("replication for group size " + std::to_string(group_size) +
                          " is not integral: v - g = " + std::to_string(rest));
  }
  return rest / 3;
}

}  // namespace gdd4
