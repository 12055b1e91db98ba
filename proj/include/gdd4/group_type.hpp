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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gdd4 {

// Block size handled by this library. Carried on GroupType so messages can
// name it, but no other value is supported.
inline constexpr int kBlockSize = 4;

// Multiset of group sizes, e.g. 2^6 5^2 11^2. Sizes are kept in ascending
// order, which is also the order of the exponential notation.
class GroupType {
 public:
  // Throws gdd4::Error if `sizes` is empty or holds a size < 1.
  explicit GroupType(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int block_size() const { return kBlockSize; }

  // Number of groups (m).
  int group_count() const { return static_cast<int>(sizes_.size()); }

  // (size, multiplicity) pairs in ascending size order.
  std::vector<std::pair<int, int>> terms() const;

  bool contains(int size) const;

  // Largest and second-largest member (the latter equals the former when
  // the largest size occurs twice). Requires group_count() >= 2 for second.
  int largest() const { return sizes_.back(); }
  int second_largest() const { return sizes_[sizes_.size() - 2]; }

  // Sum of squared group sizes.
  std::int64_t sum_of_squares() const;

  friend bool operator==(const GroupType&, const GroupType&) = default;
  friend auto operator<=>(const GroupType&, const GroupType&) = default;

 private:
  std::vector<int> sizes_;
};

// Parses whitespace-separated terms "g^u" or "g". Repeated bases merge.
// Throws ParseError naming the offending term.
GroupType parse_type(std::string_view text);

// Canonical exponential notation, ascending, exponent always written.
std::string format_type(const GroupType& type);

// v, the number of points.
int point_count(const GroupType& type);

// Number of blocks of any 4-GDD of this type, (v^2 - sum g^2) / 12.
// Throws ArithmeticError when the division is not exact.
std::int64_t block_count(const GroupType& type);

// Number of blocks through a point of a size-g group, (v - g) / 3.
// Throws gdd4::Error if g is not a member, ArithmeticError if not integral.
int replication(const GroupType& type, int group_size);

// Number of unordered pairs of points lying in distinct groups.
std::int64_t cross_pair_count(const GroupType& type);

}  // namespace gdd4
