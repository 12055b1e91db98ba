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

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdd4/group_type.hpp"

namespace gdd4 {

// A periodic family a_0 .. a_{p-1} is moved by the cyclic automorphism;
// a fixed family is a single infinite point that never moves.
struct PointFamily {
  enum class Kind { periodic, fixed };

  std::string label;
  Kind kind = Kind::periodic;
  int period = 1;  // 1 for fixed points

  bool is_fixed() const { return kind == Kind::fixed; }

  friend bool operator==(const PointFamily&, const PointFamily&) = default;
};

// Index into PointSpace::families() plus subscript (0 for fixed points).
struct Point {
  int family = 0;
  int index = 0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

// Four points as written in a base block, in the order given.
using BaseBlock = std::array<Point, 4>;

// The points of a design under a cyclic automorphism group Z_n. Families
// are stored in canonical order: periodic families by label, then fixed
// points by label.
class PointSpace {
 public:
  PointSpace() = default;

  // Throws gdd4::Error on duplicate labels, bad labels, or a period that
  // does not divide the modulus.
  PointSpace(int modulus, std::vector<PointFamily> families);

  int modulus() const { return modulus_; }
  const std::vector<PointFamily>& families() const { return families_; }
  const PointFamily& family(int f) const { return families_[f]; }
  std::optional<int> find_family(std::string_view label) const;

  int point_total() const { return total_; }
  int id(const Point& p) const { return offsets_[p.family] + p.index; }
  Point point(int id) const;
  std::vector<Point> all_points() const;

  bool contains(const Point& p) const;
  std::string name(const Point& p) const;

  // Resolves a token such as "a3" or "inf1". Throws ParseError.
  Point parse_point(std::string_view token) const;

  friend bool operator==(const PointSpace&, const PointSpace&) = default;

 private:
  int modulus_ = 1;
  std::vector<PointFamily> families_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// Splits "a12" into ("a", 12) and "inf" into ("inf", nullopt). A token made
// only of a label with trailing digits is ambiguous with a fixed label; the
// caller resolves fixed labels first.
struct PointToken {
  std::string label;
  std::optional<long> index;
};
std::optional<PointToken> split_point_token(std::string_view token);

bool valid_family_label(std::string_view label);
bool valid_fixed_label(std::string_view label);

// Image of p under the shift x -> x + shift. Fixed points are unchanged;
// periodic subscripts are reduced modulo the family period.
Point act(const PointSpace& space, const Point& p, long shift);

// Disjoint groups of points. Each group is sorted and groups are ordered
// by their smallest point.
class GroupLayout {
 public:
  GroupLayout() = default;
  explicit GroupLayout(std::vector<std::vector<Point>> groups);

  const std::vector<std::vector<Point>>& groups() const { return groups_; }
  bool empty() const { return groups_.empty(); }

  friend bool operator==(const GroupLayout&, const GroupLayout&) = default;

 private:
  std::vector<std::vector<Point>> groups_;
};

// Problems that stop a layout from partitioning the space: points outside
// the space, points listed twice, points in no group, empty groups.
std::vector<std::string> layout_issues(const PointSpace& space, const GroupLayout& layout);

// Throws gdd4::Error with the first issue, if any.
void require_partition(const PointSpace& space, const GroupLayout& layout);

// Multiset of group sizes.
GroupType induced_type(const GroupLayout& layout);

}  // namespace gdd4
