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

#include "gdd4/point_space.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "gdd4/error.hpp"

namespace gdd4 {

bool valid_family_label(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalpha(c) || c == '_';
  });
}

bool valid_fixed_label(std::string_view label) {
  if (label.empty() || !(std::isalpha(static_cast<unsigned char>(label[0])) || label[0] == '_'))
    return false;
  return std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

std::optional<PointToken> split_point_token(std::string_view token) {
  std::size_t cut = token.size();
  while (cut > 0 && std::isdigit(static_cast<unsigned char>(token[cut - 1]))) --cut;
  const std::string_view label = token.substr(0, cut);
  if (!valid_family_label(label)) {
    if (cut == token.size() && valid_fixed_label(token)) return PointToken{std::string(token), {}};
    return std::nullopt;
  }
  if (cut == token.size()) return PointToken{std::string(label), {}};
  const std::string_view digits = token.substr(cut);
  if (digits.size() > 9) return std::nullopt;
  long index = 0;
  std::from_chars(digits.data(), digits.data() + digits.size(), index);
  return PointToken{std::string(label), index};
}

PointSpace::PointSpace(int modulus, std::vector<PointFamily> families)
    : modulus_(modulus), families_(std::move(families)) {
  if (modulus_ < 1) throw Error("modulus must be positive");
  std::set<std::string> labels;
  for (auto& f : families_) {
    if (f.is_fixed()) {
      if (!valid_fixed_label(f.label)) throw Error("invalid fixed point label '" + f.label + "'");
      f.period = 1;
    } else {
      if (!valid_family_label(f.label)) throw Error("invalid family label '" + f.label + "'");
      if (f.period < 1 || modulus_ % f.period != 0) {
        throw Error("period " + std::to_string(f.period) + " of family " + f.label +
                    " does not divide modulus " + std::to_string(modulus_));
      }
    }
    if (!labels.insert(f.label).second) throw Error("duplicate label '" + f.label + "'");
  }
  // A fixed label like "a1" would shadow point 1 of family a.
  for (const auto& f : families_) {
    if (!f.is_fixed()) continue;
    auto tok = split_point_token(f.label);
    if (tok && tok->index && labels.count(tok->label)) {
      throw Error("fixed label '" + f.label + "' collides with family " + tok->label);
    }
  }
  std::stable_sort(families_.begin(), families_.end(), [](const auto& a, const auto& b) {
    if (a.is_fixed() != b.is_fixed()) return !a.is_fixed();
    return a.label < b.label;
  });
  offsets_.reserve(families_.size());
  for (const auto& f : families_) {
    offsets_.push_back(total_);
    total_ += f.period;
  }
}

std::optional<int> PointSpace::find_family(std::string_view label) const {
  for (std::size_t i = 0; i < families_.size(); ++i) {
    if (families_[i].label == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

Point PointSpace::point(int id) const {
  auto it = std::upper_bound(offsets_.begin(), offsets_.end(), id);
  const int f = static_cast<int>(it - offsets_.begin()) - 1;
  return Point{f, id - offsets_[f]};
}

std::vector<Point> PointSpace::all_points() const {
  std::vector<Point> out;
  out.reserve(total_);
  for (int i = 0; i < total_; ++i) out.push_back(point(i));
  return out;
}

bool PointSpace::contains(const Point& p) const {
  return p.family >= 0 && p.family < static_cast<int>(families_.size()) && p.index >= 0 &&
         p.index < families_[p.family].period;
}

std::string PointSpace::name(const Point& p) const {
  const auto& f = families_[p.family];
  return f.is_fixed() ? f.label : f.label + std::to_string(p.index);
}

Point PointSpace::parse_point(std::string_view token) const {
  if (auto f = find_family(token); f && families_[*f].is_fixed()) return Point{*f, 0};
  auto tok = split_point_token(token);
  if (!tok) throw ParseError("malformed point '" + std::string(token) + "'");
  auto f = find_family(tok->label);
  if (!f || families_[*f].is_fixed()) {
    throw ParseError("unknown family '" + tok->label + "' in point '" + std::string(token) + "'");
  }
  if (!tok->index) {
    throw ParseError("point '" + std::string(token) + "' needs a subscript");
  }
  if (*tok->index >= families_[*f].period) {
    throw ParseError("subscript " + std::to_string(*tok->index) + " of '" + std::string(token) +
                     "' is out of range for family " + tok->label + " of period " +
                     std::to_string(families_[*f].period));
  }
  return Point{*f, static_cast<int>(*tok->index)};
}

Point act(const PointSpace& space, const Point& p, long shift) {
  const auto& f = space.family(p.family);
  if (f.is_fixed()) return p;
  long idx = (p.index + shift) % f.period;
  if (idx < 0) idx += f.period;
  return Point{p.family, static_cast<int>(idx)};
}

GroupLayout::GroupLayout(std::vector<std::vector<Point>> groups) : groups_(std::move(groups)) {
  for (auto& g : groups_) std::sort(g.begin(), g.end());
  std::sort(groups_.begin(), groups_.end());
}

std::vector<std::string> layout_issues(const PointSpace& space, const GroupLayout& layout) {
  std::vector<std::string> issues;
  std::vector<int> seen(space.point_total(), 0);
  for (const auto& g : layout.groups()) {
    if (g.empty()) issues.emplace_back("empty group");
    for (const auto& p : g) {
      if (!space.contains(p)) {
        issues.emplace_back("group member outside the point space");
        continue;
      }
      if (++seen[space.id(p)] == 2) {
        issues.push_back("point " + space.name(p) + " appears in more than one group");
      }
    }
  }
  for (int i = 0; i < space.point_total(); ++i) {
    if (seen[i] == 0) issues.push_back("point " + space.name(space.point(i)) + " is in no group");
  }
  return issues;
}

void require_partition(const PointSpace& space, const GroupLayout& layout) {
  auto issues = layout_issues(space, layout);
  if (!issues.empty()) throw Error("groups do not partition the points: " + issues.front());
}

GroupType induced_type(const GroupLayout& layout) {
  std::vector<int> sizes;
  for (const auto& g : layout.groups()) sizes.push_back(static_cast<int>(g.size()));
  return GroupType(std::move(sizes));
}

}  // namespace gdd4
