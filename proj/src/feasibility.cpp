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

#include "gdd4/feasibility.hpp"

#include <algorithm>

#include "gdd4/error.hpp"

namespace gdd4 {

bool FeasibilityReport::feasible() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return c.passed; });
}

FeasibilityReport check_feasible(const GroupType& type) {
  const long v = point_count(type);
  const long m = type.group_count();
  FeasibilityReport report{type, {}};

  report.conditions.push_back(
      {"C1", "at least 4 groups (a block meets 4 distinct groups)", m >= 4, {m}});

  ConditionResult c2{"C2", "v - g divisible by 3 for every group size g", true, {}};
  for (auto [g, u] : type.terms()) {
    if ((v - g) % 3 != 0) {
      c2.passed = false;
      c2.witness.push_back(g);
    }
  }
  if (c2.passed) c2.witness.push_back(v);
  report.conditions.push_back(std::move(c2));

  const long pairs = v * v - type.sum_of_squares();
  report.conditions.push_back(
      {"C3", "v^2 - sum g^2 divisible by 12", pairs % 12 == 0, {pairs}});

  if (m >= 2) {
    const long g1 = type.largest();
    const long g2 = type.second_largest();
    report.conditions.push_back({"C4", "3 g(1) + g(2) <= v for the two largest groups",
                                 3 * g1 + g2 <= v, {3 * g1 + g2, v}});
  } else {
    report.conditions.push_back(
        {"C4", "3 g(1) + g(2) <= v for the two largest groups", false, {m}});
  }
  return report;
}

namespace {

// Parts are emitted in non-increasing order; every part is congruent to v
// mod 3 (C2), and the second part is bounded by v - 3 * first (C4).
void extend(int v, int remaining, int max_part, int step, std::vector<int>& parts,
            std::vector<GroupType>& out) {
  if (remaining == 0) {
    if (parts.size() < 4) return;
    GroupType t(parts);
    if (check_feasible(t).feasible()) out.push_back(std::move(t));
    return;
  }
  int bound = std::min(max_part, remaining);
  if (parts.size() == 1) bound = std::min(bound, v - 3 * parts[0]);
  const int first = (v % 3 == 0) ? 3 : v % 3;
  for (int g = first; g <= bound; g += step) {
    // C4 with the smallest admissible second part.
    if (parts.empty() && 3 * g + first > v) break;
    parts.push_back(g);
    extend(v, remaining - g, g, step, parts, out);
    parts.pop_back();
  }
}

std::vector<GroupType> feasible_for(int v) {
  std::vector<GroupType> out;
  std::vector<int> parts;
  extend(v, v, v, 3, parts, out);
  std::vector<std::pair<std::string, std::size_t>> keyed;
  keyed.reserve(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) keyed.emplace_back(format_type(out[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<GroupType> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keyed) sorted.push_back(out[i]);
  return sorted;
}

}  // namespace

std::vector<GroupType> enumerate_feasible(int v_min, int v_max, std::optional<int> residue,
                                          Exec exec) {
  if (v_min < 1 || v_min > v_max) {
    throw Error("invalid point bounds [" + std::to_string(v_min) + ", " +
                std::to_string(v_max) + "]");
  }
  if (residue && (*residue < 0 || *residue > 2)) throw Error("residue must be 0, 1 or 2");

  std::vector<int> vs;
  for (int v = v_min; v <= v_max; ++v) {
    if (!residue || v % 3 == *residue) vs.push_back(v);
  }
  std::vector<std::vector<GroupType>> per_v(vs.size());
  const long count = static_cast<long>(vs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) per_v[i] = feasible_for(vs[i]);
  } else {
    for (long i = 0; i < count; ++i) per_v[i] = feasible_for(vs[i]);
  }

  std::vector<GroupType> out;
  for (auto& chunk : per_v) {
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  return out;
}

}  // namespace gdd4
