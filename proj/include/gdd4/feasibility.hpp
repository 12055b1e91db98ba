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

#include <optional>
#include <string>
#include <vector>

#include "gdd4/group_type.hpp"
#include "gdd4/parallel.hpp"

namespace gdd4 {

// One necessary condition and how the type fared against it.
struct ConditionResult {
  std::string id;           // "C1" .. "C4"
  std::string description;
  bool passed = false;
  std::vector<long> witness;  // numbers that decided the outcome
};

struct FeasibilityReport {
  GroupType type;
  std::vector<ConditionResult> conditions;

  bool feasible() const;
};

// Evaluates the necessary conditions for a 4-GDD of the given type:
//   C1  m >= 4
//   C2  v - g = 0 (mod 3) for every size g
//   C3  v^2 - sum g^2 = 0 (mod 12)
//   C4  3 g(1) + g(2) <= v for the two largest sizes
// Passing all four does not mean a design exists (2^4 passes).
FeasibilityReport check_feasible(const GroupType& type);

// All feasible types with v_min <= v <= v_max, optionally restricted to
// v = residue (mod 3). Sorted by v, then by canonical string. Generation
// prunes on C2 and C4 instead of filtering all partitions.
// Throws gdd4::Error on bad bounds.
std::vector<GroupType> enumerate_feasible(int v_min, int v_max,
                                          std::optional<int> residue = std::nullopt,
                                          Exec exec = Exec::parallel);

}  // namespace gdd4
