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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gdd4/group_type.hpp"
#include "gdd4/orbit.hpp"
#include "gdd4/parallel.hpp"
#include "gdd4/system_format.hpp"
#include "json.hpp"

namespace gdd4 {

struct IntraGroupPair {
  std::string block;
  std::string first;
  std::string second;

  friend bool operator==(const IntraGroupPair&, const IntraGroupPair&) = default;
  friend auto operator<=>(const IntraGroupPair&, const IntraGroupPair&) = default;
};

// A cross-group pair covered other than exactly once, with the blocks that
// cover it (empty when uncovered).
struct PairCoverage {
  std::string first;
  std::string second;
  std::vector<std::string> blocks;

  friend bool operator==(const PairCoverage&, const PairCoverage&) = default;
  friend auto operator<=>(const PairCoverage&, const PairCoverage&) = default;
};

struct VerificationReport {
  std::optional<GroupType> claimed_type;
  std::optional<GroupType> induced_type;
  std::size_t block_total = 0;

  std::vector<IntraGroupPair> intra_group;  // blocks joining two points of a group
  std::vector<PairCoverage> uncovered;      // cross pairs in no block
  std::vector<PairCoverage> over_covered;   // cross pairs in two or more blocks
  std::vector<std::string> malformed;       // blocks that are not 4 distinct known points
  std::vector<std::string> structural;      // layout, declaration and type problems
  std::vector<std::string> warnings;        // orbit-note mismatches, never fatal

  // Blocks through each point, in point order.
  std::vector<std::pair<std::string, int>> replication;

  bool valid() const {
    return intra_group.empty() && uncovered.empty() && over_covered.empty() &&
           malformed.empty() && structural.empty();
  }
};

// Pair-coverage kernel: entry i * n + j (i < j) counts the well-formed
// blocks containing points i and j. Serial and OpenMP paths agree exactly.
std::vector<std::uint32_t> pair_coverage(const DevelopedDesign& design, Exec exec);

// Checks both 4-GDD axioms over every pair of points.
VerificationReport verify(const DevelopedDesign& design, Exec exec = Exec::parallel);

// Develops, verifies, and compares the claimed type with the induced one.
// Degenerate base blocks propagate as DegenerateBlockError.
VerificationReport verify_system(const BaseBlockSystem& system, Exec exec = Exec::parallel);

// verify_system on a leniently loaded document; the load issues that tied
// to a line are reported as structural diagnostics (layout problems are
// found by the verifier itself).
VerificationReport verify_loaded(const LoadedSystem& loaded, Exec exec = Exec::parallel);

// Multiset of group sizes. Empty layouts have no type.
GroupType infer_type(const GroupLayout& layout);
std::optional<GroupType> infer_type(const DevelopedDesign& design);

// First line is the verdict; then one diagnostic per line.
std::string render_text(const VerificationReport& report);
nlohmann::json to_json(const VerificationReport& report);

// Orders "a2" before "a10".
bool natural_less(const std::string& a, const std::string& b);

}  // namespace gdd4
