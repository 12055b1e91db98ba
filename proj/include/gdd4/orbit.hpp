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
#include <optional>
#include <string>
#include <vector>

#include "gdd4/group_type.hpp"
#include "gdd4/parallel.hpp"
#include "gdd4/point_space.hpp"

namespace gdd4 {

// Compact description of a design: the points, the groups, and one block
// per orbit of the cyclic automorphism.
struct BaseBlockSystem {
  std::string name;
  PointSpace space;
  GroupLayout layout;
  std::vector<BaseBlock> base_blocks;
  // Orbit lengths stated alongside the published table, one per base
  // block. Only compared against, never used to develop.
  std::optional<std::vector<int>> declared_orbits;
  std::optional<GroupType> claimed_type;
  std::string provenance;
};

// Fully expanded design. Points are referred to by their position in
// `points`; every block is sorted ascending.
struct DevelopedDesign {
  std::vector<std::string> points;
  std::vector<std::vector<int>> groups;
  std::vector<std::array<int, 4>> blocks;
  // Disagreements between declared and computed orbit lengths.
  std::vector<std::string> warnings;
};

// Smallest d >= 1 with block + d == block as a set; always divides the
// modulus.
int orbit_length(const BaseBlock& block, const PointSpace& space);

// The orbit [b + 0, ..., b + (d - 1)], each block sorted.
// Throws DegenerateBlockError if two points of `block` coincide.
std::vector<BaseBlock> develop_block(const BaseBlock& block, const PointSpace& space);

// Develops every base block, in base-block order then shift order.
// Duplicate blocks are kept. Throws DegenerateBlockError naming the index
// of the first degenerate base block.
DevelopedDesign develop_system(const BaseBlockSystem& system, Exec exec = Exec::parallel);

// Human-readable form, e.g. "{a0,b1,c2,inf}".
std::string block_name(const BaseBlock& block, const PointSpace& space);

}  // namespace gdd4
