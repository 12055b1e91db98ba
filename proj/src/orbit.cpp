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

#include "gdd4/orbit.hpp"

#include <algorithm>

#include "gdd4/error.hpp"

namespace gdd4 {
namespace {

BaseBlock shifted(const BaseBlock& block, const PointSpace& space, long shift) {
  BaseBlock out;
  for (std::size_t i = 0; i < block.size(); ++i) out[i] = act(space, block[i], shift);
  std::sort(out.begin(), out.end());
  return out;
}

void require_distinct(const BaseBlock& block, const PointSpace& space) {
  for (std::size_t i = 0; i < block.size(); ++i) {
    for (std::size_t j = i + 1; j < block.size(); ++j) {
      if (block[i] == block[j]) {
        throw DegenerateBlockError("block " + block_name(block, space) + " is degenerate: " +
                                   space.name(block[i]) + " occurs twice");
      }
    }
  }
}

}  // namespace

std::string block_name(const BaseBlock& block, const PointSpace& space) {
  std::string out = "{";
  for (std::size_t i = 0; i < block.size(); ++i) {
    if (i) out += ',';
    out += space.name(block[i]);
  }
  return out + "}";
}

int orbit_length(const BaseBlock& block, const PointSpace& space) {
  const BaseBlock base = shifted(block, space, 0);
  for (int d = 1; d < space.modulus(); ++d) {
    if (space.modulus() % d == 0 && shifted(block, space, d) == base) return d;
  }
  return space.modulus();
}

std::vector<BaseBlock> develop_block(const BaseBlock& block, const PointSpace& space) {
  require_distinct(block, space);
  const int d = orbit_length(block, space);
  std::vector<BaseBlock> out;
  out.reserve(d);
  for (int s = 0; s < d; ++s) out.push_back(shifted(block, space, s));
  return out;
}

DevelopedDesign develop_system(const BaseBlockSystem& system, Exec exec) {
  const auto& space = system.space;
  const long count = static_cast<long>(system.base_blocks.size());

  std::vector<std::vector<BaseBlock>> orbits(count);
  std::vector<std::string> errors(count);
  auto expand = [&](long i) {
    try {
      orbits[i] = develop_block(system.base_blocks[i], space);
    } catch (const DegenerateBlockError& e) {
      errors[i] = e.what();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < count; ++i) expand(i);
  } else {
    for (long i = 0; i < count; ++i) expand(i);
  }
  for (long i = 0; i < count; ++i) {
    if (!errors[i].empty()) {
      throw DegenerateBlockError("base block " + std::to_string(i + 1) + ": " + errors[i]);
    }
  }

  DevelopedDesign design;
  for (const auto& p : space.all_points()) design.points.push_back(space.name(p));
  for (const auto& g : system.layout.groups()) {
    std::vector<int> ids;
    for (const auto& p : g) ids.push_back(space.id(p));
    design.groups.push_back(std::move(ids));
  }
  for (const auto& orbit : orbits) {
    for (const auto& b : orbit) {
      std::array<int, 4> ids{};
      for (std::size_t j = 0; j < b.size(); ++j) ids[j] = space.id(b[j]);
      design.blocks.push_back(ids);
    }
  }

  if (system.declared_orbits) {
    const auto& declared = *system.declared_orbits;
    if (static_cast<long>(declared.size()) != count) {
      design.warnings.push_back("declared orbit list has " + std::to_string(declared.size()) +
                                " entries for " + std::to_string(count) + " base blocks");
    }
    for (long i = 0; i < count && i < static_cast<long>(declared.size()); ++i) {
      const int computed = static_cast<int>(orbits[i].size());
      if (declared[i] != computed) {
        design.warnings.push_back("base block " + std::to_string(i + 1) + " " +
                                  block_name(system.base_blocks[i], space) + ": declared orbit " +
                                  std::to_string(declared[i]) + ", computed " +
                                  std::to_string(computed));
      }
    }
  }
  return design;
}

}  // namespace gdd4
