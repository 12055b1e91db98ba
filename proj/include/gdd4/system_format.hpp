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

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gdd4/orbit.hpp"

namespace gdd4 {

// Line-oriented text formats.
//
// System document:
//   gdd-system 1
//   modulus <n>
//   family <label> <period>      one per periodic family
//   fixed <label>                one per infinite point
//   type <exponential type>      optional claimed type
//   group <point> ...            one per group
//   base <p> <p> <p> <p>         one per base block
//   orbits <d1> <d2> ...         optional, one per base block
//
// Design document:
//   gdd-design 1
//   point <name> ...
//   group <name> ...
//   block <name> <name> <name> <name>
//
// '#' starts a comment. The final line must end with a newline.

enum class DocumentKind { system, design };

// Kind named by the header line. Throws ParseError for anything else.
DocumentKind document_kind(std::string_view text);

struct LoadIssue {
  std::size_t line = 0;  // 0 when not tied to a line
  std::string message;

  std::string describe() const;
};

// Result of a lenient read: problems that a strict parse rejects are
// recorded instead. Undeclared families are declared with the full
// modulus as period, out-of-range subscripts are reduced modulo the
// period, and base blocks that are not 4 distinct points are dropped.
struct LoadedSystem {
  BaseBlockSystem system;
  std::vector<LoadIssue> issues;
};

LoadedSystem load_system(std::string_view text);

// Strict read. Throws ParseError (with line number) on unknown families,
// subscripts out of range, blocks without 4 distinct points, groups that
// overlap or miss a point, and periods not dividing the modulus.
BaseBlockSystem parse_system(std::string_view text);

std::string serialize_system(const BaseBlockSystem& system);

DevelopedDesign parse_design(std::string_view text);
std::string serialize_design(const DevelopedDesign& design);

// Renames family labels throughout a system document, e.g. {"t", "r"}.
// A declaration made redundant by the rename is dropped.
std::string apply_renames(std::string_view text, const std::map<std::string, std::string>& renames);

}  // namespace gdd4
