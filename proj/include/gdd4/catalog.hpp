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
#include <vector>

#include "gdd4/system_format.hpp"

namespace gdd4 {

// The published constructions, stored as system documents exactly as
// printed. example1 is kept with its printing errors and is flagged.
enum class EntryStatus { verified, erratum };

struct CatalogEntry {
  std::string name;
  GroupType claimed_type;
  EntryStatus status;
  std::string notes;
  std::string_view source;  // the embedded system document
  BaseBlockSystem system;
  std::vector<LoadIssue> load_issues;  // non-empty only for erratum entries
};

struct CatalogSummary {
  std::string name;
  GroupType claimed_type;
  int modulus;
  int base_block_count;  // as printed
  EntryStatus status;
};

std::vector<CatalogSummary> list_entries();

// Throws gdd4::Error for an unknown name.
CatalogEntry get_entry(std::string_view name);

// The entry as a system document, preceded by comment lines with its notes.
std::string emit_entry(std::string_view name);

// FNV-1a over the embedded documents; pinned by the tests.
std::uint64_t catalog_checksum();

std::string to_string(EntryStatus status);

}  // namespace gdd4
