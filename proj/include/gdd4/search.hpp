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
#include <vector>

#include "gdd4/error.hpp"
#include "gdd4/orbit.hpp"

namespace gdd4 {

class InfeasibleTypeError : public Error {
 public:
  using Error::Error;
};

// An orbit of cross-group pairs under the shift. `first` < `second` are
// point ids of the smallest pair in the orbit.
struct PairOrbit {
  int first = 0;
  int second = 0;
  int size = 0;
};

// A block orbit that covers every pair of the listed pair orbits exactly
// once and no other pair.
struct Candidate {
  BaseBlock block;  // smallest block of its shift orbit, sorted
  int orbit_length = 0;
  std::vector<int> pair_orbits;  // ascending
};

struct SearchProblem {
  PointSpace space;
  GroupLayout layout;
  std::vector<PairOrbit> pair_orbits;  // ordered by representative
  std::vector<Candidate> candidates;   // ordered by representative block
};

enum class SearchMode { first, all };

// fail_first branches on the uncovered pair orbit with the fewest
// candidates left (lowest index on ties); naive takes the lowest index.
enum class Selection { fail_first, naive };

struct SearchOptions {
  SearchMode mode = SearchMode::first;
  Selection selection = Selection::fail_first;
  int workers = 1;
  std::uint64_t node_limit = 100'000'000;
  std::optional<double> time_limit_seconds;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::uint64_t solutions = 0;
  std::size_t branches = 0;  // top-level branches handed to workers
};

struct SearchResult {
  enum class Outcome { found, exhausted, limit_reached };

  Outcome outcome = Outcome::exhausted;
  // The solution from the lowest top-level branch that has one. In mode
  // all this is reported alongside the count.
  std::optional<BaseBlockSystem> system;
  SearchStats stats;
};

// Layout for the shapes that need no user input: 1^v over Z_v (one family,
// singleton groups) and g^u over Z_g (u families, one group each).
// Throws gdd4::Error for anything else.
BaseBlockSystem auto_layout(const GroupType& type, int modulus);

// Every automatic layout for the type, in the order the search tries them;
// the first is auto_layout(type, modulus). For g^u over Z_g the k-th
// alternative bundles k sets of g families into g groups each,
// {f_i, f'_i, ...} for i in Z_g, and keeps the remaining families as
// groups. Families-as-groups alone has no solution whenever u > g, since a
// cyclic solution then needs a difference matrix over Z_g with more than
// g rows.
std::vector<BaseBlockSystem> auto_layouts(const GroupType& type, int modulus);

// Throws gdd4::Error if the layout does not partition the space.
SearchProblem build_problem(const PointSpace& space, const GroupLayout& layout);

// Exact cover of the pair orbits by candidate orbits. Every solution that
// is returned has been through verify_system.
SearchResult search(const SearchProblem& problem, const SearchOptions& options);

// Checks feasibility of the layout's type first; throws InfeasibleTypeError.
SearchResult search_layout(const BaseBlockSystem& skeleton, const SearchOptions& options);

struct LayoutAttempt {
  BaseBlockSystem skeleton;
  SearchResult result;
};

// Runs search_layout over auto_layouts in order. Mode first stops at the
// first layout that is not exhausted; mode all tries every layout.
std::vector<LayoutAttempt> search_auto(const GroupType& type, int modulus,
                                       const SearchOptions& options);

std::string to_string(SearchResult::Outcome outcome);

}  // namespace gdd4
