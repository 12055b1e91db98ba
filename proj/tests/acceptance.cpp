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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gdd4/catalog.hpp"
#include "gdd4/feasibility.hpp"
#include "gdd4/orbit.hpp"
#include "gdd4/system_format.hpp"
#include "gdd4/verifier.hpp"
#include "oracles.hpp"

namespace {

using namespace gdd4;
using testing_oracles::run_command;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const std::string kBin = GDD4_CLI;
const char* kLemmas[] = {"lemma1", "lemma2", "lemma3", "lemma4"};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Check catalog_verification() {
  Check c;
  const char* types[] = {"2^6 5^2 11^2", "2^9 5^2 11^2", "2^6 5^1 11^3", "2^3 11^4"};
  const std::size_t totals[] = {135, 181, 174, 167};
  for (int i = 0; i < 4; ++i) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_command(kBin + " catalog emit " + kLemmas[i] + " | " + kBin + " verify -");
    const double elapsed = seconds_since(start);
    std::ostringstream want;
    want << "valid 4-GDD of type " << types[i] << ", " << totals[i] << " blocks\n";
    c.expect(r.exit_code == 0 && r.out == want.str(), std::string(kLemmas[i]) + ": " + r.out);
    c.expect(elapsed < 1.0, std::string(kLemmas[i]) + " took " + std::to_string(elapsed) + " s");
    // Independent total: sum of orbit lengths over base blocks.
    const auto entry = get_entry(kLemmas[i]);
    std::size_t orbit_sum = 0;
    for (const auto& b : entry.system.base_blocks) orbit_sum += orbit_length(b, entry.system.space);
    c.expect(orbit_sum == totals[i], std::string(kLemmas[i]) + " orbit sum");
    c.expect(block_count(parse_type(types[i])) == static_cast<long>(totals[i]),
             std::string(kLemmas[i]) + " block formula");
  }
  return c;
}

Check orbit_notes() {
  Check c;
  for (const char* name : kLemmas) {
    const auto entry = get_entry(name);
    c.expect(entry.system.declared_orbits.has_value(), std::string(name) + " has no orbit notes");
    const auto design = develop_system(entry.system);
    c.expect(design.warnings.empty(), std::string(name) + " orbit warning");
    for (std::size_t i = 0; i < entry.system.base_blocks.size(); ++i) {
      c.expect(orbit_length(entry.system.base_blocks[i], entry.system.space) ==
                   (*entry.system.declared_orbits)[i],
               std::string(name) + " block " + std::to_string(i));
    }
  }
  return c;
}

Check example1_erratum() {
  Check c;
  const auto r = run_command(kBin + " catalog emit example1 | " + kBin + " verify - 2>&1");
  c.expect(r.exit_code == 1, "exit code " + std::to_string(r.exit_code));
  c.expect(r.out.find("never declared") != std::string::npos, "no undeclared-family diagnostic");
  c.expect(r.out.find("out of range") != std::string::npos, "no out-of-range diagnostic");
  const auto entry = get_entry("example1");
  c.expect(entry.status == EntryStatus::erratum, "status");
  c.expect(entry.notes.find("Candidate readings") != std::string::npos, "notes lack readings");
  c.expect(entry.notes.find("none of them is asserted") != std::string::npos,
           "notes assert a reading");
  return c;
}

Check feasibility_reproduction() {
  Check c;
  const auto r = run_command(kBin + " feasible --min-v 31 --max-v 50 --mod3 2");
  c.expect(r.exit_code == 0, "feasible exit code");
  std::set<std::string> listed;
  std::istringstream lines(r.out);
  for (std::string line; std::getline(lines, line);) listed.insert(line);
  for (const auto& t : testing_oracles::kOpenTypes) {
    c.expect(check_feasible(parse_type(t)).feasible(), t + " classified infeasible");
    c.expect(listed.count(t) == 1, t + " missing from listing");
  }
  c.expect(check_feasible(parse_type("2^4")).feasible(), "2^4");
  c.expect(!check_feasible(parse_type("1^5")).feasible(), "1^5");
  return c;
}

Check oracle_equivalence() {
  Check c;
  for (int v = 1; v <= 20; ++v) {
    std::set<std::string> got;
    for (const auto& t : enumerate_feasible(v, v)) got.insert(format_type(t));
    c.expect(got == testing_oracles::brute_force(v), "v = " + std::to_string(v));
  }
  return c;
}

Check search_success() {
  Check c;
  for (const auto& [type, n] : {std::pair{"1^13", 13}, std::pair{"3^4", 3}}) {
    const auto start = std::chrono::steady_clock::now();
    const auto r = run_command(kBin + " search --type " + type + " --modulus " +
                               std::to_string(n) + " --mode first 2>/dev/null");
    const double elapsed = seconds_since(start);
    c.expect(r.exit_code == 0, std::string(type) + " exit code");
    c.expect(elapsed < 10.0, std::string(type) + " took " + std::to_string(elapsed) + " s");
    if (r.exit_code != 0) continue;
    const auto report = verify_system(parse_system(r.out), Exec::serial);
    c.expect(report.valid(), std::string(type) + " result fails verification");
    c.expect(report.induced_type == parse_type(type), std::string(type) + " wrong type");
  }
  c.expect(testing_oracles::difference_set_covers({0, 1, 3, 9}, 13), "{0,1,3,9} oracle");
  return c;
}

Check determinism() {
  Check c;
  std::set<std::string> outputs;
  for (int run = 0; run < 2; ++run) {
    for (int workers : {1, 4}) {
      const auto r = run_command(kBin + " search --type 3^4 --modulus 3 --mode all --workers " +
                                 std::to_string(workers) + " 2>/dev/null");
      c.expect(r.exit_code == 0, "exit code");
      const auto pos = r.out.rfind("solutions ");
      outputs.insert(pos == std::string::npos ? r.out : r.out.substr(pos));
    }
  }
  c.expect(outputs.size() == 1, "solution counts differ");
  return c;
}

// Compact versions of the property suites, with their own fixed seeds.
Check properties() {
  Check c;
  std::mt19937 rng(20261016);
  const auto lemmas = [] {
    std::vector<CatalogEntry> out;
    for (const char* name : kLemmas) out.push_back(get_entry(name));
    return out;
  }();

  // act: identity, composition, inverse; orbit_length divides the modulus.
  for (const auto& e : lemmas) {
    const auto& space = e.system.space;
    const int n = space.modulus();
    for (const auto& p : space.all_points()) {
      const long s = static_cast<long>(rng() % 50) - 25;
      const long t = static_cast<long>(rng() % 50) - 25;
      c.expect(act(space, p, 0) == p, "act identity");
      c.expect(act(space, act(space, p, s), t) == act(space, p, s + t), "act composition");
      c.expect(act(space, act(space, p, s), -s) == p, "act inverse");
    }
    for (const auto& b : e.system.base_blocks) {
      c.expect(n % orbit_length(b, space) == 0, "orbit length divides modulus");
    }
  }

  // Round trips are byte-identical.
  for (const auto& e : lemmas) {
    const auto text = serialize_system(e.system);
    c.expect(serialize_system(parse_system(text)) == text, e.name + " system round trip");
    const auto design_text = serialize_design(develop_system(e.system));
    c.expect(serialize_design(parse_design(design_text)) == design_text,
             e.name + " design round trip");
  }

  // Verification ignores block order and point relabelling.
  for (const auto& e : lemmas) {
    const auto design = develop_system(e.system);
    const auto base = verify(design);
    for (int trial = 0; trial < 3; ++trial) {
      auto shuffled = design;
      std::shuffle(shuffled.blocks.begin(), shuffled.blocks.end(), rng);
      std::vector<int> perm(design.points.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < perm.size(); ++i) shuffled.points[perm[i]] = design.points[i];
      for (auto& g : shuffled.groups) {
        for (auto& x : g) x = perm[x];
      }
      for (auto& b : shuffled.blocks) {
        for (auto& x : b) x = perm[x];
      }
      const auto report = verify(shuffled);
      c.expect(report.valid() == base.valid() && report.block_total == base.block_total &&
                   report.induced_type == base.induced_type,
               e.name + " permutation changed the verdict");
    }

    // Replication (v - g)/3 for every point.
    const auto v = point_count(e.claimed_type);
    std::map<std::string, int> group_size;
    for (const auto& g : design.groups) {
      for (int x : g) group_size[design.points[x]] = static_cast<int>(g.size());
    }
    c.expect(base.replication.size() == design.points.size(), e.name + " replication size");
    for (const auto& [name, r] : base.replication) {
      c.expect(r == (v - group_size[name]) / 3, e.name + " replication of " + name);
    }
  }
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
      {"catalog verification", catalog_verification},
      {"orbit-note concordance", orbit_notes},
      {"erratum entry", example1_erratum},
      {"feasibility reproduction", feasibility_reproduction},
      {"feasibility oracle equivalence", oracle_equivalence},
      {"search soundness", search_success},
      {"search determinism", determinism},
      {"property suites", properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s%s%s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                c.ok ? "" : ": ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
