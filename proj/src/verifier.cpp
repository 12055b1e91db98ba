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

#include "gdd4/verifier.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "gdd4/error.hpp"

namespace gdd4 {

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    std::size_t cut = s.size();
    while (cut > 0 && std::isdigit(static_cast<unsigned char>(s[cut - 1]))) --cut;
    const std::string digits = s.substr(cut);
    const long n = digits.empty() || digits.size() > 9 ? -1 : std::stol(digits);
    return std::make_pair(s.substr(0, cut), n);
  };
  auto ka = split(a);
  auto kb = split(b);
  if (ka != kb) return ka < kb;
  return a < b;
}

GroupType infer_type(const GroupLayout& layout) { return induced_type(layout); }

std::optional<GroupType> infer_type(const DevelopedDesign& design) {
  if (design.groups.empty()) return std::nullopt;
  std::vector<int> sizes;
  for (const auto& g : design.groups) {
    if (g.empty()) return std::nullopt;
    sizes.push_back(static_cast<int>(g.size()));
  }
  return GroupType(std::move(sizes));
}

namespace {

bool well_formed(const std::array<int, 4>& b, int n) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0 || b[i] >= n) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (b[i] == b[j]) return false;
    }
  }
  return true;
}

std::string name_block(const DevelopedDesign& d, const std::array<int, 4>& b) {
  std::vector<std::string> names;
  const int n = static_cast<int>(d.points.size());
  for (int id : b) names.push_back(id >= 0 && id < n ? d.points[id] : "#" + std::to_string(id));
  std::sort(names.begin(), names.end(), natural_less);
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += names[i];
  }
  return out + "}";
}

std::pair<std::string, std::string> name_pair(const DevelopedDesign& d, int i, int j) {
  const std::string& a = d.points[i];
  const std::string& b = d.points[j];
  return natural_less(a, b) ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

std::vector<std::uint32_t> pair_coverage(const DevelopedDesign& design, Exec exec) {
  const int n = static_cast<int>(design.points.size());
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::uint32_t> counts(cells, 0);
  const long blocks = static_cast<long>(design.blocks.size());

  auto tally = [&](std::uint32_t* table, long k) {
    const auto& b = design.blocks[k];
    if (!well_formed(b, n)) return;
    for (int x = 0; x < 4; ++x) {
      for (int y = x + 1; y < 4; ++y) {
        const int i = std::min(b[x], b[y]);
        const int j = std::max(b[x], b[y]);
        ++table[static_cast<std::size_t>(i) * n + j];
      }
    }
  };

  std::uint32_t* table = counts.data();
  if (exec == Exec::parallel && cells > 0) {
#pragma omp parallel for reduction(+ : table[:cells]) schedule(static)
    for (long k = 0; k < blocks; ++k) tally(table, k);
  } else {
    for (long k = 0; k < blocks; ++k) tally(table, k);
  }
  return counts;
}

VerificationReport verify(const DevelopedDesign& design, Exec exec) {
  VerificationReport report;
  const int n = static_cast<int>(design.points.size());
  report.block_total = design.blocks.size();
  report.induced_type = infer_type(design);
  report.warnings = design.warnings;

  // Group of every point; points outside every group get their own.
  std::vector<int> group(n, -1);
  for (std::size_t g = 0; g < design.groups.size(); ++g) {
    if (design.groups[g].empty()) report.structural.push_back("empty group");
    for (int p : design.groups[g]) {
      if (p < 0 || p >= n) {
        report.structural.push_back("group member #" + std::to_string(p) + " is not a point");
      } else if (group[p] != -1) {
        report.structural.push_back("point " + design.points[p] + " appears in more than one group");
      } else {
        group[p] = static_cast<int>(g);
      }
    }
  }
  int next_group = static_cast<int>(design.groups.size());
  for (int p = 0; p < n; ++p) {
    if (group[p] == -1) {
      report.structural.push_back("point " + design.points[p] + " is in no group");
      group[p] = next_group++;
    }
  }

  std::vector<int> replication(n, 0);
  for (const auto& b : design.blocks) {
    if (!well_formed(b, n)) {
      report.malformed.push_back("block " + name_block(design, b) +
                                 " does not have 4 distinct points of the design");
      continue;
    }
    for (int p : b) ++replication[p];
    for (int x = 0; x < 4; ++x) {
      for (int y = x + 1; y < 4; ++y) {
        if (group[b[x]] == group[b[y]]) {
          auto [first, second] = name_pair(design, b[x], b[y]);
          report.intra_group.push_back({name_block(design, b), first, second});
        }
      }
    }
  }

  const auto counts = pair_coverage(design, exec);
  std::map<std::pair<int, int>, std::size_t> heavy;  // pair -> index in over_covered
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (group[i] == group[j]) continue;
      const auto c = counts[static_cast<std::size_t>(i) * n + j];
      if (c == 1) continue;
      auto [first, second] = name_pair(design, i, j);
      if (c == 0) {
        report.uncovered.push_back({first, second, {}});
      } else {
        heavy[{i, j}] = report.over_covered.size();
        report.over_covered.push_back({first, second, {}});
      }
    }
  }
  if (!heavy.empty()) {
    for (const auto& b : design.blocks) {
      if (!well_formed(b, n)) continue;
      for (int x = 0; x < 4; ++x) {
        for (int y = x + 1; y < 4; ++y) {
          auto it = heavy.find({std::min(b[x], b[y]), std::max(b[x], b[y])});
          if (it != heavy.end()) report.over_covered[it->second].blocks.push_back(name_block(design, b));
        }
      }
    }
    for (auto& pc : report.over_covered) std::sort(pc.blocks.begin(), pc.blocks.end());
  }

  std::sort(report.intra_group.begin(), report.intra_group.end());
  std::sort(report.uncovered.begin(), report.uncovered.end());
  std::sort(report.over_covered.begin(), report.over_covered.end());
  std::sort(report.malformed.begin(), report.malformed.end());
  std::sort(report.structural.begin(), report.structural.end());

  for (int p = 0; p < n; ++p) report.replication.emplace_back(design.points[p], replication[p]);
  std::sort(report.replication.begin(), report.replication.end(),
            [](const auto& a, const auto& b) { return natural_less(a.first, b.first); });

  // Counting identities as a second opinion on a valid verdict.
  if (report.valid() && report.induced_type) {
    const auto& type = *report.induced_type;
    const std::int64_t cross = cross_pair_count(type);
    if (static_cast<std::int64_t>(report.block_total) * 6 != cross) {
      throw std::logic_error("verifier: block total disagrees with the cross-pair count");
    }
    for (int p = 0; p < n; ++p) {
      const int g = static_cast<int>(design.groups[group[p]].size());
      if (3 * replication[p] != point_count(type) - g) {
        throw std::logic_error("verifier: replication of " + design.points[p] +
                               " disagrees with (v - g) / 3");
      }
    }
  }
  return report;
}

VerificationReport verify_system(const BaseBlockSystem& system, Exec exec) {
  auto report = verify(develop_system(system, exec), exec);
  report.claimed_type = system.claimed_type;
  if (system.claimed_type && report.induced_type && *system.claimed_type != *report.induced_type) {
    report.structural.push_back("claimed type " + format_type(*system.claimed_type) +
                                " differs from induced type " +
                                format_type(*report.induced_type));
  }
  return report;
}

VerificationReport verify_loaded(const LoadedSystem& loaded, Exec exec) {
  auto report = verify_system(loaded.system, exec);
  auto issues = loaded.issues;
  std::stable_sort(issues.begin(), issues.end(),
                   [](const LoadIssue& a, const LoadIssue& b) { return a.line < b.line; });
  for (const auto& issue : issues) {
    if (issue.line > 0) report.structural.push_back(issue.describe());
  }
  return report;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream out;
  const std::string type =
      report.induced_type ? format_type(*report.induced_type) : std::string("(no groups)");
  if (report.valid()) {
    out << "valid 4-GDD of type " << type << ", " << report.block_total << " blocks\n";
  } else {
    out << "invalid: induced type " << type << ", " << report.block_total << " blocks, "
        << report.intra_group.size() << " intra-group, " << report.uncovered.size()
        << " uncovered, " << report.over_covered.size() << " over-covered, "
        << report.malformed.size() << " malformed, " << report.structural.size()
        << " structural\n";
  }
  for (const auto& s : report.structural) out << "structural: " << s << '\n';
  for (const auto& m : report.malformed) out << "malformed: " << m << '\n';
  for (const auto& ig : report.intra_group) {
    out << "intra-group: " << ig.block << " joins " << ig.first << ' ' << ig.second << '\n';
  }
  for (const auto& pc : report.uncovered) {
    out << "uncovered: " << pc.first << ' ' << pc.second << '\n';
  }
  for (const auto& pc : report.over_covered) {
    out << "over-covered: " << pc.first << ' ' << pc.second << " x" << pc.blocks.size() << ':';
    for (const auto& b : pc.blocks) out << ' ' << b;
    out << '\n';
  }
  for (const auto& w : report.warnings) out << "warning: " << w << '\n';
  return out.str();
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["status"] = report.valid() ? "valid" : "invalid";
  j["claimed_type"] = report.claimed_type ? format_type(*report.claimed_type) : nullptr;
  j["induced_type"] = report.induced_type ? format_type(*report.induced_type) : nullptr;
  j["block_total"] = report.block_total;
  j["intra_group"] = nlohmann::json::array();
  for (const auto& ig : report.intra_group) {
    j["intra_group"].push_back({{"block", ig.block}, {"pair", {ig.first, ig.second}}});
  }
  j["uncovered"] = nlohmann::json::array();
  for (const auto& pc : report.uncovered) j["uncovered"].push_back({pc.first, pc.second});
  j["over_covered"] = nlohmann::json::array();
  for (const auto& pc : report.over_covered) {
    j["over_covered"].push_back({{"pair", {pc.first, pc.second}}, {"blocks", pc.blocks}});
  }
  j["malformed"] = report.malformed;
  j["structural"] = report.structural;
  j["warnings"] = report.warnings;
  j["replication"] = nlohmann::json::object();
  for (const auto& [name, r] : report.replication) j["replication"][name] = r;
  return j;
}

}  // namespace gdd4
