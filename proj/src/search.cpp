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

#include "gdd4/search.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "gdd4/feasibility.hpp"
#include "gdd4/verifier.hpp"

namespace gdd4 {
namespace {

using Clock = std::chrono::steady_clock;

// Dancing links over pair orbits (columns) and candidates (rows).
class ExactCover {
 public:
  ExactCover(int columns, const std::vector<Candidate>& rows) {
    const int header = columns + 1;
    left_.resize(header);
    right_.resize(header);
    up_.resize(header);
    down_.resize(header);
    column_.resize(header);
    row_.assign(header, -1);
    size_.assign(header, 0);
    for (int c = 0; c < header; ++c) {
      left_[c] = c == 0 ? columns : c - 1;
      right_[c] = c == columns ? 0 : c + 1;
      up_[c] = down_[c] = column_[c] = c;
    }
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      int first = -1;
      for (int po : rows[r].pair_orbits) {
        const int c = po + 1;
        const int node = static_cast<int>(left_.size());
        column_.push_back(c);
        row_.push_back(r);
        up_.push_back(up_[c]);
        down_.push_back(c);
        down_[up_[c]] = node;
        up_[c] = node;
        ++size_[c];
        if (first < 0) {
          left_.push_back(node);
          right_.push_back(node);
          first = node;
        } else {
          left_.push_back(left_[first]);
          right_.push_back(first);
          right_[left_[first]] = node;
          left_[first] = node;
        }
      }
    }
  }

  bool solved() const { return right_[0] == 0; }

  int choose(Selection selection) const {
    if (selection == Selection::naive) return right_[0];
    int best = right_[0];
    for (int c = right_[best]; c != 0; c = right_[c]) {
      if (size_[c] < size_[best]) best = c;
    }
    return best;
  }

  void cover(int c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (int i = down_[c]; i != c; i = down_[i]) {
      for (int j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[column_[j]];
      }
    }
  }

  void uncover(int c) {
    for (int i = up_[c]; i != c; i = up_[i]) {
      for (int j = left_[i]; j != i; j = left_[j]) {
        ++size_[column_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  void take(int node) {
    for (int j = right_[node]; j != node; j = right_[j]) cover(column_[j]);
  }
  void untake(int node) {
    for (int j = left_[node]; j != node; j = left_[j]) uncover(column_[j]);
  }

  std::vector<int> rows_of(int c) const {
    std::vector<int> nodes;
    for (int i = down_[c]; i != c; i = down_[i]) nodes.push_back(i);
    return nodes;
  }

  int down(int node) const { return down_[node]; }
  int row(int node) const { return row_[node]; }

 private:
  std::vector<int> left_, right_, up_, down_, column_, row_, size_;
};

struct SharedState {
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};  // limit reached
  std::atomic<long> best_branch{std::numeric_limits<long>::max()};
  std::uint64_t node_limit = 0;
  std::optional<Clock::time_point> deadline;
};

class Worker {
 public:
  Worker(ExactCover matrix, const SearchOptions& options, SharedState& shared, long branch)
      : matrix_(std::move(matrix)), options_(options), shared_(shared), branch_(branch) {}

  // Returns false if the branch was abandoned.
  bool run(int top_column, int top_node, std::vector<int> chosen) {
    chosen_ = std::move(chosen);
    matrix_.cover(top_column);
    matrix_.take(top_node);
    chosen_.push_back(matrix_.row(top_node));
    if (!tick()) return false;
    return dfs();
  }

  std::uint64_t solutions() const { return solutions_; }
  const std::vector<int>& first_solution() const { return first_; }

 private:
  bool tick() {
    const auto n = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > shared_.node_limit) shared_.stop = true;
    if (shared_.deadline && (n & 1023) == 0 && Clock::now() > *shared_.deadline) shared_.stop = true;
    if (shared_.stop) return false;
    if (options_.mode == SearchMode::first &&
        shared_.best_branch.load(std::memory_order_relaxed) < branch_) {
      return false;
    }
    return true;
  }

  bool dfs() {
    if (matrix_.solved()) {
      if (solutions_++ == 0) first_ = chosen_;
      return true;
    }
    const int c = matrix_.choose(options_.selection);
    matrix_.cover(c);
    bool completed = true;
    for (int node = matrix_.down(c); node != c; node = matrix_.down(node)) {
      if (!tick()) {
        completed = false;
        break;
      }
      chosen_.push_back(matrix_.row(node));
      matrix_.take(node);
      completed = dfs();
      matrix_.untake(node);
      chosen_.pop_back();
      if (!completed) break;
      if (options_.mode == SearchMode::first && solutions_ > 0) break;
    }
    matrix_.uncover(c);
    return completed;
  }

  ExactCover matrix_;
  const SearchOptions& options_;
  SharedState& shared_;
  long branch_;
  std::vector<int> chosen_;
  std::vector<int> first_;
  std::uint64_t solutions_ = 0;
};

BaseBlockSystem to_system(const SearchProblem& problem, std::vector<int> rows) {
  std::sort(rows.begin(), rows.end());
  BaseBlockSystem system;
  system.name = "search";
  system.space = problem.space;
  system.layout = problem.layout;
  system.claimed_type = induced_type(problem.layout);
  std::vector<int> orbits;
  for (int r : rows) {
    system.base_blocks.push_back(problem.candidates[r].block);
    orbits.push_back(problem.candidates[r].orbit_length);
  }
  system.declared_orbits = std::move(orbits);
  return system;
}

}  // namespace

std::string to_string(SearchResult::Outcome outcome) {
  switch (outcome) {
    case SearchResult::Outcome::found:
      return "found";
    case SearchResult::Outcome::exhausted:
      return "exhausted";
    case SearchResult::Outcome::limit_reached:
      return "limit-reached";
  }
  return "unknown";
}

BaseBlockSystem auto_layout(const GroupType& type, int modulus) {
  const auto terms = type.terms();
  BaseBlockSystem skeleton;
  skeleton.claimed_type = type;
  if (terms.size() == 1 && terms[0].first == 1 && modulus == terms[0].second) {
    skeleton.space = PointSpace(modulus, {{"a", PointFamily::Kind::periodic, modulus}});
    std::vector<std::vector<Point>> groups;
    for (int i = 0; i < modulus; ++i) groups.push_back({Point{0, i}});
    skeleton.layout = GroupLayout(std::move(groups));
    return skeleton;
  }
  if (terms.size() == 1 && terms[0].first == modulus && terms[0].second <= 26) {
    std::vector<PointFamily> families;
    for (int f = 0; f < terms[0].second; ++f) {
      families.push_back({std::string(1, static_cast<char>('a' + f)), PointFamily::Kind::periodic,
                          modulus});
    }
    skeleton.space = PointSpace(modulus, std::move(families));
    std::vector<std::vector<Point>> groups;
    for (int f = 0; f < terms[0].second; ++f) {
      std::vector<Point> g;
      for (int i = 0; i < modulus; ++i) g.push_back(Point{f, i});
      groups.push_back(std::move(g));
    }
    skeleton.layout = GroupLayout(std::move(groups));
    return skeleton;
  }
  throw Error("no automatic layout for type " + format_type(type) + " with modulus " +
              std::to_string(modulus) +
              " (supported: 1^v with modulus v, g^u with modulus g); supply a layout file");
}

std::vector<BaseBlockSystem> auto_layouts(const GroupType& type, int modulus) {
  std::vector<BaseBlockSystem> out{auto_layout(type, modulus)};
  const auto terms = type.terms();
  if (terms.size() != 1 || terms[0].first != modulus || modulus < 2) return out;
  const int g = modulus;
  const int u = terms[0].second;
  const auto& space = out.front().space;
  for (int bundles = 1; bundles * g <= u; ++bundles) {
    BaseBlockSystem skeleton;
    skeleton.claimed_type = type;
    skeleton.space = space;
    std::vector<std::vector<Point>> groups;
    for (int b = 0; b < bundles; ++b) {
      for (int i = 0; i < g; ++i) {
        std::vector<Point> group;
        for (int f = b * g; f < (b + 1) * g; ++f) group.push_back(Point{f, i});
        groups.push_back(std::move(group));
      }
    }
    for (int f = bundles * g; f < u; ++f) {
      std::vector<Point> group;
      for (int i = 0; i < g; ++i) group.push_back(Point{f, i});
      groups.push_back(std::move(group));
    }
    skeleton.layout = GroupLayout(std::move(groups));
    out.push_back(std::move(skeleton));
  }
  return out;
}

SearchProblem build_problem(const PointSpace& space, const GroupLayout& layout) {
  require_partition(space, layout);
  SearchProblem problem{space, layout, {}, {}};
  const int n = space.point_total();
  const int modulus = space.modulus();

  std::vector<int> group(n);
  for (std::size_t g = 0; g < layout.groups().size(); ++g) {
    for (const auto& p : layout.groups()[g]) group[space.id(p)] = static_cast<int>(g);
  }
  // shift[s][id]: image of point id under x -> x + s.
  std::vector<std::vector<int>> shift(modulus, std::vector<int>(n));
  for (int s = 0; s < modulus; ++s) {
    for (int id = 0; id < n; ++id) shift[s][id] = space.id(act(space, space.point(id), s));
  }

  auto pair_index = [n](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * n + j;
  };
  std::vector<int> orbit_of(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (group[i] == group[j] || orbit_of[pair_index(i, j)] >= 0) continue;
      const int id = static_cast<int>(problem.pair_orbits.size());
      int size = 0;
      for (int s = 0; s < modulus; ++s) {
        auto& slot = orbit_of[pair_index(shift[s][i], shift[s][j])];
        if (slot < 0) {
          slot = id;
          ++size;
        }
      }
      problem.pair_orbits.push_back({i, j, size});
    }
  }

  std::vector<int> cover_count(problem.pair_orbits.size(), 0);
  std::array<int, 4> b{};
  auto consider = [&]() {
    // Keep only the smallest block of each shift orbit.
    int length = modulus;
    for (int s = 1; s < modulus; ++s) {
      std::array<int, 4> img{};
      for (int k = 0; k < 4; ++k) img[k] = shift[s][b[k]];
      std::sort(img.begin(), img.end());
      if (img < b) return;
      if (img == b && length == modulus) length = s;
    }
    std::vector<std::size_t> touched;
    bool ok = true;
    for (int s = 0; s < length && ok; ++s) {
      for (int x = 0; x < 4 && ok; ++x) {
        for (int y = x + 1; y < 4; ++y) {
          const auto key = pair_index(shift[s][b[x]], shift[s][b[y]]);
          if (std::find(touched.begin(), touched.end(), key) != touched.end()) {
            ok = false;
            break;
          }
          touched.push_back(key);
        }
      }
    }
    if (!ok) return;
    Candidate cand;
    for (int k = 0; k < 4; ++k) cand.block[k] = space.point(b[k]);
    cand.orbit_length = length;
    int covered = 0;
    for (auto key : touched) {
      const int po = orbit_of[key];
      if (cover_count[po]++ == 0) cand.pair_orbits.push_back(po);
    }
    for (int po : cand.pair_orbits) {
      covered += problem.pair_orbits[po].size;
      cover_count[po] = 0;
    }
    // A shift-invariant cover is constant on each pair orbit.
    if (covered != 6 * length) throw std::logic_error("pair orbit accounting mismatch");
    std::sort(cand.pair_orbits.begin(), cand.pair_orbits.end());
    problem.candidates.push_back(std::move(cand));
  };
  auto cross = [&](int p, int upto) {
    for (int k = 0; k < upto; ++k) {
      if (group[b[k]] == group[p]) return false;
    }
    return true;
  };
  for (b[0] = 0; b[0] < n; ++b[0]) {
    for (b[1] = b[0] + 1; b[1] < n; ++b[1]) {
      if (!cross(b[1], 1)) continue;
      for (b[2] = b[1] + 1; b[2] < n; ++b[2]) {
        if (!cross(b[2], 2)) continue;
        for (b[3] = b[2] + 1; b[3] < n; ++b[3]) {
          if (cross(b[3], 3)) consider();
        }
      }
    }
  }
  return problem;
}

SearchResult search(const SearchProblem& problem, const SearchOptions& options) {
  const auto start = Clock::now();
  SearchResult result;
  auto finish = [&](SearchResult& r) {
    r.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (r.system) {
      const auto report = verify_system(*r.system, Exec::serial);
      if (!report.valid()) {
        throw std::logic_error("search produced a system that fails verification:\n" +
                               render_text(report));
      }
    }
    return r;
  };

  if (problem.pair_orbits.empty()) {
    result.outcome = SearchResult::Outcome::found;
    result.stats.solutions = 1;
    result.system = to_system(problem, {});
    return finish(result);
  }

  ExactCover prototype(static_cast<int>(problem.pair_orbits.size()), problem.candidates);
  const int top_column = prototype.choose(options.selection);
  const auto branches = prototype.rows_of(top_column);
  const long count = static_cast<long>(branches.size());
  result.stats.branches = branches.size();

  SharedState shared;
  shared.node_limit = options.node_limit;
  if (options.time_limit_seconds) {
    shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(*options.time_limit_seconds));
  }

  std::vector<std::uint64_t> solutions(count, 0);
  std::vector<std::vector<int>> firsts(count);
  std::vector<char> completed(count, 0);

  const int workers = std::max(1, options.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long b = 0; b < count; ++b) {
    if (shared.stop) continue;
    if (options.mode == SearchMode::first && shared.best_branch.load() < b) continue;
    Worker worker(prototype, options, shared, b);
    const bool done = worker.run(top_column, branches[b], {});
    solutions[b] = worker.solutions();
    if (worker.solutions() > 0) {
      firsts[b] = worker.first_solution();
      if (options.mode == SearchMode::first) {
        long seen = shared.best_branch.load();
        while (b < seen && !shared.best_branch.compare_exchange_weak(seen, b)) {
        }
      }
    }
    completed[b] = done || (options.mode == SearchMode::first && worker.solutions() > 0);
  }

  result.stats.nodes = shared.nodes.load();
  for (long b = 0; b < count; ++b) result.stats.solutions += solutions[b];

  if (options.mode == SearchMode::first) {
    // Deterministic only if every earlier branch ran to completion.
    for (long b = 0; b < count; ++b) {
      if (!completed[b]) break;
      if (solutions[b] > 0) {
        result.outcome = SearchResult::Outcome::found;
        result.stats.solutions = 1;
        result.system = to_system(problem, firsts[b]);
        return finish(result);
      }
    }
    const bool all_done = std::all_of(completed.begin(), completed.end(), [](char c) { return c; });
    result.outcome =
        all_done ? SearchResult::Outcome::exhausted : SearchResult::Outcome::limit_reached;
    result.stats.solutions = 0;
    return finish(result);
  }

  const bool all_done = std::all_of(completed.begin(), completed.end(), [](char c) { return c; });
  if (!all_done) {
    result.outcome = SearchResult::Outcome::limit_reached;
  } else {
    result.outcome = result.stats.solutions > 0 ? SearchResult::Outcome::found
                                                : SearchResult::Outcome::exhausted;
  }
  for (long b = 0; b < count; ++b) {
    if (solutions[b] > 0) {
      result.system = to_system(problem, firsts[b]);
      break;
    }
  }
  return finish(result);
}

SearchResult search_layout(const BaseBlockSystem& skeleton, const SearchOptions& options) {
  const GroupType type = induced_type(skeleton.layout);
  const auto feasibility = check_feasible(type);
  if (!feasibility.feasible()) {
    std::string failed;
    for (const auto& c : feasibility.conditions) {
      if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.id;
    }
    throw InfeasibleTypeError("type " + format_type(type) + " is infeasible (fails " + failed + ")");
  }
  if (skeleton.claimed_type && *skeleton.claimed_type != type) {
    throw Error("layout induces type " + format_type(type) + ", not the requested " +
                format_type(*skeleton.claimed_type));
  }
  return search(build_problem(skeleton.space, skeleton.layout), options);
}

std::vector<LayoutAttempt> search_auto(const GroupType& type, int modulus,
                                       const SearchOptions& options) {
  std::vector<LayoutAttempt> attempts;
  for (auto& skeleton : auto_layouts(type, modulus)) {
    auto result = search_layout(skeleton, options);
    const auto outcome = result.outcome;
    attempts.push_back({std::move(skeleton), std::move(result)});
    if (options.mode == SearchMode::first && outcome != SearchResult::Outcome::exhausted) break;
  }
  return attempts;
}

}  // namespace gdd4
