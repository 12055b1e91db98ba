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

// Command-line front end: gdd4 <command> [options]. Exit status is 0 for a
// positive result, 1 for a negative one (invalid design, infeasible type,
// no solution) and 2 for usage or input errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gdd4/catalog.hpp"
#include "gdd4/error.hpp"
#include "gdd4/feasibility.hpp"
#include "gdd4/search.hpp"
#include "gdd4/system_format.hpp"
#include "gdd4/verifier.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

bool structured = false;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gdd4::Error("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gdd4::Error("cannot write '" + path + "'");
  out << text;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int check_type(const std::string& text) {
  const auto report = gdd4::check_feasible(gdd4::parse_type(text));
  if (structured) {
    json j;
    j["type"] = gdd4::format_type(report.type);
    j["feasible"] = report.feasible();
    for (const auto& c : report.conditions) {
      j["conditions"].push_back(
          {{"id", c.id}, {"description", c.description}, {"passed", c.passed}, {"witness", c.witness}});
    }
    print_json(j);
  } else {
    std::cout << "type " << gdd4::format_type(report.type) << " (v = "
              << gdd4::point_count(report.type) << ")\n";
    for (const auto& c : report.conditions) {
      std::cout << c.id << "  " << (c.passed ? "pass" : "FAIL") << "  " << c.description;
      if (!c.witness.empty()) {
        std::cout << "  [";
        for (std::size_t i = 0; i < c.witness.size(); ++i) std::cout << (i ? " " : "") << c.witness[i];
        std::cout << ']';
      }
      std::cout << '\n';
    }
    std::cout << (report.feasible() ? "feasible" : "infeasible") << '\n';
  }
  return report.feasible() ? kOk : kNegative;
}

int feasible(int min_v, int max_v, std::optional<int> mod3) {
  const auto types = gdd4::enumerate_feasible(min_v, max_v, mod3);
  if (structured) {
    json j = json::array();
    for (const auto& t : types) j.push_back(gdd4::format_type(t));
    print_json(j);
  } else {
    for (const auto& t : types) std::cout << gdd4::format_type(t) << '\n';
  }
  return kOk;
}

int count(const std::string& text) {
  const auto type = gdd4::parse_type(text);
  int status = kOk;
  json j;
  j["type"] = gdd4::format_type(type);
  j["v"] = gdd4::point_count(type);
  std::ostringstream out;
  out << "type " << gdd4::format_type(type) << '\n' << "v=" << gdd4::point_count(type) << '\n';
  try {
    const auto blocks = gdd4::block_count(type);
    j["blocks"] = blocks;
    out << "blocks=" << blocks << '\n';
  } catch (const gdd4::ArithmeticError& e) {
    j["blocks"] = nullptr;
    out << "blocks=undefined (" << e.what() << ")\n";
    status = kNegative;
  }
  j["replication"] = json::object();
  for (auto [g, u] : type.terms()) {
    try {
      const int r = gdd4::replication(type, g);
      j["replication"][std::to_string(g)] = r;
      out << "replication g=" << g << ": " << r << '\n';
    } catch (const gdd4::ArithmeticError&) {
      j["replication"][std::to_string(g)] = nullptr;
      out << "replication g=" << g << ": undefined\n";
      status = kNegative;
    }
  }
  if (structured) {
    print_json(j);
  } else {
    std::cout << out.str();
  }
  return status;
}

int develop(const std::string& path, const std::string& out) {
  const auto system = gdd4::parse_system(read_input(path));
  const auto design = gdd4::develop_system(system);
  for (const auto& w : design.warnings) std::cerr << "warning: " << w << '\n';
  write_output(out, gdd4::serialize_design(design));
  return kOk;
}

std::map<std::string, std::string> parse_renames(const std::vector<std::string>& specs) {
  std::map<std::string, std::string> renames;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == s.size()) {
      throw gdd4::ParseError("rename must look like from=to, got '" + s + "'");
    }
    renames[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return renames;
}

int verify(const std::string& path, const std::vector<std::string>& rename_specs) {
  std::string text = read_input(path);
  gdd4::VerificationReport report;
  if (gdd4::document_kind(text) == gdd4::DocumentKind::system) {
    if (!rename_specs.empty()) text = gdd4::apply_renames(text, parse_renames(rename_specs));
    report = gdd4::verify_loaded(gdd4::load_system(text));
  } else {
    if (!rename_specs.empty()) throw gdd4::ParseError("--rename applies to system documents only");
    report = gdd4::verify(gdd4::parse_design(text));
  }
  if (structured) {
    print_json(gdd4::to_json(report));
  } else {
    std::cout << gdd4::render_text(report);
  }
  return report.valid() ? kOk : kNegative;
}

int catalog(const std::string& action, const std::string& name) {
  if (action == "list") {
    const auto entries = gdd4::list_entries();
    if (structured) {
      json j = json::array();
      for (const auto& e : entries) {
        j.push_back({{"name", e.name},
                     {"type", gdd4::format_type(e.claimed_type)},
                     {"modulus", e.modulus},
                     {"base_blocks", e.base_block_count},
                     {"status", gdd4::to_string(e.status)}});
      }
      print_json(j);
    } else {
      for (const auto& e : entries) {
        std::cout << e.name << '\t' << gdd4::format_type(e.claimed_type) << "\tmodulus "
                  << e.modulus << '\t' << e.base_block_count << " base blocks\t"
                  << gdd4::to_string(e.status) << '\n';
      }
    }
    return kOk;
  }
  if (name.empty()) throw gdd4::ParseError("catalog " + action + " needs an entry name");
  if (action == "emit") {
    std::cout << gdd4::emit_entry(name);
    return kOk;
  }
  const auto entry = gdd4::get_entry(name);
  if (structured) {
    json j{{"name", entry.name},
           {"type", gdd4::format_type(entry.claimed_type)},
           {"status", gdd4::to_string(entry.status)},
           {"notes", entry.notes},
           {"document", std::string(entry.source)}};
    j["issues"] = json::array();
    for (const auto& i : entry.load_issues) j["issues"].push_back(i.describe());
    print_json(j);
  } else {
    std::cout << "name    " << entry.name << '\n'
              << "type    " << gdd4::format_type(entry.claimed_type) << '\n'
              << "modulus " << entry.system.space.modulus() << '\n'
              << "status  " << gdd4::to_string(entry.status) << '\n'
              << "notes   " << entry.notes << '\n';
    for (const auto& i : entry.load_issues) std::cout << "issue   " << i.describe() << '\n';
  }
  return kOk;
}

struct SearchArgs {
  std::string type;
  int modulus = 0;
  std::string layout;
  std::string mode = "first";
  std::string select = "fail-first";
  int workers = 1;
  std::uint64_t node_limit = 100'000'000;
  double time_limit = 0.0;
  std::string out;
};

void report_attempt(const gdd4::LayoutAttempt& attempt, std::size_t index) {
  const auto& r = attempt.result;
  std::cerr << "layout " << index << ": outcome " << gdd4::to_string(r.outcome) << ", nodes "
            << r.stats.nodes << ", branches " << r.stats.branches << ", " << r.stats.seconds
            << " s\n";
}

int search(const SearchArgs& args) {
  const auto type = gdd4::parse_type(args.type);

  gdd4::SearchOptions options;
  options.mode = args.mode == "all" ? gdd4::SearchMode::all : gdd4::SearchMode::first;
  options.selection =
      args.select == "naive" ? gdd4::Selection::naive : gdd4::Selection::fail_first;
  options.workers = args.workers;
  options.node_limit = args.node_limit;
  if (args.time_limit > 0) options.time_limit_seconds = args.time_limit;

  std::vector<gdd4::LayoutAttempt> attempts;
  try {
    if (args.layout.empty()) {
      attempts = gdd4::search_auto(type, args.modulus, options);
    } else {
      auto skeleton = gdd4::parse_system(read_input(args.layout));
      skeleton.base_blocks.clear();
      skeleton.declared_orbits.reset();
      if (skeleton.space.modulus() != args.modulus) {
        throw gdd4::Error("layout file has modulus " + std::to_string(skeleton.space.modulus()) +
                          ", --modulus is " + std::to_string(args.modulus));
      }
      skeleton.claimed_type = type;
      auto result = gdd4::search_layout(skeleton, options);
      attempts.push_back({std::move(skeleton), std::move(result)});
    }
  } catch (const gdd4::InfeasibleTypeError& e) {
    std::cerr << "gdd4: " << e.what() << '\n';
    return kNegative;
  }
  for (std::size_t i = 0; i < attempts.size(); ++i) report_attempt(attempts[i], i);

  std::uint64_t total = 0;
  bool limited = false;
  const gdd4::BaseBlockSystem* found = nullptr;
  for (const auto& a : attempts) {
    total += a.result.stats.solutions;
    limited = limited || a.result.outcome == gdd4::SearchResult::Outcome::limit_reached;
    if (!found && a.result.system) found = &*a.result.system;
  }
  const std::string outcome = found ? "found" : limited ? "limit-reached" : "exhausted";

  if (options.mode == gdd4::SearchMode::all) {
    if (structured) {
      json j{{"outcome", outcome}, {"solutions", total}};
      for (const auto& a : attempts) {
        j["layouts"].push_back({{"outcome", gdd4::to_string(a.result.outcome)},
                                {"solutions", a.result.stats.solutions}});
      }
      print_json(j);
    } else {
      for (std::size_t i = 0; i < attempts.size(); ++i) {
        std::cout << "layout " << i << " solutions " << attempts[i].result.stats.solutions
                  << (attempts[i].result.outcome == gdd4::SearchResult::Outcome::limit_reached
                          ? " (incomplete)"
                          : "")
                  << '\n';
      }
      std::cout << "solutions " << total << '\n';
    }
    return found && !limited ? kOk : kNegative;
  }

  if (structured) {
    json j{{"outcome", outcome}};
    if (found) j["system"] = gdd4::serialize_system(*found);
    print_json(j);
  } else if (found) {
    write_output(args.out, gdd4::serialize_system(*found));
  } else {
    std::cout << outcome << '\n';
  }
  return found ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, develop, verify and search for 4-GDDs"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output rendering")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string type_text;
  auto* check_cmd = app.add_subcommand("check-type", "Evaluate the necessary conditions for a type");
  check_cmd->add_option("--type", type_text, "Group type, e.g. \"2^6 5^2 11^2\"")->required();

  int min_v = 0;
  int max_v = 0;
  std::optional<int> mod3;
  int threads = 0;
  auto* feasible_cmd = app.add_subcommand("feasible", "List feasible types in a point range");
  feasible_cmd->add_option("--min-v", min_v)->required();
  feasible_cmd->add_option("--max-v", max_v)->required();
  feasible_cmd->add_option("--mod3", mod3, "Keep only v = r (mod 3)")->check(CLI::Range(0, 2));
  feasible_cmd->add_option("--threads", threads, "OpenMP threads (0 = runtime default)");

  auto* count_cmd = app.add_subcommand("count", "Point, block and replication counts for a type");
  count_cmd->add_option("--type", type_text)->required();

  std::string input;
  std::string out;
  auto* develop_cmd = app.add_subcommand("develop", "Develop a system document into a design");
  develop_cmd->add_option("file", input, "System document, '-' for stdin")->required();
  develop_cmd->add_option("--out", out, "Output file, '-' for stdout");

  std::vector<std::string> renames;
  auto* verify_cmd = app.add_subcommand("verify", "Verify a system or design document");
  verify_cmd->add_option("file", input, "Document, '-' for stdin")->required();
  verify_cmd->add_option("--rename", renames, "Rename a family before verifying, e.g. t=r");

  std::string action;
  std::string entry;
  auto* catalog_cmd = app.add_subcommand("catalog", "Published constructions");
  catalog_cmd->add_option("action", action)->required()->check(CLI::IsMember({"list", "show", "emit"}));
  catalog_cmd->add_option("name", entry);

  SearchArgs sargs;
  auto* search_cmd = app.add_subcommand("search", "Search for base blocks under Z_n");
  search_cmd->add_option("--type", sargs.type)->required();
  search_cmd->add_option("--modulus", sargs.modulus)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--layout", sargs.layout, "System document giving points and groups");
  search_cmd->add_option("--mode", sargs.mode)->check(CLI::IsMember({"first", "all"}));
  search_cmd->add_option("--select", sargs.select)->check(CLI::IsMember({"fail-first", "naive"}));
  search_cmd->add_option("--workers", sargs.workers)->check(CLI::PositiveNumber);
  search_cmd->add_option("--node-limit", sargs.node_limit);
  search_cmd->add_option("--time-limit", sargs.time_limit, "Seconds, 0 for none");
  search_cmd->add_option("--out", sargs.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  structured = format == "structured";

  try {
    if (*check_cmd) return check_type(type_text);
    if (*feasible_cmd) {
      gdd4::set_thread_count(threads);
      return feasible(min_v, max_v, mod3);
    }
    if (*count_cmd) return count(type_text);
    if (*develop_cmd) return develop(input, out);
    if (*verify_cmd) return verify(input, renames);
    if (*catalog_cmd) return catalog(action, entry);
    if (*search_cmd) return search(sargs);
  } catch (const gdd4::Error& e) {
    std::cerr << "gdd4: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
