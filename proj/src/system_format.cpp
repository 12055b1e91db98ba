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

#include "gdd4/system_format.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "gdd4/error.hpp"

namespace gdd4 {
namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> read_lines(std::string_view text) {
  if (!text.empty() && text.back() != '\n') {
    throw ParseError("document must end with a newline");
  }
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(std::move(tok));
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

int parse_int(const std::string& token, std::size_t line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(std::string("expected an integer ") + what + ", got '" + token + "'", line);
  }
  return value;
}

void expect_header(const std::vector<Line>& lines, const char* magic) {
  if (lines.empty()) throw ParseError(std::string("empty document, expected '") + magic + " 1'");
  const auto& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0] != magic) {
    throw ParseError(std::string("expected header '") + magic + " 1'", first.number);
  }
  if (first.tokens[1] != "1") {
    throw ParseError("unsupported format version " + first.tokens[1], first.number);
  }
}

std::string join(const std::vector<std::string>& tokens, std::size_t from) {
  std::string out;
  for (std::size_t i = from; i < tokens.size(); ++i) {
    if (i > from) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace

std::string LoadIssue::describe() const {
  return line == 0 ? message : "line " + std::to_string(line) + ": " + message;
}

DocumentKind document_kind(std::string_view text) {
  for (const auto& line : read_lines(text)) {
    if (line.tokens[0] == "gdd-system") return DocumentKind::system;
    if (line.tokens[0] == "gdd-design") return DocumentKind::design;
    throw ParseError("unrecognised document header '" + line.tokens[0] + "'", line.number);
  }
  throw ParseError("empty document");
}

LoadedSystem load_system(std::string_view text) {
  const auto lines = read_lines(text);
  expect_header(lines, "gdd-system");

  LoadedSystem out;
  auto& sys = out.system;
  std::optional<int> modulus;
  std::vector<PointFamily> families;
  std::vector<std::size_t> family_lines;
  const Line* orbits_line = nullptr;
  std::vector<const Line*> group_lines;
  std::vector<const Line*> base_lines;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    const std::string& directive = t[0];
    if (directive == "modulus") {
      if (modulus) throw ParseError("modulus given twice", line.number);
      if (t.size() != 2) throw ParseError("usage: modulus <n>", line.number);
      modulus = parse_int(t[1], line.number, "modulus");
      if (*modulus < 1) throw ParseError("modulus must be positive", line.number);
    } else if (directive == "family") {
      if (t.size() != 3) throw ParseError("usage: family <label> <period>", line.number);
      if (!valid_family_label(t[1])) {
        throw ParseError("invalid family label '" + t[1] + "' (letters and '_' only)", line.number);
      }
      families.push_back({t[1], PointFamily::Kind::periodic, parse_int(t[2], line.number, "period")});
      family_lines.push_back(line.number);
    } else if (directive == "fixed") {
      if (t.size() != 2) throw ParseError("usage: fixed <label>", line.number);
      if (!valid_fixed_label(t[1])) {
        throw ParseError("invalid fixed point label '" + t[1] + "'", line.number);
      }
      families.push_back({t[1], PointFamily::Kind::fixed, 1});
      family_lines.push_back(line.number);
    } else if (directive == "type") {
      if (sys.claimed_type) throw ParseError("type given twice", line.number);
      try {
        sys.claimed_type = parse_type(join(t, 1));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number);
      }
    } else if (directive == "group") {
      group_lines.push_back(&line);
    } else if (directive == "base") {
      base_lines.push_back(&line);
    } else if (directive == "orbits") {
      if (orbits_line) throw ParseError("orbits given twice", line.number);
      orbits_line = &line;
    } else {
      throw ParseError("unknown directive '" + directive + "'", line.number);
    }
  }
  if (!modulus) throw ParseError("missing 'modulus' line");

  std::set<std::string> labels;
  for (std::size_t i = 0; i < families.size(); ++i) {
    const auto& f = families[i];
    if (!labels.insert(f.label).second) {
      throw ParseError("label '" + f.label + "' declared twice", family_lines[i]);
    }
    if (!f.is_fixed() && (f.period < 1 || *modulus % f.period != 0)) {
      throw ParseError("period " + std::to_string(f.period) + " of family " + f.label +
                           " does not divide modulus " + std::to_string(*modulus),
                       family_lines[i]);
    }
  }

  // Labels used in groups or blocks without a declaration.
  auto scan_undeclared = [&](const Line& line, std::size_t from) {
    for (std::size_t k = from; k < line.tokens.size(); ++k) {
      const auto& tok = line.tokens[k];
      if (labels.count(tok)) continue;
      auto split = split_point_token(tok);
      if (!split) throw ParseError("malformed point '" + tok + "'", line.number);
      if (labels.count(split->label)) continue;
      if (!split->index || !valid_family_label(split->label)) {
        throw ParseError("unknown point '" + tok + "'", line.number);
      }
      labels.insert(split->label);
      families.push_back({split->label, PointFamily::Kind::periodic, *modulus});
      out.issues.push_back({line.number, "family '" + split->label +
                                             "' is used but never declared (taken as period " +
                                             std::to_string(*modulus) + ")"});
    }
  };
  for (const Line* line : group_lines) scan_undeclared(*line, 1);
  for (const Line* line : base_lines) scan_undeclared(*line, 1);

  try {
    sys.space = PointSpace(*modulus, families);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
  const auto& space = sys.space;

  auto resolve = [&](const std::string& tok, std::size_t line) -> Point {
    if (auto f = space.find_family(tok); f && space.family(*f).is_fixed()) return Point{*f, 0};
    auto split = split_point_token(tok);
    auto f = space.find_family(split->label);
    const auto& fam = space.family(*f);
    if (fam.is_fixed() || !split->index) {
      throw ParseError("point '" + tok + "' does not match the declaration of " + fam.label, line);
    }
    long index = *split->index;
    if (index >= fam.period) {
      const long reduced = index % fam.period;
      out.issues.push_back({line, "subscript " + std::to_string(index) + " of '" + tok +
                                      "' is out of range for family " + fam.label +
                                      " of period " + std::to_string(fam.period) +
                                      " (reduced to " + fam.label + std::to_string(reduced) +
                                      ")"});
      index = reduced;
    }
    return Point{*f, static_cast<int>(index)};
  };

  std::vector<std::vector<Point>> groups;
  for (const Line* line : group_lines) {
    std::vector<Point> g;
    for (std::size_t k = 1; k < line->tokens.size(); ++k) {
      g.push_back(resolve(line->tokens[k], line->number));
    }
    if (g.empty()) throw ParseError("empty group", line->number);
    groups.push_back(std::move(g));
  }
  sys.layout = GroupLayout(std::move(groups));

  std::vector<bool> kept;
  for (const Line* line : base_lines) {
    const std::size_t size = line->tokens.size() - 1;
    if (size != 4) {
      out.issues.push_back({line->number, "base block has " + std::to_string(size) +
                                              " points, expected 4"});
      kept.push_back(false);
      continue;
    }
    BaseBlock block;
    for (std::size_t k = 0; k < 4; ++k) block[k] = resolve(line->tokens[k + 1], line->number);
    bool distinct = true;
    for (std::size_t a = 0; a < 4 && distinct; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        if (block[a] == block[b]) {
          out.issues.push_back({line->number, "base block " + join(line->tokens, 1) +
                                                  " is degenerate: " + space.name(block[a]) +
                                                  " occurs twice"});
          distinct = false;
          break;
        }
      }
    }
    kept.push_back(distinct);
    if (distinct) sys.base_blocks.push_back(block);
  }

  if (orbits_line) {
    const auto& t = orbits_line->tokens;
    if (t.size() - 1 != base_lines.size()) {
      throw ParseError("orbits lists " + std::to_string(t.size() - 1) + " values for " +
                           std::to_string(base_lines.size()) + " base blocks",
                       orbits_line->number);
    }
    std::vector<int> declared;
    for (std::size_t k = 1; k < t.size(); ++k) {
      const int d = parse_int(t[k], orbits_line->number, "orbit length");
      if (d < 1) throw ParseError("orbit lengths must be positive", orbits_line->number);
      if (kept[k - 1]) declared.push_back(d);
    }
    sys.declared_orbits = std::move(declared);
  }

  for (auto& issue : layout_issues(space, sys.layout)) out.issues.push_back({0, std::move(issue)});
  return out;
}

BaseBlockSystem parse_system(std::string_view text) {
  auto loaded = load_system(text);
  if (!loaded.issues.empty()) {
    const auto& first = loaded.issues.front();
    throw ParseError(first.message, first.line);
  }
  return std::move(loaded.system);
}

std::string serialize_system(const BaseBlockSystem& system) {
  const auto& space = system.space;
  std::ostringstream out;
  out << "gdd-system 1\n";
  out << "modulus " << space.modulus() << '\n';
  for (const auto& f : space.families()) {
    if (f.is_fixed()) {
      out << "fixed " << f.label << '\n';
    } else {
      out << "family " << f.label << ' ' << f.period << '\n';
    }
  }
  if (system.claimed_type) out << "type " << format_type(*system.claimed_type) << '\n';
  for (const auto& g : system.layout.groups()) {
    out << "group";
    for (const auto& p : g) out << ' ' << space.name(p);
    out << '\n';
  }
  for (const auto& b : system.base_blocks) {
    out << "base";
    for (const auto& p : b) out << ' ' << space.name(p);
    out << '\n';
  }
  if (system.declared_orbits) {
    out << "orbits";
    for (int d : *system.declared_orbits) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

DevelopedDesign parse_design(std::string_view text) {
  const auto lines = read_lines(text);
  expect_header(lines, "gdd-design");

  DevelopedDesign design;
  std::map<std::string, int> ids;
  auto lookup = [&](const std::string& name, std::size_t line) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError("unknown point '" + name + "'", line);
    return it->second;
  };
  std::vector<const Line*> deferred;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto& t = line.tokens;
    if (t[0] == "point") {
      if (t.size() < 2) throw ParseError("usage: point <name> ...", line.number);
      for (std::size_t k = 1; k < t.size(); ++k) {
        if (!valid_fixed_label(t[k])) throw ParseError("invalid point name '" + t[k] + "'", line.number);
        if (!ids.emplace(t[k], static_cast<int>(design.points.size())).second) {
          throw ParseError("point '" + t[k] + "' declared twice", line.number);
        }
        design.points.push_back(t[k]);
      }
    } else if (t[0] == "group" || t[0] == "block") {
      deferred.push_back(&line);
    } else {
      throw ParseError("unknown directive '" + t[0] + "'", line.number);
    }
  }

  std::vector<int> owner(design.points.size(), -1);
  for (const Line* line : deferred) {
    const auto& t = line->tokens;
    if (t[0] == "group") {
      if (t.size() < 2) throw ParseError("empty group", line->number);
      std::vector<int> g;
      for (std::size_t k = 1; k < t.size(); ++k) {
        const int id = lookup(t[k], line->number);
        if (owner[id] != -1) {
          throw ParseError("point '" + t[k] + "' appears in more than one group", line->number);
        }
        owner[id] = static_cast<int>(design.groups.size());
        g.push_back(id);
      }
      design.groups.push_back(std::move(g));
    } else {
      if (t.size() != 5) {
        throw ParseError("block has " + std::to_string(t.size() - 1) + " points, expected 4",
                         line->number);
      }
      std::array<int, 4> b{};
      for (std::size_t k = 0; k < 4; ++k) b[k] = lookup(t[k + 1], line->number);
      std::sort(b.begin(), b.end());
      if (std::adjacent_find(b.begin(), b.end()) != b.end()) {
        throw ParseError("block repeats a point", line->number);
      }
      design.blocks.push_back(b);
    }
  }
  for (std::size_t p = 0; p < owner.size(); ++p) {
    if (owner[p] == -1) throw ParseError("point '" + design.points[p] + "' is in no group");
  }
  return design;
}

std::string serialize_design(const DevelopedDesign& design) {
  std::ostringstream out;
  out << "gdd-design 1\n";
  for (const auto& p : design.points) out << "point " << p << '\n';
  for (const auto& g : design.groups) {
    out << "group";
    for (int id : g) out << ' ' << design.points[id];
    out << '\n';
  }
  for (const auto& b : design.blocks) {
    out << "block";
    for (int id : b) out << ' ' << design.points[id];
    out << '\n';
  }
  return out.str();
}

std::string apply_renames(std::string_view text, const std::map<std::string, std::string>& renames) {
  auto rename_token = [&](const std::string& tok) {
    auto split = split_point_token(tok);
    if (!split || !split->index) return tok;
    auto it = renames.find(split->label);
    return it == renames.end() ? tok : it->second + std::to_string(*split->index);
  };
  std::ostringstream out;
  std::set<std::string> declared;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    pos = end + 1;
    std::string comment;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      comment = raw.substr(hash);
      raw.resize(hash);
    }
    std::istringstream in(raw);
    std::vector<std::string> t;
    for (std::string tok; in >> tok;) t.push_back(tok);
    if (t.empty()) {
      out << comment << '\n';
      continue;
    }
    if (t[0] == "family" && t.size() >= 2) {
      if (auto it = renames.find(t[1]); it != renames.end()) t[1] = it->second;
      if (!declared.insert(join(t, 0)).second) continue;
    } else if (t[0] == "group" || t[0] == "base") {
      for (std::size_t k = 1; k < t.size(); ++k) t[k] = rename_token(t[k]);
    }
    out << join(t, 0);
    if (!comment.empty()) out << ' ' << comment;
    out << '\n';
  }
  return out.str();
}

}  // namespace gdd4
