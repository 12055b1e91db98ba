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

#include "gdd4/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "gdd4/error.hpp"

namespace gdd4 {
namespace {

struct Source {
  const char* name;
  const char* type;
  EntryStatus status;
  const char* notes;
  const char* text;
};

// Base blocks are listed column by column, as in the printed tables, so
// the orbit notes ("the first two blocks in the first column ...") line up.
const std::array<Source, 5> kSources = {{
    {"example1", "3^8 6^1 12^1", EntryStatus::erratum,
     "Type 3^8 6^1 12^1, developed modulo 6. Base blocks stored exactly as published. The base blocks use families t and u, which the point list never declares, while the declared families r and z occur in no base block. Subscripts p4 and p5 appear although p is indexed by Z_3, and {p0,p3,q0,q3} collapses to a repeated point once p subscripts are reduced modulo 3. Candidate readings (t as r and u as z; p indexed modulo 6 with a reworked size-6 group) can be tried with --rename; none of them is asserted here.",
     R"(gdd-system 1
modulus 6
family a 6
family b 6
family q 6
family r 6
family y 6
family z 6
family p 3
fixed inf1
fixed inf2
fixed inf3
type 3^8 6^1 12^1
group a0 a1 a2 a3 a4 a5 b0 b1 b2 b3 b4 b5
group p0 p1 p2 inf1 inf2 inf3
group q0 q2 q4
group q1 q3 q5
group r0 r2 r4
group r1 r3 r5
group y0 y2 y4
group y1 y3 y5
group z0 z2 z4
group z1 z3 z5
base p0 p3 q0 q3
base t0 t3 u0 u3
base a0 p0 p1 y0
base a0 p2 q0 t0
base a0 p3 q2 u0
base a0 p4 t1 inf1
base a0 p5 t4 u3
base a0 q3 u5 inf3
base a0 q1 t3 u1
base a0 q4 t5 y2
base a0 q5 u2 y1
base a0 t2 u4 inf2
base b0 p4 q5 u0
base b0 p0 q2 inf2
base b0 p2 u3 y0
base b0 p1 t1 t2
base b0 p3 t5 inf3
base b0 p5 u4 u5
base b0 q0 q1 t4
base b0 q4 t3 y1
base b0 q3 u2 inf1
base b0 t0 u1 y2
orbits 3 3 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6
)"},
    {"lemma1", "2^6 5^2 11^2", EntryStatus::verified,
     "Type 2^6 5^2 11^2, developed modulo 4. h and u are indexed by Z_2.",
     R"(gdd-system 1
modulus 4
family a 4
family b 4
family c 4
family f 4
family g 4
family p 4
family q 4
family r 4
family s 4
family t 4
family h 2
family u 2
type 2^6 5^2 11^2
group a0 b0
group a1 b1
group a2 b2
group a3 b3
group c0 c2
group c1 c3
group f0 f2 g0 g2 h0
group f1 f3 g1 g3 h1
group p0 p2 q0 q2 r0 r2 s0 s2 t0 t2 u0
group p1 p3 q1 q3 r1 r3 s1 s3 t1 t3 u1
base h0 h1 u0 u1
base a0 a2 b1 b3
base a0 a1 p0 r1
base a0 b2 c0 h0
base a0 c1 f1 g0
base a0 c2 p1 p2
base a0 c3 s0 s3
base a0 f2 q2 q3
base a0 f3 s1 u0
base a0 f0 t2 t3
base a0 g1 q0 u1
base a0 g2 r3 s2
base a0 g3 r2 t1
base a0 h1 q1 t0
base b0 b1 q2 s1
base b0 c1 f0 g1
base b0 c3 p1 u0
base b0 c0 q0 r1
base b0 f1 p2 q3
base b0 f2 r2 r3
base b0 f3 t0 u1
base b0 g2 p0 s3
base b0 g3 p3 t2
base b0 g0 r0 t1
base b0 h1 s2 t3
base c0 c1 q3 t0
base c0 f2 q1 r0
base c0 f1 s2 t1
base c0 g2 p1 t2
base c0 g1 r3 u0
base c0 h1 r2 s3
base f0 f1 p3 s0
base f0 h1 p0 r3
base g0 g1 q2 s3
base g0 h1 p1 q0
orbits 1 2 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4
)"},
    {"lemma2", "2^9 5^2 11^2", EntryStatus::verified,
     "Type 2^9 5^2 11^2, developed modulo 4, with fixed points inf1 and inf2.",
     R"(gdd-system 1
modulus 4
family a 4
family b 4
family c 4
family d 4
family f 4
family g 4
family p 4
family q 4
family r 4
family s 4
family t 4
family h 2
family u 2
fixed inf1
fixed inf2
type 2^9 5^2 11^2
group a0 b0
group a1 b1
group a2 b2
group a3 b3
group c0 d0
group c1 d1
group c2 d2
group c3 d3
group f0 f2 g0 g2 h0
group f1 f3 g1 g3 h1
group p0 p2 q0 q2 r0 r2 s0 s2 t0 t2 u0
group p1 p3 q1 q3 r1 r3 s1 s3 t1 t3 u1
group inf1 inf2
base h0 h1 u0 u1
base a0 a2 u0 inf1
base b0 b2 u1 inf2
base c0 c2 h0 inf2
base d0 d2 h1 inf1
base a0 a1 c0 g0
base a0 b1 f0 h1
base a0 b2 p1 s0
base a0 b3 q0 t1
base a0 c1 r0 s1
base a0 c2 r2 u1
base a0 d1 f1 g2
base a0 d0 f3 p3
base a0 d3 p0 q1
base a0 d2 t0 t3
base a0 f2 r3 t2
base a0 g1 p2 r1
base a0 h0 q2 s3
base a0 q3 s2 inf2
base b0 b1 c0 p1
base b0 c1 d0 t0
base b0 c2 g0 s0
base b0 d1 d2 s1
base b0 d3 r1 r2
base b0 f1 q0 q3
base b0 f0 r0 s3
base b0 f2 t3 inf1
base b0 g2 g3 q2
base b0 g1 t1 u0
base b0 h1 p2 r3
base c0 c1 f0 q0
base c0 d2 g1 r2
base c0 d1 q1 t0
base c0 f2 p0 p3
base c0 f1 s1 u0
base c0 g3 p2 t1
base c0 h1 s3 t2
base c0 q2 r1 inf1
base d0 f1 p0 u1
base d0 f2 r1 inf2
base d0 g2 q3 u0
base d0 g0 s1 s2
base d0 h0 p2 q1
base f0 f1 s2 t3
base f0 g3 q1 r2
base g0 h1 r2 t3
base g0 p2 s3 inf1
base g0 p0 t1 inf2
orbits 1 2 2 2 2 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4 4
)"},
    {"lemma3", "2^6 5^1 11^3", EntryStatus::verified,
     "Type 2^6 5^1 11^3, developed modulo 6; f has period 3, p and q period 2.",
     R"(gdd-system 1
modulus 6
family a 6
family b 6
family c 6
family d 6
family e 6
family s 6
family t 6
family f 3
family p 2
family q 2
fixed inf
type 2^6 5^1 11^3
group a0 a3 b0 b3 c0 c3 d0 d3 e0 e3 f0
group a1 a4 b1 b4 c1 c4 d1 d4 e1 e4 f1
group a2 a5 b2 b5 c2 c5 d2 d5 e2 e5 f2
group s0 t0
group s1 t1
group s2 t2
group s3 t3
group s4 t4
group s5 t5
group p0 p1 q0 q1 inf
base c0 c2 c4 q0
base e0 e2 e4 q0
base s0 s2 s4 q0
base f0 f1 t0 t3
base f0 s0 s3 inf
base a0 a1 c2 s0
base a0 a2 d1 t0
base a0 b1 c5 s4
base a0 b4 d2 s2
base a0 b2 e1 p0
base a0 b5 t3 inf
base a0 c4 p1 s1
base a0 d4 f2 q0
base a0 e5 f1 s3
base a0 e2 q1 t2
base a0 e4 t1 t5
base b0 b1 d2 q1
base b0 b2 s1 t5
base b0 c1 e2 s2
base b0 c5 f1 p1
base b0 c2 t1 t2
base b0 d5 e4 t0
base b0 e1 f2 s0
base c0 c1 e5 t4
base c0 d1 d5 s0
base c0 d4 e2 inf
base c0 d2 f1 t2
base c0 q1 s2 t1
base d0 d1 p0 t3
base d0 e1 e2 s4
base d0 s2 s3 t4
base e0 p0 s1 t4
orbits 2 2 2 3 3 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6
)"},
    {"lemma4", "2^3 11^4", EntryStatus::verified,
     "Type 2^3 11^4, developed modulo 6; f has period 3, p and q period 2.",
     R"(gdd-system 1
modulus 6
family a 6
family b 6
family c 6
family d 6
family e 6
family r 6
family t 6
family f 3
family p 2
family q 2
fixed inf
type 2^3 11^4
group a0 a3 b0 b3 c0 c3 d0 d3 e0 e3 f0
group a1 a4 b1 b4 c1 c4 d1 d4 e1 e4 f1
group a2 a5 b2 b5 c2 c5 d2 d5 e2 e5 f2
group t0 t3
group t1 t4
group t2 t5
group p0 p1 q0 q1 r0 r1 r2 r3 r4 r5 inf
base a0 a2 a4 p0
base c0 c2 c4 q0
base f0 f1 f2 inf
base a0 a1 c2 r0
base a0 b1 d2 p1
base a0 b2 d1 q0
base a0 b5 e1 t0
base a0 b4 t4 inf
base a0 c5 e4 r2
base a0 c4 f2 t2
base a0 d4 e2 r3
base a0 d5 q1 t5
base a0 e5 f1 r4
base a0 r1 t1 t3
base b0 b2 d4 r2
base b0 b1 f2 r4
base b0 c4 e5 q1
base b0 c2 e4 r1
base b0 c1 p1 t3
base b0 c5 r5 t2
base b0 e1 t4 t5
base c0 c1 r2 t0
base c0 d4 d5 t1
base c0 d2 e4 inf
base c0 d1 f2 p1
base d0 d2 r2 t1
base d0 e1 e5 r1
base d0 f2 r3 t4
base e0 e1 p0 t1
base e0 f1 q1 t2
orbits 2 2 1 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6 6
)"},
}};

const Source& find_source(std::string_view name) {
  for (const auto& s : kSources) {
    if (name == s.name) return s;
  }
  throw Error("unknown catalog entry '" + std::string(name) + "'");
}

int count_base_lines(std::string_view text) {
  int count = 0;
  std::size_t pos = 0;
  while ((pos = text.find("\nbase ", pos)) != std::string_view::npos) {
    ++count;
    ++pos;
  }
  return count;
}

}  // namespace

std::string to_string(EntryStatus status) {
  return status == EntryStatus::verified ? "verified" : "erratum";
}

std::vector<CatalogSummary> list_entries() {
  std::vector<CatalogSummary> out;
  for (const auto& s : kSources) {
    const auto entry = get_entry(s.name);
    out.push_back({entry.name, entry.claimed_type, entry.system.space.modulus(),
                   count_base_lines(s.text), s.status});
  }
  return out;
}

CatalogEntry get_entry(std::string_view name) {
  const Source& s = find_source(name);
  auto loaded = load_system(s.text);
  if (s.status == EntryStatus::verified && !loaded.issues.empty()) {
    throw std::logic_error("catalog entry " + std::string(s.name) +
                           " does not parse cleanly: " + loaded.issues.front().describe());
  }
  loaded.system.name = s.name;
  loaded.system.provenance = s.notes;
  return CatalogEntry{s.name,   parse_type(s.type),          s.status,
                      s.notes,  s.text,                      std::move(loaded.system),
                      std::move(loaded.issues)};
}

std::string emit_entry(std::string_view name) {
  const Source& s = find_source(name);
  std::ostringstream out;
  out << "# " << s.name << " (" << to_string(s.status) << ")\n";
  std::istringstream words(s.notes);
  std::string line;
  for (std::string w; words >> w;) {
    if (!line.empty() && line.size() + w.size() + 1 > 76) {
      out << "# " << line << '\n';
      line.clear();
    }
    line += (line.empty() ? "" : " ") + w;
  }
  if (!line.empty()) out << "# " << line << '\n';
  out << s.text;
  return out.str();
}

std::uint64_t catalog_checksum() {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& s : kSources) {
    for (const char* p = s.text; *p; ++p) {
      h ^= static_cast<unsigned char>(*p);
      h *= 1099511628211ull;
    }
  }
  return h;
}

}  // namespace gdd4
