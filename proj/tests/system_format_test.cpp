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

#include <random>

#include "gdd4/catalog.hpp"
#include "gdd4/error.hpp"
#include "gdd4/verifier.hpp"
#include "gtest/gtest.h"

namespace gdd4 {
namespace {

const char* kSmall =
    "gdd-system 1\n"
    "modulus 2\n"
    "family a 2\n"
    "family b 2\n"
    "fixed x\n"
    "group a0 b1\n"
    "group a1 b0\n"
    "group x\n"
    "base a0 a1 b0 x\n";

std::size_t error_line(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    parse_system(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return {};
}

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

TEST(ParseSystemTest, SmallDocument) {
  const auto s = parse_system(kSmall);
  EXPECT_EQ(s.space.modulus(), 2);
  EXPECT_EQ(s.space.point_total(), 5);
  EXPECT_EQ(s.layout.groups().size(), 3u);
  ASSERT_EQ(s.base_blocks.size(), 1u);
  EXPECT_FALSE(s.claimed_type);
  EXPECT_EQ(serialize_system(s), kSmall);
}

TEST(ParseSystemTest, CommentsAndBlankLines) {
  const std::string text = "# leading comment\n\ngdd-system 1 # header\nmodulus 2\n"
                           "family a 2\nfamily b 2\nfixed x\n\ngroup a0 b1\ngroup a1 b0\n"
                           "group x\nbase a0 a1 b0 x   # trailing\n";
  EXPECT_EQ(serialize_system(parse_system(text)), kSmall);
}

TEST(ParseSystemTest, DuplicatePointInBlock) {
  const auto text = replace(kSmall, "base a0 a1 b0 x", "base a0 a0 b1 x");
  EXPECT_EQ(error_line(text), 9u);
  EXPECT_NE(error_message(text).find("degenerate"), std::string::npos);
}

TEST(ParseSystemTest, OrphanPointIsNamed) {
  const auto text = replace(kSmall, "group x\n", "");
  EXPECT_NE(error_message(text).find("point x is in no group"), std::string::npos);
}

TEST(ParseSystemTest, LineNumberedErrors) {
  EXPECT_EQ(error_line(replace(kSmall, "base a0 a1 b0 x", "base a0 a1 c0 x")), 9u);
  EXPECT_EQ(error_line(replace(kSmall, "base a0 a1 b0 x", "base a0 a2 b0 x")), 9u);
  EXPECT_EQ(error_line(replace(kSmall, "base a0 a1 b0 x", "base a0 a1 b0")), 9u);
  EXPECT_EQ(error_line(replace(kSmall, "group x", "group x a0")), 0u);  // overlap
  EXPECT_NE(error_message(replace(kSmall, "group x", "group x a0")).find("more than one group"),
            std::string::npos);
  EXPECT_EQ(error_line(replace(kSmall, "family b 2", "family b 3")), 4u);
  EXPECT_EQ(error_line(replace(kSmall, "modulus 2", "modulus two")), 2u);
  EXPECT_EQ(error_line(replace(kSmall, "fixed x", "points x")), 5u);
  EXPECT_EQ(error_line(replace(kSmall, "gdd-system 1", "gdd-system 2")), 1u);
  EXPECT_EQ(error_line(replace(kSmall, "gdd-system 1", "gdd-design 1")), 1u);
  EXPECT_EQ(error_line(replace(kSmall, "fixed x\n", "fixed x\ntype 2^-1\n")), 6u);
  EXPECT_EQ(error_line(std::string(kSmall) + "orbits 1 2\n"), 10u);
  EXPECT_THROW(parse_system(std::string(kSmall).substr(0, std::string(kSmall).size() - 1)),
               ParseError);
  EXPECT_THROW(parse_system(""), ParseError);
}

TEST(LoadSystemTest, LenientReadRecordsIssues) {
  const auto text = replace(kSmall, "base a0 a1 b0 x", "base a0 a3 c0 x\nbase a0 a2 b0 x");
  const auto loaded = load_system(text);
  ASSERT_EQ(loaded.issues.size(), 6u);
  EXPECT_EQ(loaded.issues[0].describe(),
            "line 9: family 'c' is used but never declared (taken as period 2)");
  EXPECT_NE(loaded.issues[1].message.find("subscript 3 of 'a3'"), std::string::npos);
  EXPECT_NE(loaded.issues[2].message.find("reduced to a0"), std::string::npos);
  EXPECT_EQ(loaded.issues[3].line, 10u);
  EXPECT_NE(loaded.issues[3].message.find("a0 occurs twice"), std::string::npos);
  EXPECT_EQ(loaded.issues[4].message, "point c0 is in no group");
  EXPECT_EQ(loaded.issues[5].line, 0u);
  EXPECT_EQ(loaded.system.base_blocks.size(), 1u);
}

TEST(LoadSystemTest, Example1AsPrinted) {
  const auto entry = get_entry("example1");
  EXPECT_THROW(parse_system(entry.source), ParseError);
  std::string all;
  for (const auto& i : entry.load_issues) all += i.describe() + "\n";
  EXPECT_NE(all.find("family 't' is used but never declared"), std::string::npos);
  EXPECT_NE(all.find("family 'u' is used but never declared"), std::string::npos);
  EXPECT_NE(all.find("subscript 4 of 'p4' is out of range for family p of period 3"),
            std::string::npos);
  EXPECT_NE(all.find("base block p0 p3 q0 q3 is degenerate"), std::string::npos);
}

TEST(RenameTest, OverlayRenamesFamilies) {
  const auto text = apply_renames(kSmall, {{"b", "c"}});
  const auto s = parse_system(text);
  EXPECT_TRUE(s.space.find_family("c"));
  EXPECT_FALSE(s.space.find_family("b"));
  // Merging onto an existing family with the same declaration drops it.
  const auto merged = apply_renames(get_entry("example1").source, {{"t", "r"}, {"u", "z"}});
  const auto loaded = load_system(merged);
  for (const auto& i : loaded.issues) {
    EXPECT_EQ(i.message.find("never declared"), std::string::npos) << i.describe();
  }
}

TEST(DocumentKindTest, Header) {
  EXPECT_EQ(document_kind(kSmall), DocumentKind::system);
  EXPECT_EQ(document_kind("# c\ngdd-design 1\n"), DocumentKind::design);
  EXPECT_THROW(document_kind("hello 1\n"), ParseError);
}

TEST(SystemRoundTrip, CatalogEntries) {
  for (const char* name : {"lemma1", "lemma2", "lemma3", "lemma4"}) {
    const auto& system = get_entry(name).system;
    const auto text = serialize_system(system);
    const auto again = parse_system(text);
    EXPECT_EQ(serialize_system(again), text);
    EXPECT_EQ(again.space, system.space);
    EXPECT_EQ(again.layout, system.layout);
    EXPECT_EQ(again.base_blocks, system.base_blocks);
    EXPECT_EQ(again.declared_orbits, system.declared_orbits);
    EXPECT_TRUE(verify_system(again).valid()) << name;
  }
}

// Random well-formed systems survive serialize -> parse -> serialize.
TEST(SystemRoundTrip, RandomDocuments) {
  std::mt19937 rng(4242);
  const std::vector<int> moduli = {1, 2, 3, 4, 6, 12};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = moduli[rng() % moduli.size()];
    std::vector<int> divisors;
    for (int d = 1; d <= n; ++d) {
      if (n % d == 0) divisors.push_back(d);
    }
    std::vector<PointFamily> families;
    const int periodic = 1 + static_cast<int>(rng() % 4);
    for (int f = 0; f < periodic; ++f) {
      families.push_back({std::string(1, static_cast<char>('a' + f)), PointFamily::Kind::periodic,
                          divisors[rng() % divisors.size()]});
    }
    for (int f = 0; f < static_cast<int>(rng() % 3); ++f) {
      families.push_back({"inf" + std::to_string(f + 1), PointFamily::Kind::fixed, 1});
    }
    BaseBlockSystem s;
    s.space = PointSpace(n, families);
    auto points = s.space.all_points();
    if (points.size() < 4) continue;
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::vector<Point>> groups;
    for (std::size_t i = 0; i < points.size();) {
      const std::size_t take = 1 + rng() % 3;
      groups.emplace_back(points.begin() + i, points.begin() + std::min(points.size(), i + take));
      i += take;
    }
    s.layout = GroupLayout(groups);
    for (int k = 0; k < static_cast<int>(rng() % 6); ++k) {
      std::shuffle(points.begin(), points.end(), rng);
      s.base_blocks.push_back({points[0], points[1], points[2], points[3]});
    }
    if (rng() % 2) s.declared_orbits = std::vector<int>(s.base_blocks.size(), n);
    if (rng() % 2) s.claimed_type = induced_type(s.layout);

    const auto text = serialize_system(s);
    const auto parsed = parse_system(text);
    ASSERT_EQ(serialize_system(parsed), text);
    EXPECT_EQ(parsed.base_blocks, s.base_blocks);
    EXPECT_EQ(parsed.layout, s.layout);
  }
}

TEST(DesignFormatTest, Lemma3RoundTrip) {
  const auto design = develop_system(get_entry("lemma3").system);
  ASSERT_EQ(design.blocks.size(), 174u);
  const auto text = serialize_design(design);
  const auto parsed = parse_design(text);
  EXPECT_EQ(serialize_design(parsed), text);
  EXPECT_EQ(parsed.blocks, design.blocks);
  EXPECT_TRUE(verify(parsed).valid());
}

TEST(DesignFormatTest, EmptyBlockSection) {
  const auto d = parse_design("gdd-design 1\npoint a b c d\ngroup a b\ngroup c\ngroup d\n");
  EXPECT_TRUE(d.blocks.empty());
  const auto report = verify(d);
  EXPECT_FALSE(report.valid());
  EXPECT_EQ(report.uncovered.size(), 5u);
}

TEST(DesignFormatTest, Errors) {
  const std::string head = "gdd-design 1\npoint a b c d e\ngroup a\ngroup b\ngroup c\ngroup d\ngroup e\n";
  EXPECT_NO_THROW(parse_design(head + "block a b c d\n"));
  EXPECT_THROW(parse_design(head + "block a b c\n"), ParseError);
  EXPECT_THROW(parse_design(head + "block a b c c\n"), ParseError);
  EXPECT_THROW(parse_design(head + "block a b c z\n"), ParseError);
  EXPECT_THROW(parse_design(head + "group a\n"), ParseError);
  EXPECT_THROW(parse_design(head + "blocks a b c d\n"), ParseError);
  EXPECT_THROW(parse_design("gdd-design 1\npoint a b\ngroup a\n"), ParseError);
  EXPECT_THROW(parse_design(head + "block a b c d"), ParseError);
}

}  // namespace
}  // namespace gdd4
