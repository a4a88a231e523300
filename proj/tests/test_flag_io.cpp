#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "mapforge/construct.hpp"
#include "mapforge/flag_io.hpp"
#include "mapforge/operators.hpp"
#include "support.hpp"

using namespace mapforge;

namespace {

ParseError parse_failure(const std::string& text) {
  try {
    parse_flag_system(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return ParseError("none", 0, 0);
}

}  // namespace

TEST(FlagIo, WritesTheDocumentedLayout) {
  auto m = FlagSystem::validate(2, 4, {{1, 0, 3, 2}, {3, 2, 1, 0}, {2, 3, 0, 1}});
  EXPECT_EQ(format_flag_system(m), "rank 2\nflags 4\nr0: 1 0 3 2\nr1: 3 2 1 0\nr2: 2 3 0 1\n");
}

TEST(FlagIo, RoundTripsGeneratedMaps) {
  std::mt19937_64 rng(testsupport::test_seed());
  std::vector<FlagSystem> maps = {platonic("icosahedron"), tri_torus(3, 2), grid_G(5, 7, 3), cube_maniplex(4)};
  for (int i = 0; i < 40; ++i) {
    auto m = polygon_gluing(testsupport::random_word(rng, 1 + static_cast<int>(rng() % 7)));
    maps.push_back(relabel(m, testsupport::random_perm(rng, m.size())));
  }
  for (const auto& m : maps) {
    EXPECT_EQ(parse_flag_system(format_flag_system(m)), m);
  }
}

TEST(FlagIo, SkipsCommentsAndBlankLines) {
  auto m = parse_flag_system("# a loop\n\nrank 2\n  \nflags 4\n# connections\nr0: 1 0 3 2\nr1: 3 2 1 0\r\nr2: 2 3 0 1\n");
  EXPECT_EQ(m.size(), 4u);
}

TEST(FlagIo, ReportsLineAndColumn) {
  auto e = parse_failure("rank 2\nflags 4\nr0: 1 0 3 2\nr1: 3 2 x 0\nr2: 2 3 0 1\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 9u);

  e = parse_failure("rank 2\nflags 4\nr0: 1 0 3 7\nr1: 3 2 1 0\nr2: 2 3 0 1\n");
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 11u);

  e = parse_failure("rank 2\nflags 4\nr0: 1 0 3\nr1: 3 2 1 0\nr2: 2 3 0 1\n");
  EXPECT_EQ(e.line(), 3u);

  e = parse_failure("rank 2\nflags 4\nr0: 1 0 3 2\nr2: 2 3 0 1\nr1: 3 2 1 0\n");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 1u);

  e = parse_failure("rank 2\nflags 4\nr0: 1 0 3 2\n");
  EXPECT_EQ(e.line(), 4u);

  e = parse_failure("rank two\n");
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 6u);
}

TEST(FlagIo, TrailingContentIsAnError) {
  auto e = parse_failure("rank 2\nflags 4\nr0: 1 0 3 2\nr1: 3 2 1 0\nr2: 2 3 0 1\nr3: 1 0 3 2\n");
  EXPECT_EQ(e.line(), 6u);
}

TEST(FlagIo, StructuralDefectsSurfaceAsValidationErrors) {
  try {
    parse_flag_system("rank 2\nflags 6\nr0: 1 0 3 2 5 4\nr1: 3 4 5 0 1 2\nr2: 5 2 1 4 3 0\n");
    FAIL();
  } catch (const ParseError&) {
    FAIL() << "expected a validation error, not a parse error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonCommuting);
  }
}
