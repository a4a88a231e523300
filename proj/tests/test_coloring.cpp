#include <gtest/gtest.h>

#include <random>

#include "mapforge/coloring.hpp"
#include "mapforge/construct.hpp"
#include "mapforge/error.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/surgery.hpp"
#include "support.hpp"

using namespace mapforge;

namespace {

// Random small maps from several families, relabelled.
std::vector<FlagSystem> sample_maps(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<FlagSystem> out;
  const char* solids[] = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  for (int i = 0; i < count; ++i) {
    FlagSystem m = [&]() {
      switch (rng() % 4) {
        case 0:
          return polygon_gluing(testsupport::random_word(rng, 1 + static_cast<int>(rng() % 6)));
        case 1:
          return platonic(solids[rng() % 5]);
        case 2:
          return tri_torus(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
        default: {
          auto base = polygon_gluing(testsupport::random_word(rng, 1 + static_cast<int>(rng() % 4)));
          return subdivide_at(base, static_cast<Flag>(rng() % base.size()));
        }
      }
    }();
    if (rng() & 1) m = dual(m);
    out.push_back(relabel(m, testsupport::random_perm(rng, m.size())));
  }
  return out;
}

std::vector<ColorSet> all_sets(int rank) {
  std::vector<ColorSet> out;
  for (std::uint32_t b = 0; b < (1u << (rank + 1)); ++b) out.push_back(ColorSet{b, rank});
  return out;
}

}  // namespace

TEST(ColorSet, TextSyntax) {
  EXPECT_EQ(ColorSet::parse("e", 2).bits, 0u);
  EXPECT_EQ(ColorSet::parse("02", 2), ColorSet::of({0, 2}));
  EXPECT_EQ(ColorSet::parse("20", 2), ColorSet::of({0, 2}));
  EXPECT_EQ(ColorSet::of({1, 2}).to_string(), "12");
  EXPECT_EQ(ColorSet::empty(2).to_string(), "e");
  EXPECT_EQ(ColorSet::full(3).to_string(), "0123");
  EXPECT_EQ(ColorSet::of({0}).complement(), ColorSet::of({1, 2}));
  EXPECT_THROW(ColorSet::parse("3", 2), Error);
  EXPECT_THROW(ColorSet::parse("0x", 2), Error);
}

TEST(ColoringGroupType, SpanAndCanonicalText) {
  auto g = ColoringGroup::span(2, {ColorSet::of({0}), ColorSet::of({1, 2})});
  EXPECT_EQ(g.to_string(), "e,0,12,012");
  EXPECT_TRUE(g.is_subgroup());
  EXPECT_TRUE(g.orientable());
  EXPECT_EQ(ColoringGroup::parse("012,e,12,0", 2), g);
  EXPECT_EQ(ColoringGroup::span(2, {}).to_string(), "e");
  EXPECT_EQ(ColoringGroup::span(2, {ColorSet::of({0}), ColorSet::of({1}), ColorSet::of({2})}).size(), 8u);
  EXPECT_FALSE(ColoringGroup(2, {ColorSet::empty(2), ColorSet::of({0}), ColorSet::of({1})}).is_subgroup());
}

TEST(FindColoring, CubeHasTheThreeNontrivialColorings) {
  auto cube = platonic("cube");
  EXPECT_EQ(coloring_group(cube).to_string(), "e,0,12,012");
  for (auto s : {ColorSet::of({0}), ColorSet::of({1, 2}), ColorSet::full(2)}) {
    auto c = find_coloring(cube, s);
    ASSERT_TRUE(c.has_value()) << s.to_string();
    EXPECT_EQ(c->assignment[0], 0);
    EXPECT_TRUE(testsupport::is_i_coloring(cube, c->assignment, s.bits));
  }
}

TEST(FindColoring, EmptySetGivesAllZeros) {
  auto c = find_coloring(platonic("icosahedron"), ColorSet::empty(2));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->to_string(), std::string(120, '0'));
}

TEST(FindColoring, TetrahedronIsNotVertexBipartite) {
  auto tet = platonic("tetrahedron");
  EXPECT_FALSE(find_coloring(tet, ColorSet::of({0})).has_value());
  EXPECT_EQ(coloring_group(tet).to_string(), "e,012");
}

TEST(FindColoring, GridIsEdgeBipartiteOnly) {
  EXPECT_EQ(coloring_group(grid_G(5, 7, 3)).to_string(), "e,1");
}

TEST(FindColoring, GroupMatchesLinearAlgebraOracle) {
  for (const auto& m : sample_maps(testsupport::test_seed(), 120)) {
    EXPECT_EQ(coloring_group(m).to_string(), testsupport::group_oracle(m));
  }
}

TEST(FindColoring, ComplementIsTheOnlyOtherColoring) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 1, 60)) {
    for (auto s : all_sets(2)) {
      auto c = find_coloring(m, s);
      if (!c) continue;
      EXPECT_TRUE(testsupport::is_i_coloring(m, c->assignment, s.bits));
      auto flipped = c->assignment;
      for (auto& b : flipped) b ^= 1;
      EXPECT_TRUE(testsupport::is_i_coloring(m, flipped, s.bits));
      // any coloring is fixed by its value on flag 0, by connectivity
      EXPECT_EQ(c->assignment[0], 0);
    }
  }
}

TEST(FindColoring, PointwiseSumColorsTheSymmetricDifference) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 2, 60)) {
    auto group = coloring_group(m);
    EXPECT_TRUE(group.is_subgroup());
    for (auto a : group.members()) {
      for (auto b : group.members()) {
        auto ca = find_coloring(m, a), cb = find_coloring(m, b);
        ASSERT_TRUE(ca && cb);
        std::vector<std::uint8_t> sum(m.size());
        for (std::size_t f = 0; f < m.size(); ++f) sum[f] = ca->assignment[f] ^ cb->assignment[f];
        EXPECT_TRUE(testsupport::is_i_coloring(m, sum, (a ^ b).bits));
        EXPECT_TRUE(group.contains(a ^ b));
      }
    }
  }
}

TEST(Cycles, HandWords) {
  auto cube = platonic("cube");
  auto tet = platonic("tetrahedron");
  EXPECT_TRUE(cycle_consistent(cube, 0, {0, 2, 0, 2}, ColorSet::of({0})));
  EXPECT_FALSE(cycle_consistent(tet, 0, {0, 1, 0, 1, 0, 1}, ColorSet::of({0})));
  EXPECT_TRUE(cycle_consistent(tet, 0, {0, 1, 0, 1, 0, 1}, ColorSet::of({0, 1})));
  try {
    cycle_consistent(cube, 0, {0, 1}, ColorSet::of({0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAClosedCycle);
  }
}

TEST(Cycles, SampledWordsDecideColorability) {
  std::mt19937_64 rng(testsupport::test_seed() + 3);
  for (const auto& m : sample_maps(testsupport::test_seed() + 3, 30)) {
    for (auto s : all_sets(2)) {
      bool colorable = find_coloring(m, s).has_value();
      bool all_consistent = true;
      for (int k = 0; k < 1000 && all_consistent; ++k) {
        auto f = static_cast<Flag>(rng() % m.size());
        auto w = random_closed_word(m, f, 4 + rng() % 24, rng);
        ASSERT_EQ(apply_word(m, f, w), f);
        all_consistent = cycle_consistent(m, f, w, s);
      }
      if (colorable) EXPECT_TRUE(all_consistent);
      auto cert = inconsistent_cycle(m, s);
      EXPECT_EQ(cert.has_value(), !colorable);
      if (cert) {
        EXPECT_EQ(apply_word(m, cert->first, cert->second), cert->first);
        EXPECT_FALSE(cycle_consistent(m, cert->first, cert->second, s));
      }
    }
  }
}

TEST(Cycles, ExactlyOneOrAllThreeConsistent) {
  std::mt19937_64 rng(testsupport::test_seed() + 4);
  for (const auto& m : sample_maps(testsupport::test_seed() + 4, 20)) {
    for (auto i : all_sets(2)) {
      for (auto j : all_sets(2)) {
        auto f = static_cast<Flag>(rng() % m.size());
        auto w = random_closed_word(m, f, 6 + rng() % 10, rng);
        int count = cycle_consistent(m, f, w, i) + cycle_consistent(m, f, w, j) + cycle_consistent(m, f, w, i ^ j);
        EXPECT_TRUE(count == 1 || count == 3);
      }
    }
  }
}

TEST(Pso, CubeExamples) {
  auto cube = platonic("cube");
  EXPECT_TRUE(is_pseudo_orientable(cube, ColorSet::full(2)));
  EXPECT_TRUE(is_pseudo_orientable(cube, ColorSet::empty(2)));
  EXPECT_TRUE(is_pseudo_orientable(cube, ColorSet::of({0})));
  auto full = direct_pso(cube, PsoKind::Full);
  ASSERT_TRUE(full.has_value());
  EXPECT_TRUE(check_arrows(cube, *full));
  EXPECT_FALSE(direct_pso(cube, PsoKind::Face).has_value());
  EXPECT_TRUE(direct_pso(cube, PsoKind::Vertex).has_value());
}

TEST(Pso, EveryMapIsRPseudoOrientable) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 5, 40)) {
    EXPECT_TRUE(is_pseudo_orientable(m, ColorSet::full(2)));
    EXPECT_EQ(is_pseudo_orientable(m, ColorSet::empty(2)), surface_signature(m).orientable);
  }
}

TEST(Pso, KleinGridEdgeOracleAgrees) {
  for (int m = 3; m <= 5; ++m) {
    for (int n = 3; n <= 6; ++n) {
      auto g = grid_G(m, n, 0);
      EXPECT_EQ(direct_pso(g, PsoKind::Edge).has_value(), find_coloring(g, ColorSet::of({0, 2})).has_value());
    }
  }
}

TEST(Pso, DirectOraclesMatchColorability) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 6, 150)) {
    for (auto kind : {PsoKind::Face, PsoKind::Vertex, PsoKind::Edge, PsoKind::Full}) {
      auto a = direct_pso(m, kind);
      EXPECT_EQ(a.has_value(), testsupport::colorable_oracle(m, pso_partner(kind).bits)) << pso_kind_name(kind);
      if (a) {
        EXPECT_TRUE(check_arrows(m, *a));
        EXPECT_TRUE(pso_conflicts(m, kind).empty());
      } else {
        EXPECT_FALSE(pso_conflicts(m, kind).empty());
      }
    }
  }
}

TEST(Pso, RankThreeIsRejected) {
  try {
    direct_pso(cube_maniplex(4), PsoKind::Full);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::RankNotTwo);
  }
}

TEST(CheatSheet, DegreeParityIsNecessary) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 7, 120)) {
    auto t = coloring_group(m);
    bool faces_even = true, vertices_even = true;
    for (const auto& c : cells(m, 2)) faces_even = faces_even && c.degree() % 2 == 0;
    for (const auto& c : cells(m, 0)) vertices_even = vertices_even && c.degree() % 2 == 0;
    if (t.contains(ColorSet::of({1}))) EXPECT_TRUE(faces_even && vertices_even);
    if (t.contains(ColorSet::of({0})) || t.contains(ColorSet::of({1, 2}))) EXPECT_TRUE(faces_even);
    if (t.contains(ColorSet::of({2})) || t.contains(ColorSet::of({0, 1}))) EXPECT_TRUE(vertices_even);
  }
}

TEST(Bipartite, SingletonColoringsMatchCellGraphs) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 8, 150)) {
    EXPECT_EQ(find_coloring(m, ColorSet::of({0})).has_value(), testsupport::bipartite_oracle(m, {1, 2}, 0));
    EXPECT_EQ(find_coloring(m, ColorSet::of({1})).has_value(), testsupport::bipartite_oracle(m, {0, 2}, 1));
    EXPECT_EQ(find_coloring(m, ColorSet::of({2})).has_value(), testsupport::bipartite_oracle(m, {0, 1}, 2));
    for (int i = 0; i <= 2; ++i) {
      EXPECT_EQ(i_face_bipartite(m, i), find_coloring(m, ColorSet::of({i})).has_value());
    }
  }
}

TEST(Bipartite, ManiplexFaces) {
  auto q = cube_maniplex(4);
  for (int i = 0; i <= 3; ++i) {
    std::vector<int> others;
    for (int j = 0; j <= 3; ++j) {
      if (j != i) others.push_back(j);
    }
    EXPECT_EQ(i_face_bipartite(q, i), testsupport::bipartite_oracle(q, others, i)) << i;
    EXPECT_EQ(i_face_bipartite(q, i), find_coloring(q, ColorSet{1u << i, 3}).has_value()) << i;
  }
}

TEST(ExcludingCell, ContainsTheWholeGroup) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 9, 40)) {
    auto t = coloring_group(m);
    for (const auto& face : cells(m, 2)) {
      auto local = coloring_group_excluding_cell(m, face);
      EXPECT_TRUE(local.contains(ColorSet::empty(2)));
      for (auto s : t.members()) EXPECT_TRUE(local.contains(s));
    }
  }
}

TEST(ExcludingCell, MoebiusBandKeepsNonOrientability) {
  // every edge of opp(cube) is twisted; three faces round a far vertex still form a band
  auto opp = opposite(platonic("cube"));
  auto face = cells(opp, 2).front();
  EXPECT_FALSE(coloring_group(opp).orientable());
  EXPECT_FALSE(coloring_group_excluding_cell(opp, face).orientable());
}
