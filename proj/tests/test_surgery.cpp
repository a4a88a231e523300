#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mapforge/coloring.hpp"
#include "mapforge/construct.hpp"
#include "mapforge/error.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/surgery.hpp"
#include "support.hpp"

using namespace mapforge;

namespace {

std::vector<FlagSystem> sample_maps(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<FlagSystem> out = {platonic("tetrahedron"), platonic("cube"), platonic("icosahedron"),
                                 tri_torus(2, 2), grid_G(5, 7, 3), strip_map(3, {}, 1)};
  for (int i = 0; i < count; ++i) {
    auto m = polygon_gluing(testsupport::random_word(rng, 1 + static_cast<int>(rng() % 6)));
    if (rng() & 1) m = dual(m);
    if (rng() & 1) m = subdivide_at(m, static_cast<Flag>(rng() % m.size()));
    out.push_back(relabel(m, testsupport::random_perm(rng, m.size())));
  }
  return out;
}

struct Counts {
  std::size_t v, e, f;
};

Counts counts(const FlagSystem& m) {
  return {testsupport::orbit_count(m, {1, 2}), testsupport::orbit_count(m, {0, 2}), testsupport::orbit_count(m, {0, 1})};
}

bool is_loop(const FlagSystem& m, int e) {
  auto edge = cell_index(m, 1);
  auto vertex = cell_index(m, 0);
  for (std::size_t f = 0; f < m.size(); ++f) {
    if (edge[f] == e) return vertex[f] == vertex[static_cast<std::size_t>(m.at(static_cast<Flag>(f), 0))];
  }
  return false;
}

// The face of f meets each of its vertices once.
bool simple_boundary(const FlagSystem& m, Flag f) {
  auto face = cell_index(m, 2);
  auto vertex = cell_index(m, 0);
  std::set<int> vs;
  std::size_t flags = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (face[x] != face[static_cast<std::size_t>(f)]) continue;
    ++flags;
    vs.insert(vertex[x]);
  }
  return vs.size() == flags / 2;
}

const Goal kGoals[] = {Goal::VertexBipartite, Goal::FaceBipartite, Goal::Vpso,
                       Goal::Fpso,            Goal::OddFace,       Goal::OddVertex};

}  // namespace

TEST(Subdivide, Counts) {
  for (const auto& m : sample_maps(testsupport::test_seed(), 30)) {
    auto before = counts(m);
    for (int e = 0; e < static_cast<int>(before.e); e += 3) {
      auto s = counts(subdivide_edge(m, e));
      EXPECT_EQ(s.v, before.v + 1);
      EXPECT_EQ(s.e, before.e + 1);
      EXPECT_EQ(s.f, before.f);
      auto d = counts(double_edge(m, e));
      EXPECT_EQ(d.v, before.v);
      EXPECT_EQ(d.e, before.e + 1);
      EXPECT_EQ(d.f, before.f + 1);
    }
  }
}

TEST(Subdivide, TetrahedronAndCube) {
  auto t = subdivide_edge(platonic("tetrahedron"), 0);
  EXPECT_EQ(euler_characteristic(t), 2);
  auto c = double_edge(platonic("cube"), 0);
  EXPECT_EQ(cell_count(c, 1), 13u);
  EXPECT_EQ(cell_count(c, 2), 7u);
  EXPECT_EQ(euler_characteristic(c), 2);
}

TEST(Subdivide, BadEdge) {
  try {
    subdivide_edge(platonic("cube"), 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnEdge);
  }
}

TEST(Triple, CountsAndBigon) {
  auto g = grid_G(5, 7, 3);
  auto t = triple_edge(g, 0);
  auto before = counts(g), after = counts(t);
  EXPECT_EQ(after.v, before.v);
  EXPECT_EQ(after.e, before.e + 2);
  EXPECT_EQ(after.f, before.f + 2);
  EXPECT_EQ(coloring_group(t).to_string(), "e,1");
  auto vertex = cell_index(t, 0);
  bool bigon = false;
  for (const auto& f : cells(t, 2)) {
    if (f.degree() != 2) continue;
    std::set<int> vs;
    for (Flag x : f.flags) vs.insert(vertex[static_cast<std::size_t>(x)]);
    bigon = bigon || vs.size() == 2;
  }
  EXPECT_TRUE(bigon);
}

TEST(Triple, PreservesColorabilityStatus) {
  const ColorSet kept[] = {ColorSet::of({0}), ColorSet::of({2}), ColorSet::of({0, 1}), ColorSet::of({1, 2})};
  for (const auto& m : sample_maps(testsupport::test_seed() + 1, 40)) {
    for (int e = 0; e < static_cast<int>(cell_count(m, 1)); ++e) {
      if (is_loop(m, e)) {
        try {
          triple_edge(m, e);
          ADD_FAILURE() << "loop accepted";
        } catch (const Error& err) {
          EXPECT_EQ(err.code(), Errc::LoopEdge);
        }
        continue;
      }
      auto t = triple_edge(m, e);
      EXPECT_EQ(euler_characteristic(t), euler_characteristic(m));
      for (auto s : kept) EXPECT_EQ(testsupport::colorable_oracle(t, s.bits), testsupport::colorable_oracle(m, s.bits));
      break;
    }
  }
}

TEST(MakeProperty, GoalsHoldAndSurfaceIsKept) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 2, 60)) {
    for (auto goal : kGoals) {
      auto r = make_property(m, goal);
      EXPECT_TRUE(goal_holds(r, goal)) << goal_name(goal);
      EXPECT_EQ(surface_signature(r), surface_signature(m)) << goal_name(goal);
      // at most one surgery per edge (two for a lone edge), four flags each
      EXPECT_LE(r.size(), m.size() + 4 * std::max<std::size_t>(2, cell_count(m, 1))) << goal_name(goal);
      if (goal_holds(m, goal)) EXPECT_EQ(r, m);
    }
  }
}

TEST(MakeProperty, IndependentChecks) {
  for (const auto& m : sample_maps(testsupport::test_seed() + 3, 30)) {
    EXPECT_TRUE(testsupport::bipartite_oracle(make_property(m, Goal::VertexBipartite), {1, 2}, 0));
    EXPECT_TRUE(testsupport::bipartite_oracle(make_property(m, Goal::FaceBipartite), {0, 1}, 2));
    EXPECT_TRUE(testsupport::colorable_oracle(make_property(m, Goal::Vpso), ColorSet::of({1, 2}).bits));
    EXPECT_TRUE(testsupport::colorable_oracle(make_property(m, Goal::Fpso), ColorSet::of({0, 1}).bits));
  }
}

TEST(MakeProperty, OneSubdivisionForAnOddFace) {
  auto cube = platonic("cube");
  auto r = make_property(cube, Goal::OddFace);
  EXPECT_EQ(r.size(), cube.size() + 4);
  EXPECT_EQ(make_property(platonic("tetrahedron"), Goal::VertexBipartite).size() % 4, 0u);
  EXPECT_EQ(parse_goal("fpso"), Goal::Fpso);
  EXPECT_EQ(goal_name(Goal::OddVertex), "odd_vertex");
  EXPECT_THROW(parse_goal("round"), Error);
}

TEST(ConnectedSum, TwoCubes) {
  auto cube = platonic("cube");
  auto s = connected_sum(cube, cube, 0, 0);
  EXPECT_EQ(s.size(), 2 * cube.size() - 16);
  EXPECT_EQ(euler_characteristic(s), 2);
  EXPECT_EQ(coloring_group(s).to_string(), "e,0,12,012");
}

TEST(ConnectedSum, Errors) {
  try {
    connected_sum(platonic("cube"), platonic("tetrahedron"), 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FaceSizeMismatch);
  }
  try {
    connected_sum(platonic("cube"), polygon_gluing("abAB"), 0, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FaceSelfAdjacent);
  }
}

TEST(ConnectedSum, EulerAndIntersection) {
  std::mt19937_64 rng(testsupport::test_seed() + 4);
  auto maps = sample_maps(testsupport::test_seed() + 4, 40);
  int summable = 0, additive = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto& a = maps[rng() % maps.size()];
    const auto& b = maps[rng() % maps.size()];
    auto fa = static_cast<Flag>(rng() % a.size());
    auto fb = static_cast<Flag>(rng() % b.size());
    FlagSystem s = a;
    try {
      s = connected_sum(a, b, fa, fb);
    } catch (const Error& e) {
      EXPECT_TRUE(e.code() == Errc::FaceSizeMismatch || e.code() == Errc::FaceSelfAdjacent ||
                  e.code() == Errc::Disconnected);
      continue;
    }
    if (simple_boundary(a, fa) && simple_boundary(b, fb)) {
      ++additive;
      EXPECT_EQ(euler_characteristic(s), euler_characteristic(a) + euler_characteristic(b) - 2);
    }
    auto meet = intersect(coloring_group(a), coloring_group(b));
    auto t = coloring_group(s);
    for (auto x : meet.members()) EXPECT_TRUE(t.contains(x)) << x.to_string();
    if (face_is_summable(a, fa) && face_is_summable(b, fb)) {
      ++summable;
      EXPECT_EQ(t, meet);
    }
  }
  EXPECT_GT(summable, 0);
  EXPECT_GT(additive, 0);
}

TEST(ConnectedSum, EulerAdditiveOnDiskFaces) {
  const std::vector<FlagSystem> maps = {platonic("tetrahedron"), platonic("cube"),  platonic("octahedron"),
                                        platonic("dodecahedron"), tri_torus(3, 3),  grid_G(5, 7, 3),
                                        medial(platonic("cube")), opposite(platonic("cube"))};
  int checked = 0;
  for (const auto& a : maps) {
    for (const auto& b : maps) {
      for (const auto& fa : cells(a, 2)) {
        Flag x = fa.flags.front();
        if (!simple_boundary(a, x)) continue;
        for (const auto& fb : cells(b, 2)) {
          Flag y = fb.flags.front();
          if (fa.degree() != fb.degree() || !simple_boundary(b, y)) continue;
          auto s = connected_sum(a, b, x, y);
          EXPECT_EQ(euler_characteristic(s), euler_characteristic(a) + euler_characteristic(b) - 2);
          EXPECT_EQ(surface_signature(s).orientable, surface_signature(a).orientable && surface_signature(b).orientable);
          ++checked;
          break;
        }
      }
    }
  }
  EXPECT_GT(checked, 100);
}
