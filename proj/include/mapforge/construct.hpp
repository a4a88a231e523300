#ifndef MAPFORGE_CONSTRUCT_HPP
#define MAPFORGE_CONSTRUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "mapforge/flag_system.hpp"

namespace mapforge {

/// Vertex rotations plus signed edges. Dart d yields flag 2d on the side
/// towards the next dart of its rotation and flag 2d+1 on the other side.
struct RotationSystem {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edge_pairs;
  std::vector<int> edge_signs;  // +1 keeps the local orientation, -1 reverses it
  std::vector<std::vector<int>> rotations;

  std::size_t dart_count() const { return 2 * edge_pairs.size(); }

  /// Simple graph given as cyclic neighbour lists; all edges positive.
  static RotationSystem from_neighbors(const std::vector<std::vector<int>>& neighbors);
};

FlagSystem from_rotation_system(const RotationSystem& rs);

/// Side s of a polygon runs from corner s to corner s+1. Flag (p, s, h) sits
/// on half h of that side, h = 0 being the half at corner s.
struct SideGluing {
  int polygon_a;
  int side_a;
  int polygon_b;
  int side_b;
  bool orientable;  // true joins half h to half 1-h, false joins h to h
};

struct PolygonComplex {
  std::vector<int> sizes;
  std::vector<SideGluing> gluings;
};

FlagSystem from_polygons(const PolygonComplex& pc);

/// One polygon, sides labelled by letters that each occur twice.
/// Upper case marks a side read against the polygon's direction.
FlagSystem polygon_gluing(const std::string& word);

/// "aa", "aabb", ... on the non-orientable surface of genus k.
std::string nonorientable_word(int k);
/// "aA" for the sphere, "abAB", "abABcdCD", ... otherwise.
std::string orientable_word(int g);

FlagSystem platonic(const std::string& name);
FlagSystem tri_torus(int m, int n);
FlagSystem grid_G(int m, int n, int k);
/// h stacked unit squares closed into a cylinder; the left edge at height y
/// is glued to the right edge at height perm(y). Labels below h - parity
/// are glued with a twist through a bigon.
FlagSystem strip_map(int h, const std::vector<int>& swaps, int parity);
FlagSystem cube_maniplex(int d);

/// Named generator with textual parameters, as used by the command line.
FlagSystem generate(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> generator_names();

}  // namespace mapforge

#endif  // MAPFORGE_CONSTRUCT_HPP
