#ifndef MAPFORGE_SURGERY_HPP
#define MAPFORGE_SURGERY_HPP

#include <string>

#include "mapforge/flag_system.hpp"

namespace mapforge {

// Surgeries keep every existing flag index and append the new flags.

/// Puts a degree-2 vertex in the middle of edge e (edge cell number).
FlagSystem subdivide_edge(const FlagSystem& m, int e);
/// Adds a parallel copy of e bounding a new bigon face.
FlagSystem double_edge(const FlagSystem& m, int e);
/// Replaces e by three parallel edges. Loops are rejected.
FlagSystem triple_edge(const FlagSystem& m, int e);

/// Same operations addressed by any flag on the edge.
FlagSystem subdivide_at(const FlagSystem& m, Flag f);
FlagSystem double_at(const FlagSystem& m, Flag f);

enum class Goal { VertexBipartite, FaceBipartite, Vpso, Fpso, OddFace, OddVertex };

Goal parse_goal(const std::string& text);
std::string goal_name(Goal g);
bool goal_holds(const FlagSystem& m, Goal g);

/// Repairs m by subdividing or doubling edges until the goal holds.
FlagSystem make_property(const FlagSystem& m, Goal goal);

/// Removes the faces of fM and fN and glues the two boundaries. Flags of m
/// outside the face come first, then those of n, each in increasing order.
/// Throws Disconnected when a face's neighbours meet only at vertices.
FlagSystem connected_sum(const FlagSystem& m, const FlagSystem& n, Flag fM, Flag fN);

/// Faces of m along which sums intersect coloring groups: no r2
/// link inside the face, the remaining faces stay edge-connected, and
/// removing it keeps the same group.
bool face_is_summable(const FlagSystem& m, Flag f);

}  // namespace mapforge

#endif  // MAPFORGE_SURGERY_HPP
