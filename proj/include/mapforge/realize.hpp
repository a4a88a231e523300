#ifndef MAPFORGE_REALIZE_HPP
#define MAPFORGE_REALIZE_HPP

#include <vector>

#include "mapforge/coloring.hpp"
#include "mapforge/flag_system.hpp"

namespace mapforge {

/// Every subgroup of the power set of {0..rank} under symmetric difference,
/// ordered by size and then by canonical text.
std::vector<ColoringGroup> subgroups_of_P(int rank);

/// The three (group, surface) pairs no map realizes.
bool is_exceptional(const ColoringGroup& h, const SurfaceSignature& s);

/// A map on s whose coloring group is exactly h; both are re-checked
/// before returning.
FlagSystem build_map_with_group(const ColoringGroup& h, const SurfaceSignature& s);

}  // namespace mapforge

#endif  // MAPFORGE_REALIZE_HPP
