#ifndef MAPFORGE_OPERATORS_HPP
#define MAPFORGE_OPERATORS_HPP

#include "mapforge/coloring.hpp"
#include "mapforge/flag_system.hpp"

namespace mapforge {

/// Connection i becomes connection rank-i.
FlagSystem dual(const FlagSystem& m);

/// Rank 2: [r0 r2, r1, r2]. Higher rank: dual(opposite(dual(m))).
FlagSystem petrie(const FlagSystem& m);

/// r2 replaced by r0 r2.
FlagSystem opposite(const FlagSystem& m);

/// Flags 2f+i on the doubled flag set.
FlagSystem medial(const FlagSystem& m);

/// Where the transfer rules send a colorable set.
ColorSet dual_transfer(ColorSet s);
ColorSet opposite_transfer(ColorSet s);
ColorSet petrie_transfer(ColorSet s);

}  // namespace mapforge

#endif  // MAPFORGE_OPERATORS_HPP
