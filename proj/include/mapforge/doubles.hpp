#ifndef MAPFORGE_DOUBLES_HPP
#define MAPFORGE_DOUBLES_HPP

#include <optional>

#include "mapforge/coloring.hpp"
#include "mapforge/flag_system.hpp"

namespace mapforge {

struct DoubleResult {
  bool split = false;
  FlagSystem system;
  Perm projection;
};

/// Two sheets, flag (f, i) numbered 2f+i, crossing sheets on connections
/// in s. When s is colorable the sheets separate and the component of
/// (0, 0) is returned, relabelled so that (f, a(f)) becomes f.
DoubleResult i_double(const FlagSystem& m, ColorSet s);

/// The {0}-double. Throws VertexBipartite when it would split.
FlagSystem sherk_double(const FlagSystem& m);

struct Quotient {
  FlagSystem system;
  Perm projection;
};

/// Identifies f with u(f). Orbits are numbered in order of their smaller flag.
Quotient quotient(const FlagSystem& n, const Perm& u);

struct Recognition {
  Perm deck;
  FlagSystem base;
  Perm projection;
};

std::optional<Recognition> recognize_i_double(const FlagSystem& n, ColorSet s);

/// Permutation swapping the two sheets of an unsplit double.
Perm sheet_swap(std::size_t flag_count);

}  // namespace mapforge

#endif  // MAPFORGE_DOUBLES_HPP
