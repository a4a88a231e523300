#ifndef MAPFORGE_COLORING_HPP
#define MAPFORGE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mapforge/flag_system.hpp"

namespace mapforge {

/// Subset of {0..rank} as a bitmask.
struct ColorSet {
  std::uint32_t bits = 0;
  int rank = 2;

  static ColorSet empty(int rank) { return ColorSet{0, rank}; }
  static ColorSet full(int rank) { return ColorSet{(1u << (rank + 1)) - 1, rank}; }
  static ColorSet of(std::initializer_list<int> idx, int rank = 2);
  /// "02", "e"; digits must lie in 0..rank.
  static ColorSet parse(const std::string& text, int rank);

  bool contains(int i) const { return (bits >> i) & 1u; }
  std::size_t size() const;
  ColorSet complement() const { return ColorSet{full(rank).bits & ~bits, rank}; }
  std::string to_string() const;

  friend ColorSet operator^(ColorSet a, ColorSet b) { return ColorSet{a.bits ^ b.bits, a.rank}; }
  friend bool operator==(ColorSet a, ColorSet b) { return a.bits == b.bits; }
  friend bool operator<(ColorSet a, ColorSet b);
};

struct Coloring {
  std::vector<std::uint8_t> assignment;
  ColorSet color_set;
  std::string to_string() const;
};

/// Canonically sorted set of ColorSets: by size, then lexicographically.
class ColoringGroup {
 public:
  ColoringGroup() = default;
  ColoringGroup(int rank, std::vector<ColorSet> members);

  /// Delta-closure of the generators together with the empty set.
  static ColoringGroup span(int rank, const std::vector<ColorSet>& generators);
  /// "e,0,12,012"
  static ColoringGroup parse(const std::string& text, int rank);

  int rank() const { return rank_; }
  const std::vector<ColorSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(ColorSet s) const;
  bool is_subgroup() const;
  bool orientable() const { return contains(ColorSet::full(rank_)); }
  std::string to_string() const;

  friend bool operator==(const ColoringGroup& a, const ColoringGroup& b) { return a.members_ == b.members_; }

 private:
  int rank_ = 2;
  std::vector<ColorSet> members_;
};

ColoringGroup intersect(const ColoringGroup& a, const ColoringGroup& b);

std::optional<Coloring> find_coloring(const FlagSystem& m, ColorSet s);

/// Closed word at a flag whose count of letters in s is odd; present exactly
/// when no s-coloring exists.
std::optional<std::pair<Flag, FlagWord>> inconsistent_cycle(const FlagSystem& m, ColorSet s);

ColoringGroup coloring_group(const FlagSystem& m);
ColoringGroup coloring_group_excluding_cell(const FlagSystem& m, const Cell& face);

bool cycle_consistent(const FlagSystem& m, Flag f, const FlagWord& w, ColorSet s);

/// Random word of the given length followed by a shortest path back to f.
FlagWord random_closed_word(const FlagSystem& m, Flag f, std::size_t length, std::mt19937_64& rng);

bool is_pseudo_orientable(const FlagSystem& m, ColorSet s);

enum class PsoKind { Face, Vertex, Edge, Full };

std::string pso_kind_name(PsoKind k);
PsoKind parse_pso_kind(const std::string& text);

/// Kind-specific colorability the arrow oracle is expected to match.
ColorSet pso_partner(PsoKind k);

struct ArrowAssignment {
  PsoKind kind = PsoKind::Full;
  /// One bit per carrying cell (faces for face/full, vertices for vertex,
  /// edges for edge), indexed by cell number. Bit 0 means the arrow runs
  /// along the rotation class containing the cell's smallest flag.
  std::vector<std::uint8_t> arrows;
};

std::optional<ArrowAssignment> direct_pso(const FlagSystem& m, PsoKind kind);

/// Checks the kind's matching rule for every connection crossing.
bool check_arrows(const FlagSystem& m, const ArrowAssignment& a);

/// Representative flags of crossings whose matching rule conflicts with
/// earlier ones in a spanning assignment; empty iff direct_pso succeeds.
std::vector<Flag> pso_conflicts(const FlagSystem& m, PsoKind kind);

/// i-face graph (i-faces joined when r_i-adjacent) is bipartite. Computed
/// on the cell graph without touching flag colorings.
bool i_face_bipartite(const FlagSystem& m, int i);

}  // namespace mapforge

#endif  // MAPFORGE_COLORING_HPP
