#ifndef MAPFORGE_FLAG_SYSTEM_HPP
#define MAPFORGE_FLAG_SYSTEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mapforge {

using Flag = std::int32_t;
using Perm = std::vector<Flag>;
using FlagWord = std::vector<int>;

/// A flag set with rank+1 fixed-point-free involutions r_0..r_rank.
/// Only validate() creates one, so every live value satisfies the
/// involution, commuting/disjoint and transitivity invariants.
class FlagSystem {
 public:
  static FlagSystem validate(int rank, std::size_t flag_count, std::vector<Perm> connections);

  int rank() const { return rank_; }
  std::size_t size() const { return conn_.empty() ? 0 : conn_[0].size(); }
  const Perm& r(int i) const { return conn_[static_cast<std::size_t>(i)]; }
  Flag at(Flag f, int i) const { return conn_[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)]; }
  const std::vector<Perm>& connections() const { return conn_; }

  friend bool operator==(const FlagSystem& a, const FlagSystem& b) {
    return a.rank_ == b.rank_ && a.conn_ == b.conn_;
  }

 private:
  FlagSystem(int rank, std::vector<Perm> conn) : rank_(rank), conn_(std::move(conn)) {}

  int rank_;
  std::vector<Perm> conn_;
};

struct Cell {
  int dimension = 0;
  std::vector<Flag> flags;  // sorted
  std::size_t degree() const { return flags.size() / 2; }
};

/// Orbits of <r_j : j != i>, numbered by smallest flag.
std::vector<Cell> cells(const FlagSystem& m, int i);
/// Cell number of every flag, same numbering as cells().
std::vector<int> cell_index(const FlagSystem& m, int i);
std::size_t cell_count(const FlagSystem& m, int i);

/// Orbit labelling of the subgroup generated by the listed connections,
/// numbered by smallest flag.
std::vector<int> orbit_labels(const FlagSystem& m, const std::vector<int>& gens);

long euler_characteristic(const FlagSystem& m);

struct SurfaceSignature {
  bool orientable = true;
  int genus = 0;
  long euler_characteristic = 2;

  static SurfaceSignature orientable_genus(int g);
  static SurfaceSignature nonorientable_genus(int k);
  /// "o0", "o2", "n3"
  static SurfaceSignature parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

SurfaceSignature surface_signature(const FlagSystem& m);

Flag apply_word(const FlagSystem& m, Flag f, const FlagWord& w);

/// Transport f0 -> g0 along the connections. Returns the bijection when the
/// assignment is consistent and injective.
std::optional<Perm> extend_morphism(const FlagSystem& m, const FlagSystem& n, Flag f0, Flag g0);

std::optional<Perm> is_isomorphic(const FlagSystem& m, const FlagSystem& n);

std::vector<Perm> deck_transformations(const FlagSystem& m);

/// Cover degree k when phi is a projection n -> m, nullopt otherwise.
std::optional<std::size_t> check_projection(const FlagSystem& n, const FlagSystem& m, const Perm& phi);

/// Relabel flags: flag f of m becomes sigma[f].
FlagSystem relabel(const FlagSystem& m, const Perm& sigma);

}  // namespace mapforge

#endif  // MAPFORGE_FLAG_SYSTEM_HPP
