#include "mapforge/operators.hpp"

#include "mapforge/error.hpp"

namespace mapforge {

namespace {

Perm compose(const Perm& first, const Perm& second) {
  Perm out(first.size());
  for (std::size_t f = 0; f < first.size(); ++f) out[f] = second[static_cast<std::size_t>(first[f])];
  return out;
}

}  // namespace

FlagSystem dual(const FlagSystem& m) {
  std::vector<Perm> conn(m.connections().rbegin(), m.connections().rend());
  return FlagSystem::validate(m.rank(), m.size(), std::move(conn));
}

FlagSystem opposite(const FlagSystem& m) {
  if (m.rank() < 2) throw Error(Errc::RankMismatch, "opposite needs rank at least 2");
  std::vector<Perm> conn = m.connections();
  conn[2] = compose(m.r(0), m.r(2));
  return FlagSystem::validate(m.rank(), m.size(), std::move(conn));
}

FlagSystem petrie(const FlagSystem& m) {
  if (m.rank() < 2) throw Error(Errc::RankMismatch, "petrie needs rank at least 2");
  if (m.rank() > 2) return dual(opposite(dual(m)));
  std::vector<Perm> conn = m.connections();
  conn[0] = compose(m.r(0), m.r(2));
  try {
    return FlagSystem::validate(2, m.size(), std::move(conn));
  } catch (const Error& e) {
    throw Error(Errc::ValidationFailure, std::string("petrie: ") + e.what());
  }
}

FlagSystem medial(const FlagSystem& m) {
  if (m.rank() != 2) throw Error(Errc::RankNotTwo, "medial needs a map");
  const std::size_t n = m.size();
  std::vector<Perm> conn(3, Perm(2 * n));
  for (std::size_t f = 0; f < n; ++f) {
    auto fl = static_cast<Flag>(f);
    for (Flag i = 0; i < 2; ++i) {
      std::size_t x = 2 * f + static_cast<std::size_t>(i);
      conn[0][x] = 2 * m.at(fl, 1) + i;
      conn[1][x] = 2 * m.at(fl, i == 0 ? 0 : 2) + i;
      conn[2][x] = 2 * fl + (1 - i);
    }
  }
  return FlagSystem::validate(2, 2 * n, std::move(conn));
}

ColorSet dual_transfer(ColorSet s) {
  ColorSet out{0, s.rank};
  for (int i = 0; i <= s.rank; ++i) {
    if (s.contains(i)) out.bits |= 1u << (s.rank - i);
  }
  return out;
}

ColorSet opposite_transfer(ColorSet s) {
  return s.contains(0) ? s ^ ColorSet{1u << 2, s.rank} : s;
}

ColorSet petrie_transfer(ColorSet s) {
  return dual_transfer(opposite_transfer(dual_transfer(s)));
}

}  // namespace mapforge
