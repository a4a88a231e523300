#include "mapforge/doubles.hpp"

#include "mapforge/error.hpp"

namespace mapforge {

DoubleResult i_double(const FlagSystem& m, ColorSet s) {
  const std::size_t n = m.size();
  const int rank = m.rank();
  s.rank = rank;
  if (auto a = find_coloring(m, s)) {
    // The sheet holding (0,0) is {(f, a(f))}; projecting it recovers m verbatim.
    Perm id(n);
    for (std::size_t f = 0; f < n; ++f) id[f] = static_cast<Flag>(f);
    return DoubleResult{true, m, id};
  }
  std::vector<Perm> conn(static_cast<std::size_t>(rank) + 1, Perm(2 * n));
  for (int j = 0; j <= rank; ++j) {
    Flag flip = s.contains(j) ? 1 : 0;
    for (std::size_t f = 0; f < n; ++f) {
      Flag g = m.at(static_cast<Flag>(f), j);
      for (Flag i = 0; i < 2; ++i) conn[static_cast<std::size_t>(j)][2 * f + static_cast<std::size_t>(i)] = 2 * g + (i ^ flip);
    }
  }
  Perm proj(2 * n);
  for (std::size_t x = 0; x < 2 * n; ++x) proj[x] = static_cast<Flag>(x / 2);
  return DoubleResult{false, FlagSystem::validate(rank, 2 * n, std::move(conn)), std::move(proj)};
}

FlagSystem sherk_double(const FlagSystem& m) {
  if (m.rank() != 2) throw Error(Errc::RankNotTwo, "sherk double needs a map");
  DoubleResult d = i_double(m, ColorSet::of({0}));
  if (d.split) throw Error(Errc::VertexBipartite, "map is vertex-bipartite, the cover splits");
  return d.system;
}

Perm sheet_swap(std::size_t flag_count) {
  Perm u(flag_count);
  for (std::size_t x = 0; x < flag_count; ++x) u[x] = static_cast<Flag>(x ^ 1u);
  return u;
}

Quotient quotient(const FlagSystem& n, const Perm& u) {
  const std::size_t sz = n.size();
  const int rank = n.rank();
  if (u.size() != sz) throw Error(Errc::NotDeck, "permutation has wrong length");
  std::vector<std::uint8_t> seen(sz, 0);
  for (Flag x : u) {
    if (x < 0 || static_cast<std::size_t>(x) >= sz || seen[static_cast<std::size_t>(x)]) {
      throw Error(Errc::NotDeck, "not a permutation of the flags");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
  for (std::size_t f = 0; f < sz; ++f) {
    for (int j = 0; j <= rank; ++j) {
      if (u[static_cast<std::size_t>(n.at(static_cast<Flag>(f), j))] != n.at(u[f], j)) {
        throw Error(Errc::NotDeck, "does not commute with r" + std::to_string(j) + " at flag " + std::to_string(f), j,
                    -1, static_cast<long>(f));
      }
    }
  }
  for (std::size_t f = 0; f < sz; ++f) {
    if (u[static_cast<std::size_t>(u[f])] != static_cast<Flag>(f)) {
      throw Error(Errc::NotInvolution, "u(u(f)) != f at flag " + std::to_string(f), -1, -1, static_cast<long>(f));
    }
  }
  for (std::size_t f = 0; f < sz; ++f) {
    if (u[f] == static_cast<Flag>(f)) {
      throw Error(Errc::HasFixedPoint, "u fixes flag " + std::to_string(f), -1, -1, static_cast<long>(f));
    }
  }
  for (std::size_t f = 0; f < sz; ++f) {
    for (int j = 0; j <= rank; ++j) {
      if (u[f] == n.at(static_cast<Flag>(f), j)) {
        throw Error(Errc::ConnectionCollision, "u(f) = f r" + std::to_string(j) + " at flag " + std::to_string(f), j,
                    -1, static_cast<long>(f));
      }
    }
  }
  Perm orbit(sz, -1);
  Flag next = 0;
  for (std::size_t f = 0; f < sz; ++f) {
    if (orbit[f] >= 0) continue;
    orbit[f] = next;
    orbit[static_cast<std::size_t>(u[f])] = next;
    ++next;
  }
  const auto half = static_cast<std::size_t>(next);
  std::vector<Perm> conn(static_cast<std::size_t>(rank) + 1, Perm(half));
  for (std::size_t f = 0; f < sz; ++f) {
    for (int j = 0; j <= rank; ++j) {
      conn[static_cast<std::size_t>(j)][static_cast<std::size_t>(orbit[f])] =
          orbit[static_cast<std::size_t>(n.at(static_cast<Flag>(f), j))];
    }
  }
  return Quotient{FlagSystem::validate(rank, half, std::move(conn)), std::move(orbit)};
}

std::optional<Recognition> recognize_i_double(const FlagSystem& n, ColorSet s) {
  s.rank = n.rank();
  auto a = find_coloring(n, s);
  if (!a) return std::nullopt;
  const std::size_t sz = n.size();
  for (std::size_t g = 1; g < sz; ++g) {
    if (a->assignment[g] == a->assignment[0]) continue;
    auto u = extend_morphism(n, n, 0, static_cast<Flag>(g));
    if (!u) continue;
    const Perm& v = *u;
    // A deck transformation is fixed by the image of one flag, so u^2 = id
    // as soon as it fixes flag 0, and u != id has no fixed points.
    if (v[static_cast<std::size_t>(v[0])] != 0) continue;
    bool collides = false;
    for (std::size_t f = 0; f < sz && !collides; ++f) {
      for (int j = 0; j <= n.rank(); ++j) {
        if (v[f] == n.at(static_cast<Flag>(f), j)) {
          collides = true;
          break;
        }
      }
    }
    if (collides) continue;
    try {
      Quotient q = quotient(n, v);
      return Recognition{v, std::move(q.system), std::move(q.projection)};
    } catch (const Error&) {
      continue;
    }
  }
  return std::nullopt;
}

}  // namespace mapforge
