#include "mapforge/flag_system.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "mapforge/coloring.hpp"
#include "mapforge/error.hpp"
#include "mapforge/union_find.hpp"

namespace mapforge {

namespace {

std::string at_flag(int i, Flag f) {
  std::ostringstream os;
  os << "r" << i << " at flag " << f;
  return os.str();
}

}  // namespace

FlagSystem FlagSystem::validate(int rank, std::size_t flag_count, std::vector<Perm> conn) {
  if (rank < 1) throw Error(Errc::OutOfRange, "rank must be at least 1");
  if (flag_count < 1) throw Error(Errc::OutOfRange, "need at least one flag");
  if (conn.size() != static_cast<std::size_t>(rank) + 1) {
    throw Error(Errc::OutOfRange, "expected " + std::to_string(rank + 1) + " connections, got " +
                                      std::to_string(conn.size()));
  }
  const auto n = static_cast<Flag>(flag_count);
  for (int i = 0; i <= rank; ++i) {
    const Perm& p = conn[static_cast<std::size_t>(i)];
    if (p.size() != flag_count) {
      throw Error(Errc::OutOfRange, "r" + std::to_string(i) + " has " + std::to_string(p.size()) +
                                        " entries, expected " + std::to_string(flag_count),
                  i);
    }
    for (Flag f = 0; f < n; ++f) {
      if (p[f] < 0 || p[f] >= n) throw Error(Errc::OutOfRange, at_flag(i, f), i, -1, f);
    }
  }
  for (int i = 0; i <= rank; ++i) {
    const Perm& p = conn[static_cast<std::size_t>(i)];
    for (Flag f = 0; f < n; ++f) {
      if (p[f] == f) throw Error(Errc::FixedPoint, at_flag(i, f), i, -1, f);
      if (p[p[f]] != f) throw Error(Errc::NotInvolution, at_flag(i, f), i, -1, f);
    }
  }
  for (int i = 0; i <= rank; ++i) {
    for (int j = i + 2; j <= rank; ++j) {
      const Perm& a = conn[static_cast<std::size_t>(i)];
      const Perm& b = conn[static_cast<std::size_t>(j)];
      for (Flag f = 0; f < n; ++f) {
        if (a[b[f]] != b[a[f]]) {
          throw Error(Errc::NonCommuting,
                      "r" + std::to_string(i) + ", r" + std::to_string(j) + " at flag " + std::to_string(f), i,
                      j, f);
        }
        if (a[f] == b[f]) {
          throw Error(Errc::NotDisjoint,
                      "r" + std::to_string(i) + ", r" + std::to_string(j) + " at flag " + std::to_string(f), i,
                      j, f);
        }
      }
    }
  }
  UnionFind uf(flag_count);
  std::size_t components = flag_count;
  for (const Perm& p : conn) {
    for (Flag f = 0; f < n; ++f) {
      if (uf.unite(static_cast<std::size_t>(f), static_cast<std::size_t>(p[f]))) --components;
    }
  }
  if (components != 1) {
    throw Error(Errc::Disconnected, std::to_string(components) + " components",
                static_cast<long>(components));
  }
  return FlagSystem(rank, std::move(conn));
}

std::vector<int> orbit_labels(const FlagSystem& m, const std::vector<int>& gens) {
  const std::size_t n = m.size();
  UnionFind uf(n);
  for (int g : gens) {
    const Perm& p = m.r(g);
    for (std::size_t f = 0; f < n; ++f) uf.unite(f, static_cast<std::size_t>(p[f]));
  }
  std::vector<int> root_label(n, -1);
  std::vector<int> label(n);
  int next = 0;
  for (std::size_t f = 0; f < n; ++f) {
    std::size_t r = uf.find(f);
    if (root_label[r] < 0) root_label[r] = next++;
    label[f] = root_label[r];
  }
  return label;
}

std::vector<int> cell_index(const FlagSystem& m, int i) {
  if (i < 0 || i > m.rank()) throw Error(Errc::OutOfRange, "cell dimension " + std::to_string(i));
  std::vector<int> gens;
  for (int j = 0; j <= m.rank(); ++j) {
    if (j != i) gens.push_back(j);
  }
  return orbit_labels(m, gens);
}

std::vector<Cell> cells(const FlagSystem& m, int i) {
  std::vector<int> idx = cell_index(m, i);
  int count = idx.empty() ? 0 : *std::max_element(idx.begin(), idx.end()) + 1;
  std::vector<Cell> out(static_cast<std::size_t>(count));
  for (auto& c : out) c.dimension = i;
  for (std::size_t f = 0; f < idx.size(); ++f) out[static_cast<std::size_t>(idx[f])].flags.push_back(static_cast<Flag>(f));
  return out;
}

std::size_t cell_count(const FlagSystem& m, int i) {
  std::vector<int> idx = cell_index(m, i);
  return idx.empty() ? 0 : static_cast<std::size_t>(*std::max_element(idx.begin(), idx.end()) + 1);
}

long euler_characteristic(const FlagSystem& m) {
  if (m.rank() != 2) throw Error(Errc::RankNotTwo, "euler characteristic needs a map");
  return static_cast<long>(cell_count(m, 0)) - static_cast<long>(cell_count(m, 1)) +
         static_cast<long>(cell_count(m, 2));
}

SurfaceSignature SurfaceSignature::orientable_genus(int g) {
  return SurfaceSignature{true, g, 2L - 2L * g};
}

SurfaceSignature SurfaceSignature::nonorientable_genus(int k) {
  return SurfaceSignature{false, k, 2L - k};
}

SurfaceSignature SurfaceSignature::parse(const std::string& text) {
  if (text.size() < 2 || (text[0] != 'o' && text[0] != 'n')) {
    throw Error(Errc::Parse, "surface must look like o<g> or n<k>: '" + text + "'");
  }
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw Error(Errc::Parse, "bad surface genus: '" + text + "'");
  }
  int g = std::stoi(text.substr(1));
  if (text[0] == 'o') return orientable_genus(g);
  if (g < 1) throw Error(Errc::Parse, "non-orientable genus must be at least 1");
  return nonorientable_genus(g);
}

std::string SurfaceSignature::to_string() const {
  return (orientable ? "o" : "n") + std::to_string(genus);
}

SurfaceSignature surface_signature(const FlagSystem& m) {
  long chi = euler_characteristic(m);
  bool orientable = find_coloring(m, ColorSet::full(m.rank())).has_value();
  if (orientable) {
    if (chi % 2 != 0) {
      throw Error(Errc::OddCharacteristicOrientable, "chi=" + std::to_string(chi));
    }
    return SurfaceSignature{true, static_cast<int>((2 - chi) / 2), chi};
  }
  return SurfaceSignature{false, static_cast<int>(2 - chi), chi};
}

Flag apply_word(const FlagSystem& m, Flag f, const FlagWord& w) {
  if (f < 0 || static_cast<std::size_t>(f) >= m.size()) throw Error(Errc::OutOfRange, "flag " + std::to_string(f));
  for (int i : w) {
    if (i < 0 || i > m.rank()) throw Error(Errc::OutOfRange, "connection index " + std::to_string(i));
    f = m.at(f, i);
  }
  return f;
}

std::optional<Perm> extend_morphism(const FlagSystem& m, const FlagSystem& n, Flag f0, Flag g0) {
  if (m.rank() != n.rank()) throw Error(Errc::RankMismatch, "ranks differ");
  if (m.size() != n.size()) return std::nullopt;
  const std::size_t sz = m.size();
  Perm phi(sz, -1);
  std::vector<std::uint8_t> used(sz, 0);
  phi[static_cast<std::size_t>(f0)] = g0;
  used[static_cast<std::size_t>(g0)] = 1;
  std::vector<Flag> queue{f0};
  queue.reserve(sz);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Flag f = queue[head];
    Flag g = phi[static_cast<std::size_t>(f)];
    for (int i = 0; i <= m.rank(); ++i) {
      Flag fi = m.at(f, i);
      Flag gi = n.at(g, i);
      Flag& slot = phi[static_cast<std::size_t>(fi)];
      if (slot < 0) {
        if (used[static_cast<std::size_t>(gi)]) return std::nullopt;
        slot = gi;
        used[static_cast<std::size_t>(gi)] = 1;
        queue.push_back(fi);
      } else if (slot != gi) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != sz) return std::nullopt;
  return phi;
}

namespace {

// Cheap per-flag invariant: lengths of the r_i r_{i+1} cycles through f.
std::vector<std::uint64_t> flag_profile(const FlagSystem& m) {
  const std::size_t sz = m.size();
  std::vector<std::uint64_t> prof(sz, 0);
  for (int i = 0; i < m.rank(); ++i) {
    std::vector<std::uint32_t> len(sz, 0);
    for (std::size_t f = 0; f < sz; ++f) {
      if (len[f]) continue;
      std::vector<Flag> cyc;
      Flag g = static_cast<Flag>(f);
      do {
        cyc.push_back(g);
        g = m.at(m.at(g, i), i + 1);
      } while (g != static_cast<Flag>(f));
      for (Flag h : cyc) len[static_cast<std::size_t>(h)] = static_cast<std::uint32_t>(cyc.size());
    }
    for (std::size_t f = 0; f < sz; ++f) prof[f] = prof[f] * 1000003ULL + len[f];
  }
  return prof;
}

}  // namespace

std::optional<Perm> is_isomorphic(const FlagSystem& m, const FlagSystem& n) {
  if (m.rank() != n.rank()) throw Error(Errc::RankMismatch, "ranks differ");
  if (m.size() != n.size()) return std::nullopt;
  auto pm = flag_profile(m);
  auto pn = flag_profile(n);
  {
    auto a = pm;
    auto b = pn;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  for (std::size_t g = 0; g < n.size(); ++g) {
    if (pn[g] != pm[0]) continue;
    if (auto phi = extend_morphism(m, n, 0, static_cast<Flag>(g))) return phi;
  }
  return std::nullopt;
}

std::vector<Perm> deck_transformations(const FlagSystem& m) {
  auto prof = flag_profile(m);
  std::vector<Perm> out;
  for (std::size_t g = 0; g < m.size(); ++g) {
    if (prof[g] != prof[0]) continue;
    if (auto u = extend_morphism(m, m, 0, static_cast<Flag>(g))) out.push_back(std::move(*u));
  }
  return out;
}

std::optional<std::size_t> check_projection(const FlagSystem& n, const FlagSystem& m, const Perm& phi) {
  if (m.rank() != n.rank()) throw Error(Errc::RankMismatch, "ranks differ");
  if (phi.size() != n.size()) return std::nullopt;
  const auto msz = static_cast<Flag>(m.size());
  for (Flag x : phi) {
    if (x < 0 || x >= msz) return std::nullopt;
  }
  for (std::size_t f = 0; f < n.size(); ++f) {
    for (int i = 0; i <= n.rank(); ++i) {
      if (phi[static_cast<std::size_t>(n.at(static_cast<Flag>(f), i))] != m.at(phi[f], i)) return std::nullopt;
    }
  }
  std::vector<std::size_t> fiber(m.size(), 0);
  for (Flag x : phi) ++fiber[static_cast<std::size_t>(x)];
  for (std::size_t c : fiber) {
    if (c != fiber[0]) return std::nullopt;
  }
  return fiber[0];
}

FlagSystem relabel(const FlagSystem& m, const Perm& sigma) {
  std::vector<Perm> conn(static_cast<std::size_t>(m.rank()) + 1, Perm(m.size()));
  for (int i = 0; i <= m.rank(); ++i) {
    for (std::size_t f = 0; f < m.size(); ++f) {
      conn[static_cast<std::size_t>(i)][static_cast<std::size_t>(sigma[f])] = sigma[static_cast<std::size_t>(m.at(static_cast<Flag>(f), i))];
    }
  }
  return FlagSystem::validate(m.rank(), m.size(), std::move(conn));
}

}  // namespace mapforge
