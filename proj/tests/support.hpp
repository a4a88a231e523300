// Hand-rolled generators and brute-force oracles shared by the unit tests.
// Nothing here calls the library's coloring or orbit code.
#ifndef MAPFORGE_TESTS_SUPPORT_HPP
#define MAPFORGE_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bitset>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mapforge/flag_system.hpp"

namespace testsupport {

using mapforge::Flag;
using mapforge::FlagSystem;
using mapforge::Perm;

inline std::uint64_t test_seed() {
  const char* raw = std::getenv("MAPFORGE_SEED");
  return raw && *raw ? std::strtoull(raw, nullptr, 10) : 20240917ULL;
}

// Orbit count of <r_j : j in gens> by depth-first search.
inline std::size_t orbit_count(const FlagSystem& m, const std::vector<int>& gens) {
  std::vector<char> seen(m.size(), 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Flag> stack{static_cast<Flag>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (int g : gens) {
        Flag h = m.at(f, g);
        if (!seen[static_cast<std::size_t>(h)]) {
          seen[static_cast<std::size_t>(h)] = 1;
          stack.push_back(h);
        }
      }
    }
  }
  return count;
}

// Orbit label per flag, by depth-first search.
inline std::vector<int> orbit_label_oracle(const FlagSystem& m, const std::vector<int>& gens) {
  std::vector<int> label(m.size(), -1);
  int next = 0;
  for (std::size_t s = 0; s < m.size(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Flag> stack{static_cast<Flag>(s)};
    label[s] = next;
    while (!stack.empty()) {
      Flag f = stack.back();
      stack.pop_back();
      for (int g : gens) {
        auto h = static_cast<std::size_t>(m.at(f, g));
        if (label[h] < 0) {
          label[h] = next;
          stack.push_back(static_cast<Flag>(h));
        }
      }
    }
    ++next;
  }
  return label;
}

// Bipartiteness of the graph on `node_gens`-orbits where f and f r_j are adjacent.
inline bool bipartite_oracle(const FlagSystem& m, const std::vector<int>& node_gens, int j) {
  auto label = orbit_label_oracle(m, node_gens);
  int nodes = 1 + *std::max_element(label.begin(), label.end());
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (std::size_t f = 0; f < m.size(); ++f) {
    int a = label[f], b = label[static_cast<std::size_t>(m.at(static_cast<Flag>(f), j))];
    adj[static_cast<std::size_t>(a)].push_back(b);
  }
  std::vector<int> side(static_cast<std::size_t>(nodes), -1);
  for (int s = 0; s < nodes; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v : adj[static_cast<std::size_t>(u)]) {
        if (side[static_cast<std::size_t>(v)] < 0) {
          side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline long chi_oracle(const FlagSystem& m) {
  return static_cast<long>(orbit_count(m, {1, 2})) - static_cast<long>(orbit_count(m, {0, 2})) +
         static_cast<long>(orbit_count(m, {0, 1}));
}

// Solves a(f) + a(f r_j) = [j in I] over GF(2) by Gaussian elimination.
// Independent of any propagation order; limited to 512 flags.
inline bool colorable_oracle(const FlagSystem& m, std::uint32_t bits) {
  constexpr std::size_t W = 513;
  const std::size_t n = m.size();
  if (n + 1 > W) throw std::runtime_error("oracle limited to 512 flags");
  std::vector<std::bitset<W>> rows;
  for (std::size_t f = 0; f < n; ++f) {
    for (int j = 0; j <= m.rank(); ++j) {
      auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), j));
      if (g < f) continue;
      std::bitset<W> r;
      r.flip(f);
      r.flip(g);
      if ((bits >> j) & 1u) r.set(n);
      rows.push_back(r);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && !rows[piv].test(col)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (rows[r].test(n)) return false;
  }
  return true;
}

inline std::string group_oracle(const FlagSystem& m) {
  std::vector<std::string> names;
  for (std::uint32_t b = 0; b < (1u << (m.rank() + 1)); ++b) {
    if (!colorable_oracle(m, b)) continue;
    std::string s;
    for (int i = 0; i <= m.rank(); ++i) {
      if ((b >> i) & 1u) s += static_cast<char>('0' + i);
    }
    names.push_back(s.empty() ? "e" : s);
  }
  std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    std::size_t la = a == "e" ? 0 : a.size(), lb = b == "e" ? 0 : b.size();
    return la != lb ? la < lb : a < b;
  });
  std::string out;
  for (const auto& s : names) out += (out.empty() ? "" : ",") + s;
  return out;
}

// Random one-polygon gluing word with `letters` distinct letters, random
// order and random case.
inline std::string random_word(std::mt19937_64& rng, int letters) {
  std::string w;
  for (int i = 0; i < letters; ++i) {
    for (int k = 0; k < 2; ++k) {
      char c = static_cast<char>('a' + i);
      if (rng() & 1) c = static_cast<char>(c - 'a' + 'A');
      w += c;
    }
  }
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

inline Perm random_perm(std::mt19937_64& rng, std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline bool is_i_coloring(const FlagSystem& m, const std::vector<std::uint8_t>& a, std::uint32_t bits) {
  for (std::size_t f = 0; f < m.size(); ++f) {
    for (int j = 0; j <= m.rank(); ++j) {
      bool differs = a[f] != a[static_cast<std::size_t>(m.at(static_cast<Flag>(f), j))];
      if (differs != static_cast<bool>((bits >> j) & 1u)) return false;
    }
  }
  return true;
}

}  // namespace testsupport

#endif  // MAPFORGE_TESTS_SUPPORT_HPP
