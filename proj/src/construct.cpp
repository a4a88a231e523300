#include "mapforge/construct.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "mapforge/error.hpp"

namespace mapforge {

RotationSystem RotationSystem::from_neighbors(const std::vector<std::vector<int>>& neighbors) {
  RotationSystem rs;
  rs.vertex_count = neighbors.size();
  rs.rotations.resize(neighbors.size());
  std::map<std::pair<int, int>, int> dart_of;
  int next = 0;
  for (std::size_t v = 0; v < neighbors.size(); ++v) {
    for (int w : neighbors[v]) {
      auto key = std::make_pair(static_cast<int>(v), w);
      if (dart_of.count(key)) throw Error(Errc::BadParameters, "repeated neighbour in rotation");
      dart_of[key] = next;
      rs.rotations[v].push_back(next++);
    }
  }
  for (const auto& [key, d] : dart_of) {
    if (key.first > key.second) continue;
    auto back = dart_of.find({key.second, key.first});
    if (back == dart_of.end()) throw Error(Errc::BadParameters, "neighbour lists are not symmetric");
    rs.edge_pairs.emplace_back(d, back->second);
    rs.edge_signs.push_back(1);
  }
  return rs;
}

FlagSystem from_rotation_system(const RotationSystem& rs) {
  const std::size_t darts = rs.dart_count();
  if (rs.edge_signs.size() != rs.edge_pairs.size()) throw Error(Errc::BadParameters, "one sign per edge expected");
  if (rs.rotations.size() != rs.vertex_count) throw Error(Errc::BadParameters, "one rotation per vertex expected");
  std::vector<int> partner(darts, -1);
  std::vector<int> sign(darts, 0);
  for (std::size_t e = 0; e < rs.edge_pairs.size(); ++e) {
    auto [a, b] = rs.edge_pairs[e];
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= darts || static_cast<std::size_t>(b) >= darts || a == b ||
        partner[static_cast<std::size_t>(a)] >= 0 || partner[static_cast<std::size_t>(b)] >= 0) {
      throw Error(Errc::BadParameters, "edge pairs must partition the darts");
    }
    if (rs.edge_signs[e] != 1 && rs.edge_signs[e] != -1) throw Error(Errc::BadParameters, "edge sign must be +1 or -1");
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
    sign[static_cast<std::size_t>(a)] = sign[static_cast<std::size_t>(b)] = rs.edge_signs[e];
  }
  std::vector<int> next(darts, -1);
  for (const auto& rot : rs.rotations) {
    for (std::size_t k = 0; k < rot.size(); ++k) {
      int d = rot[k];
      if (d < 0 || static_cast<std::size_t>(d) >= darts || next[static_cast<std::size_t>(d)] >= 0) {
        throw Error(Errc::BadParameters, "rotations must partition the darts");
      }
      next[static_cast<std::size_t>(d)] = rot[(k + 1) % rot.size()];
    }
  }
  for (int x : next) {
    if (x < 0) throw Error(Errc::BadParameters, "dart missing from every rotation");
  }
  std::vector<Perm> conn(3, Perm(2 * darts));
  for (std::size_t d = 0; d < darts; ++d) {
    auto plus = static_cast<Flag>(2 * d);
    auto minus = static_cast<Flag>(2 * d + 1);
    auto nx = static_cast<Flag>(next[d]);
    auto pd = static_cast<Flag>(partner[d]);
    conn[2][static_cast<std::size_t>(plus)] = minus;
    conn[2][static_cast<std::size_t>(minus)] = plus;
    conn[1][static_cast<std::size_t>(plus)] = 2 * nx + 1;
    conn[1][static_cast<std::size_t>(2 * nx + 1)] = plus;
    if (sign[d] > 0) {
      conn[0][static_cast<std::size_t>(plus)] = 2 * pd + 1;
      conn[0][static_cast<std::size_t>(minus)] = 2 * pd;
    } else {
      conn[0][static_cast<std::size_t>(plus)] = 2 * pd;
      conn[0][static_cast<std::size_t>(minus)] = 2 * pd + 1;
    }
  }
  return FlagSystem::validate(2, 2 * darts, std::move(conn));
}

FlagSystem from_polygons(const PolygonComplex& pc) {
  std::vector<std::size_t> offset(pc.sizes.size() + 1, 0);
  for (std::size_t p = 0; p < pc.sizes.size(); ++p) {
    if (pc.sizes[p] < 1) throw Error(Errc::BadParameters, "polygon needs at least one side");
    offset[p + 1] = offset[p] + 2 * static_cast<std::size_t>(pc.sizes[p]);
  }
  const std::size_t n = offset.back();
  if (n == 0) throw Error(Errc::BadParameters, "no polygons");
  auto id = [&](int p, int s, int h) { return static_cast<Flag>(offset[static_cast<std::size_t>(p)] + 2 * static_cast<std::size_t>(s) + static_cast<std::size_t>(h)); };
  std::vector<Perm> conn(3, Perm(n, -1));
  for (std::size_t p = 0; p < pc.sizes.size(); ++p) {
    int k = pc.sizes[p];
    for (int s = 0; s < k; ++s) {
      auto pi = static_cast<int>(p);
      conn[0][static_cast<std::size_t>(id(pi, s, 0))] = id(pi, s, 1);
      conn[0][static_cast<std::size_t>(id(pi, s, 1))] = id(pi, s, 0);
      Flag a = id(pi, s, 1);
      Flag b = id(pi, (s + 1) % k, 0);
      conn[1][static_cast<std::size_t>(a)] = b;
      conn[1][static_cast<std::size_t>(b)] = a;
    }
  }
  for (const SideGluing& g : pc.gluings) {
    auto bad = [&](int p, int s) {
      return p < 0 || static_cast<std::size_t>(p) >= pc.sizes.size() || s < 0 || s >= pc.sizes[static_cast<std::size_t>(p)];
    };
    if (bad(g.polygon_a, g.side_a) || bad(g.polygon_b, g.side_b)) throw Error(Errc::BadParameters, "gluing names a missing side");
    for (int h = 0; h < 2; ++h) {
      Flag a = id(g.polygon_a, g.side_a, h);
      Flag b = id(g.polygon_b, g.side_b, g.orientable ? 1 - h : h);
      if (conn[2][static_cast<std::size_t>(a)] >= 0 || conn[2][static_cast<std::size_t>(b)] >= 0) {
        throw Error(Errc::BadParameters, "side glued twice");
      }
      conn[2][static_cast<std::size_t>(a)] = b;
      conn[2][static_cast<std::size_t>(b)] = a;
    }
  }
  for (Flag x : conn[2]) {
    if (x < 0) throw Error(Errc::BadParameters, "unglued side");
  }
  return FlagSystem::validate(2, n, std::move(conn));
}

FlagSystem polygon_gluing(const std::string& word) {
  if (word.empty() || word.size() % 2 != 0) throw Error(Errc::BadParameters, "gluing word needs even positive length");
  std::map<char, std::vector<int>> where;
  for (std::size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (!std::isalpha(static_cast<unsigned char>(c))) throw Error(Errc::BadParameters, "gluing word must be letters");
    where[static_cast<char>(std::tolower(static_cast<unsigned char>(c)))].push_back(static_cast<int>(i));
  }
  PolygonComplex pc;
  pc.sizes = {static_cast<int>(word.size())};
  for (const auto& [letter, pos] : where) {
    if (pos.size() != 2) throw Error(Errc::BadParameters, std::string("letter '") + letter + "' must occur exactly twice");
    bool upper_a = std::isupper(static_cast<unsigned char>(word[static_cast<std::size_t>(pos[0])])) != 0;
    bool upper_b = std::isupper(static_cast<unsigned char>(word[static_cast<std::size_t>(pos[1])])) != 0;
    // tails meet tails: same case puts both tails on the same half
    pc.gluings.push_back({0, pos[0], 0, pos[1], upper_a != upper_b});
  }
  return from_polygons(pc);
}

std::string nonorientable_word(int k) {
  if (k < 1 || k > 26) throw Error(Errc::BadParameters, "non-orientable genus out of range");
  std::string w;
  for (int i = 0; i < k; ++i) w += std::string(2, static_cast<char>('a' + i));
  return w;
}

std::string orientable_word(int g) {
  if (g < 0 || g > 13) throw Error(Errc::BadParameters, "orientable genus out of range");
  if (g == 0) return "aA";
  std::string w;
  for (int i = 0; i < g; ++i) {
    char a = static_cast<char>('a' + 2 * i);
    char b = static_cast<char>(a + 1);
    w += a;
    w += b;
    w += static_cast<char>(std::toupper(a));
    w += static_cast<char>(std::toupper(b));
  }
  return w;
}

namespace {

// Neighbour lists in counterclockwise order seen from outside, computed from
// the standard coordinates.
const std::map<std::string, std::vector<std::vector<int>>>& platonic_tables() {
  static const std::map<std::string, std::vector<std::vector<int>>> tables = {
      {"tetrahedron", {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}},
      {"cube", {{1, 2, 4}, {0, 5, 3}, {0, 3, 6}, {1, 7, 2}, {0, 6, 5}, {1, 4, 7}, {2, 7, 4}, {3, 5, 6}}},
      {"octahedron", {{2, 4, 3, 5}, {2, 5, 3, 4}, {0, 5, 1, 4}, {0, 4, 1, 5}, {0, 2, 1, 3}, {0, 3, 1, 2}}},
      {"icosahedron",
       {{1, 2, 6, 5, 7},
        {7, 3, 8, 2, 0},
        {0, 1, 8, 4, 6},
        {7, 11, 9, 8, 1},
        {8, 9, 10, 6, 2},
        {6, 10, 11, 7, 0},
        {0, 2, 4, 10, 5},
        {0, 5, 11, 3, 1},
        {1, 3, 9, 4, 2},
        {3, 11, 10, 4, 8},
        {4, 9, 11, 5, 6},
        {3, 7, 5, 10, 9}}},
      {"dodecahedron",
       {{9, 10, 8},  {11, 16, 9}, {10, 12, 14}, {12, 16, 17}, {8, 13, 15}, {15, 19, 11}, {14, 18, 13},
        {17, 19, 18}, {0, 14, 4}, {0, 15, 1},   {16, 2, 0},   {5, 17, 1},  {2, 3, 18},   {4, 6, 19},
        {6, 8, 2},   {4, 5, 9},  {1, 3, 10},   {3, 11, 7},   {6, 12, 7},  {13, 7, 5}}},
  };
  return tables;
}

}  // namespace

FlagSystem platonic(const std::string& name) {
  const auto& t = platonic_tables();
  auto it = t.find(name);
  if (it == t.end()) throw Error(Errc::UnknownName, "no platonic solid named '" + name + "'");
  return from_rotation_system(RotationSystem::from_neighbors(it->second));
}

FlagSystem tri_torus(int m, int n) {
  if (m < 1 || n < 1) throw Error(Errc::BadParameters, "tri_torus needs m, n >= 1");
  auto vid = [&](int i, int j) { return ((j % n + n) % n) * m + ((i % m + m) % m); };
  RotationSystem rs;
  rs.vertex_count = static_cast<std::size_t>(m * n);
  rs.rotations.resize(rs.vertex_count);
  // edge (v, t) leaves v in lattice direction t; its darts are 2(3v+t) at v
  // and 2(3v+t)+1 at the far end
  for (int v = 0; v < m * n; ++v) {
    for (int t = 0; t < 3; ++t) {
      int e = 3 * v + t;
      rs.edge_pairs.emplace_back(2 * e, 2 * e + 1);
      rs.edge_signs.push_back(1);
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      int v = vid(i, j);
      auto out = [&](int t) { return 2 * (3 * v + t); };
      auto in = [&](int from, int t) { return 2 * (3 * from + t) + 1; };
      rs.rotations[static_cast<std::size_t>(v)] = {out(0), out(1), out(2), in(vid(i - 1, j), 0), in(vid(i, j - 1), 1),
                                                    in(vid(i + 1, j - 1), 2)};
    }
  }
  return from_rotation_system(rs);
}

FlagSystem grid_G(int m, int n, int k) {
  if (m < 1 || n < 1 || k < 0 || k > n) throw Error(Errc::BadParameters, "grid_G needs m, n >= 1 and 0 <= k <= n");
  enum { Bottom = 0, Right = 1, Top = 2, Left = 3 };
  auto sq = [&](int i, int j) { return j * m + i; };
  PolygonComplex pc;
  pc.sizes.assign(static_cast<std::size_t>(m * n), 4);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      if (i + 1 < m) pc.gluings.push_back({sq(i, j), Right, sq(i + 1, j), Left, true});
      pc.gluings.push_back({sq(i, j), Top, sq(i, (j + 1) % n), Bottom, true});
    }
  }
  // across the cylinder: row j meets the diametrically opposite row
  for (int j = 0; j < n; ++j) pc.gluings.push_back({sq(0, j), Left, sq(m - 1, n - 1 - j), Right, j < k});
  return from_polygons(pc);
}

FlagSystem strip_map(int h, const std::vector<int>& swaps, int parity) {
  if (h < 1 || (parity != 0 && parity != 1)) throw Error(Errc::BadParameters, "strip_map needs h >= 1 and parity 0 or 1");
  std::vector<int> perm(static_cast<std::size_t>(h));
  std::iota(perm.begin(), perm.end(), 0);
  for (int s : swaps) {
    if (s < 0 || s + 1 >= h) throw Error(Errc::BadParameters, "swap index out of range");
    std::swap(perm[static_cast<std::size_t>(s)], perm[static_cast<std::size_t>(s + 1)]);
  }
  enum { Bottom = 0, Right = 1, Top = 2, Left = 3 };
  PolygonComplex pc;
  pc.sizes.assign(static_cast<std::size_t>(h), 4);
  for (int y = 0; y < h; ++y) pc.gluings.push_back({y, Top, (y + 1) % h, Bottom, true});
  const int twisted = h - parity;
  for (int y = 0; y < h; ++y) {
    int z = perm[static_cast<std::size_t>(y)];
    if (y < twisted) {
      auto lune = static_cast<int>(pc.sizes.size());
      pc.sizes.push_back(2);
      pc.gluings.push_back({y, Left, lune, 0, true});
      pc.gluings.push_back({lune, 1, z, Right, false});
    } else {
      pc.gluings.push_back({y, Left, z, Right, true});
    }
  }
  return from_polygons(pc);
}

FlagSystem cube_maniplex(int d) {
  if (d < 2 || d > 7) throw Error(Errc::BadParameters, "cube_maniplex needs 2 <= d <= 7");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, std::size_t> perm_id;
  for (std::size_t i = 0; i < perms.size(); ++i) perm_id[perms[i]] = i;
  const std::size_t cube = std::size_t{1} << d;
  const std::size_t n = cube * perms.size();
  auto id = [&](std::size_t v, std::size_t pi) { return static_cast<Flag>(pi * cube + v); };
  std::vector<Perm> conn(static_cast<std::size_t>(d), Perm(n));
  for (std::size_t pi = 0; pi < perms.size(); ++pi) {
    const auto& pm = perms[pi];
    for (std::size_t v = 0; v < cube; ++v) {
      conn[0][static_cast<std::size_t>(id(v, pi))] = id(v ^ (std::size_t{1} << pm[0]), pi);
      for (int i = 1; i < d; ++i) {
        auto q = pm;
        std::swap(q[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(i)]);
        conn[static_cast<std::size_t>(i)][static_cast<std::size_t>(id(v, pi))] = id(v, perm_id[q]);
      }
    }
  }
  return FlagSystem::validate(d - 1, n, std::move(conn));
}

namespace {

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& gen) {
  if (i >= params.size()) throw Error(Errc::BadParameters, gen + ": missing parameter " + std::to_string(i + 1));
  try {
    std::size_t used = 0;
    int v = std::stoi(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::BadParameters, gen + ": parameter '" + params[i] + "' is not an integer");
  }
}

void arity(const std::vector<std::string>& params, std::size_t lo, std::size_t hi, const std::string& gen) {
  if (params.size() < lo || params.size() > hi) throw Error(Errc::BadParameters, gen + ": wrong number of parameters");
}

}  // namespace

FlagSystem generate(const std::string& name, const std::vector<std::string>& params) {
  if (platonic_tables().count(name)) {
    arity(params, 0, 0, name);
    return platonic(name);
  }
  if (name == "tri_torus") {
    arity(params, 2, 2, name);
    return tri_torus(int_param(params, 0, name), int_param(params, 1, name));
  }
  if (name == "grid") {
    arity(params, 3, 3, name);
    return grid_G(int_param(params, 0, name), int_param(params, 1, name), int_param(params, 2, name));
  }
  if (name == "strip") {
    arity(params, 2, 64, name);
    std::vector<int> swaps;
    for (std::size_t i = 2; i < params.size(); ++i) swaps.push_back(int_param(params, i, name));
    return strip_map(int_param(params, 0, name), swaps, int_param(params, 1, name));
  }
  if (name == "cube_maniplex") {
    arity(params, 1, 1, name);
    return cube_maniplex(int_param(params, 0, name));
  }
  if (name == "gluing") {
    arity(params, 1, 1, name);
    return polygon_gluing(params[0]);
  }
  if (name == "M4") {
    arity(params, 0, 0, name);
    return polygon_gluing("abABcdCD");
  }
  if (name == "surface") {
    arity(params, 1, 1, name);
    const std::string& s = params[0];
    if (s.size() >= 2 && s[0] == 'o') return polygon_gluing(orientable_word(int_param({s.substr(1)}, 0, name)));
    if (s.size() >= 2 && s[0] == 'n') return polygon_gluing(nonorientable_word(int_param({s.substr(1)}, 0, name)));
    throw Error(Errc::BadParameters, "surface: expected o<g> or n<k>");
  }
  throw Error(Errc::UnknownName, "unknown generator '" + name + "'");
}

std::vector<std::string> generator_names() {
  return {"tetrahedron", "cube",  "octahedron", "dodecahedron",  "icosahedron", "tri_torus m n",
          "grid m n k",  "strip h parity [swap...]", "cube_maniplex d", "gluing WORD", "M4", "surface o<g>|n<k>"};
}

}  // namespace mapforge
