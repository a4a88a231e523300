#include "mapforge/surgery.hpp"

#include <algorithm>
#include <set>

#include "mapforge/coloring.hpp"
#include "mapforge/error.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/union_find.hpp"

namespace mapforge {

namespace {

void require_map(const FlagSystem& m, const char* what) {
  if (m.rank() != 2) throw Error(Errc::RankNotTwo, std::string(what) + " needs a map");
}

Flag edge_flag(const FlagSystem& m, int e) {
  std::vector<int> idx = cell_index(m, 1);
  for (std::size_t f = 0; f < idx.size(); ++f) {
    if (idx[f] == e) return static_cast<Flag>(f);
  }
  throw Error(Errc::NotAnEdge, "no edge numbered " + std::to_string(e));
}

}  // namespace

FlagSystem subdivide_at(const FlagSystem& m, Flag a) {
  require_map(m, "subdivide");
  if (a < 0 || static_cast<std::size_t>(a) >= m.size()) throw Error(Errc::NotAnEdge, "flag out of range");
  const std::size_t n = m.size();
  const Flag g[4] = {a, m.at(a, 0), m.at(a, 2), m.at(m.at(a, 0), 2)};
  auto star = [&](Flag x) -> Flag {
    for (int k = 0; k < 4; ++k) {
      if (g[k] == x) return static_cast<Flag>(n) + k;
    }
    throw Error(Errc::NotAnEdge, "edge flags are not closed");
  };
  std::vector<Perm> conn = m.connections();
  for (auto& p : conn) p.resize(n + 4);
  for (int k = 0; k < 4; ++k) {
    Flag old = g[k];
    Flag fresh = static_cast<Flag>(n) + k;
    conn[0][static_cast<std::size_t>(old)] = fresh;
    conn[0][static_cast<std::size_t>(fresh)] = old;
    conn[1][static_cast<std::size_t>(fresh)] = star(m.at(old, 0));
    conn[2][static_cast<std::size_t>(fresh)] = star(m.at(old, 2));
  }
  return FlagSystem::validate(2, n + 4, std::move(conn));
}

FlagSystem double_at(const FlagSystem& m, Flag a) {
  require_map(m, "double_edge");
  return dual(subdivide_at(dual(m), a));
}

FlagSystem subdivide_edge(const FlagSystem& m, int e) {
  require_map(m, "subdivide");
  return subdivide_at(m, edge_flag(m, e));
}

FlagSystem double_edge(const FlagSystem& m, int e) {
  require_map(m, "double_edge");
  return double_at(m, edge_flag(m, e));
}

FlagSystem triple_edge(const FlagSystem& m, int e) {
  require_map(m, "triple_edge");
  Flag a = edge_flag(m, e);
  std::vector<int> vertex = cell_index(m, 0);
  if (vertex[static_cast<std::size_t>(a)] == vertex[static_cast<std::size_t>(m.at(a, 0))]) {
    throw Error(Errc::LoopEdge, "edge " + std::to_string(e) + " is a loop");
  }
  return double_at(double_at(m, a), a);
}

Goal parse_goal(const std::string& text) {
  if (text == "vertex_bipartite") return Goal::VertexBipartite;
  if (text == "face_bipartite") return Goal::FaceBipartite;
  if (text == "vpso") return Goal::Vpso;
  if (text == "fpso") return Goal::Fpso;
  if (text == "odd_face") return Goal::OddFace;
  if (text == "odd_vertex") return Goal::OddVertex;
  throw Error(Errc::Parse, "unknown goal '" + text + "'");
}

std::string goal_name(Goal g) {
  switch (g) {
    case Goal::VertexBipartite: return "vertex_bipartite";
    case Goal::FaceBipartite: return "face_bipartite";
    case Goal::Vpso: return "vpso";
    case Goal::Fpso: return "fpso";
    case Goal::OddFace: return "odd_face";
    case Goal::OddVertex: return "odd_vertex";
  }
  return "";
}

namespace {

bool has_odd_cell(const FlagSystem& m, int dim) {
  for (const Cell& c : cells(m, dim)) {
    if (c.degree() % 2 == 1) return true;
  }
  return false;
}

// Edges whose endpoint constraint conflicts with a spanning 2-colouring of
// the vertices (bipartite) or of the vertex arrows (pseudo-orientation).
std::vector<Flag> vertex_conflicts(const FlagSystem& m, bool arrows) {
  if (arrows) return pso_conflicts(m, PsoKind::Vertex);
  std::vector<int> vertex = cell_index(m, 0);
  ParityUnionFind uf(cell_count(m, 0));
  std::vector<Flag> bad;
  for (std::size_t f = 0; f < m.size(); ++f) {
    auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), 0));
    if (g < f) continue;
    if (!uf.unite(static_cast<std::size_t>(vertex[f]), static_cast<std::size_t>(vertex[g]), 1)) {
      bad.push_back(static_cast<Flag>(f));
    }
  }
  return bad;
}

FlagSystem repair_vertices(const FlagSystem& m, bool arrows) {
  std::vector<Flag> bad = vertex_conflicts(m, arrows);
  std::vector<int> edge = cell_index(m, 1);
  std::set<int> seen;
  FlagSystem out = m;
  for (Flag f : bad) {
    if (!seen.insert(edge[static_cast<std::size_t>(f)]).second) continue;
    out = subdivide_at(out, f);
  }
  return out;
}

Flag two_face_edge(const FlagSystem& m) {
  std::vector<int> face = cell_index(m, 2);
  for (std::size_t f = 0; f < m.size(); ++f) {
    if (face[f] != face[static_cast<std::size_t>(m.at(static_cast<Flag>(f), 2))]) return static_cast<Flag>(f);
  }
  return -1;
}

FlagSystem add_odd_face(const FlagSystem& m) {
  if (has_odd_cell(m, 2)) return m;
  Flag f = two_face_edge(m);
  if (f >= 0) return subdivide_at(m, f);
  // every edge has one face on both sides: split off a bigon first
  FlagSystem d = double_at(m, 0);
  return subdivide_at(d, two_face_edge(d));
}

}  // namespace

bool goal_holds(const FlagSystem& m, Goal g) {
  require_map(m, "make_property");
  switch (g) {
    case Goal::VertexBipartite: return i_face_bipartite(m, 0);
    case Goal::FaceBipartite: return i_face_bipartite(m, 2);
    case Goal::Vpso: return direct_pso(m, PsoKind::Vertex).has_value();
    case Goal::Fpso: return direct_pso(m, PsoKind::Face).has_value();
    case Goal::OddFace: return has_odd_cell(m, 2);
    case Goal::OddVertex: return has_odd_cell(m, 0);
  }
  return false;
}

FlagSystem make_property(const FlagSystem& m, Goal goal) {
  require_map(m, "make_property");
  switch (goal) {
    case Goal::VertexBipartite: return repair_vertices(m, false);
    case Goal::Vpso: return repair_vertices(m, true);
    case Goal::FaceBipartite: return dual(repair_vertices(dual(m), false));
    case Goal::Fpso: return dual(repair_vertices(dual(m), true));
    case Goal::OddFace: return add_odd_face(m);
    case Goal::OddVertex: return dual(add_odd_face(dual(m)));
  }
  return m;
}

FlagSystem connected_sum(const FlagSystem& m, const FlagSystem& n, Flag fM, Flag fN) {
  require_map(m, "connected_sum");
  require_map(n, "connected_sum");
  if (fM < 0 || static_cast<std::size_t>(fM) >= m.size() || fN < 0 || static_cast<std::size_t>(fN) >= n.size()) {
    throw Error(Errc::OutOfRange, "base flag out of range");
  }
  std::vector<int> faceM = cell_index(m, 2);
  std::vector<int> faceN = cell_index(n, 2);
  const int FM = faceM[static_cast<std::size_t>(fM)];
  const int FN = faceN[static_cast<std::size_t>(fN)];
  auto in_m = [&](Flag x) { return faceM[static_cast<std::size_t>(x)] == FM; };
  auto in_n = [&](Flag x) { return faceN[static_cast<std::size_t>(x)] == FN; };
  std::size_t sizeM = static_cast<std::size_t>(std::count(faceM.begin(), faceM.end(), FM));
  std::size_t sizeN = static_cast<std::size_t>(std::count(faceN.begin(), faceN.end(), FN));
  if (sizeM != sizeN) {
    throw Error(Errc::FaceSizeMismatch, "faces have " + std::to_string(sizeM / 2) + " and " + std::to_string(sizeN / 2) + " sides");
  }
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (in_m(static_cast<Flag>(x)) && in_m(m.at(static_cast<Flag>(x), 2))) {
      throw Error(Errc::FaceSelfAdjacent, "first face meets itself across an edge", -1, -1, static_cast<long>(x));
    }
  }
  for (std::size_t x = 0; x < n.size(); ++x) {
    if (in_n(static_cast<Flag>(x)) && in_n(n.at(static_cast<Flag>(x), 2))) {
      throw Error(Errc::FaceSelfAdjacent, "second face meets itself across an edge", -1, -1, static_cast<long>(x));
    }
  }
  // psi: fM w -> fN w for words w in r0, r1
  std::vector<Flag> psi(m.size(), -1);
  std::vector<Flag> psi_inv(n.size(), -1);
  psi[static_cast<std::size_t>(fM)] = fN;
  psi_inv[static_cast<std::size_t>(fN)] = fM;
  std::vector<Flag> queue{fM};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Flag x = queue[head];
    for (int i = 0; i < 2; ++i) {
      Flag y = m.at(x, i);
      Flag z = n.at(psi[static_cast<std::size_t>(x)], i);
      if (psi[static_cast<std::size_t>(y)] < 0) {
        psi[static_cast<std::size_t>(y)] = z;
        psi_inv[static_cast<std::size_t>(z)] = y;
        queue.push_back(y);
      }
    }
  }
  std::vector<Flag> idM(m.size(), -1);
  std::vector<Flag> idN(n.size(), -1);
  Flag next = 0;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!in_m(static_cast<Flag>(x))) idM[x] = next++;
  }
  for (std::size_t x = 0; x < n.size(); ++x) {
    if (!in_n(static_cast<Flag>(x))) idN[x] = next++;
  }
  const auto total = static_cast<std::size_t>(next);
  std::vector<Perm> conn(3, Perm(total, -1));
  for (std::size_t x = 0; x < m.size(); ++x) {
    Flag nx = idM[x];
    if (nx < 0) continue;
    auto fx = static_cast<Flag>(x);
    conn[0][static_cast<std::size_t>(nx)] = idM[static_cast<std::size_t>(m.at(fx, 0))];
    conn[1][static_cast<std::size_t>(nx)] = idM[static_cast<std::size_t>(m.at(fx, 1))];
    Flag across = m.at(fx, 2);
    conn[2][static_cast<std::size_t>(nx)] =
        in_m(across) ? idN[static_cast<std::size_t>(n.at(psi[static_cast<std::size_t>(across)], 2))]
                     : idM[static_cast<std::size_t>(across)];
  }
  for (std::size_t x = 0; x < n.size(); ++x) {
    Flag nx = idN[x];
    if (nx < 0) continue;
    auto fx = static_cast<Flag>(x);
    conn[0][static_cast<std::size_t>(nx)] = idN[static_cast<std::size_t>(n.at(fx, 0))];
    conn[1][static_cast<std::size_t>(nx)] = idN[static_cast<std::size_t>(n.at(fx, 1))];
    Flag across = n.at(fx, 2);
    conn[2][static_cast<std::size_t>(nx)] =
        in_n(across) ? idM[static_cast<std::size_t>(m.at(psi_inv[static_cast<std::size_t>(across)], 2))]
                     : idN[static_cast<std::size_t>(across)];
  }
  return FlagSystem::validate(2, total, std::move(conn));
}

bool face_is_summable(const FlagSystem& m, Flag f) {
  require_map(m, "connected_sum");
  std::vector<Cell> faces = cells(m, 2);
  std::vector<int> face = cell_index(m, 2);
  const Cell& c = faces[static_cast<std::size_t>(face[static_cast<std::size_t>(f)])];
  const int target = face[static_cast<std::size_t>(f)];
  for (Flag x : c.flags) {
    if (face[static_cast<std::size_t>(m.at(x, 2))] == target) return false;
  }
  // the other faces must stay edge-connected, or the sum is pinched at a vertex
  UnionFind uf(m.size());
  std::size_t components = m.size() - c.flags.size();
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (face[x] == target) continue;
    for (int i = 0; i <= 2; ++i) {
      auto y = static_cast<std::size_t>(m.at(static_cast<Flag>(x), i));
      if (face[y] != target && uf.unite(x, y)) --components;
    }
  }
  if (components != 1) return false;
  return coloring_group_excluding_cell(m, c) == coloring_group(m);
}

}  // namespace mapforge
