#include "mapforge/coloring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "mapforge/error.hpp"
#include "mapforge/union_find.hpp"

namespace mapforge {

ColorSet ColorSet::of(std::initializer_list<int> idx, int rank) {
  ColorSet s{0, rank};
  for (int i : idx) s.bits |= 1u << i;
  return s;
}

ColorSet ColorSet::parse(const std::string& text, int rank) {
  if (text == "e") return empty(rank);
  if (text.empty()) throw Error(Errc::Parse, "empty color set (use 'e' for the empty set)");
  ColorSet s{0, rank};
  for (char c : text) {
    if (c < '0' || c > '9' || c - '0' > rank) {
      throw Error(Errc::Parse, "bad color set '" + text + "' for rank " + std::to_string(rank));
    }
    std::uint32_t bit = 1u << (c - '0');
    if (s.bits & bit) throw Error(Errc::Parse, "repeated index in color set '" + text + "'");
    s.bits |= bit;
  }
  return s;
}

std::size_t ColorSet::size() const { return static_cast<std::size_t>(std::popcount(bits)); }

std::string ColorSet::to_string() const {
  if (bits == 0) return "e";
  std::string out;
  for (int i = 0; i <= rank; ++i) {
    if (contains(i)) out += static_cast<char>('0' + i);
  }
  return out;
}

bool operator<(ColorSet a, ColorSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_string() < b.to_string();
}

std::string Coloring::to_string() const {
  std::string out(assignment.size(), '0');
  for (std::size_t i = 0; i < assignment.size(); ++i) out[i] = assignment[i] ? '1' : '0';
  return out;
}

ColoringGroup::ColoringGroup(int rank, std::vector<ColorSet> members) : rank_(rank), members_(std::move(members)) {
  for (auto& s : members_) s.rank = rank;
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

ColoringGroup ColoringGroup::span(int rank, const std::vector<ColorSet>& generators) {
  std::vector<ColorSet> members{ColorSet::empty(rank)};
  for (ColorSet g : generators) {
    bool present = std::find(members.begin(), members.end(), g) != members.end();
    if (present) continue;
    std::size_t n = members.size();
    for (std::size_t i = 0; i < n; ++i) members.push_back(members[i] ^ g);
  }
  return ColoringGroup(rank, std::move(members));
}

ColoringGroup ColoringGroup::parse(const std::string& text, int rank) {
  std::vector<ColorSet> members;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) members.push_back(ColorSet::parse(item, rank));
  if (members.empty()) throw Error(Errc::Parse, "empty group");
  return ColoringGroup(rank, std::move(members));
}

bool ColoringGroup::contains(ColorSet s) const {
  return std::find(members_.begin(), members_.end(), s) != members_.end();
}

bool ColoringGroup::is_subgroup() const {
  if (!contains(ColorSet::empty(rank_))) return false;
  for (ColorSet a : members_) {
    for (ColorSet b : members_) {
      if (!contains(a ^ b)) return false;
    }
  }
  std::size_t n = members_.size();
  return n > 0 && (n & (n - 1)) == 0;
}

std::string ColoringGroup::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ',';
    out += members_[i].to_string();
  }
  return out;
}

ColoringGroup intersect(const ColoringGroup& a, const ColoringGroup& b) {
  std::vector<ColorSet> out;
  for (ColorSet s : a.members()) {
    if (b.contains(s)) out.push_back(s);
  }
  return ColoringGroup(a.rank(), std::move(out));
}

namespace {

// BFS parity propagation. Returns the conflicting crossing (f, j) if any.
struct Propagation {
  std::vector<std::int8_t> color;
  std::vector<Flag> parent;
  std::vector<std::int8_t> via;
  std::optional<std::pair<Flag, int>> conflict;
};

Propagation propagate(const FlagSystem& m, ColorSet s, bool record_tree) {
  const std::size_t n = m.size();
  Propagation p;
  p.color.assign(n, -1);
  if (record_tree) {
    p.parent.assign(n, -1);
    p.via.assign(n, -1);
  }
  std::vector<Flag> queue{0};
  queue.reserve(n);
  p.color[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Flag f = queue[head];
    for (int j = 0; j <= m.rank(); ++j) {
      Flag g = m.at(f, j);
      auto want = static_cast<std::int8_t>(p.color[static_cast<std::size_t>(f)] ^ (s.contains(j) ? 1 : 0));
      std::int8_t& c = p.color[static_cast<std::size_t>(g)];
      if (c < 0) {
        c = want;
        if (record_tree) {
          p.parent[static_cast<std::size_t>(g)] = f;
          p.via[static_cast<std::size_t>(g)] = static_cast<std::int8_t>(j);
        }
        queue.push_back(g);
      } else if (c != want) {
        p.conflict = std::make_pair(f, j);
        return p;
      }
    }
  }
  return p;
}

FlagWord path_from_root(const Propagation& p, Flag f) {
  FlagWord w;
  while (p.parent[static_cast<std::size_t>(f)] >= 0) {
    w.push_back(p.via[static_cast<std::size_t>(f)]);
    f = p.parent[static_cast<std::size_t>(f)];
  }
  std::reverse(w.begin(), w.end());
  return w;
}

}  // namespace

std::optional<Coloring> find_coloring(const FlagSystem& m, ColorSet s) {
  s.rank = m.rank();
  Propagation p = propagate(m, s, false);
  if (p.conflict) return std::nullopt;
  Coloring c;
  c.color_set = s;
  c.assignment.resize(m.size());
  for (std::size_t f = 0; f < m.size(); ++f) c.assignment[f] = static_cast<std::uint8_t>(p.color[f]);
  return c;
}

std::optional<std::pair<Flag, FlagWord>> inconsistent_cycle(const FlagSystem& m, ColorSet s) {
  Propagation p = propagate(m, s, true);
  if (!p.conflict) return std::nullopt;
  auto [f, j] = *p.conflict;
  Flag g = m.at(f, j);
  FlagWord w = path_from_root(p, f);
  w.push_back(j);
  FlagWord back = path_from_root(p, g);
  w.insert(w.end(), back.rbegin(), back.rend());
  return std::make_pair(Flag{0}, w);
}

ColoringGroup coloring_group(const FlagSystem& m) {
  std::vector<ColorSet> members;
  const std::uint32_t total = 1u << (m.rank() + 1);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    ColorSet s{bits, m.rank()};
    if (find_coloring(m, s)) members.push_back(s);
  }
  ColoringGroup g(m.rank(), std::move(members));
  if (!g.is_subgroup()) throw Error(Errc::ClosureViolation, "colorable sets " + g.to_string() + " are not a subgroup");
  return g;
}

ColoringGroup coloring_group_excluding_cell(const FlagSystem& m, const Cell& face) {
  const std::size_t n = m.size();
  std::vector<std::uint8_t> removed(n, 0);
  for (Flag f : face.flags) removed[static_cast<std::size_t>(f)] = 1;
  std::vector<ColorSet> members;
  const std::uint32_t total = 1u << (m.rank() + 1);
  for (std::uint32_t bits = 0; bits < total; ++bits) {
    ColorSet s{bits, m.rank()};
    std::vector<std::int8_t> color(n, -1);
    bool ok = true;
    for (std::size_t start = 0; start < n && ok; ++start) {
      if (removed[start] || color[start] >= 0) continue;
      color[start] = 0;
      std::vector<Flag> queue{static_cast<Flag>(start)};
      for (std::size_t head = 0; head < queue.size() && ok; ++head) {
        Flag f = queue[head];
        for (int j = 0; j <= m.rank(); ++j) {
          auto g = static_cast<std::size_t>(m.at(f, j));
          if (removed[g]) continue;
          auto want = static_cast<std::int8_t>(color[static_cast<std::size_t>(f)] ^ (s.contains(j) ? 1 : 0));
          if (color[g] < 0) {
            color[g] = want;
            queue.push_back(static_cast<Flag>(g));
          } else if (color[g] != want) {
            ok = false;
            break;
          }
        }
      }
    }
    if (ok) members.push_back(s);
  }
  return ColoringGroup(m.rank(), std::move(members));
}

bool cycle_consistent(const FlagSystem& m, Flag f, const FlagWord& w, ColorSet s) {
  if (apply_word(m, f, w) != f) throw Error(Errc::NotAClosedCycle, "word does not return to flag " + std::to_string(f));
  std::size_t count = 0;
  for (int i : w) count += s.contains(i) ? 1 : 0;
  return count % 2 == 0;
}

FlagWord random_closed_word(const FlagSystem& m, Flag f, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> letter(0, m.rank());
  FlagWord w;
  Flag g = f;
  for (std::size_t k = 0; k < length; ++k) {
    int i = letter(rng);
    w.push_back(i);
    g = m.at(g, i);
  }
  // shortest path g -> f
  std::vector<Flag> parent(m.size(), -1);
  std::vector<std::int8_t> via(m.size(), -1);
  std::vector<Flag> queue{g};
  parent[static_cast<std::size_t>(g)] = g;
  for (std::size_t head = 0; head < queue.size() && parent[static_cast<std::size_t>(f)] < 0; ++head) {
    Flag x = queue[head];
    for (int i = 0; i <= m.rank(); ++i) {
      Flag y = m.at(x, i);
      if (parent[static_cast<std::size_t>(y)] < 0) {
        parent[static_cast<std::size_t>(y)] = x;
        via[static_cast<std::size_t>(y)] = static_cast<std::int8_t>(i);
        queue.push_back(y);
      }
    }
  }
  FlagWord back;
  for (Flag x = f; x != g; x = parent[static_cast<std::size_t>(x)]) back.push_back(via[static_cast<std::size_t>(x)]);
  w.insert(w.end(), back.rbegin(), back.rend());
  return w;
}

bool is_pseudo_orientable(const FlagSystem& m, ColorSet s) {
  s.rank = m.rank();
  return find_coloring(m, s.complement()).has_value();
}

std::string pso_kind_name(PsoKind k) {
  switch (k) {
    case PsoKind::Face: return "face";
    case PsoKind::Vertex: return "vertex";
    case PsoKind::Edge: return "edge";
    case PsoKind::Full: return "full";
  }
  return "full";
}

PsoKind parse_pso_kind(const std::string& text) {
  if (text == "face") return PsoKind::Face;
  if (text == "vertex") return PsoKind::Vertex;
  if (text == "edge") return PsoKind::Edge;
  if (text == "full") return PsoKind::Full;
  throw Error(Errc::Parse, "unknown pseudo-orientation kind '" + text + "'");
}

ColorSet pso_partner(PsoKind k) {
  switch (k) {
    case PsoKind::Face: return ColorSet::of({0, 1});
    case PsoKind::Vertex: return ColorSet::of({1, 2});
    case PsoKind::Edge: return ColorSet::of({0, 2});
    case PsoKind::Full: return ColorSet::of({0, 1, 2});
  }
  return ColorSet::full(2);
}

namespace {

// Carrier cells, the connection crossed between carriers, and the parity a
// crossing must show.
struct ArrowRule {
  int a;
  int b;
  int cross;
  std::uint8_t offset;
};

ArrowRule rule_for(PsoKind k) {
  switch (k) {
    case PsoKind::Face: return {0, 1, 2, 0};
    case PsoKind::Vertex: return {1, 2, 0, 0};
    case PsoKind::Edge: return {0, 2, 1, 0};
    case PsoKind::Full: return {0, 1, 2, 1};
  }
  return {0, 1, 2, 1};
}

struct CellClasses {
  std::vector<int> cell;
  std::vector<std::uint8_t> cls;  // which rotation class within its cell
  std::size_t cell_count = 0;
};

CellClasses classify(const FlagSystem& m, int a, int b) {
  const std::size_t n = m.size();
  CellClasses out;
  out.cell = orbit_labels(m, {a, b});
  std::vector<int> rot(n, -1);
  int next = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (rot[f] >= 0) continue;
    Flag g = static_cast<Flag>(f);
    do {
      rot[static_cast<std::size_t>(g)] = next;
      g = m.at(m.at(g, a), b);
    } while (rot[static_cast<std::size_t>(g)] < 0);
    ++next;
  }
  int cells = 0;
  for (int c : out.cell) cells = std::max(cells, c + 1);
  out.cell_count = static_cast<std::size_t>(cells);
  std::vector<int> rep(out.cell_count, -1);
  out.cls.resize(n);
  for (std::size_t f = 0; f < n; ++f) {
    auto c = static_cast<std::size_t>(out.cell[f]);
    if (rep[c] < 0) rep[c] = rot[f];
    out.cls[f] = rot[f] == rep[c] ? 0 : 1;
  }
  return out;
}

void require_map(const FlagSystem& m) {
  if (m.rank() != 2) throw Error(Errc::RankNotTwo, "pseudo-orientation oracles need a map");
}

}  // namespace

std::vector<Flag> pso_conflicts(const FlagSystem& m, PsoKind kind) {
  require_map(m);
  ArrowRule rule = rule_for(kind);
  CellClasses cc = classify(m, rule.a, rule.b);
  ParityUnionFind uf(cc.cell_count);
  std::vector<Flag> bad;
  for (std::size_t f = 0; f < m.size(); ++f) {
    auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), rule.cross));
    if (g < f) continue;
    auto want = static_cast<std::uint8_t>(rule.offset ^ cc.cls[f] ^ cc.cls[g]);
    if (!uf.unite(static_cast<std::size_t>(cc.cell[f]), static_cast<std::size_t>(cc.cell[g]), want)) {
      bad.push_back(static_cast<Flag>(f));
    }
  }
  return bad;
}

std::optional<ArrowAssignment> direct_pso(const FlagSystem& m, PsoKind kind) {
  require_map(m);
  ArrowRule rule = rule_for(kind);
  CellClasses cc = classify(m, rule.a, rule.b);
  ParityUnionFind uf(cc.cell_count);
  for (std::size_t f = 0; f < m.size(); ++f) {
    auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), rule.cross));
    auto want = static_cast<std::uint8_t>(rule.offset ^ cc.cls[f] ^ cc.cls[g]);
    if (!uf.unite(static_cast<std::size_t>(cc.cell[f]), static_cast<std::size_t>(cc.cell[g]), want)) {
      return std::nullopt;
    }
  }
  ArrowAssignment out;
  out.kind = kind;
  out.arrows.resize(cc.cell_count);
  for (std::size_t c = 0; c < cc.cell_count; ++c) out.arrows[c] = uf.value(c);
  return out;
}

bool check_arrows(const FlagSystem& m, const ArrowAssignment& a) {
  require_map(m);
  ArrowRule rule = rule_for(a.kind);
  CellClasses cc = classify(m, rule.a, rule.b);
  if (a.arrows.size() != cc.cell_count) return false;
  for (std::size_t f = 0; f < m.size(); ++f) {
    auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), rule.cross));
    std::uint8_t lhs = a.arrows[static_cast<std::size_t>(cc.cell[f])] ^ cc.cls[f] ^
                       a.arrows[static_cast<std::size_t>(cc.cell[g])] ^ cc.cls[g];
    if (lhs != rule.offset) return false;
  }
  return true;
}

bool i_face_bipartite(const FlagSystem& m, int i) {
  std::vector<int> cell = cell_index(m, i);
  int count = 0;
  for (int c : cell) count = std::max(count, c + 1);
  ParityUnionFind uf(static_cast<std::size_t>(count));
  for (std::size_t f = 0; f < m.size(); ++f) {
    auto g = static_cast<std::size_t>(m.at(static_cast<Flag>(f), i));
    if (!uf.unite(static_cast<std::size_t>(cell[f]), static_cast<std::size_t>(cell[g]), 1)) return false;
  }
  return true;
}

}  // namespace mapforge
