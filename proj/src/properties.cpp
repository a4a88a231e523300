#include "mapforge/properties.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "mapforge/coloring.hpp"
#include "mapforge/doubles.hpp"
#include "mapforge/error.hpp"
#include "mapforge/flag_io.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/surgery.hpp"

namespace mapforge {

namespace {

using Result = std::optional<std::string>;

Result fail(const std::string& msg) { return msg; }

bool is_coloring(const FlagSystem& m, const std::vector<std::uint8_t>& a, ColorSet s) {
  for (std::size_t f = 0; f < m.size(); ++f) {
    for (int j = 0; j <= m.rank(); ++j) {
      bool differs = a[f] != a[static_cast<std::size_t>(m.at(static_cast<Flag>(f), j))];
      if (differs != s.contains(j)) return false;
    }
  }
  return true;
}

std::vector<ColorSet> all_sets(int rank) {
  std::vector<ColorSet> out;
  for (std::uint32_t b = 0; b < (1u << (rank + 1)); ++b) out.push_back(ColorSet{b, rank});
  return out;
}

std::vector<std::size_t> degrees(const FlagSystem& m, int dim) {
  std::vector<std::size_t> out;
  for (const Cell& c : cells(m, dim)) out.push_back(c.degree());
  return out;
}

bool all_even(const std::vector<std::size_t>& d) {
  return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x % 2 == 0; });
}

Result check_partition(const FlagSystem& m, std::uint64_t) {
  for (int i = 0; i <= m.rank(); ++i) {
    std::vector<int> seen(m.size(), 0);
    for (const Cell& c : cells(m, i)) {
      for (Flag f : c.flags) ++seen[static_cast<std::size_t>(f)];
      if (m.rank() == 2 && i == 1 && c.flags.size() != 4) return fail("edge with " + std::to_string(c.flags.size()) + " flags");
    }
    if (std::any_of(seen.begin(), seen.end(), [](int x) { return x != 1; })) {
      return fail("cells of dimension " + std::to_string(i) + " do not partition the flags");
    }
  }
  return std::nullopt;
}

Result check_complement(const FlagSystem& m, std::uint64_t) {
  ColoringGroup t = coloring_group(m);
  std::vector<std::optional<Coloring>> col;
  for (ColorSet s : t.members()) {
    auto a = find_coloring(m, s);
    if (!a || !is_coloring(m, a->assignment, s)) return fail("bad coloring for " + s.to_string());
    auto flipped = a->assignment;
    for (auto& x : flipped) x ^= 1;
    if (!is_coloring(m, flipped, s)) return fail("complement of " + s.to_string() + " coloring fails");
    col.push_back(a);
  }
  for (std::size_t i = 0; i < col.size(); ++i) {
    for (std::size_t j = 0; j < col.size(); ++j) {
      std::vector<std::uint8_t> sum(m.size());
      for (std::size_t f = 0; f < m.size(); ++f) sum[f] = col[i]->assignment[f] ^ col[j]->assignment[f];
      ColorSet k = t.members()[i] ^ t.members()[j];
      if (!is_coloring(m, sum, k)) return fail("pointwise sum is not a " + k.to_string() + "-coloring");
    }
  }
  return std::nullopt;
}

Result check_cycles(const FlagSystem& m, std::uint64_t seed) {
  ColoringGroup t = coloring_group(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> base(0, m.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 64);
  const auto sets = all_sets(m.rank());
  std::vector<std::size_t> inconsistent(sets.size(), 0);
  for (int k = 0; k < 1000; ++k) {
    auto f = static_cast<Flag>(base(rng));
    FlagWord w = random_closed_word(m, f, len(rng), rng);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!cycle_consistent(m, f, w, sets[i])) ++inconsistent[i];
    }
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool member = t.contains(sets[i]);
    if (member && inconsistent[i]) return fail(sets[i].to_string() + " colorable but a sampled cycle is inconsistent");
    if (!member) {
      if (!inconsistent[i]) return fail("no sampled cycle witnesses that " + sets[i].to_string() + " is absent");
      auto cert = inconsistent_cycle(m, sets[i]);
      if (!cert || cycle_consistent(m, cert->first, cert->second, sets[i])) {
        return fail("no inconsistent certificate for " + sets[i].to_string());
      }
    } else if (inconsistent_cycle(m, sets[i])) {
      return fail("certificate produced for colorable " + sets[i].to_string());
    }
  }
  return std::nullopt;
}

Result check_cheat_sheet(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  ColoringGroup t = coloring_group(m);
  bool faces_even = all_even(degrees(m, 2));
  bool vertices_even = all_even(degrees(m, 0));
  auto has = [&](std::initializer_list<int> s) { return t.contains(ColorSet::of(s)); };
  if (has({1}) && !(faces_even && vertices_even)) return fail("{1} colorable with an odd cell");
  if ((has({0}) || has({1, 2})) && !faces_even) return fail("{0} or {1,2} colorable with an odd face");
  if ((has({2}) || has({0, 1})) && !vertices_even) return fail("{2} or {0,1} colorable with an odd vertex");
  if (has({0, 2}) && !(faces_even && vertices_even)) return fail("{0,2} colorable with an odd cell");
  return std::nullopt;
}

Result check_bipartite(const FlagSystem& m, std::uint64_t) {
  ColoringGroup t = coloring_group(m);
  for (int i = 0; i <= m.rank(); ++i) {
    ColorSet s{1u << i, m.rank()};
    if (t.contains(s) != i_face_bipartite(m, i)) return fail("{" + std::to_string(i) + "} disagrees with the face graph");
  }
  return std::nullopt;
}

Result check_oracles(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  ColoringGroup t = coloring_group(m);
  for (PsoKind k : {PsoKind::Face, PsoKind::Vertex, PsoKind::Edge, PsoKind::Full}) {
    auto a = direct_pso(m, k);
    if (a.has_value() != t.contains(pso_partner(k))) return fail(pso_kind_name(k) + " oracle disagrees with colorability");
    if (a && !check_arrows(m, *a)) return fail(pso_kind_name(k) + " arrows violate the matching rule");
    if (a.has_value() != pso_conflicts(m, k).empty()) return fail(pso_kind_name(k) + " conflict list disagrees");
  }
  for (ColorSet s : all_sets(2)) {
    if (is_pseudo_orientable(m, s) != t.contains(s.complement())) return fail("pseudo-orientability of " + s.to_string());
  }
  if (!is_pseudo_orientable(m, ColorSet::full(2))) return fail("not R-pseudo-orientable");
  if (is_pseudo_orientable(m, ColorSet::empty(2)) != t.orientable()) return fail("empty-set PSO is not orientability");
  return std::nullopt;
}

Result check_dual(const FlagSystem& m, std::uint64_t) {
  FlagSystem d = dual(m);
  if (!(dual(d) == m)) return fail("dual is not an involution");
  ColoringGroup t = coloring_group(m);
  ColoringGroup td = coloring_group(d);
  for (ColorSet s : all_sets(m.rank())) {
    if (t.contains(s) != td.contains(dual_transfer(s))) return fail("dual transfer fails for " + s.to_string());
  }
  if (m.rank() == 2 && !(surface_signature(m) == surface_signature(d))) return fail("dual changed the surface");
  return std::nullopt;
}

Result check_opposite(const FlagSystem& m, std::uint64_t) {
  if (m.rank() < 2) return std::nullopt;
  FlagSystem o = opposite(m);
  if (!(opposite(o) == m)) return fail("opposite is not an involution");
  if (m.rank() == 2) {
    if (!(petrie(dual(petrie(m))) == o)) return fail("opp != PDP");
    if (!(dual(petrie(dual(m))) == o)) return fail("opp != DPD");
  }
  ColoringGroup t = coloring_group(m);
  ColoringGroup to = coloring_group(o);
  for (ColorSet s : t.members()) {
    if (!to.contains(opposite_transfer(s))) return fail("opposite transfer fails for " + s.to_string());
    if (!(opposite_transfer(opposite_transfer(s)) == s)) return fail("transfer rule is not an involution");
  }
  return std::nullopt;
}

Result check_petrie(const FlagSystem& m, std::uint64_t) {
  if (m.rank() < 2) return std::nullopt;
  FlagSystem p = petrie(m);
  if (!(petrie(p) == m)) return fail("petrie is not an involution");
  if (m.rank() == 2) {
    if (cell_index(p, 0) != cell_index(m, 0) || cell_index(p, 1) != cell_index(m, 1)) {
      return fail("petrie changed vertices or edges");
    }
  }
  ColoringGroup t = coloring_group(m);
  ColoringGroup tp = coloring_group(p);
  for (ColorSet s : t.members()) {
    if (!tp.contains(petrie_transfer(s))) return fail("petrie transfer fails for " + s.to_string());
  }
  return std::nullopt;
}

Result check_medial(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  FlagSystem md = medial(m);
  if (md.size() != 2 * m.size()) return fail("medial flag count");
  if (euler_characteristic(md) != euler_characteristic(m)) return fail("medial changed chi");
  if (cell_count(md, 0) != cell_count(m, 1)) return fail("medial vertices != edges");
  ColoringGroup t = coloring_group(m);
  ColoringGroup tm = coloring_group(md);
  if (!tm.contains(ColorSet::of({2}))) return fail("medial not {2}-colorable");
  auto row = [&](std::initializer_list<int> a, std::initializer_list<int> b) {
    return t.contains(ColorSet::of(a)) == tm.contains(ColorSet::of(b));
  };
  if (!row({1}, {0})) return fail("medial row {1} -> {0}");
  if (!row({0, 2}, {1})) return fail("medial row {0,2} -> {1}");
  if (!row({0, 1, 2}, {0, 1, 2})) return fail("medial row R -> R");
  return std::nullopt;
}

Result check_full_group(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  bool full = coloring_group(m).size() == 8;
  auto orient = [](const FlagSystem& x) { return find_coloring(x, ColorSet::full(2)).has_value(); };
  if (full != (orient(m) && orient(opposite(m)) && orient(petrie(m)))) return fail("full-group criterion fails");
  return std::nullopt;
}

Result check_dubgp(const FlagSystem& m, std::uint64_t) {
  ColoringGroup t = coloring_group(m);
  for (ColorSet s : all_sets(m.rank())) {
    DoubleResult d = i_double(m, s);
    if (d.split != t.contains(s)) return fail("split flag wrong for " + s.to_string());
    auto k = check_projection(d.system, m, d.projection);
    if (!k || *k != (d.split ? 1u : 2u)) return fail("projection fails for " + s.to_string());
    if (d.split) {
      if (!is_isomorphic(d.system, m)) return fail("split double is not a copy");
      continue;
    }
    std::vector<std::uint8_t> parity(d.system.size());
    for (std::size_t x = 0; x < parity.size(); ++x) parity[x] = static_cast<std::uint8_t>(x & 1u);
    if (!is_coloring(d.system, parity, s)) return fail("sheet parity is not a coloring for " + s.to_string());
    std::vector<ColorSet> gens = t.members();
    gens.push_back(s);
    ColoringGroup want = ColoringGroup::span(m.rank(), gens);
    ColoringGroup got = coloring_group(d.system);
    if (!(want == got)) return fail("T(" + s.to_string() + "-double) = " + got.to_string() + ", expected " + want.to_string());
  }
  return std::nullopt;
}

Result check_saturation(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  FlagSystem x = i_double(m, ColorSet::of({2})).system;
  x = i_double(x, ColorSet::of({1})).system;
  x = i_double(x, ColorSet::of({0})).system;
  if (coloring_group(x).size() != 8) return fail("triple double not saturated: " + coloring_group(x).to_string());
  return std::nullopt;
}

Result check_shift(const FlagSystem& m, std::uint64_t seed) {
  ColoringGroup t = coloring_group(m);
  std::mt19937_64 rng(seed);
  auto sets = all_sets(m.rank());
  ColorSet s = sets[std::uniform_int_distribution<std::size_t>(0, sets.size() - 1)(rng)];
  FlagSystem base = i_double(m, s).system;
  for (ColorSet j : t.members()) {
    if (!is_isomorphic(base, i_double(m, s ^ j).system)) {
      return fail(s.to_string() + "-double not isomorphic to " + (s ^ j).to_string() + "-double");
    }
  }
  for (ColorSet j : sets) {
    ColoringGroup tj = coloring_group(i_double(m, j).system);
    for (ColorSet i : t.members()) {
      if (!tj.contains(i)) return fail(i.to_string() + " lost in the " + j.to_string() + "-double");
    }
  }
  return std::nullopt;
}

Result check_minimality(const FlagSystem& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto sets = all_sets(m.rank());
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  ColorSet s = sets[pick(rng)];
  ColorSet j = sets[pick(rng)];
  DoubleResult first = i_double(m, s);
  DoubleResult second = i_double(first.system, j);
  const FlagSystem& cover = second.system;
  auto b = find_coloring(cover, s);
  if (!b) return fail("J-double of the I-double lost the I-coloring");
  Perm phi(cover.size());
  for (std::size_t y = 0; y < cover.size(); ++y) {
    Flag down = first.projection[static_cast<std::size_t>(second.projection[y])];
    phi[y] = first.split ? down : 2 * down + b->assignment[y];
  }
  // orient the sheets: choose the coloring that agrees with the projection at flag 0
  if (!first.split && !check_projection(cover, first.system, phi)) {
    for (std::size_t y = 0; y < cover.size(); ++y) phi[y] ^= 1;
  }
  if (!check_projection(cover, first.system, phi)) return fail("no projection onto the " + s.to_string() + "-double");
  return std::nullopt;
}

Result check_roundtrip(const FlagSystem& m, std::uint64_t) {
  if (!(parse_flag_system(format_flag_system(m)) == m)) return fail("write/read changed the arrays");
  return std::nullopt;
}

Result check_recognize(const FlagSystem& m, std::uint64_t seed) {
  ColoringGroup t = coloring_group(m);
  std::vector<ColorSet> outside;
  for (ColorSet s : all_sets(m.rank())) {
    if (!t.contains(s)) outside.push_back(s);
  }
  if (outside.empty()) return std::nullopt;
  std::mt19937_64 rng(seed);
  ColorSet s = outside[std::uniform_int_distribution<std::size_t>(0, outside.size() - 1)(rng)];
  FlagSystem n = i_double(m, s).system;
  auto r = recognize_i_double(n, s);
  if (!r) return fail("could not recognize the " + s.to_string() + "-double");
  if (!is_isomorphic(r->base, m)) return fail("recognized base is not the original map");
  auto k = check_projection(n, r->base, r->projection);
  if (!k || *k != 2) return fail("recognition projection is not 2-fold");
  if (!is_isomorphic(n, i_double(r->base, s).system)) return fail("double of the recognized base differs");
  return std::nullopt;
}

Result check_relabel(const FlagSystem& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Perm sigma(m.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  FlagSystem r = relabel(m, sigma);
  auto phi = is_isomorphic(m, r);
  if (!phi || !check_projection(m, r, *phi)) return fail("relabelled copy not isomorphic");
  if (!is_isomorphic(r, m)) return fail("isomorphism not symmetric");
  if (!is_isomorphic(m, m)) return fail("isomorphism not reflexive");
  if (!is_isomorphic(dual(m), dual(r))) return fail("dual does not commute with relabelling");
  if (m.rank() >= 2) {
    if (!is_isomorphic(opposite(m), opposite(r))) return fail("opposite does not commute with relabelling");
    if (!is_isomorphic(petrie(m), petrie(r))) return fail("petrie does not commute with relabelling");
  }
  if (m.rank() == 2 && !is_isomorphic(medial(m), medial(r))) return fail("medial does not commute with relabelling");
  return std::nullopt;
}

Result check_deck(const FlagSystem& m, std::uint64_t) {
  std::vector<Perm> deck = deck_transformations(m);
  if (deck.empty() || m.size() % deck.size() != 0) return fail("deck group size does not divide N");
  Perm id(m.size());
  std::iota(id.begin(), id.end(), 0);
  if (std::find(deck.begin(), deck.end(), id) == deck.end()) return fail("identity missing");
  auto member = [&](const Perm& p) { return std::find(deck.begin(), deck.end(), p) != deck.end(); };
  for (const Perm& u : deck) {
    for (std::size_t f = 0; f < m.size(); ++f) {
      for (int i = 0; i <= m.rank(); ++i) {
        if (u[static_cast<std::size_t>(m.at(static_cast<Flag>(f), i))] != m.at(u[f], i)) return fail("non-commuting deck element");
      }
    }
    Perm inv(m.size());
    for (std::size_t f = 0; f < m.size(); ++f) inv[static_cast<std::size_t>(u[f])] = static_cast<Flag>(f);
    if (!member(inv)) return fail("deck group not closed under inverse");
    for (const Perm& v : deck) {
      Perm uv(m.size());
      for (std::size_t f = 0; f < m.size(); ++f) uv[f] = v[static_cast<std::size_t>(u[f])];
      if (!member(uv)) return fail("deck group not closed under composition");
    }
  }
  return std::nullopt;
}

Result check_surgery(const FlagSystem& m, std::uint64_t seed) {
  if (m.rank() != 2) return std::nullopt;
  std::mt19937_64 rng(seed);
  const long chi = euler_characteristic(m);
  const std::size_t v = cell_count(m, 0), e = cell_count(m, 1), f = cell_count(m, 2);
  const int edge = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, e - 1)(rng));
  auto counts = [](const FlagSystem& x) {
    return std::vector<std::size_t>{cell_count(x, 0), cell_count(x, 1), cell_count(x, 2)};
  };
  FlagSystem s = subdivide_edge(m, edge);
  if (counts(s) != std::vector<std::size_t>{v + 1, e + 1, f} || euler_characteristic(s) != chi) return fail("subdivide counts");
  FlagSystem d = double_edge(m, edge);
  if (counts(d) != std::vector<std::size_t>{v, e + 1, f + 1} || euler_characteristic(d) != chi) return fail("double counts");
  std::vector<int> vert = cell_index(m, 0);
  std::vector<Cell> edges = cells(m, 1);
  Flag a = edges[static_cast<std::size_t>(edge)].flags[0];
  if (vert[static_cast<std::size_t>(a)] != vert[static_cast<std::size_t>(m.at(a, 0))]) {
    FlagSystem t3 = triple_edge(m, edge);
    if (counts(t3) != std::vector<std::size_t>{v, e + 2, f + 2} || euler_characteristic(t3) != chi) return fail("triple counts");
    ColoringGroup before = coloring_group(m);
    ColoringGroup after = coloring_group(t3);
    for (auto s : {ColorSet::of({0}), ColorSet::of({2}), ColorSet::of({0, 1}), ColorSet::of({1, 2})}) {
      if (before.contains(s) != after.contains(s)) return fail("triple_edge changed the status of " + s.to_string());
    }
    std::vector<int> v3 = cell_index(t3, 0);
    bool bigon = false;
    for (const Cell& c : cells(t3, 2)) {
      if (c.degree() != 2) continue;
      std::vector<int> vs;
      for (Flag x : c.flags) vs.push_back(v3[static_cast<std::size_t>(x)]);
      std::sort(vs.begin(), vs.end());
      vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
      if (vs.size() == 2) bigon = true;
    }
    if (!bigon) return fail("triple_edge left no two-vertex bigon");
  }
  const SurfaceSignature sig = surface_signature(m);
  for (Goal g : {Goal::VertexBipartite, Goal::FaceBipartite, Goal::Vpso, Goal::Fpso, Goal::OddFace, Goal::OddVertex}) {
    FlagSystem r = make_property(m, g);
    if (!goal_holds(r, g)) return fail("make_property(" + goal_name(g) + ") did not reach its goal");
    if (!(surface_signature(r) == sig)) return fail("make_property(" + goal_name(g) + ") changed the surface");
  }
  return std::nullopt;
}

Result check_sum(const FlagSystem& m, std::uint64_t) {
  if (m.rank() != 2) return std::nullopt;
  for (const Cell& c : cells(m, 2)) {
    Flag f = c.flags[0];
    if (!face_is_summable(m, f)) continue;
    FlagSystem s = connected_sum(m, m, f, f);
    // additivity needs a disk face: one corner per boundary vertex
    std::vector<int> vertex = cell_index(m, 0);
    std::set<int> corners;
    for (Flag x : c.flags) corners.insert(vertex[static_cast<std::size_t>(x)]);
    if (corners.size() == c.degree() && euler_characteristic(s) != 2 * euler_characteristic(m) - 2) {
      return fail("sum chi is not additive minus 2");
    }
    ColoringGroup t = coloring_group(m);
    if (!(coloring_group(s) == t)) return fail("T(M+M) = " + coloring_group(s).to_string() + " != " + t.to_string());
    return std::nullopt;
  }
  return std::nullopt;
}

Result check_projection_basics(const FlagSystem& m, std::uint64_t) {
  Perm id(m.size());
  std::iota(id.begin(), id.end(), 0);
  auto k = check_projection(m, m, id);
  if (!k || *k != 1) return fail("identity is not a 1-fold projection");
  Perm squash = id;
  squash[static_cast<std::size_t>(m.at(0, 0))] = 0;
  if (check_projection(m, m, squash)) return fail("collapsing an r0 pair passed as a projection");
  return std::nullopt;
}

}  // namespace

const std::vector<Property>& registered_properties() {
  static const std::vector<Property> props = {
      {"partition", "cells of each dimension partition the flags", check_partition},
      {"complement", "complement colorings and pointwise sums", check_complement},
      {"cycles", "sampled closed words agree with colorability", check_cycles},
      {"cheat-sheet", "colorability forces even degrees", check_cheat_sheet},
      {"bipartite-bridges", "{i}-colorable iff the i-face graph is bipartite", check_bipartite},
      {"oracle-agreement", "arrow oracles match colorability", check_oracles},
      {"dual-transfer", "I in T(M) iff the reversed set is in T(dual M)", check_dual},
      {"opp-transfer", "opposite transfer and PDP = DPD = opp", check_opposite},
      {"petrie-transfer", "petrie transfer, vertices and edges kept", check_petrie},
      {"medial-table", "medial coloring table", check_medial},
      {"full-group", "T = P iff M, opp, petrie orientable", check_full_group},
      {"dubgp", "T(I-double) = <T, I>", check_dubgp},
      {"saturation", "{0}-{1}-{2} triple double has full group", check_saturation},
      {"shift", "I-double isomorphic to (I^J)-double for J in T; colorings inherited", check_shift},
      {"minimality", "I-colorable covers project onto the I-double", check_minimality},
      {"roundtrip", "flag file write/read is exact", check_roundtrip},
      {"recognize", "recognition inverts the double", check_recognize},
      {"iso-relabel", "isomorphism and operators respect relabelling", check_relabel},
      {"deck-group", "deck transformations form a group", check_deck},
      {"surgery", "insertions keep chi and reach their goals", check_surgery},
      {"sum", "self connected sum keeps the group", check_sum},
      {"projection", "projection checker basics", check_projection_basics},
  };
  return props;
}

const Property* find_property(const std::string& name) {
  for (const auto& p : registered_properties()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

std::vector<PropertyReport> run_properties(const std::vector<CorpusEntry>& corpus, const std::vector<const Property*>& props,
                                           std::uint64_t seed, unsigned threads) {
  const std::size_t cells_total = corpus.size() * props.size();
  std::vector<std::optional<std::string>> outcome(cells_total);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t k = next++; k < cells_total; k = next++) {
      const Property& p = *props[k / corpus.size()];
      std::size_t i = k % corpus.size();
      try {
        outcome[k] = p.check(corpus[i].map, seed + 7919 * i);
      } catch (const std::exception& e) {
        outcome[k] = std::string("exception: ") + e.what();
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::vector<PropertyReport> reports;
  for (std::size_t pi = 0; pi < props.size(); ++pi) {
    PropertyReport r;
    r.property = props[pi]->name;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& o = outcome[pi * corpus.size() + i];
      if (o) {
        ++r.failed;
        r.failures.emplace_back(i, *o);
      } else {
        ++r.passed;
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace mapforge
