#include "mapforge/realize.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "mapforge/construct.hpp"
#include "mapforge/doubles.hpp"
#include "mapforge/error.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/surgery.hpp"

namespace mapforge {

std::vector<ColoringGroup> subgroups_of_P(int rank) {
  if (rank < 1 || rank > 4) throw Error(Errc::BadParameters, "subgroups_of_P supports ranks 1 to 4");
  const std::uint32_t total = 1u << (rank + 1);
  std::set<std::string> seen;
  std::vector<ColoringGroup> out;
  std::vector<ColoringGroup> frontier{ColoringGroup::span(rank, {})};
  seen.insert(frontier[0].to_string());
  while (!frontier.empty()) {
    std::vector<ColoringGroup> next;
    for (const auto& g : frontier) {
      out.push_back(g);
      for (std::uint32_t bits = 1; bits < total; ++bits) {
        ColorSet s{bits, rank};
        if (g.contains(s)) continue;
        std::vector<ColorSet> gens = g.members();
        gens.push_back(s);
        ColoringGroup bigger = ColoringGroup::span(rank, gens);
        if (seen.insert(bigger.to_string()).second) next.push_back(std::move(bigger));
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const ColoringGroup& a, const ColoringGroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.to_string() < b.to_string();
  });
  return out;
}

bool is_exceptional(const ColoringGroup& h, const SurfaceSignature& s) {
  const std::string g = h.to_string();
  if (s.orientable && s.genus == 0 && g == "e,1,02,012") return true;
  if (!s.orientable && s.genus == 1 && (g == "e,1" || g == "e,02")) return true;
  return false;
}

namespace {

FlagSystem apply_goals(FlagSystem m, std::initializer_list<Goal> goals) {
  for (Goal g : goals) m = make_property(m, g);
  return m;
}

// Recipe for a non-orientable group on a given base map of the target surface.
// Goals that only touch face degrees (subdivision) run before goals that
// only touch vertex degrees (doubling), so earlier parity choices survive.
std::optional<FlagSystem> nonorientable_recipe(const std::string& g, const FlagSystem& base, int k) {
  if (g == "e") return apply_goals(base, {Goal::OddFace, Goal::OddVertex});
  if (g == "e,01") return apply_goals(base, {Goal::OddFace, Goal::Fpso});
  if (g == "e,12") return dual(apply_goals(dual(base), {Goal::OddFace, Goal::Fpso}));
  if (g == "e,01,02,12") return apply_goals(base, {Goal::Fpso, Goal::Vpso});
  if (g == "e,0,1,01") return apply_goals(base, {Goal::Fpso, Goal::VertexBipartite});
  if (g == "e,1,2,12") return dual(apply_goals(dual(base), {Goal::Fpso, Goal::VertexBipartite}));
  if (g == "e,0,2,02") return apply_goals(base, {Goal::FaceBipartite, Goal::VertexBipartite});
  if (g == "e,2") return apply_goals(base, {Goal::OddFace, Goal::FaceBipartite});
  if (g == "e,0") return dual(apply_goals(dual(base), {Goal::OddFace, Goal::FaceBipartite}));
  if (g == "e,1") {
    int depth = std::max(0, k - 2);
    // odd row count strictly above the number of orientable rows
    int rows = std::max(3, (depth + 1) | 1);
    return grid_G(3, rows, depth);
  }
  if (g == "e,02") return strip_map(k - 1, {}, k % 2);
  return std::nullopt;
}

bool verified(const FlagSystem& m, const ColoringGroup& h, const SurfaceSignature& s) {
  return coloring_group(m) == h && surface_signature(m) == s;
}

constexpr int kSurgeryBudget = 64;

}  // namespace

FlagSystem build_map_with_group(const ColoringGroup& h, const SurfaceSignature& s) {
  if (h.rank() != 2) throw Error(Errc::BadParameters, "realization is for maps (rank 2)");
  if (!h.is_subgroup()) throw Error(Errc::BadParameters, h.to_string() + " is not a subgroup");
  if (s.orientable != h.orientable()) {
    throw Error(Errc::OrientabilityMismatch, "group " + h.to_string() + " on surface " + s.to_string());
  }
  if (s.orientable ? s.genus < 0 : s.genus < 1) throw Error(Errc::BadParameters, "bad surface " + s.to_string());
  if (is_exceptional(h, s)) throw Error(Errc::ExceptionalPair, "no map on " + s.to_string() + " has group " + h.to_string());

  if (s.orientable) {
    // h = <h', R> with h' of index 2 avoiding R; double a map on the
    // non-orientable surface covered twice by s
    const SurfaceSignature below = SurfaceSignature::nonorientable_genus(s.genus + 1);
    const ColorSet all = ColorSet::full(2);
    for (const ColoringGroup& half : subgroups_of_P(2)) {
      if (half.size() * 2 != h.size() || half.contains(all)) continue;
      bool inside = std::all_of(half.members().begin(), half.members().end(), [&](ColorSet x) { return h.contains(x); });
      if (!inside || is_exceptional(half, below)) continue;
      FlagSystem base = build_map_with_group(half, below);
      DoubleResult d = i_double(base, all);
      if (!d.split && verified(d.system, h, s)) return d.system;
    }
    throw Error(Errc::ConstructionFailed, "no half-subgroup worked for " + h.to_string() + " on " + s.to_string());
  }

  const std::string g = h.to_string();
  FlagSystem base = polygon_gluing(nonorientable_word(s.genus));
  for (int extra = 0; extra <= kSurgeryBudget; ++extra) {
    auto m = nonorientable_recipe(g, base, s.genus);
    if (!m) break;
    if (verified(*m, h, s)) return *m;
    if (g == "e,1" || g == "e,02") break;  // these ignore the base map
    // a different starting map: one more edge subdivided
    base = subdivide_at(base, static_cast<Flag>(base.size() - 1));
  }
  throw Error(Errc::ConstructionFailed, "recipe for " + g + " on " + s.to_string() + " did not verify");
}

}  // namespace mapforge
