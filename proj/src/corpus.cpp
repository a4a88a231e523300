#include "mapforge/corpus.hpp"

#include <cstdlib>
#include <sstream>

#include "mapforge/construct.hpp"
#include "mapforge/error.hpp"
#include "mapforge/operators.hpp"
#include "mapforge/surgery.hpp"

namespace mapforge {

CorpusSpec default_corpus_spec() {
  CorpusSpec spec;
  spec.generators = {
      "tetrahedron",  "cube",          "octahedron",     "dodecahedron",   "icosahedron",  "tri_torus 2 2",
      "tri_torus 2 3", "tri_torus 3 3", "tri_torus 1 3", "grid 3 3 0",     "grid 3 3 1",   "grid 3 5 2",
      "grid 4 2 1",   "grid 2 3 3",    "grid 5 7 3",     "strip 1 0",      "strip 2 1",    "strip 3 0",
      "strip 4 1 2",  "strip 3 1",     "strip 2 0",      "gluing aa",      "gluing aA",    "gluing abAB",
      "gluing abab",  "M4",            "gluing aabb",    "gluing abcabc",  "gluing aabbcc", "gluing abcABC",
      "gluing aAbB",  "gluing abBA",   "cube_maniplex 3",
  };
  return spec;
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("MAPFORGE_SEED");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end && *end == '\0') return v;
  return fallback;
}

FlagSystem random_insertions(FlagSystem m, std::mt19937_64& rng, int steps) {
  for (int s = 0; s < steps; ++s) {
    std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
    auto f = static_cast<Flag>(pick(rng));
    m = (rng() & 1) ? subdivide_at(m, f) : double_at(m, f);
  }
  return m;
}

FlagSystem random_sphere_map(std::mt19937_64& rng, int max_steps) {
  static const char* seeds[] = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  std::uniform_int_distribution<int> which(0, 5);
  std::uniform_int_distribution<int> steps(0, max_steps);
  int w = which(rng);
  FlagSystem m = w == 5 ? polygon_gluing("aA") : platonic(seeds[w]);
  return random_insertions(std::move(m), rng, steps(rng));
}

FlagSystem random_projective_map(std::mt19937_64& rng, int max_steps) {
  static const char* words[] = {"aa", "abab", "abcabc"};
  std::uniform_int_distribution<int> which(0, 3);
  std::uniform_int_distribution<int> steps(0, max_steps);
  int w = which(rng);
  // petrie of the tetrahedron: 3 square faces on the projective plane
  FlagSystem m = w == 3 ? petrie(platonic("tetrahedron")) : polygon_gluing(words[w]);
  return random_insertions(std::move(m), rng, steps(rng));
}

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  auto add = [&](std::string name, FlagSystem m) {
    if (m.size() <= spec.max_flags) out.push_back({std::move(name), std::move(m)});
  };
  std::vector<CorpusEntry> bases;
  for (const std::string& inv : spec.generators) {
    std::istringstream in(inv);
    std::string name;
    in >> name;
    std::vector<std::string> params;
    for (std::string p; in >> p;) params.push_back(p);
    FlagSystem m = generate(name, params);
    if (m.rank() == 2) bases.push_back({inv, m});
    add(inv, std::move(m));
  }
  // operator images of the small rank-2 generators
  for (const auto& b : bases) {
    if (b.map.size() > 96) continue;
    add("dual(" + b.name + ")", dual(b.map));
    add("petrie(" + b.name + ")", petrie(b.map));
    add("opp(" + b.name + ")", opposite(b.map));
    if (b.map.size() <= 48) add("medial(" + b.name + ")", medial(b.map));
  }
  std::vector<CorpusEntry> seeds;
  for (const auto& b : bases) {
    if (b.map.size() <= spec.max_flags / 2) seeds.push_back(b);
  }
  std::mt19937_64 rng(spec.seed);
  for (std::size_t i = 0; i < spec.random_maps && !seeds.empty(); ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, seeds.size() - 1);
    const CorpusEntry& b = seeds[pick(rng)];
    FlagSystem m = random_insertions(b.map, rng, spec.surgery_depth);
    add("insert" + std::to_string(spec.surgery_depth) + "#" + std::to_string(i) + "(" + b.name + ")", std::move(m));
  }
  return out;
}

}  // namespace mapforge
