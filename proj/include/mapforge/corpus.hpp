#ifndef MAPFORGE_CORPUS_HPP
#define MAPFORGE_CORPUS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mapforge/flag_system.hpp"

namespace mapforge {

struct CorpusEntry {
  std::string name;
  FlagSystem map;
};

struct CorpusSpec {
  std::uint64_t seed = 1729;
  /// Generator invocations, "name param..." (see generate()).
  std::vector<std::string> generators;
  /// Random insertions applied to each surgery seed.
  int surgery_depth = 4;
  /// Property identifiers to run; empty means all registered ones.
  std::vector<std::string> operations;
  /// Number of random surgery-chain maps added on top of the generators.
  std::size_t random_maps = 24;
  /// Maps larger than this are left out.
  std::size_t max_flags = 720;
};

CorpusSpec default_corpus_spec();

/// MAPFORGE_SEED when set and numeric, otherwise the fallback.
std::uint64_t seed_from_env(std::uint64_t fallback);

std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec);

/// `steps` random subdivisions / edge doublings.
FlagSystem random_insertions(FlagSystem m, std::mt19937_64& rng, int steps);

/// Random map on the sphere: a platonic seed with random insertions.
FlagSystem random_sphere_map(std::mt19937_64& rng, int max_steps);
/// Random map on the projective plane.
FlagSystem random_projective_map(std::mt19937_64& rng, int max_steps);

}  // namespace mapforge

#endif  // MAPFORGE_CORPUS_HPP
