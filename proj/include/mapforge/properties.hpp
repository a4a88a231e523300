#ifndef MAPFORGE_PROPERTIES_HPP
#define MAPFORGE_PROPERTIES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mapforge/corpus.hpp"
#include "mapforge/flag_system.hpp"

namespace mapforge {

/// A check over one corpus map. Returns a failure message, or nothing.
using PropertyCheck = std::function<std::optional<std::string>(const FlagSystem&, std::uint64_t seed)>;

struct Property {
  std::string name;
  std::string summary;
  PropertyCheck check;
};

const std::vector<Property>& registered_properties();
const Property* find_property(const std::string& name);

struct PropertyReport {
  std::string property;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// (corpus index, message) per failure
  std::vector<std::pair<std::size_t, std::string>> failures;
};

/// Runs the properties over the corpus on `threads` workers. Reports come
/// back in property order and failures in corpus order.
std::vector<PropertyReport> run_properties(const std::vector<CorpusEntry>& corpus,
                                           const std::vector<const Property*>& props, std::uint64_t seed,
                                           unsigned threads);

}  // namespace mapforge

#endif  // MAPFORGE_PROPERTIES_HPP
