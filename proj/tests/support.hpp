#pragma once

#include <string>
#include <vector>

#include "msfuzzy/msfuzzy.hpp"

namespace support {

using namespace msfuzzy;

inline LatticePtr chain(std::size_t n) {
  std::vector<std::string> names{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) names.push_back("c" + std::to_string(i));
  if (n > 1) names.push_back("1");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i + 1 < names.size(); ++i) covers.emplace_back(names[i], names[i + 1]);
  return build_lattice(names, covers);
}

inline LatticePtr diamond() { return build_lattice({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}); }

inline LoadedAlgebra load(std::string_view text) { return load_algebra(parse_algebra(text)); }

inline FuzzySet fuzzy(const LatticePtr& lat, const std::vector<std::pair<std::string, Grade>>& entries) {
  return FuzzySet::from_pairs(lat, entries);
}

inline Grade g(std::int64_t num, std::int64_t den = 1) { return Grade(num, den); }

/// Every valid algebra with at most `max_n` elements.
inline std::vector<MSAlgebra> small_algebras(std::size_t max_n) {
  std::vector<MSAlgebra> out;
  for (const auto& lat : enumerate_lattices(1, max_n))
    for (auto& t : enumerate_ms_operations(*lat)) out.emplace_back(lat, std::move(t));
  return out;
}

inline std::vector<ElementSet> nonempty_subsets(const FiniteLattice& lat) {
  std::vector<ElementSet> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << lat.size()); ++m) out.emplace_back(m);
  return out;
}

inline const std::vector<Grade>& three_grades() {
  static const std::vector<Grade> gs{Grade::zero(), Grade::half(), Grade::one()};
  return gs;
}

}  // namespace support
