#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "msfuzzy/lattice.hpp"

namespace msfuzzy {

namespace detail {

inline std::string inner_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

/// Relation bits over inner elements, row-major k×k.
inline std::uint64_t encode_relation(const std::vector<std::vector<bool>>& rel, const std::vector<std::size_t>& perm) {
  const std::size_t k = rel.size();
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (rel[perm[i]][perm[j]]) code |= std::uint64_t{1} << (i * k + j);
  return code;
}

inline std::uint64_t canonical_code(const std::vector<std::vector<bool>>& rel) {
  std::vector<std::size_t> perm(rel.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, encode_relation(rel, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

/// All bounded lattices with between `min_elements` and `max_elements`
/// elements, one per isomorphism class, smaller lattices first. Elements are
/// named 0, a, b, ..., 1 (a single-element lattice is just "0"). Inner
/// elements are naturally labelled: a < b in the order implies a precedes b.
inline std::vector<LatticePtr> enumerate_lattices(std::size_t min_elements, std::size_t max_elements,
                                                  bool distributive_only = true) {
  if (max_elements > 8) throw Error(ErrorCode::SizeCapExceeded, "lattice enumeration supports at most 8 elements");
  std::vector<LatticePtr> out;
  for (std::size_t n = std::max<std::size_t>(min_elements, 1); n <= max_elements; ++n) {
    if (n == 1) {
      out.push_back(build_lattice({"0"}, {}));
      continue;
    }
    const std::size_t k = n - 2;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);

    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
      for (std::size_t s = 0; s < slots.size(); ++s)
        if ((mask >> s) & 1U) rel[slots[s].first][slots[s].second] = true;
      bool transitive = true;
      for (std::size_t i = 0; i < k && transitive; ++i)
        for (std::size_t j = i + 1; j < k && transitive; ++j)
          for (std::size_t l = j + 1; l < k && transitive; ++l)
            if (rel[i][j] && rel[j][l] && !rel[i][l]) transitive = false;
      if (!transitive) continue;

      std::vector<std::string> names{"0"};
      for (std::size_t i = 0; i < k; ++i) names.push_back(detail::inner_name(i));
      names.push_back("1");
      std::vector<std::pair<std::string, std::string>> edges;
      edges.emplace_back("0", "1");
      for (std::size_t i = 0; i < k; ++i) {
        edges.emplace_back("0", names[i + 1]);
        edges.emplace_back(names[i + 1], "1");
        for (std::size_t j = 0; j < k; ++j)
          if (rel[i][j]) edges.emplace_back(names[i + 1], names[j + 1]);
      }
      LatticePtr lat;
      try {
        lat = build_lattice(names, edges, {.allow_non_distributive = !distributive_only});
      } catch (const Error&) {
        continue;
      }
      if (!seen.insert(detail::canonical_code(rel)).second) continue;
      // Rebuild from the Hasse diagram so the stored covers are minimal.
      std::vector<std::pair<std::string, std::string>> hasse;
      for (auto [a, b] : lat->covers()) hasse.emplace_back(lat->name(a), lat->name(b));
      out.push_back(build_lattice(names, hasse, {.allow_non_distributive = !distributive_only}));
    }
  }
  return out;
}

}  // namespace msfuzzy
