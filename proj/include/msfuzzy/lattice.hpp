#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "msfuzzy/element_set.hpp"
#include "msfuzzy/error.hpp"

namespace msfuzzy {

class FiniteLattice;
using LatticePtr = std::shared_ptr<const FiniteLattice>;

struct LatticeOptions {
  /// Lets the counterexample search build non-distributive lattices such as N5.
  bool allow_non_distributive = false;
};

/// Bounded lattice with dense order, meet and join tables. Immutable once
/// built; elements keep their input order as canonical order.
class FiniteLattice {
 public:
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Element e) const { return names_.at(e); }

  std::optional<Element> find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Element index_of(std::string_view id) const {
    if (auto e = find(id)) return *e;
    throw Error(ErrorCode::UnknownElement, "unknown element '" + std::string(id) + "'");
  }

  ElementSet subset(const std::vector<std::string>& ids) const {
    ElementSet out;
    for (const auto& id : ids) out.insert(index_of(id));
    return out;
  }

  bool leq(Element a, Element b) const { return leq_[a * size() + b]; }
  Element meet(Element a, Element b) const { return meet_[a * size() + b]; }
  Element join(Element a, Element b) const { return join_[a * size() + b]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool is_distributive() const noexcept { return distributive_; }

  ElementSet all() const { return ElementSet::first_n(size()); }

  ElementSet up_set(Element e) const {
    ElementSet out;
    for (Element x = 0; x < size(); ++x)
      if (leq(e, x)) out.insert(x);
    return out;
  }

  /// Hasse edges (a covered by b), in canonical order.
  std::vector<std::pair<Element, Element>> covers() const {
    std::vector<std::pair<Element, Element>> out;
    for (Element a = 0; a < size(); ++a) {
      for (Element b = 0; b < size(); ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (Element c = 0; c < size() && direct; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    }
    return out;
  }

  std::string set_str(ElementSet s) const {
    std::string out = "{";
    bool first = true;
    for (Element e : s) {
      if (!first) out += ",";
      out += name(e);
      first = false;
    }
    return out + "}";
  }

 private:
  friend LatticePtr build_lattice(std::vector<std::string>, const std::vector<std::pair<std::string, std::string>>&,
                                  LatticeOptions);
  FiniteLattice() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, Element> index_;
  std::vector<bool> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
  bool distributive_ = true;
};

/// Builds a lattice from its Hasse diagram. The order is the
/// reflexive-transitive closure of `covers`.
inline LatticePtr build_lattice(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& covers,
                                LatticeOptions options = {}) {
  std::shared_ptr<FiniteLattice> lat(new FiniteLattice());
  const std::size_t n = elements.size();
  if (n == 0) throw Error(ErrorCode::NotBounded, "empty element list");
  if (n > kMaxElements) {
    throw Error(ErrorCode::SizeCapExceeded, std::to_string(n) + " elements exceeds cap of " +
                                                std::to_string(kMaxElements));
  }
  for (Element i = 0; i < n; ++i) {
    if (!lat->index_.emplace(elements[i], i).second)
      throw Error(ErrorCode::DuplicateElement, "duplicate element '" + elements[i] + "'");
  }
  lat->names_ = std::move(elements);

  auto& leq = lat->leq_;
  leq.assign(n * n, false);
  for (Element i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [lo, hi] : covers) {
    auto a = lat->find(lo);
    auto b = lat->find(hi);
    if (!a) throw Error(ErrorCode::UnknownElement, "cover references unknown element '" + lo + "'");
    if (!b) throw Error(ErrorCode::UnknownElement, "cover references unknown element '" + hi + "'");
    if (*a == *b) throw Error(ErrorCode::NotAPoset, "cycle: " + lo + " < " + hi);
    leq[*a * n + *b] = true;
  }
  for (Element k = 0; k < n; ++k)
    for (Element i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (Element j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = true;
  for (Element i = 0; i < n; ++i)
    for (Element j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorCode::NotAPoset, "cycle through " + lat->names_[i] + " and " + lat->names_[j]);

  auto below_all = [&](Element e) {
    for (Element x = 0; x < n; ++x)
      if (!leq[e * n + x]) return false;
    return true;
  };
  auto above_all = [&](Element e) {
    for (Element x = 0; x < n; ++x)
      if (!leq[x * n + e]) return false;
    return true;
  };
  std::optional<Element> bottom, top;
  for (Element e = 0; e < n; ++e) {
    if (below_all(e)) bottom = e;
    if (above_all(e)) top = e;
  }
  if (!bottom) throw Error(ErrorCode::NotBounded, "no element lies below every other");
  if (!top) throw Error(ErrorCode::NotBounded, "no element lies above every other");
  lat->bottom_ = *bottom;
  lat->top_ = *top;

  lat->meet_.assign(n * n, 0);
  lat->join_.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      std::optional<Element> glb, lub;
      for (Element c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b] && (!glb || leq[*glb * n + c])) glb = c;
        if (leq[a * n + c] && leq[b * n + c] && (!lub || leq[c * n + *lub])) lub = c;
      }
      // The scan keeps a maximal lower bound; it is the glb only if it dominates all of them.
      for (Element c = 0; c < n; ++c) {
        if (leq[c * n + a] && leq[c * n + b] && !leq[c * n + *glb])
          throw Error(ErrorCode::NotALattice,
                      "no greatest lower bound for " + lat->names_[a] + " and " + lat->names_[b]);
        if (leq[a * n + c] && leq[b * n + c] && !leq[*lub * n + c])
          throw Error(ErrorCode::NotALattice,
                      "no least upper bound for " + lat->names_[a] + " and " + lat->names_[b]);
      }
      lat->meet_[a * n + b] = *glb;
      lat->join_[a * n + b] = *lub;
    }
  }

  for (Element a = 0; a < n && lat->distributive_; ++a) {
    for (Element b = 0; b < n && lat->distributive_; ++b) {
      for (Element c = 0; c < n; ++c) {
        Element lhs = lat->meet(a, lat->join(b, c));
        Element rhs = lat->join(lat->meet(a, b), lat->meet(a, c));
        if (lhs != rhs) {
          if (!options.allow_non_distributive) {
            const auto& nm = lat->names_;
            throw Error(ErrorCode::NotDistributive, "witness (" + nm[a] + "," + nm[b] + "," + nm[c] + "): " + nm[a] +
                                                        "∧(" + nm[b] + "∨" + nm[c] + ")=" + nm[lhs] + " but (" +
                                                        nm[a] + "∧" + nm[b] + ")∨(" + nm[a] + "∧" + nm[c] +
                                                        ")=" + nm[rhs]);
          }
          lat->distributive_ = false;
          break;
        }
      }
    }
  }
  return lat;
}

/// Violating pair for a failed crisp-filter or primality check.
struct SetCheck {
  bool ok = true;
  std::optional<std::pair<Element, Element>> witness;
  std::string reason;
};

/// Crisp filter of a lattice.
struct FilterSet {
  LatticePtr carrier;
  ElementSet members;

  bool contains(Element e) const { return members.contains(e); }
  friend bool operator==(const FilterSet& a, const FilterSet& b) {
    return a.carrier == b.carrier && a.members == b.members;
  }
};

/// [e) = {x : x >= e}.
inline FilterSet principal_filter(const LatticePtr& lat, Element e) {
  if (e >= lat->size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  return {lat, lat->up_set(e)};
}

inline FilterSet principal_filter(const LatticePtr& lat, std::string_view id) {
  return principal_filter(lat, lat->index_of(id));
}

/// [B): the up-closure of the meet-closure of B. For a finite carrier this
/// is the principal filter of the meet of all of B.
inline FilterSet generated_filter(const LatticePtr& lat, ElementSet generators) {
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratingSet, "generating set is empty");
  if (!generators.subset_of(lat->all())) throw Error(ErrorCode::UnknownElement, "generator outside carrier");
  Element m = lat->top();
  for (Element b : generators) m = lat->meet(m, b);
  return {lat, lat->up_set(m)};
}

inline SetCheck is_filter(const FiniteLattice& lat, ElementSet s) {
  if (s.empty()) return {false, std::nullopt, "empty set"};
  for (Element x : s)
    for (Element y = 0; y < lat.size(); ++y)
      if (lat.leq(x, y) && !s.contains(y))
        return {false, std::pair{x, y}, lat.name(x) + "≤" + lat.name(y) + " but " + lat.name(y) + " missing"};
  for (Element a : s)
    for (Element b : s)
      if (!s.contains(lat.meet(a, b)))
        return {false, std::pair{a, b},
                lat.name(a) + "∧" + lat.name(b) + "=" + lat.name(lat.meet(a, b)) + " missing"};
  return {};
}

inline SetCheck is_prime_filter(const FiniteLattice& lat, ElementSet s) {
  if (auto f = is_filter(lat, s); !f.ok) return f;
  if (s == lat.all()) return {false, std::nullopt, "not proper"};
  for (Element a = 0; a < lat.size(); ++a)
    for (Element b = 0; b < lat.size(); ++b)
      if (s.contains(lat.join(a, b)) && !s.contains(a) && !s.contains(b))
        return {false, std::pair{a, b},
                lat.name(a) + "∨" + lat.name(b) + "=" + lat.name(lat.join(a, b)) + " in set, neither operand is"};
  return {};
}

/// All filters of the lattice, smallest first; equal sizes keep the input
/// order of their least element. Every filter of a finite lattice is principal.
inline std::vector<FilterSet> enumerate_filters(const LatticePtr& lat) {
  std::vector<std::pair<std::size_t, Element>> order;
  for (Element e = 0; e < lat->size(); ++e) order.emplace_back(lat->up_set(e).size(), e);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<FilterSet> out;
  for (const auto& entry : order) out.push_back(principal_filter(lat, entry.second));
  return out;
}

}  // namespace msfuzzy
