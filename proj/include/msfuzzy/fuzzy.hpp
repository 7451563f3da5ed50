#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msfuzzy/grade.hpp"
#include "msfuzzy/lattice.hpp"

namespace msfuzzy {

/// Total map from a lattice carrier to [0,1].
class FuzzySet {
 public:
  FuzzySet(LatticePtr carrier, std::vector<Grade> grades) : carrier_(std::move(carrier)), grades_(std::move(grades)) {
    if (grades_.size() != carrier_->size())
      throw Error(ErrorCode::IncompleteTable, "fuzzy set has " + std::to_string(grades_.size()) +
                                                  " grades for " + std::to_string(carrier_->size()) + " elements");
  }

  static FuzzySet constant(LatticePtr carrier, Grade g) {
    std::vector<Grade> grades(carrier->size(), g);
    return FuzzySet(std::move(carrier), std::move(grades));
  }

  /// Characteristic map of a crisp subset.
  static FuzzySet characteristic(LatticePtr carrier, ElementSet s) {
    std::vector<Grade> grades;
    for (Element e = 0; e < carrier->size(); ++e) grades.push_back(s.contains(e) ? Grade::one() : Grade::zero());
    return FuzzySet(std::move(carrier), std::move(grades));
  }

  /// Named grades; every carrier element must appear exactly once.
  static FuzzySet from_pairs(LatticePtr carrier, const std::vector<std::pair<std::string, Grade>>& entries) {
    std::vector<std::optional<Grade>> slots(carrier->size());
    for (const auto& [id, g] : entries) slots[carrier->index_of(id)] = g;
    std::vector<Grade> grades;
    for (Element e = 0; e < carrier->size(); ++e) {
      if (!slots[e]) throw Error(ErrorCode::IncompleteTable, "no grade for element '" + carrier->name(e) + "'");
      grades.push_back(*slots[e]);
    }
    return FuzzySet(std::move(carrier), std::move(grades));
  }

  const LatticePtr& carrier() const noexcept { return carrier_; }
  const std::vector<Grade>& grades() const noexcept { return grades_; }
  const Grade& operator()(Element e) const { return grades_.at(e); }
  const Grade& at(std::string_view id) const { return grades_.at(carrier_->index_of(id)); }

  /// Pointwise ≤ ("this ⊆ other").
  bool subset_of(const FuzzySet& other) const {
    for (std::size_t i = 0; i < grades_.size(); ++i)
      if (other.grades_.at(i) < grades_[i]) return false;
    return true;
  }

  bool is_constant() const {
    for (const auto& g : grades_)
      if (g != grades_.front()) return false;
    return true;
  }

  bool is_injective() const {
    for (std::size_t i = 0; i < grades_.size(); ++i)
      for (std::size_t j = i + 1; j < grades_.size(); ++j)
        if (grades_[i] == grades_[j]) return false;
    return true;
  }

  /// Distinct grades in ascending order.
  std::vector<Grade> image() const {
    std::vector<Grade> out = grades_;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string str() const {
    std::string out;
    for (Element e = 0; e < grades_.size(); ++e) {
      if (e != 0) out += " ";
      out += carrier_->name(e) + ":" + grades_[e].str();
    }
    return out;
  }

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return a.carrier_ == b.carrier_ && a.grades_ == b.grades_;
  }

 private:
  LatticePtr carrier_;
  std::vector<Grade> grades_;
};

namespace detail {
inline void require_same_carrier(const FuzzySet& a, const FuzzySet& b) {
  if (a.carrier() != b.carrier() && a.carrier()->names() != b.carrier()->names())
    throw Error(ErrorCode::CarrierMismatch, "fuzzy sets live on different carriers");
}
}  // namespace detail

inline FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
  detail::require_same_carrier(a, b);
  std::vector<Grade> out;
  for (Element e = 0; e < a.grades().size(); ++e) out.push_back(max(a(e), b(e)));
  return FuzzySet(a.carrier(), std::move(out));
}

inline FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b) {
  detail::require_same_carrier(a, b);
  std::vector<Grade> out;
  for (Element e = 0; e < a.grades().size(); ++e) out.push_back(min(a(e), b(e)));
  return FuzzySet(a.carrier(), std::move(out));
}

using ElementPair = std::pair<Element, Element>;

struct FuzzyClassification {
  bool is_sublattice = false;
  bool is_ideal = false;
  bool is_filter = false;
  bool is_proper = false;
  /// χ(1)=1 (filter) and χ(0)=1 (ideal) clauses, reported separately from
  /// the pair conditions so both kinds of failure are visible at once.
  bool top_is_one = false;
  bool bottom_is_one = false;
  /// First pair with χ(a∧b) ≠ χ(a)∧χ(b).
  std::optional<ElementPair> filter_witness;
  /// First pair with χ(a∨b) ≠ χ(a)∧χ(b).
  std::optional<ElementPair> ideal_witness;
  std::optional<ElementPair> sublattice_witness;
};

/// Sublattice, ideal and filter membership. Filters and ideals are decided by
/// the two-clause characterizations and cross-checked against the
/// three-clause definitions; a disagreement throws InternalInvariant.
inline FuzzyClassification classify(const FiniteLattice& lat, const FuzzySet& chi) {
  if (chi.grades().size() != lat.size()) throw Error(ErrorCode::CarrierMismatch, "fuzzy set size mismatch");
  FuzzyClassification out;
  out.top_is_one = chi(lat.top()).is_one();
  out.bottom_is_one = chi(lat.bottom()).is_one();
  out.is_proper = !chi.is_constant();

  bool filter_def = out.top_is_one;
  bool ideal_def = out.bottom_is_one;
  bool sub_ok = true;
  bool meet_char = true;
  bool join_char = true;
  for (Element a = 0; a < lat.size(); ++a) {
    for (Element b = 0; b < lat.size(); ++b) {
      const Grade& m = chi(lat.meet(a, b));
      const Grade& j = chi(lat.join(a, b));
      Grade lo = min(chi(a), chi(b));
      Grade hi = max(chi(a), chi(b));
      if (m != lo && meet_char) {
        meet_char = false;
        out.filter_witness = ElementPair{a, b};
      }
      if (j != lo && join_char) {
        join_char = false;
        out.ideal_witness = ElementPair{a, b};
      }
      if ((m < lo || j < lo) && sub_ok) {
        sub_ok = false;
        out.sublattice_witness = ElementPair{a, b};
      }
      filter_def = filter_def && !(m < lo) && !(j < hi);
      ideal_def = ideal_def && !(m < hi) && !(j < lo);
    }
  }
  out.is_filter = out.top_is_one && meet_char;
  out.is_ideal = out.bottom_is_one && join_char;
  out.is_sublattice = sub_ok;
  if (filter_def != out.is_filter)
    throw Error(ErrorCode::InternalInvariant, "fuzzy filter definition and characterization disagree");
  if (ideal_def != out.is_ideal)
    throw Error(ErrorCode::InternalInvariant, "fuzzy ideal definition and characterization disagree");
  return out;
}

inline bool is_fuzzy_filter(const FiniteLattice& lat, const FuzzySet& chi) { return classify(lat, chi).is_filter; }

/// μ_t = {θ : μ(θ) ≥ t}.
inline ElementSet level_cut(const FuzzySet& mu, const Grade& t) {
  ElementSet out;
  for (Element e = 0; e < mu.grades().size(); ++e)
    if (mu(e) >= t) out.insert(e);
  return out;
}

/// Default cap on the number of candidate maps an enumeration may visit.
inline constexpr std::uint64_t kMaxCandidateMaps = std::uint64_t{1} << 24;

/// Every fuzzy filter with grades drawn from `universe`. Order: maps read as
/// numbers in base |universe| with the first element as least significant
/// digit, ascending.
inline std::vector<FuzzySet> enumerate_fuzzy_filters(const LatticePtr& lat, std::vector<Grade> universe,
                                                     std::uint64_t cap = kMaxCandidateMaps) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (std::find(universe.begin(), universe.end(), Grade::one()) == universe.end())
    throw Error(ErrorCode::HypothesisUnmet, "grade universe must contain 1");
  const std::size_t n = lat->size();
  const std::size_t k = universe.size();
  std::uint64_t candidates = 1;
  for (std::size_t i = 1; i < n; ++i) {
    candidates *= k;
    if (candidates > cap)
      throw Error(ErrorCode::SizeCapExceeded, "fuzzy filter enumeration exceeds candidate cap");
  }

  // The top is forced to 1; every other position runs over the universe.
  const std::size_t one_index =
      static_cast<std::size_t>(std::find(universe.begin(), universe.end(), Grade::one()) - universe.begin());
  std::vector<std::size_t> digits(n, 0);
  digits[lat->top()] = one_index;
  std::vector<FuzzySet> out;
  std::vector<Grade> grades(n);
  while (true) {
    for (Element e = 0; e < n; ++e) grades[e] = universe[digits[e]];
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = a + 1; b < n && ok; ++b)
        ok = grades[lat->meet(a, b)] == min(grades[a], grades[b]);
    if (ok) out.emplace_back(lat, grades);

    Element pos = 0;
    while (pos < n) {
      if (pos == lat->top()) {
        ++pos;
        continue;
      }
      if (++digits[pos] < k) break;
      digits[pos] = 0;
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

struct PrimeVerdict {
  bool prime = true;
  /// Fuzzy filters Φ, Ψ with Φ∩Ψ ⊆ χ but neither contained in χ.
  std::optional<std::pair<FuzzySet, FuzzySet>> witness;
};

/// Grade universe used when none is given: grades of χ plus 0 and 1.
inline std::vector<Grade> default_universe(const FuzzySet& chi) {
  auto out = chi.image();
  out.push_back(Grade::zero());
  out.push_back(Grade::one());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Primality of a proper fuzzy filter, with the quantified Φ, Ψ restricted to
/// filters over a finite grade universe. A negative verdict is conclusive; a
/// positive one holds relative to the universe only.
inline PrimeVerdict is_prime_fuzzy_filter_bounded(const FiniteLattice& lat, const FuzzySet& chi,
                                                  std::vector<Grade> universe,
                                                  std::uint64_t cap = kMaxCandidateMaps) {
  if (!classify(lat, chi).is_filter) throw Error(ErrorCode::HypothesisUnmet, "χ is not a fuzzy filter");
  if (chi.is_constant()) throw Error(ErrorCode::NotProper, "χ is constant");
  for (const auto& g : default_universe(chi)) universe.push_back(g);
  auto filters = enumerate_fuzzy_filters(chi.carrier(), std::move(universe), cap);

  std::vector<bool> inside(filters.size());
  for (std::size_t i = 0; i < filters.size(); ++i) inside[i] = filters[i].subset_of(chi);
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (inside[i]) continue;
    for (std::size_t j = i; j < filters.size(); ++j) {
      if (inside[j]) continue;
      if (fuzzy_intersection(filters[i], filters[j]).subset_of(chi))
        return {false, std::pair{filters[i], filters[j]}};
    }
  }
  return {};
}

inline PrimeVerdict is_prime_fuzzy_filter_bounded(const FiniteLattice& lat, const FuzzySet& chi) {
  return is_prime_fuzzy_filter_bounded(lat, chi, default_universe(chi));
}

}  // namespace msfuzzy
