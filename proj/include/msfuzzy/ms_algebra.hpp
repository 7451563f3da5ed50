#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "msfuzzy/lattice.hpp"
#include "msfuzzy/report.hpp"

namespace msfuzzy {

/// Unary table for °, indexed by element.
using NegTable = std::vector<Element>;

inline NegTable neg_table_from_pairs(const FiniteLattice& lat,
                                     const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::optional<Element>> table(lat.size());
  for (const auto& [from, to] : entries) table[lat.index_of(from)] = lat.index_of(to);
  NegTable out;
  for (Element e = 0; e < lat.size(); ++e) {
    if (!table[e]) throw Error(ErrorCode::IncompleteTable, "no ° image for '" + lat.name(e) + "'");
    out.push_back(*table[e]);
  }
  return out;
}

/// Checks 1°=0, (a∧b)°=a°∨b° and a≤a°°, reporting the first violation of
/// each in canonical pair order.
inline VerificationReport check_ms_axioms(const FiniteLattice& lat, std::span<const Element> neg) {
  if (neg.size() != lat.size())
    throw Error(ErrorCode::IncompleteTable, "° table has " + std::to_string(neg.size()) + " entries for " +
                                                std::to_string(lat.size()) + " elements");
  for (Element v : neg)
    if (v >= lat.size()) throw Error(ErrorCode::UnknownElement, "° table value out of range");

  auto nm = [&](Element e) -> const std::string& { return lat.name(e); };
  VerificationReport report;

  CheckResult top{"ms-top", true, "1°=0", {}};
  if (neg[lat.top()] != lat.bottom()) {
    top.passed = false;
    top.detail = nm(lat.top()) + "°=" + nm(neg[lat.top()]) + " ≠ " + nm(lat.bottom());
    top.witness = {nm(lat.top())};
  }
  report.checks.push_back(top);

  CheckResult meet{"ms-meet", true, "(a∧b)°=a°∨b°", {}};
  for (Element a = 0; a < lat.size() && meet.passed; ++a) {
    for (Element b = 0; b < lat.size(); ++b) {
      Element lhs = neg[lat.meet(a, b)];
      Element rhs = lat.join(neg[a], neg[b]);
      if (lhs != rhs) {
        meet.passed = false;
        meet.detail = "(" + nm(a) + "∧" + nm(b) + ")°=" + nm(lhs) + " ≠ " + nm(a) + "°∨" + nm(b) + "°=" + nm(rhs);
        meet.witness = {nm(a), nm(b)};
        break;
      }
    }
  }
  report.checks.push_back(meet);

  CheckResult dbl{"ms-double", true, "a≤a°°", {}};
  for (Element a = 0; a < lat.size(); ++a) {
    Element aa = neg[neg[a]];
    if (!lat.leq(a, aa)) {
      dbl.passed = false;
      dbl.detail = nm(a) + " ≰ " + nm(a) + "°° = " + nm(aa);
      dbl.witness = {nm(a), nm(aa)};
      break;
    }
  }
  report.checks.push_back(dbl);
  return report;
}

/// Lattice plus °. Construction never rejects an invalid table: validity is
/// recorded so raw evaluators can still run on it.
class MSAlgebra {
 public:
  MSAlgebra(LatticePtr lattice, NegTable neg) : lattice_(std::move(lattice)), neg_(std::move(neg)) {
    axioms_ = check_ms_axioms(*lattice_, neg_);
    valid_ = axioms_.all_passed();
  }

  const LatticePtr& lattice_ptr() const noexcept { return lattice_; }
  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  const NegTable& table() const noexcept { return neg_; }
  bool valid() const noexcept { return valid_; }
  const VerificationReport& axiom_report() const noexcept { return axioms_; }

  Element neg(Element e) const { return neg_.at(e); }
  Element double_neg(Element e) const { return neg_[neg_.at(e)]; }

  /// W°° = {w°° : w ∈ W}.
  ElementSet double_neg_image(ElementSet w) const {
    ElementSet out;
    for (Element e : w) out.insert(double_neg(e));
    return out;
  }

 private:
  LatticePtr lattice_;
  NegTable neg_;
  VerificationReport axioms_;
  bool valid_ = false;
};

inline Element double_neg(const MSAlgebra& ms, Element a) {
  if (a >= ms.lattice().size()) throw Error(ErrorCode::UnknownElement, "element index out of range");
  return ms.double_neg(a);
}

inline Element double_neg(const MSAlgebra& ms, std::string_view id) {
  return ms.double_neg(ms.lattice().index_of(id));
}

/// Identities that hold in every MS-algebra: (ξ∨θ)°=ξ°∧θ°,
/// (ξ∨θ)°°=ξ°°∨θ°°, θ°°°=θ°, 0°=1.
inline VerificationReport verify_derived_identities(const MSAlgebra& ms) {
  const auto& lat = ms.lattice();
  auto nm = [&](Element e) -> const std::string& { return lat.name(e); };
  VerificationReport report;

  CheckResult join_neg{"prop-2.1.1", true, "(ξ∨θ)°=ξ°∧θ°", {}};
  CheckResult join_dbl{"prop-2.1.2", true, "(ξ∨θ)°°=ξ°°∨θ°°", {}};
  for (Element a = 0; a < lat.size(); ++a) {
    for (Element b = 0; b < lat.size(); ++b) {
      Element j = lat.join(a, b);
      if (join_neg.passed && ms.neg(j) != lat.meet(ms.neg(a), ms.neg(b))) {
        join_neg.passed = false;
        join_neg.detail = "(" + nm(a) + "∨" + nm(b) + ")°=" + nm(ms.neg(j)) + " ≠ " +
                          nm(lat.meet(ms.neg(a), ms.neg(b)));
        join_neg.witness = {nm(a), nm(b)};
      }
      if (join_dbl.passed && ms.double_neg(j) != lat.join(ms.double_neg(a), ms.double_neg(b))) {
        join_dbl.passed = false;
        join_dbl.detail = "(" + nm(a) + "∨" + nm(b) + ")°°=" + nm(ms.double_neg(j)) + " ≠ " +
                          nm(lat.join(ms.double_neg(a), ms.double_neg(b)));
        join_dbl.witness = {nm(a), nm(b)};
      }
    }
  }

  CheckResult triple{"prop-2.1.3", true, "θ°°°=θ°", {}};
  for (Element a = 0; a < lat.size(); ++a) {
    if (ms.neg(ms.double_neg(a)) != ms.neg(a)) {
      triple.passed = false;
      triple.detail = nm(a) + "°°°=" + nm(ms.neg(ms.double_neg(a))) + " ≠ " + nm(a) + "°=" + nm(ms.neg(a));
      triple.witness = {nm(a)};
      break;
    }
  }

  CheckResult zero{"prop-2.1.4", true, "0°=1", {}};
  if (ms.neg(lat.bottom()) != lat.top()) {
    zero.passed = false;
    zero.detail = nm(lat.bottom()) + "°=" + nm(ms.neg(lat.bottom())) + " ≠ " + nm(lat.top());
    zero.witness = {nm(lat.bottom())};
  }

  report.checks = {join_neg, join_dbl, triple, zero};
  return report;
}

/// E_F(W) = {θ : θ∨w°° ∈ F for every w ∈ W}.
inline FilterSet extended_filter_crisp(const MSAlgebra& ms, const FilterSet& filter, ElementSet w) {
  if (w.empty()) throw Error(ErrorCode::EmptyW, "W must be nonempty");
  const auto& lat = ms.lattice();
  if (!w.subset_of(lat.all())) throw Error(ErrorCode::UnknownElement, "W outside carrier");
  if (filter.carrier != ms.lattice_ptr())
    throw Error(ErrorCode::CarrierMismatch, "filter belongs to a different lattice");
  ElementSet out;
  for (Element theta = 0; theta < lat.size(); ++theta) {
    bool all = true;
    for (Element x : w) all = all && filter.contains(lat.join(theta, ms.double_neg(x)));
    if (all) out.insert(theta);
  }
  return {ms.lattice_ptr(), out};
}

enum class Variety { MS, DeMorgan, Stone, Boolean };

constexpr std::string_view to_string(Variety v) {
  switch (v) {
    case Variety::MS: return "MS";
    case Variety::DeMorgan: return "de Morgan";
    case Variety::Stone: return "Stone";
    case Variety::Boolean: return "Boolean";
  }
  return "MS";
}

/// Convenience tag only: de Morgan when °° is the identity, Stone when
/// a∧a°=0 everywhere, Boolean when both.
inline Variety variety(const MSAlgebra& ms) {
  const auto& lat = ms.lattice();
  bool involutive = true;
  bool stone = true;
  for (Element a = 0; a < lat.size(); ++a) {
    involutive = involutive && ms.double_neg(a) == a;
    stone = stone && lat.meet(a, ms.neg(a)) == lat.bottom();
  }
  if (involutive && stone) return Variety::Boolean;
  if (involutive) return Variety::DeMorgan;
  if (stone) return Variety::Stone;
  return Variety::MS;
}

/// Every ° table satisfying the MS axioms, in lexicographic table order.
/// Search fixes 1°=0 and prunes on antitonicity and the meet axiom over the
/// already-assigned prefix.
inline std::vector<NegTable> enumerate_ms_operations(const FiniteLattice& lat, std::size_t cap = 8) {
  const std::size_t n = lat.size();
  if (n > cap)
    throw Error(ErrorCode::SizeCapExceeded,
                std::to_string(n) + " elements exceeds enumeration cap of " + std::to_string(cap));
  std::vector<NegTable> out;
  NegTable table(n, 0);
  std::vector<bool> assigned(n, false);

  auto consistent = [&](Element e) {
    for (Element f = 0; f < n; ++f) {
      if (!assigned[f]) continue;
      if (lat.leq(e, f) && !lat.leq(table[f], table[e])) return false;
      if (lat.leq(f, e) && !lat.leq(table[e], table[f])) return false;
      Element m = lat.meet(e, f);
      if (assigned[m] && table[m] != lat.join(table[e], table[f])) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, Element pos) -> void {
    if (pos == n) {
      if (check_ms_axioms(lat, table).all_passed()) out.push_back(table);
      return;
    }
    if (pos == lat.top()) {
      table[pos] = lat.bottom();
      assigned[pos] = true;
      if (consistent(pos)) self(self, pos + 1);
      assigned[pos] = false;
      return;
    }
    for (Element v = 0; v < n; ++v) {
      table[pos] = v;
      assigned[pos] = true;
      if (consistent(pos)) self(self, pos + 1);
      assigned[pos] = false;
    }
  };
  recurse(recurse, 0);
  return out;
}

}  // namespace msfuzzy
