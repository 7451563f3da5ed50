#pragma once

#include <string>
#include <vector>

#include "msfuzzy/fuzzy.hpp"
#include "msfuzzy/ms_algebra.hpp"

namespace msfuzzy {

namespace detail {
inline void require_w(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  if (w.empty()) throw Error(ErrorCode::EmptyW, "W must be nonempty");
  if (!w.subset_of(ms.lattice().all())) throw Error(ErrorCode::UnknownElement, "W outside carrier");
  if (chi.carrier() != ms.lattice_ptr() && chi.carrier()->names() != ms.lattice().names())
    throw Error(ErrorCode::CarrierMismatch, "χ lives on a different carrier");
}
}  // namespace detail

/// max over w ∈ W of χ(w°°).
inline Grade base_grade(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  detail::require_w(ms, chi, w);
  Grade out = Grade::zero();
  for (Element x : w) out = max(out, chi(ms.double_neg(x)));
  return out;
}

/// Extended fuzzy filter: θ ↦ max over w ∈ W of χ(θ)∨χ(w°°). Accepts invalid
/// algebras and non-filter χ.
inline FuzzySet upsilon(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  Grade base = base_grade(ms, chi, w);
  std::vector<Grade> out;
  for (const Grade& g : chi.grades()) out.push_back(max(g, base));
  return FuzzySet(ms.lattice_ptr(), std::move(out));
}

/// Strong fuzzy extension: θ ↦ max over w ∈ W of χ(θ∨w°°).
inline FuzzySet omega(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  detail::require_w(ms, chi, w);
  const auto& lat = ms.lattice();
  std::vector<Grade> out;
  for (Element theta = 0; theta < lat.size(); ++theta) {
    Grade best = Grade::zero();
    for (Element x : w) best = max(best, chi(lat.join(theta, ms.double_neg(x))));
    out.push_back(best);
  }
  return FuzzySet(ms.lattice_ptr(), std::move(out));
}

struct ExtensionResult {
  FuzzySet source;
  ElementSet subset;
  FuzzySet upsilon;
  FuzzySet omega;
  Grade base_grade;
};

inline ExtensionResult extend(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  return {chi, w, upsilon(ms, chi, w), omega(ms, chi, w), base_grade(ms, chi, w)};
}

/// χ is fixed relative to W when Υ_{χ,W} = χ. Computed pointwise and via
/// base_grade ≤ min χ; the two must agree.
inline bool is_fixed_relative(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  bool pointwise = upsilon(ms, chi, w) == chi;
  Grade lowest = chi.image().front();
  bool by_base = base_grade(ms, chi, w) <= lowest;
  if (pointwise != by_base) throw Error(ErrorCode::InternalInvariant, "fixedness computations disagree");
  return pointwise;
}

struct CanonicalSet {
  std::string name;
  ElementSet members;
  std::string note;
};

/// Candidate W relative to which every fuzzy filter is fixed: {0},
/// A = {ρ : ρ°° = 0} and C = {ρ : χ(ρ°°) = 0}. Empty sets are skipped and
/// mentioned in `skipped`.
struct FixedWitnessSets {
  std::vector<CanonicalSet> sets;
  std::vector<std::string> skipped;
};

inline FixedWitnessSets fixed_witness_sets(const MSAlgebra& ms, const FuzzySet& chi) {
  const auto& lat = ms.lattice();
  FixedWitnessSets out;
  out.sets.push_back({"{0}", ElementSet::single(lat.bottom()), "bottom singleton"});
  ElementSet a, c;
  for (Element r = 0; r < lat.size(); ++r) {
    if (ms.double_neg(r) == lat.bottom()) a.insert(r);
    if (chi(ms.double_neg(r)).is_zero()) c.insert(r);
  }
  if (a.empty())
    out.skipped.push_back("A");
  else
    out.sets.push_back({"A", a, "ρ°° = 0"});
  if (c.empty())
    out.skipped.push_back("C");
  else
    out.sets.push_back({"C", c, "χ(ρ°°) = 0"});
  return out;
}

struct DenseResult {
  /// t = max of μ over W.
  Grade level;
  /// Members of W attaining t.
  ElementSet within;
  /// The whole level cut μ_t.
  ElementSet level_cut;
};

inline DenseResult dense_elements(const FuzzySet& mu, ElementSet w) {
  if (w.empty()) throw Error(ErrorCode::EmptyW, "W must be nonempty");
  if (!w.subset_of(mu.carrier()->all())) throw Error(ErrorCode::UnknownElement, "W outside carrier");
  Grade t = Grade::zero();
  for (Element e : w) t = max(t, mu(e));
  ElementSet within;
  for (Element e : w)
    if (mu(e) == t) within.insert(e);
  return {t, within, msfuzzy::level_cut(mu, t)};
}

struct DenseEvaluation {
  Grade value;
  Element certificate;
};

/// Υ_{χ,W}(θ) = χ(θ)∨χ(d) for a dense element d of W°°; the first dense
/// element in canonical order is used as certificate.
inline DenseEvaluation upsilon_via_dense(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w, Element theta) {
  detail::require_w(ms, chi, w);
  if (theta >= ms.lattice().size()) throw Error(ErrorCode::UnknownElement, "θ outside carrier");
  auto dense = dense_elements(chi, ms.double_neg_image(w));
  Element d = *dense.within.begin();
  Grade value = max(chi(theta), chi(d));
  if (value != upsilon(ms, chi, w)(theta))
    throw Error(ErrorCode::InternalInvariant, "dense evaluation disagrees with Υ");
  return {value, d};
}

/// Ω_{χ,W}(θ) = χ(θ∨w°°) iff θ∨w°° is dense in {θ∨v°° : v ∈ W}. Both sides
/// are evaluated and must agree; the shared truth value is returned.
inline bool omega_dense_equivalence(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w, Element theta,
                                    Element x) {
  detail::require_w(ms, chi, w);
  if (!w.contains(x)) throw Error(ErrorCode::HypothesisUnmet, "w must belong to W");
  if (theta >= ms.lattice().size()) throw Error(ErrorCode::UnknownElement, "θ outside carrier");
  const auto& lat = ms.lattice();
  Element candidate = lat.join(theta, ms.double_neg(x));
  bool attains = omega(ms, chi, w)(theta) == chi(candidate);
  ElementSet joins;
  for (Element v : w) joins.insert(lat.join(theta, ms.double_neg(v)));
  bool dense = dense_elements(chi, joins).within.contains(candidate);
  if (attains != dense) throw Error(ErrorCode::InternalInvariant, "Ω dense characterization disagrees");
  return attains;
}

}  // namespace msfuzzy
