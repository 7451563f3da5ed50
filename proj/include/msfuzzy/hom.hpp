#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "msfuzzy/extensions.hpp"

namespace msfuzzy {

struct HomReport {
  bool is_join_hom = true;
  bool is_meet_hom = true;
  bool is_lattice_hom = true;
  /// First pair breaking join preservation, else the first breaking meet.
  std::optional<ElementPair> witness;
};

inline HomReport hom_report(const FiniteLattice& lat, const FuzzySet& mu) {
  HomReport out;
  std::optional<ElementPair> meet_witness;
  for (Element a = 0; a < lat.size(); ++a) {
    for (Element b = 0; b < lat.size(); ++b) {
      if (out.is_join_hom && mu(lat.join(a, b)) != max(mu(a), mu(b))) {
        out.is_join_hom = false;
        out.witness = ElementPair{a, b};
      }
      if (out.is_meet_hom && mu(lat.meet(a, b)) != min(mu(a), mu(b))) {
        out.is_meet_hom = false;
        meet_witness = ElementPair{a, b};
      }
    }
  }
  if (!out.witness) out.witness = meet_witness;
  out.is_lattice_hom = out.is_join_hom && out.is_meet_hom;
  return out;
}

inline bool is_join_hom(const FiniteLattice& lat, const FuzzySet& mu) { return hom_report(lat, mu).is_join_hom; }

/// {θ : μ(θ) = 0}
inline ElementSet kernel(const FuzzySet& mu) {
  ElementSet out;
  for (Element e = 0; e < mu.grades().size(); ++e)
    if (mu(e).is_zero()) out.insert(e);
  return out;
}

/// {θ : μ(θ) = 1}
inline ElementSet cokernel(const FuzzySet& mu) { return level_cut(mu, Grade::one()); }

/// θ ∈ ker Υ_{χ,W} ⇔ θ ∈ ker χ and W°° ⊆ ker χ, checked for every θ.
inline bool kernel_characterization(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  auto ker_upsilon = kernel(upsilon(ms, chi, w));
  auto ker_chi = kernel(chi);
  bool image_inside = ms.double_neg_image(w).subset_of(ker_chi);
  for (Element theta = 0; theta < ms.lattice().size(); ++theta)
    if (ker_upsilon.contains(theta) != (ker_chi.contains(theta) && image_inside)) return false;
  return true;
}

/// θ ∈ coker Υ_{χ,W} ⇔ χ(θ) = 1 or W°° meets coker χ, checked for every θ.
inline bool cokernel_characterization(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w) {
  auto coker_upsilon = cokernel(upsilon(ms, chi, w));
  auto coker_chi = cokernel(chi);
  bool meets = !(ms.double_neg_image(w) & coker_chi).empty();
  for (Element theta = 0; theta < ms.lattice().size(); ++theta)
    if (coker_upsilon.contains(theta) != (coker_chi.contains(theta) || meets)) return false;
  return true;
}

/// Fiber of Υ_{χ,W} through θ: {a : Υ(a) = Υ(θ)}.
inline ElementSet inverse_class(const MSAlgebra& ms, const FuzzySet& chi, ElementSet w, Element theta) {
  if (theta >= ms.lattice().size()) throw Error(ErrorCode::UnknownElement, "θ outside carrier");
  auto ups = upsilon(ms, chi, w);
  ElementSet out;
  for (Element a = 0; a < ms.lattice().size(); ++a)
    if (ups(a) == ups(theta)) out.insert(a);
  return out;
}

/// A unary operation on grades standing in for ° on [0,1], which the
/// algebra itself does not define.
struct GradeStructure {
  std::optional<std::function<Grade(const Grade&)>> neg_grade;

  /// x ↦ 1 − x
  static GradeStructure involutive() {
    return {[](const Grade& g) { return Grade(Grade::rep(1) - g.value()); }};
  }
  static GradeStructure identity() {
    return {[](const Grade& g) { return g; }};
  }

  Grade double_neg(const Grade& g) const { return (*neg_grade)((*neg_grade)(g)); }
};

struct GradeHomCheck {
  /// χ(θ°°) = (χ(θ))°° for every θ.
  bool hypothesis = false;
  /// Υ_{χ,W}(θ°°) = (Υ_{χ,W}(θ))°° for every θ; meaningful when hypothesis holds.
  bool conclusion = false;
  std::optional<Element> witness;
};

inline GradeHomCheck grade_ms_hom_check(const MSAlgebra& ms, const FuzzySet& chi, const GradeStructure& gs,
                                        ElementSet w) {
  if (!gs.neg_grade) throw Error(ErrorCode::MissingGradeStructure, "no ° on grades supplied");
  const auto& lat = ms.lattice();
  auto holds_for = [&](const FuzzySet& mu, std::optional<Element>& witness) {
    for (Element theta = 0; theta < lat.size(); ++theta) {
      if (mu(ms.double_neg(theta)) != gs.double_neg(mu(theta))) {
        witness = theta;
        return false;
      }
    }
    return true;
  };
  GradeHomCheck out;
  out.hypothesis = holds_for(chi, out.witness);
  if (out.hypothesis) out.conclusion = holds_for(upsilon(ms, chi, w), out.witness);
  return out;
}

inline GradeHomCheck grade_ms_hom_check(const MSAlgebra& ms, const FuzzySet& chi, const GradeStructure& gs) {
  return grade_ms_hom_check(ms, chi, gs, ElementSet::single(ms.lattice().bottom()));
}

}  // namespace msfuzzy
