#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "msfuzzy/document.hpp"
#include "msfuzzy/extensions.hpp"
#include "msfuzzy/fixtures.hpp"
#include "msfuzzy/hom.hpp"
#include "msfuzzy/lattice_enum.hpp"

namespace msfuzzy {

enum class PropertyKind {
  /// Expected to hold on every instance meeting its hypotheses.
  Theorem,
  /// A claim with a flawed argument; failures are refutations, not bugs.
  SearchTarget,
  /// Evaluated on the shipped example instance instead of generated ones.
  Fixture,
};

/// What a property quantifies over beyond the algebra itself.
enum class Scope {
  Algebra,
  Filter,
  FilterSubset,
  FilterPair,
};

enum class Verdict { Pass, Fail, HypothesisUnmet };

constexpr std::string_view to_string(PropertyKind k) {
  switch (k) {
    case PropertyKind::Theorem: return "theorem";
    case PropertyKind::SearchTarget: return "search-target";
    case PropertyKind::Fixture: return "fixture";
  }
  return "theorem";
}

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::HypothesisUnmet: return "hypothesis-unmet";
  }
  return "pass";
}

/// Borrowed instance. `chi2` feeds pair-scoped claims; `phi`/`psi` pin the
/// filter pair of a primality witness so replay checks exactly that pair.
struct InstanceView {
  const MSAlgebra& ms;
  const FuzzySet& chi;
  ElementSet w;
  const FuzzySet* chi2 = nullptr;
  const FuzzySet* phi = nullptr;
  const FuzzySet* psi = nullptr;
};

struct Instance {
  MSAlgebra ms;
  FuzzySet chi;
  ElementSet w;
  std::optional<FuzzySet> chi2;
  std::optional<FuzzySet> phi;
  std::optional<FuzzySet> psi;

  InstanceView view() const {
    return {ms, chi, w, chi2 ? &*chi2 : nullptr, phi ? &*phi : nullptr, psi ? &*psi : nullptr};
  }

  static Instance copy_of(const InstanceView& v) {
    Instance out{v.ms, v.chi, v.w, std::nullopt, std::nullopt, std::nullopt};
    if (v.chi2) out.chi2 = *v.chi2;
    if (v.phi) out.phi = *v.phi;
    if (v.psi) out.psi = *v.psi;
    return out;
  }
};

struct PropertyContext {
  std::vector<Grade> grade_universe{Grade::zero(), Grade::half(), Grade::one()};
  GradeStructure grades = GradeStructure::involutive();
  /// Gate every non-fixture property on a valid algebra and filter χ.
  bool require_valid = true;
};

struct Finding {
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<FuzzySet> phi;
  std::optional<FuzzySet> psi;

  static Finding pass() { return {}; }
  static Finding fail(std::string detail) { return {Verdict::Fail, std::move(detail), std::nullopt, std::nullopt}; }
  static Finding unmet(std::string reason) {
    return {Verdict::HypothesisUnmet, std::move(reason), std::nullopt, std::nullopt};
  }
};

/// Replayable counterexample: running `property` on `instance` fails again.
struct Witness {
  std::string property;
  Instance instance;
  std::string detail;
};

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string detail;
  std::optional<Witness> witness;
};

struct PropertyInfo {
  std::string_view id;
  PropertyKind kind;
  Scope scope;
  std::string_view claim;
  Finding (*check)(const InstanceView&, const PropertyContext&);
};

namespace props {

inline std::string nm(const InstanceView& v, Element e) { return v.ms.lattice().name(e); }
inline std::string set_str(const InstanceView& v, ElementSet s) { return v.ms.lattice().set_str(s); }

/// Nonempty subsets of `w`, including `w` itself, in increasing mask order.
inline std::vector<ElementSet> nonempty_subsets(ElementSet w) {
  std::vector<ElementSet> out;
  const std::uint64_t full = w.bits();
  for (std::uint64_t sub = full; sub != 0; sub = (sub - 1) & full) out.emplace_back(sub);
  std::reverse(out.begin(), out.end());
  return out;
}

inline Finding derived_identities(const InstanceView& v, const PropertyContext&) {
  auto report = verify_derived_identities(v.ms);
  for (const auto& c : report.checks)
    if (!c.passed) return Finding::fail(c.id + ": " + c.detail);
  return Finding::pass();
}

inline Finding extended_filter_theorem(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice_ptr();
  ElementSet crisp = level_cut(v.chi, Grade::one());
  if (!is_filter(*lat, crisp).ok) return Finding::unmet("1-level cut of χ is not a filter");
  auto extended = extended_filter_crisp(v.ms, {lat, crisp}, v.w);
  if (auto check = is_filter(*lat, extended.members); !check.ok)
    return Finding::fail("E_F(W)=" + set_str(v, extended.members) + " is not a filter: " + check.reason);
  if (!crisp.subset_of(extended.members))
    return Finding::fail("F=" + set_str(v, crisp) + " not contained in E_F(W)=" + set_str(v, extended.members));
  return Finding::pass();
}

inline Finding upsilon_is_filter(const InstanceView& v, const PropertyContext&) {
  auto ups = upsilon(v.ms, v.chi, v.w);
  auto cls = classify(v.ms.lattice(), ups);
  if (!cls.is_filter) {
    std::string where = cls.filter_witness ? " at (" + nm(v, cls.filter_witness->first) + "," +
                                                 nm(v, cls.filter_witness->second) + ")"
                                           : " (Υ(1)≠1)";
    return Finding::fail("Υ is not a fuzzy filter" + where);
  }
  if (!v.chi.subset_of(ups)) return Finding::fail("χ not contained in Υ");
  return Finding::pass();
}

inline Finding upsilon_is_prime(const InstanceView& v, const PropertyContext& ctx) {
  auto ups = upsilon(v.ms, v.chi, v.w);
  if (ups.is_constant()) return Finding::unmet("Υ is constant, so primality is undefined");
  const auto& lat = v.ms.lattice();
  if (v.phi && v.psi) {
    if (!is_fuzzy_filter(lat, *v.phi) || !is_fuzzy_filter(lat, *v.psi))
      return Finding::unmet("replay pair is not a pair of fuzzy filters");
    if (fuzzy_intersection(*v.phi, *v.psi).subset_of(ups) && !v.phi->subset_of(ups) && !v.psi->subset_of(ups)) {
      Finding f = Finding::fail("Φ∩Ψ ⊆ Υ but Φ ⊄ Υ and Ψ ⊄ Υ with Φ=(" + v.phi->str() + "), Ψ=(" + v.psi->str() + ")");
      f.phi = *v.phi;
      f.psi = *v.psi;
      return f;
    }
    return Finding::pass();
  }
  auto verdict = is_prime_fuzzy_filter_bounded(lat, ups, ctx.grade_universe);
  if (verdict.prime) return Finding::pass();
  const auto& [phi, psi] = *verdict.witness;
  Finding f = Finding::fail("Φ∩Ψ ⊆ Υ but Φ ⊄ Υ and Ψ ⊄ Υ with Φ=(" + phi.str() + "), Ψ=(" + psi.str() + ")");
  f.phi = phi;
  f.psi = psi;
  return f;
}

inline Finding monotone_in_w(const InstanceView& v, const PropertyContext&) {
  auto big = upsilon(v.ms, v.chi, v.w);
  for (ElementSet z : nonempty_subsets(v.w))
    if (!upsilon(v.ms, v.chi, z).subset_of(big))
      return Finding::fail("Z=" + set_str(v, z) + " ⊆ W but Υ_{χ,Z} ⊄ Υ_{χ,W}");
  return Finding::pass();
}

inline Finding monotone_in_chi(const InstanceView& v, const PropertyContext&) {
  if (!v.chi.subset_of(*v.chi2)) return Finding::unmet("χ ⊄ χ2");
  if (!upsilon(v.ms, v.chi, v.w).subset_of(upsilon(v.ms, *v.chi2, v.w)))
    return Finding::fail("χ ⊆ χ2 but Υ_{χ,W} ⊄ Υ_{χ2,W}");
  return Finding::pass();
}

inline Finding fixed_above_images(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto ups = upsilon(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < lat.size(); ++theta) {
    bool above = true;
    for (Element x : v.w) above = above && lat.leq(v.ms.double_neg(x), theta);
    if (above && ups(theta) != v.chi(theta))
      return Finding::fail("w°° ≤ " + nm(v, theta) + " for all w but Υ(" + nm(v, theta) + ")=" + ups(theta).str() +
                           " ≠ χ=" + v.chi(theta).str());
  }
  return Finding::pass();
}

inline Finding fixed_below_images(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto ups = upsilon(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < lat.size(); ++theta) {
    bool below = true;
    for (Element x : v.w) below = below && lat.leq(theta, v.ms.double_neg(x));
    if (below && ups(theta) != v.chi(theta))
      return Finding::fail(nm(v, theta) + " ≤ w°° for all w but Υ(" + nm(v, theta) + ")=" + ups(theta).str() +
                           " ≠ χ=" + v.chi(theta).str());
  }
  return Finding::pass();
}

inline Finding injective_fixed_point(const InstanceView& v, const PropertyContext&) {
  if (!v.chi.is_injective()) return Finding::unmet("χ is not injective");
  const auto& lat = v.ms.lattice();
  auto ups = upsilon(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < lat.size(); ++theta) {
    if (ups(theta) != v.chi(theta)) continue;
    for (Element x : v.w)
      if (!lat.leq(v.ms.double_neg(x), theta))
        return Finding::fail("Υ(" + nm(v, theta) + ")=χ(" + nm(v, theta) + ") but " + nm(v, x) + "°°=" +
                             nm(v, v.ms.double_neg(x)) + " ≰ " + nm(v, theta));
  }
  return Finding::pass();
}

inline Finding top_image_saturates(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  bool hits_top = false;
  for (Element x : v.w) hits_top = hits_top || v.ms.double_neg(x) == lat.top();
  if (!hits_top) return Finding::unmet("no w ∈ W with w°° = 1");
  if (upsilon(v.ms, v.chi, v.w) != FuzzySet::constant(v.ms.lattice_ptr(), Grade::one()))
    return Finding::fail("some w°°=1 yet Υ is not constantly 1");
  return Finding::pass();
}

inline Finding whole_and_top_saturate(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto one = FuzzySet::constant(v.ms.lattice_ptr(), Grade::one());
  if (upsilon(v.ms, v.chi, lat.all()) != one) return Finding::fail("Υ_{χ,L} is not constantly 1");
  if (upsilon(v.ms, v.chi, ElementSet::single(lat.top())) != one) return Finding::fail("Υ_{χ,{1}} is not constantly 1");
  return Finding::pass();
}

inline Finding one_has_source(const InstanceView& v, const PropertyContext&) {
  auto ups = upsilon(v.ms, v.chi, v.w);
  bool image_one = false;
  for (Element x : v.w) image_one = image_one || v.chi(v.ms.double_neg(x)).is_one();
  for (Element theta = 0; theta < v.ms.lattice().size(); ++theta)
    if (ups(theta).is_one() && !v.chi(theta).is_one() && !image_one)
      return Finding::fail("Υ(" + nm(v, theta) + ")=1 with χ(θ)<1 and χ(w°°)<1 for all w");
  return Finding::pass();
}

inline Finding union_commutes(const InstanceView& v, const PropertyContext&) {
  auto lhs = fuzzy_union(upsilon(v.ms, v.chi, v.w), upsilon(v.ms, *v.chi2, v.w));
  auto rhs = upsilon(v.ms, fuzzy_union(v.chi, *v.chi2), v.w);
  for (Element theta = 0; theta < v.ms.lattice().size(); ++theta)
    if (lhs(theta) != rhs(theta))
      return Finding::fail("at " + nm(v, theta) + ": Υ_{χ,W}∨Υ_{χ2,W}=" + lhs(theta).str() + " but Υ_{χ∪χ2,W}=" +
                           rhs(theta).str());
  return Finding::pass();
}

inline Finding upsilon_meet_hom(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto ups = upsilon(v.ms, v.chi, v.w);
  for (Element a = 0; a < lat.size(); ++a)
    for (Element b = 0; b < lat.size(); ++b)
      if (ups(lat.meet(a, b)) != min(ups(a), ups(b)))
        return Finding::fail("Υ(" + nm(v, a) + "∧" + nm(v, b) + ") ≠ Υ(" + nm(v, a) + ")∧Υ(" + nm(v, b) + ")");
  return Finding::pass();
}

inline Finding fixedness_consistent(const InstanceView& v, const PropertyContext&) {
  try {
    bool fixed = is_fixed_relative(v.ms, v.chi, v.w);
    if (fixed != (upsilon(v.ms, v.chi, v.w) == v.chi)) return Finding::fail("fixedness verdict disagrees with Υ=χ");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InternalInvariant) throw;
    return Finding::fail(e.what());
  }
  return Finding::pass();
}

inline Finding canonical_sets_fixed(const InstanceView& v, const PropertyContext&) {
  for (const auto& set : fixed_witness_sets(v.ms, v.chi).sets)
    if (!is_fixed_relative(v.ms, v.chi, set.members))
      return Finding::fail("χ is not fixed relative to " + set.name + "=" + set_str(v, set.members));
  return Finding::pass();
}

inline Finding fixed_descends(const InstanceView& v, const PropertyContext&) {
  if (!is_fixed_relative(v.ms, v.chi, v.w)) return Finding::unmet("χ is not fixed relative to W");
  for (ElementSet z : nonempty_subsets(v.w))
    if (!is_fixed_relative(v.ms, v.chi, z))
      return Finding::fail("fixed relative to W but not to Z=" + set_str(v, z));
  return Finding::pass();
}

inline Finding fixed_union(const InstanceView& v, const PropertyContext&) {
  if (!is_fixed_relative(v.ms, v.chi, v.w) || !is_fixed_relative(v.ms, *v.chi2, v.w))
    return Finding::unmet("χ and χ2 are not both fixed relative to W");
  auto joined = fuzzy_union(v.chi, *v.chi2);
  if (upsilon(v.ms, joined, v.w) != joined) return Finding::fail("χ∪χ2 is not fixed relative to W");
  return Finding::pass();
}

inline Finding singleton_formula(const InstanceView& v, const PropertyContext&) {
  for (Element x : v.w) {
    auto ups = upsilon(v.ms, v.chi, ElementSet::single(x));
    const Grade& image = v.chi(v.ms.double_neg(x));
    for (Element theta = 0; theta < v.ms.lattice().size(); ++theta) {
      if (ups(theta) != max(v.chi(theta), image))
        return Finding::fail("Υ_{χ,{" + nm(v, x) + "}}(" + nm(v, theta) + ") ≠ χ(θ)∨χ(w°°)");
      if (ups(theta) != v.chi(theta) && ups(theta) != image)
        return Finding::fail("Υ_{χ,{" + nm(v, x) + "}}(" + nm(v, theta) + ") is neither χ(θ) nor χ(w°°)");
    }
  }
  return Finding::pass();
}

inline Finding singleton_pointwise(const InstanceView& v, const PropertyContext&) {
  for (Element x : v.w) {
    auto ups = upsilon(v.ms, v.chi, ElementSet::single(x));
    const Grade& image = v.chi(v.ms.double_neg(x));
    for (Element theta = 0; theta < v.ms.lattice().size(); ++theta)
      if (ups(theta) != image && ups(theta) != v.chi(theta))
        return Finding::fail("Υ_{χ,{" + nm(v, x) + "}}(" + nm(v, theta) + ") differs from both χ(w°°) and χ(θ)");
  }
  return Finding::pass();
}

inline Finding singleton_global(const InstanceView& v, const PropertyContext&) {
  for (Element x : v.w) {
    auto single = ElementSet::single(x);
    auto ups = upsilon(v.ms, v.chi, single);
    const Grade& image = v.chi(v.ms.double_neg(x));
    for (Element theta = 0; theta < v.ms.lattice().size(); ++theta) {
      if (ups(theta) == image) continue;
      if (!is_fixed_relative(v.ms, v.chi, single))
        return Finding::fail("Υ_{χ,{" + nm(v, x) + "}}(" + nm(v, theta) + ")=" + ups(theta).str() + " ≠ χ(w°°)=" +
                             image.str() + " yet χ is not fixed relative to {" + nm(v, x) + "}");
      break;
    }
  }
  return Finding::pass();
}

inline Finding singleton_at_self(const InstanceView& v, const PropertyContext&) {
  for (Element x = 0; x < v.ms.lattice().size(); ++x)
    if (upsilon(v.ms, v.chi, ElementSet::single(x))(x) != v.chi(v.ms.double_neg(x)))
      return Finding::fail("Υ_{χ,{" + nm(v, x) + "}}(" + nm(v, x) + ") ≠ χ(" + nm(v, x) + "°°)");
  return Finding::pass();
}

inline Finding omega_definition(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto om = omega(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < lat.size(); ++theta) {
    Grade best = Grade::zero();
    for (Element x : v.w) {
      Grade single = omega(v.ms, v.chi, ElementSet::single(x))(theta);
      if (single != v.chi(lat.join(theta, v.ms.double_neg(x))))
        return Finding::fail("Ω_{χ,{" + nm(v, x) + "}}(" + nm(v, theta) + ") ≠ χ(θ∨w°°)");
      best = max(best, single);
    }
    if (om(theta) != best) return Finding::fail("Ω_{χ,W}(" + nm(v, theta) + ") is not the max over singletons");
  }
  if (omega(v.ms, v.chi, ElementSet::single(lat.bottom())) != v.chi) return Finding::fail("Ω_{χ,{0}} ≠ χ");
  return Finding::pass();
}

inline Finding upsilon_within_omega(const InstanceView& v, const PropertyContext&) {
  auto ups = upsilon(v.ms, v.chi, v.w);
  auto om = omega(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < v.ms.lattice().size(); ++theta)
    if (om(theta) < ups(theta))
      return Finding::fail("Ω(" + nm(v, theta) + ")=" + om(theta).str() + " < Υ=" + ups(theta).str());
  return Finding::pass();
}

inline Finding omega_filter_check(const InstanceView& v, const FuzzySet& om) {
  auto cls = classify(v.ms.lattice(), om);
  if (cls.is_filter) return Finding::pass();
  if (!cls.top_is_one) return Finding::fail("Ω(1) ≠ 1");
  auto [a, b] = *cls.filter_witness;
  const auto& lat = v.ms.lattice();
  return Finding::fail("Ω(" + nm(v, a) + "∧" + nm(v, b) + ")=Ω(" + nm(v, lat.meet(a, b)) + ")=" +
                       om(lat.meet(a, b)).str() + " but Ω(" + nm(v, a) + ")∧Ω(" + nm(v, b) + ")=" +
                       min(om(a), om(b)).str());
}

inline Finding omega_is_filter(const InstanceView& v, const PropertyContext&) {
  return omega_filter_check(v, omega(v.ms, v.chi, v.w));
}

inline Finding omega_singleton_is_filter(const InstanceView& v, const PropertyContext&) {
  for (Element x : v.w) {
    auto f = omega_filter_check(v, omega(v.ms, v.chi, ElementSet::single(x)));
    if (f.verdict == Verdict::Fail) {
      f.detail = "W={" + nm(v, x) + "}: " + f.detail;
      return f;
    }
  }
  return Finding::pass();
}

inline Finding join_hom_collapses(const InstanceView& v, const PropertyContext&) {
  if (!is_join_hom(v.ms.lattice(), v.chi)) return Finding::unmet("χ is not a join homomorphism");
  if (upsilon(v.ms, v.chi, v.w) != omega(v.ms, v.chi, v.w)) return Finding::fail("χ preserves joins but Υ ≠ Ω");
  return Finding::pass();
}

inline Finding dense_upsilon(const InstanceView& v, const PropertyContext&) {
  auto ups = upsilon(v.ms, v.chi, v.w);
  auto dense = dense_elements(v.chi, v.ms.double_neg_image(v.w));
  for (Element theta = 0; theta < v.ms.lattice().size(); ++theta)
    for (Element d : dense.within)
      if (ups(theta) != max(v.chi(theta), v.chi(d)))
        return Finding::fail("dense " + nm(v, d) + " gives χ(θ)∨χ(d) ≠ Υ(" + nm(v, theta) + ")");
  return Finding::pass();
}

inline Finding dense_omega(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  auto om = omega(v.ms, v.chi, v.w);
  for (Element theta = 0; theta < lat.size(); ++theta) {
    ElementSet joins;
    for (Element x : v.w) joins.insert(lat.join(theta, v.ms.double_neg(x)));
    auto dense = dense_elements(v.chi, joins);
    for (Element x : v.w) {
      Element c = lat.join(theta, v.ms.double_neg(x));
      bool attains = om(theta) == v.chi(c);
      if (attains != dense.within.contains(c))
        return Finding::fail("θ=" + nm(v, theta) + ", w=" + nm(v, x) + ": Ω(θ)=χ(θ∨w°°) is " +
                             (attains ? "true" : "false") + " but density is " + (attains ? "false" : "true"));
    }
  }
  return Finding::pass();
}

inline Finding join_hom_lifts(const InstanceView& v, const PropertyContext&) {
  const auto& lat = v.ms.lattice();
  if (!is_join_hom(lat, v.chi)) return Finding::unmet("χ is not a join homomorphism");
  auto report = hom_report(lat, upsilon(v.ms, v.chi, v.w));
  if (!report.is_lattice_hom) {
    auto [a, b] = *report.witness;
    return Finding::fail("Υ is not a lattice homomorphism at (" + nm(v, a) + "," + nm(v, b) + ")");
  }
  return Finding::pass();
}

inline Finding grade_double_neg_lifts(const InstanceView& v, const PropertyContext& ctx) {
  auto check = grade_ms_hom_check(v.ms, v.chi, ctx.grades, v.w);
  if (!check.hypothesis) return Finding::unmet("χ(θ°°) ≠ (χ(θ))°° for some θ");
  if (!check.conclusion) return Finding::fail("Υ(θ°°) ≠ (Υ(θ))°° at θ=" + nm(v, *check.witness));
  return Finding::pass();
}

inline Finding kernel_prop(const InstanceView& v, const PropertyContext&) {
  if (!kernel_characterization(v.ms, v.chi, v.w)) return Finding::fail("kernel characterization fails");
  return Finding::pass();
}

inline Finding cokernel_prop(const InstanceView& v, const PropertyContext&) {
  if (!cokernel_characterization(v.ms, v.chi, v.w)) return Finding::fail("cokernel characterization fails");
  return Finding::pass();
}

inline Finding fiber_closed(const InstanceView& v, bool join, bool negation) {
  const auto& lat = v.ms.lattice();
  for (Element theta = 0; theta < lat.size(); ++theta) {
    auto fiber = inverse_class(v.ms, v.chi, v.w, theta);
    for (Element a : fiber) {
      if (negation && !fiber.contains(v.ms.neg(a)))
        return Finding::fail("fiber " + set_str(v, fiber) + " of " + nm(v, theta) + " contains " + nm(v, a) +
                             " but not " + nm(v, a) + "°=" + nm(v, v.ms.neg(a)));
      if (negation) continue;
      for (Element b : fiber) {
        Element r = join ? lat.join(a, b) : lat.meet(a, b);
        if (!fiber.contains(r))
          return Finding::fail("fiber " + set_str(v, fiber) + " of " + nm(v, theta) + " misses " + nm(v, a) +
                               (join ? "∨" : "∧") + nm(v, b) + "=" + nm(v, r));
      }
    }
  }
  return Finding::pass();
}

inline Finding fiber_meet_closed(const InstanceView& v, const PropertyContext&) { return fiber_closed(v, false, false); }

inline Finding fiber_join_closed(const InstanceView& v, const PropertyContext&) {
  if (!is_join_hom(v.ms.lattice(), v.chi)) return Finding::unmet("χ is not a join homomorphism");
  return fiber_closed(v, true, false);
}

inline Finding fiber_neg_closed(const InstanceView& v, const PropertyContext&) {
  if (!is_join_hom(v.ms.lattice(), v.chi)) return Finding::unmet("χ is not a join homomorphism");
  return fiber_closed(v, false, true);
}

inline Finding algebra_is_valid(const InstanceView& v, const PropertyContext&) {
  std::string failures;
  for (const auto& c : v.ms.axiom_report().checks)
    if (!c.passed) failures += (failures.empty() ? "" : "; ") + c.id + ": " + c.detail;
  return failures.empty() ? Finding::pass() : Finding::fail(failures);
}

}  // namespace props

/// The claim inventory. Ids follow the source numbering so they are stable
/// CLI arguments.
inline const std::vector<PropertyInfo>& property_registry() {
  using K = PropertyKind;
  using S = Scope;
  static const std::vector<PropertyInfo> table = {
      {"prop-2.1", K::Theorem, S::Algebra, "(ξ∨θ)°=ξ°∧θ°, (ξ∨θ)°°=ξ°°∨θ°°, θ°°°=θ°, 0°=1", props::derived_identities},
      {"thm-ext-filter", K::Theorem, S::FilterSubset, "E_F(W) is a filter containing F", props::extended_filter_theorem},
      {"thm-3.1-filter", K::Theorem, S::FilterSubset, "Υ_{χ,W} is a fuzzy filter containing χ", props::upsilon_is_filter},
      {"thm-3.1-prime", K::SearchTarget, S::FilterSubset, "Υ_{χ,W} is a prime fuzzy filter", props::upsilon_is_prime},
      {"lemma-3.2.1", K::Theorem, S::FilterSubset, "Z ⊆ W ⇒ Υ_{χ,Z} ⊆ Υ_{χ,W}", props::monotone_in_w},
      {"lemma-3.2.2", K::Theorem, S::FilterPair, "χ ⊆ χ2 ⇒ Υ_{χ,W} ⊆ Υ_{χ2,W}", props::monotone_in_chi},
      {"lemma-3.2.3", K::Theorem, S::FilterSubset, "w°° ≤ θ for all w ⇒ Υ(θ)=χ(θ)", props::fixed_above_images},
      {"lemma-3.2.3-proof", K::SearchTarget, S::FilterSubset, "θ ≤ w°° for all w ⇒ Υ(θ)=χ(θ)",
       props::fixed_below_images},
      {"lemma-3.2.4", K::Theorem, S::FilterSubset, "χ injective and Υ(θ)=χ(θ) ⇒ w°° ≤ θ for all w",
       props::injective_fixed_point},
      {"lemma-3.2.5", K::Theorem, S::FilterSubset, "some w°°=1 ⇒ Υ ≡ 1", props::top_image_saturates},
      {"lemma-3.2.6", K::Theorem, S::Filter, "Υ_{χ,L} ≡ 1 ≡ Υ_{χ,{1}}", props::whole_and_top_saturate},
      {"lemma-3.2.7", K::Theorem, S::FilterSubset, "Υ(θ)=1 ⇒ χ(θ)=1 or χ(w°°)=1 for some w", props::one_has_source},
      {"prop-3.3.1", K::Theorem, S::FilterPair, "Υ_{χ,W} ∨ Υ_{χ2,W} = Υ_{χ∪χ2,W}", props::union_commutes},
      {"prop-3.3.2", K::Theorem, S::FilterSubset, "Υ(ξ∧θ) = Υ(ξ)∧Υ(θ)", props::upsilon_meet_hom},
      {"def-3.4", K::Theorem, S::FilterSubset, "fixedness: Υ=χ pointwise ⇔ max χ(w°°) ≤ min χ",
       props::fixedness_consistent},
      {"example-3.5", K::Theorem, S::Filter, "χ is fixed relative to {0}, A and C", props::canonical_sets_fixed},
      {"prop-3.6", K::Theorem, S::FilterSubset, "fixed relative to W and Z ⊆ W ⇒ fixed relative to Z",
       props::fixed_descends},
      {"prop-3.7", K::Theorem, S::FilterPair, "χ, χ2 fixed relative to W ⇒ χ∪χ2 fixed", props::fixed_union},
      {"thm-3.8", K::Theorem, S::FilterSubset, "Υ_{χ,{w}}(θ) = χ(θ)∨χ(w°°) ∈ {χ(θ), χ(w°°)}",
       props::singleton_formula},
      {"cor-3.9", K::Theorem, S::FilterSubset, "Υ_{χ,{w}}(θ) ≠ χ(w°°) ⇒ Υ_{χ,{w}}(θ) = χ(θ)",
       props::singleton_pointwise},
      {"cor-3.9-literal", K::SearchTarget, S::FilterSubset,
       "Υ_{χ,{w}}(θ) ≠ χ(w°°) for some θ ⇒ χ fixed relative to {w}", props::singleton_global},
      {"cor-3.10", K::Theorem, S::Filter, "Υ_{χ,{w}}(w) = χ(w°°)", props::singleton_at_self},
      {"omega-def", K::Theorem, S::FilterSubset, "Ω_{χ,W} = max over w of χ(θ∨w°°); Ω_{χ,{0}} = χ",
       props::omega_definition},
      {"upsilon-sub-omega", K::Theorem, S::FilterSubset, "Υ_{χ,W} ⊆ Ω_{χ,W}", props::upsilon_within_omega},
      {"thm-4.3", K::Theorem, S::FilterSubset, "Ω_{χ,W} is a fuzzy filter", props::omega_is_filter},
      {"thm-4.3-singleton", K::Theorem, S::FilterSubset, "Ω_{χ,{w}} is a fuzzy filter for each w ∈ W",
       props::omega_singleton_is_filter},
      {"remark-4.4", K::Theorem, S::FilterSubset, "χ join-preserving ⇒ Υ = Ω", props::join_hom_collapses},
      {"thm-4.7", K::Theorem, S::FilterSubset, "Υ(θ) = χ(θ)∨χ(d) for d dense in W°°", props::dense_upsilon},
      {"thm-4.8", K::Theorem, S::FilterSubset, "Ω(θ)=χ(θ∨w°°) ⇔ θ∨w°° dense in {θ∨v°°}", props::dense_omega},
      {"thm-5.1", K::Theorem, S::FilterSubset, "χ join-preserving ⇒ Υ lattice homomorphism", props::join_hom_lifts},
      {"thm-5.1-ms", K::Theorem, S::FilterSubset, "χ(θ°°)=(χ(θ))°° ⇒ Υ(θ°°)=(Υ(θ))°°",
       props::grade_double_neg_lifts},
      {"prop-5.2", K::Theorem, S::FilterSubset, "ker Υ = ker χ when W°° ⊆ ker χ, else empty", props::kernel_prop},
      {"prop-5.3", K::Theorem, S::FilterSubset, "θ ∈ coker Υ ⇔ θ ∈ coker χ or W°° meets coker χ",
       props::cokernel_prop},
      {"lemma-5.4-meet", K::Theorem, S::FilterSubset, "fibers of Υ are meet-closed", props::fiber_meet_closed},
      {"lemma-5.4-join", K::Theorem, S::FilterSubset, "χ join-preserving ⇒ fibers of Υ are join-closed",
       props::fiber_join_closed},
      {"lemma-5.4-neg", K::SearchTarget, S::FilterSubset, "χ join-preserving ⇒ fibers of Υ are °-closed",
       props::fiber_neg_closed},
      {"example-4.2-validity", K::Fixture, S::Algebra, "the shipped seven-element table satisfies the MS axioms",
       props::algebra_is_valid},
  };
  return table;
}

/// Ids every build must register.
inline constexpr std::string_view kRequiredProperties[] = {
    "prop-2.1",       "thm-ext-filter", "thm-3.1-filter", "thm-3.1-prime",  "lemma-3.2.1",   "lemma-3.2.2",
    "lemma-3.2.3",    "lemma-3.2.4",    "lemma-3.2.5",    "lemma-3.2.6",    "lemma-3.2.7",   "prop-3.3.1",
    "prop-3.3.2",     "def-3.4",        "prop-3.6",       "prop-3.7",       "thm-3.8",       "cor-3.9",
    "cor-3.10",       "omega-def",      "upsilon-sub-omega", "thm-4.3",     "remark-4.4",    "thm-4.7",
    "thm-4.8",        "thm-5.1",        "prop-5.2",       "prop-5.3",       "lemma-5.4-meet", "lemma-5.4-join",
    "example-4.2-validity",
};

/// Throws InternalInvariant naming the first required id that is missing or
/// any id registered twice.
inline void registry_self_check() {
  std::set<std::string_view> ids;
  for (const auto& p : property_registry())
    if (!ids.insert(p.id).second)
      throw Error(ErrorCode::InternalInvariant, "property registered twice: " + std::string(p.id));
  for (auto id : kRequiredProperties)
    if (!ids.contains(id)) throw Error(ErrorCode::InternalInvariant, "property not registered: " + std::string(id));
}

inline const PropertyInfo& find_property(std::string_view id) {
  for (const auto& p : property_registry())
    if (p.id == id) return p;
  throw Error(ErrorCode::UnknownProperty, "unknown property '" + std::string(id) + "'");
}

inline std::vector<std::string> all_property_ids() {
  std::vector<std::string> out;
  for (const auto& p : property_registry()) out.emplace_back(p.id);
  return out;
}

inline Outcome run_property(const PropertyInfo& info, const InstanceView& v, const PropertyContext& ctx = {}) {
  auto unmet = [](std::string reason) { return Outcome{Verdict::HypothesisUnmet, std::move(reason), std::nullopt}; };
  if (ctx.require_valid && info.kind != PropertyKind::Fixture) {
    if (!v.ms.valid()) return unmet("algebra violates the MS axioms");
    if (info.scope != Scope::Algebra && !is_fuzzy_filter(v.ms.lattice(), v.chi)) return unmet("χ is not a fuzzy filter");
  }
  if (info.scope == Scope::FilterPair) {
    if (!v.chi2) return unmet("no second fuzzy set χ2");
    if (ctx.require_valid && !is_fuzzy_filter(v.ms.lattice(), *v.chi2)) return unmet("χ2 is not a fuzzy filter");
  }
  Finding f = info.check(v, ctx);
  Outcome out{f.verdict, f.detail, std::nullopt};
  if (f.verdict == Verdict::Fail) {
    Instance inst = Instance::copy_of(v);
    if (f.phi) inst.phi = f.phi;
    if (f.psi) inst.psi = f.psi;
    out.witness = Witness{std::string(info.id), std::move(inst), f.detail};
  }
  return out;
}

inline Outcome run_property(std::string_view id, const InstanceView& v, const PropertyContext& ctx = {}) {
  return run_property(find_property(id), v, ctx);
}

inline Outcome run_property(std::string_view id, const Instance& inst, const PropertyContext& ctx = {}) {
  return run_property(find_property(id), inst.view(), ctx);
}

struct SearchConfig {
  enum class Mode { Exhaustive, Randomized };

  std::size_t min_elements = 1;
  std::size_t max_elements = 4;
  std::vector<Grade> grade_universe{Grade::zero(), Grade::half(), Grade::one()};
  Mode mode = Mode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  bool require_valid = true;
  /// Worker threads for exhaustive sweeps; the report does not depend on it.
  std::size_t threads = 1;

  void validate() const {
    if (max_elements > 8) throw Error(ErrorCode::SizeCapExceeded, "max_elements must be at most 8");
    if (min_elements > max_elements) throw Error(ErrorCode::HypothesisUnmet, "min_elements exceeds max_elements");
    if (std::find(grade_universe.begin(), grade_universe.end(), Grade::one()) == grade_universe.end())
      throw Error(ErrorCode::HypothesisUnmet, "grade universe must contain 1");
  }

  PropertyContext context() const {
    PropertyContext ctx;
    ctx.grade_universe = grade_universe;
    ctx.require_valid = require_valid;
    return ctx;
  }
};

/// One algebra of the search space together with its fuzzy filters.
struct AlgebraCase {
  MSAlgebra ms;
  std::shared_ptr<const std::vector<FuzzySet>> filters;
};

/// Every (lattice, MS operation) pair in the configured size range, in
/// lattice order then lexicographic table order.
inline std::vector<AlgebraCase> enumerate_algebras(const SearchConfig& cfg) {
  cfg.validate();
  std::vector<AlgebraCase> out;
  for (const auto& lat : enumerate_lattices(cfg.min_elements, cfg.max_elements)) {
    auto filters = std::make_shared<const std::vector<FuzzySet>>(enumerate_fuzzy_filters(lat, cfg.grade_universe));
    for (auto& table : enumerate_ms_operations(*lat, 8)) out.push_back({MSAlgebra(lat, std::move(table)), filters});
  }
  return out;
}

/// Calls `visit` on every instance of `scope` over one algebra, in order:
/// χ, then χ2, then W by increasing mask. Stops early when `visit` returns false.
template <class Visit>
bool visit_instances(const AlgebraCase& algebra, Scope scope, Visit&& visit) {
  const auto& ms = algebra.ms;
  const auto& filters = *algebra.filters;
  const auto& lat = ms.lattice();
  const std::uint64_t masks = std::uint64_t{1} << lat.size();
  if (scope == Scope::Algebra) {
    auto one = FuzzySet::constant(ms.lattice_ptr(), Grade::one());
    return visit(InstanceView{ms, one, ElementSet::single(lat.bottom())});
  }
  for (const auto& chi : filters) {
    if (scope == Scope::Filter) {
      if (!visit(InstanceView{ms, chi, ElementSet::single(lat.bottom())})) return false;
      continue;
    }
    if (scope == Scope::FilterSubset) {
      for (std::uint64_t m = 1; m < masks; ++m)
        if (!visit(InstanceView{ms, chi, ElementSet(m)})) return false;
      continue;
    }
    for (const auto& chi2 : filters)
      for (std::uint64_t m = 1; m < masks; ++m)
        if (!visit(InstanceView{ms, chi, ElementSet(m), &chi2})) return false;
  }
  return true;
}

struct PropertyTally {
  std::string id;
  PropertyKind kind = PropertyKind::Theorem;
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::uint64_t unmet = 0;
  std::optional<Witness> first_witness;

  void record(const Outcome& o) {
    ++checked;
    switch (o.verdict) {
      case Verdict::Pass: ++passed; break;
      case Verdict::HypothesisUnmet: ++unmet; break;
      case Verdict::Fail:
        ++failed;
        if (!first_witness) first_witness = o.witness;
        break;
    }
  }

  void merge(const PropertyTally& later) {
    checked += later.checked;
    passed += later.passed;
    failed += later.failed;
    unmet += later.unmet;
    if (!first_witness) first_witness = later.first_witness;
  }
};

struct SweepReport {
  SearchConfig config;
  std::uint64_t lattices = 0;
  std::uint64_t algebras = 0;
  std::vector<PropertyTally> tallies;

  /// Failures among properties expected to hold.
  std::uint64_t theorem_failures() const {
    std::uint64_t n = 0;
    for (const auto& t : tallies)
      if (t.kind == PropertyKind::Theorem) n += t.failed;
    return n;
  }

  const PropertyTally* find(std::string_view id) const {
    for (const auto& t : tallies)
      if (t.id == id) return &t;
    return nullptr;
  }
};

namespace detail {

inline std::vector<const PropertyInfo*> resolve(const std::vector<std::string>& ids) {
  std::vector<const PropertyInfo*> out;
  if (ids.empty()) {
    for (const auto& p : property_registry()) out.push_back(&p);
    return out;
  }
  for (const auto& id : ids) out.push_back(&find_property(id));
  return out;
}

inline Instance fixture_instance(std::string_view text) {
  auto loaded = load_algebra(parse_algebra(text));
  ElementSet w = loaded.find_subset("W").value_or(ElementSet::single(loaded.lattice->bottom()));
  return Instance{*loaded.ms, loaded.fuzzy_set("chi"), w, std::nullopt, std::nullopt, std::nullopt};
}

inline std::vector<PropertyTally> run_case(const AlgebraCase& algebra, const std::vector<const PropertyInfo*>& props,
                                           const PropertyContext& ctx) {
  std::vector<PropertyTally> out;
  for (const auto* p : props) {
    PropertyTally tally{std::string(p->id), p->kind};
    if (p->kind != PropertyKind::Fixture)
      visit_instances(algebra, p->scope, [&](const InstanceView& v) {
        tally.record(run_property(*p, v, ctx));
        return true;
      });
    out.push_back(std::move(tally));
  }
  return out;
}

}  // namespace detail

/// Runs the listed properties (all when empty) over the configured search
/// space. The report is a pure function of `pids` and `cfg`.
inline SweepReport sweep(const std::vector<std::string>& pids, const SearchConfig& cfg) {
  registry_self_check();
  cfg.validate();
  auto props = detail::resolve(pids);
  auto ctx = cfg.context();
  SweepReport report;
  report.config = cfg;
  for (const auto* p : props) report.tallies.push_back({std::string(p->id), p->kind});

  auto algebras = enumerate_algebras(cfg);
  report.algebras = algebras.size();
  {
    std::set<const FiniteLattice*> distinct;
    for (const auto& a : algebras) distinct.insert(&a.ms.lattice());
    report.lattices = distinct.size();
  }

  if (cfg.mode == SearchConfig::Mode::Exhaustive) {
    std::vector<std::vector<PropertyTally>> partial(algebras.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < algebras.size(); i = next++) partial[i] = detail::run_case(algebras[i], props, ctx);
    };
    std::size_t threads = std::max<std::size_t>(1, std::min(cfg.threads, algebras.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& part : partial)
      for (std::size_t k = 0; k < part.size(); ++k) report.tallies[k].merge(part[k]);
  } else if (!algebras.empty()) {
    std::mt19937_64 rng(cfg.seed);
    auto pick = [&](std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };
    for (std::uint64_t it = 0; it < cfg.iterations; ++it) {
      const auto& algebra = algebras[pick(algebras.size())];
      const auto& filters = *algebra.filters;
      const auto& chi = filters[pick(filters.size())];
      const auto& chi2 = filters[pick(filters.size())];
      ElementSet w(1 + pick((std::uint64_t{1} << algebra.ms.lattice().size()) - 1));
      InstanceView v{algebra.ms, chi, w, &chi2};
      for (std::size_t k = 0; k < props.size(); ++k)
        if (props[k]->kind != PropertyKind::Fixture) report.tallies[k].record(run_property(*props[k], v, ctx));
    }
  }

  for (std::size_t k = 0; k < props.size(); ++k) {
    if (props[k]->kind != PropertyKind::Fixture) continue;
    auto inst = detail::fixture_instance(fixtures::example4_printed);
    report.tallies[k].record(run_property(*props[k], inst.view(), ctx));
  }
  return report;
}

/// First failing instance of one property, in sweep order (exhaustive) or
/// drawn from the seeded generator (randomized).
inline std::optional<Witness> search_counterexample(std::string_view pid, const SearchConfig& cfg) {
  registry_self_check();
  cfg.validate();
  const auto& info = find_property(pid);
  auto ctx = cfg.context();
  if (info.kind == PropertyKind::Fixture) {
    auto inst = detail::fixture_instance(fixtures::example4_printed);
    return run_property(info, inst.view(), ctx).witness;
  }
  auto algebras = enumerate_algebras(cfg);
  std::optional<Witness> found;
  if (cfg.mode == SearchConfig::Mode::Exhaustive) {
    for (const auto& algebra : algebras) {
      visit_instances(algebra, info.scope, [&](const InstanceView& v) {
        auto o = run_property(info, v, ctx);
        if (o.verdict == Verdict::Fail) found = std::move(o.witness);
        return !found;
      });
      if (found) break;
    }
    return found;
  }
  if (algebras.empty()) return found;
  std::mt19937_64 rng(cfg.seed);
  auto pick = [&](std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); };
  for (std::uint64_t it = 0; it < cfg.iterations && !found; ++it) {
    const auto& algebra = algebras[pick(algebras.size())];
    const auto& filters = *algebra.filters;
    const auto& chi = filters[pick(filters.size())];
    const auto& chi2 = filters[pick(filters.size())];
    ElementSet w(1 + pick((std::uint64_t{1} << algebra.ms.lattice().size()) - 1));
    auto o = run_property(info, InstanceView{algebra.ms, chi, w, &chi2}, ctx);
    if (o.verdict == Verdict::Fail) found = std::move(o.witness);
  }
  return found;
}

/// The witness as an algebra document that `verify` can replay.
inline AlgebraDocument witness_document(const Witness& w) {
  const auto& inst = w.instance;
  auto doc = document_for(inst.ms);
  doc.fuzzy.push_back(fuzzy_section("chi", inst.chi));
  if (inst.chi2) doc.fuzzy.push_back(fuzzy_section("chi2", *inst.chi2));
  if (inst.phi) doc.fuzzy.push_back(fuzzy_section("phi", *inst.phi));
  if (inst.psi) doc.fuzzy.push_back(fuzzy_section("psi", *inst.psi));
  doc.subsets.push_back(subset_section("W", inst.ms.lattice(), inst.w));
  return doc;
}

inline std::string witness_text(const Witness& w) {
  return serialize_algebra(witness_document(w), {"property: " + w.property, "detail: " + w.detail});
}

/// Rebuilds an instance from a document: χ from `chi_name`, W from
/// `subset W` unless `w` is given, and the optional chi2/phi/psi sections.
inline Instance instance_from(const LoadedAlgebra& loaded, std::string_view chi_name = "chi",
                              std::optional<ElementSet> w = std::nullopt) {
  if (!loaded.ms) throw Error(ErrorCode::IncompleteTable, "document has no [neg] section");
  ElementSet subset = w ? *w : loaded.find_subset("W").value_or(ElementSet::single(loaded.lattice->bottom()));
  Instance out{*loaded.ms, loaded.fuzzy_set(chi_name), subset, std::nullopt, std::nullopt, std::nullopt};
  if (auto f = loaded.find_fuzzy("chi2")) out.chi2 = *f;
  if (auto f = loaded.find_fuzzy("phi")) out.phi = *f;
  if (auto f = loaded.find_fuzzy("psi")) out.psi = *f;
  return out;
}

}  // namespace msfuzzy
