// Loads the diamond algebra, extends its fuzzy filter and checks a few
// registered properties on the result.
#include <iostream>

#include "msfuzzy/msfuzzy.hpp"

int main() {
  using namespace msfuzzy;
  auto loaded = load_algebra(parse_algebra(fixtures::diamond));
  const auto& ms = *loaded.ms;
  const auto& chi = loaded.fuzzy_set("chi");
  const auto& lat = ms.lattice();

  std::cout << "variety: " << to_string(variety(ms)) << "\n";
  std::cout << "chi: " << chi.str() << "\n";

  for (const auto& w : {ElementSet::single(lat.bottom()), lat.subset({"a"}), lat.subset({"0", "b"})}) {
    auto ext = extend(ms, chi, w);
    std::cout << "W=" << lat.set_str(w) << "  upsilon: " << ext.upsilon.str() << "  omega: " << ext.omega.str()
              << "  fixed: " << (is_fixed_relative(ms, chi, w) ? "yes" : "no") << "\n";
  }

  auto inst = instance_from(loaded);
  for (std::string_view id : {"thm-3.1-filter", "lemma-3.2.1", "thm-3.8", "thm-4.3"}) {
    auto outcome = run_property(id, inst);
    std::cout << id << ": " << to_string(outcome.verdict) << (outcome.detail.empty() ? "" : "  ") << outcome.detail
              << "\n";
  }
}
