#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace msfuzzy;
using support::g;

TEST(Extensions, PrintedSevenElementExample) {
  auto loaded = support::load(fixtures::example4_printed);
  const auto& ms = *loaded.ms;
  const auto& chi = loaded.fuzzy_set("chi");
  auto w = loaded.lattice->subset({"y"});
  auto ups = upsilon(ms, chi, w);
  auto om = omega(ms, chi, w);
  EXPECT_EQ(ups.at("x"), g(3, 5));
  EXPECT_EQ(om.at("x"), g(7, 10));
  EXPECT_EQ(base_grade(ms, chi, w), g(3, 5));
  EXPECT_TRUE(ups.subset_of(om));
}

TEST(Extensions, DiamondIsFixedForBottomAndB) {
  auto loaded = support::load(fixtures::diamond);
  const auto& ms = *loaded.ms;
  const auto& chi = loaded.fuzzy_set("chi");
  auto w = *loaded.find_subset("W");
  EXPECT_EQ(loaded.lattice->set_str(w), "{0,b}");
  EXPECT_TRUE(is_fixed_relative(ms, chi, w));
  EXPECT_EQ(upsilon(ms, chi, w), chi);
  EXPECT_FALSE(is_fixed_relative(ms, chi, loaded.lattice->subset({"a"})));
}

TEST(Extensions, Errors) {
  auto loaded = support::load(fixtures::diamond);
  const auto& ms = *loaded.ms;
  const auto& chi = loaded.fuzzy_set("chi");
  try {
    upsilon(ms, chi, ElementSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyW);
  }
  try {
    omega(ms, chi, ElementSet::single(9));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownElement);
  }
  auto other = FuzzySet::constant(support::chain(4), Grade::one());
  try {
    upsilon(ms, other, ElementSet::single(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CarrierMismatch);
  }
}

TEST(Extensions, UpsilonAndOmegaMatchDefinitions) {
  for (const auto& ms : support::small_algebras(4)) {
    const auto& lat = ms.lattice_ptr();
    for (const auto& chi : enumerate_fuzzy_filters(lat, support::three_grades()))
      for (auto w : support::nonempty_subsets(*lat)) {
        EXPECT_EQ(upsilon(ms, chi, w).grades(), oracle::upsilon(ms, chi.grades(), w));
        EXPECT_EQ(omega(ms, chi, w).grades(), oracle::omega(ms, chi.grades(), w));
      }
  }
}

TEST(Extensions, RawEvaluatorsAcceptArbitraryMaps) {
  auto loaded = support::load(fixtures::diamond);
  oracle::for_each_map(4, support::three_grades(), [&](const std::vector<Grade>& grades) {
    FuzzySet mu(loaded.lattice, grades);
    auto w = loaded.lattice->subset({"a"});
    EXPECT_EQ(upsilon(*loaded.ms, mu, w).grades(), oracle::upsilon(*loaded.ms, grades, w));
  });
}

TEST(Extensions, CrispExtensionAgainstFuzzyCuts) {
  for (const auto& ms : support::small_algebras(5)) {
    const auto& lat = ms.lattice_ptr();
    for (const auto& f : enumerate_filters(lat)) {
      auto chi = FuzzySet::characteristic(lat, f.members);
      EXPECT_EQ(extended_filter_crisp(ms, f, ElementSet::single(lat->bottom())).members, f.members);
      for (auto w : support::nonempty_subsets(*lat)) {
        auto crisp = extended_filter_crisp(ms, f, w).members;
        // E_F(W) is the intersection of the 1-cuts of Ω over singletons.
        ElementSet meet = lat->all();
        for (Element x : w) meet = meet & level_cut(omega(ms, chi, ElementSet::single(x)), Grade::one());
        EXPECT_EQ(crisp, meet);
        // The 1-cut of Υ is F, or the whole carrier once some w°° lies in F.
        bool saturated = !(ms.double_neg_image(w) & f.members).empty();
        EXPECT_EQ(level_cut(upsilon(ms, chi, w), Grade::one()), saturated ? lat->all() : f.members);
      }
    }
  }
}

TEST(Extensions, UpsilonCutDiffersFromCrispExtension) {
  auto loaded = support::load(fixtures::diamond);
  const auto& lat = loaded.lattice;
  auto f = FilterSet{lat, lat->subset({"1"})};
  auto w = lat->subset({"a"});
  EXPECT_EQ(lat->set_str(extended_filter_crisp(*loaded.ms, f, w).members), "{b,1}");
  auto ups = upsilon(*loaded.ms, FuzzySet::characteristic(lat, f.members), w);
  EXPECT_EQ(lat->set_str(level_cut(ups, Grade::one())), "{1}");
  EXPECT_EQ(lat->set_str(extended_filter_crisp(*loaded.ms, f, lat->subset({"a", "b"})).members), "{1}");
}

TEST(Extensions, FixedWitnessSets) {
  auto loaded = support::load(fixtures::diamond);
  auto sets = fixed_witness_sets(*loaded.ms, loaded.fuzzy_set("chi"));
  ASSERT_EQ(sets.sets.size(), 2u);
  EXPECT_EQ(sets.sets[0].name, "{0}");
  EXPECT_EQ(sets.sets[1].name, "A");
  EXPECT_EQ(sets.skipped, (std::vector<std::string>{"C"}));
  for (const auto& s : sets.sets) EXPECT_TRUE(is_fixed_relative(*loaded.ms, loaded.fuzzy_set("chi"), s.members));

  auto stone = support::load(fixtures::chain3_stone);
  auto stone_sets = fixed_witness_sets(*stone.ms, stone.fuzzy_set("chi"));
  ASSERT_EQ(stone_sets.sets.size(), 3u);
  EXPECT_EQ(stone.lattice->set_str(stone_sets.sets[1].members), "{0}");
  EXPECT_EQ(stone.lattice->set_str(stone_sets.sets[2].members), "{0}");
}

TEST(Extensions, DenseElements) {
  auto lat = support::chain(4);
  auto mu = FuzzySet(lat, {g(0), g(1, 2), g(1, 2), g(1)});
  auto d = dense_elements(mu, lat->subset({"0", "c1", "c2"}));
  EXPECT_EQ(d.level, g(1, 2));
  EXPECT_EQ(lat->set_str(d.within), "{c1,c2}");
  EXPECT_EQ(lat->set_str(d.level_cut), "{c1,c2,1}");
  EXPECT_THROW(dense_elements(mu, ElementSet{}), Error);
}

TEST(Extensions, DenseEvaluationAgreesWithUpsilon) {
  for (const auto& ms : support::small_algebras(4)) {
    const auto& lat = ms.lattice_ptr();
    for (const auto& chi : enumerate_fuzzy_filters(lat, support::three_grades()))
      for (auto w : support::nonempty_subsets(*lat))
        for (Element theta = 0; theta < lat->size(); ++theta) {
          auto eval = upsilon_via_dense(ms, chi, w, theta);
          EXPECT_TRUE(ms.double_neg_image(w).contains(eval.certificate));
          for (Element x : w) EXPECT_EQ(omega_dense_equivalence(ms, chi, w, theta, x),
                                        omega(ms, chi, w)(theta) == chi(lat->join(theta, ms.double_neg(x))));
        }
  }
}

TEST(Extensions, OmegaCanFailToBeAFilter) {
  auto loaded = support::load(fixtures::diamond);
  auto lat = loaded.lattice;
  auto chi = FuzzySet::characteristic(lat, lat->subset({"1"}));
  auto om = omega(*loaded.ms, chi, lat->subset({"a", "b"}));
  EXPECT_EQ(om.str(), "0:0 a:1 b:1 1:1");
  EXPECT_FALSE(is_fuzzy_filter(*lat, om));
  EXPECT_TRUE(is_fuzzy_filter(*lat, upsilon(*loaded.ms, chi, lat->subset({"a", "b"}))));
}
