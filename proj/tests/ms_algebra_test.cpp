#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"
#include "support.hpp"

using namespace msfuzzy;

TEST(MSAlgebra, PrintedSevenElementTableFailsDoubleNegation) {
  auto loaded = support::load(fixtures::example4_printed);
  ASSERT_TRUE(loaded.ms);
  const auto& report = loaded.ms->axiom_report();
  EXPECT_FALSE(loaded.ms->valid());
  EXPECT_TRUE(report.find("ms-top")->passed);
  const auto* dbl = report.find("ms-double");
  ASSERT_NE(dbl, nullptr);
  EXPECT_FALSE(dbl->passed);
  EXPECT_EQ(dbl->witness, (std::vector<std::string>{"z", "y"}));
  EXPECT_EQ(dbl->detail, "z ≰ z°° = y");
  const auto* meet = report.find("ms-meet");
  EXPECT_FALSE(meet->passed);
  EXPECT_EQ(meet->witness, (std::vector<std::string>{"x", "z"}));
}

TEST(MSAlgebra, ShippedValidTables) {
  for (auto text : {fixtures::diamond, fixtures::chain3_stone, fixtures::chain2}) {
    auto loaded = support::load(text);
    ASSERT_TRUE(loaded.ms);
    EXPECT_TRUE(loaded.ms->valid());
  }
  auto diamond = support::load(fixtures::diamond);
  EXPECT_EQ(variety(*diamond.ms), Variety::DeMorgan);
  EXPECT_EQ(variety(*support::load(fixtures::chain3_stone).ms), Variety::Stone);
  EXPECT_EQ(variety(*support::load(fixtures::chain2).ms), Variety::Boolean);
}

TEST(MSAlgebra, DoubleNegation) {
  auto loaded = support::load(fixtures::chain3_stone);
  const auto& ms = *loaded.ms;
  EXPECT_EQ(ms.lattice().name(double_neg(ms, "m")), "1");
  EXPECT_EQ(ms.lattice().name(double_neg(ms, "0")), "0");
  EXPECT_THROW(double_neg(ms, "q"), Error);
}

TEST(MSAlgebra, OperationEnumerationMatchesMapScan) {
  for (const auto& lat : enumerate_lattices(1, 5)) {
    auto got = enumerate_ms_operations(*lat);
    auto want = oracle::ms_operations(*lat);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << lat->size();
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(MSAlgebra, DerivedIdentitiesHoldOnAllSmallAlgebras) {
  for (const auto& ms : support::small_algebras(6)) {
    auto report = verify_derived_identities(ms);
    EXPECT_EQ(report.checks.size(), 4u);
    EXPECT_TRUE(report.all_passed());
  }
}

TEST(MSAlgebra, ExtendedCrispFilterMatchesOracle) {
  for (const auto& ms : support::small_algebras(5)) {
    const auto& lat = ms.lattice_ptr();
    for (const auto& f : enumerate_filters(lat))
      for (auto w : support::nonempty_subsets(*lat)) {
        auto e = extended_filter_crisp(ms, f, w);
        EXPECT_EQ(e.members.bits(), oracle::extended_filter(ms, f.members.bits(), w));
        EXPECT_TRUE(is_filter(*lat, e.members).ok);
        EXPECT_TRUE(f.members.subset_of(e.members));
      }
  }
}

TEST(MSAlgebra, ExtendedCrispFilterErrors) {
  auto loaded = support::load(fixtures::diamond);
  auto f = principal_filter(loaded.lattice, "a");
  try {
    extended_filter_crisp(*loaded.ms, f, ElementSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyW);
  }
  auto other = support::chain(4);
  try {
    extended_filter_crisp(*loaded.ms, principal_filter(other, "1"), ElementSet::single(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CarrierMismatch);
  }
}

TEST(MSAlgebra, IncompleteTable) {
  auto lat = support::diamond();
  try {
    neg_table_from_pairs(*lat, {{"0", "1"}, {"1", "0"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IncompleteTable);
  }
}
