#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace msfuzzy;

namespace {

SearchConfig exhaustive(std::size_t max_n, std::vector<Grade> grades = support::three_grades()) {
  SearchConfig cfg;
  cfg.max_elements = max_n;
  cfg.grade_universe = std::move(grades);
  return cfg;
}

// Claims that held on every instance in the analysis; thm-4.3 is excluded
// because the diamond refutes it.
const std::vector<std::string> kHolding = {
    "prop-2.1",        "thm-ext-filter", "thm-3.1-filter",    "lemma-3.2.1",    "lemma-3.2.2",  "lemma-3.2.3",
    "lemma-3.2.4",     "lemma-3.2.5",    "lemma-3.2.6",       "lemma-3.2.7",    "prop-3.3.1",   "prop-3.3.2",
    "def-3.4",         "example-3.5",    "prop-3.6",          "prop-3.7",       "thm-3.8",      "cor-3.9",
    "cor-3.10",        "omega-def",      "upsilon-sub-omega", "thm-4.3-singleton", "remark-4.4", "thm-4.7",
    "thm-4.8",         "thm-5.1",        "thm-5.1-ms",        "prop-5.2",       "prop-5.3",     "lemma-5.4-meet",
    "lemma-5.4-join",
};

}  // namespace

TEST(Registry, SelfCheckAndCoverage) {
  EXPECT_NO_THROW(registry_self_check());
  auto ids = all_property_ids();
  EXPECT_GE(ids.size(), 25u);
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  for (auto id : kRequiredProperties) EXPECT_NO_THROW(find_property(id)) << id;
  try {
    find_property("thm-9.9");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownProperty);
  }
}

TEST(RunProperty, SpecExamples) {
  auto loaded = support::load(fixtures::diamond);
  auto inst = instance_from(loaded);
  EXPECT_EQ(run_property("prop-2.1", inst).verdict, Verdict::Pass);
  auto top = instance_from(loaded, "chi", loaded.lattice->subset({"1"}));
  EXPECT_EQ(run_property("lemma-3.2.6", top).verdict, Verdict::Pass);
  EXPECT_EQ(run_property("lemma-3.2.5", top).verdict, Verdict::Pass);
  EXPECT_EQ(run_property("lemma-3.2.4", top).verdict, Verdict::HypothesisUnmet);
}

TEST(RunProperty, PrimeRefutationOnDiamond) {
  auto loaded = support::load(fixtures::diamond);
  const auto& lat = loaded.lattice;
  Instance inst{*loaded.ms, FuzzySet::characteristic(lat, lat->subset({"1"})), ElementSet::single(lat->bottom()),
                std::nullopt, std::nullopt, std::nullopt};
  PropertyContext ctx;
  ctx.grade_universe = {Grade::zero(), Grade::one()};
  auto o = run_property("thm-3.1-prime", inst, ctx);
  ASSERT_EQ(o.verdict, Verdict::Fail);
  ASSERT_TRUE(o.witness);
  EXPECT_EQ(o.witness->instance.phi->str(), "0:0 a:1 b:0 1:1");
  EXPECT_EQ(o.witness->instance.psi->str(), "0:0 a:0 b:1 1:1");
  EXPECT_EQ(run_property("thm-3.1-prime", o.witness->instance, ctx).verdict, Verdict::Fail);
}

TEST(RunProperty, HypothesesAreGated) {
  auto printed = support::load(fixtures::example4_printed);
  auto inst = instance_from(printed);
  auto o = run_property("thm-3.1-filter", inst);
  EXPECT_EQ(o.verdict, Verdict::HypothesisUnmet);
  EXPECT_FALSE(o.detail.empty());

  auto fixed = support::load(fixtures::example4_corrected);
  auto fixed_inst = instance_from(fixed);
  EXPECT_EQ(run_property("thm-3.1-filter", fixed_inst).verdict, Verdict::HypothesisUnmet);

  PropertyContext loose;
  loose.require_valid = false;
  EXPECT_NE(run_property("upsilon-sub-omega", fixed_inst, loose).verdict, Verdict::HypothesisUnmet);
  EXPECT_EQ(run_property("prop-3.3.1", instance_from(support::load(fixtures::diamond))).verdict,
            Verdict::HypothesisUnmet);
}

TEST(RunProperty, FixtureValidityReportsDoubleNegationWitness) {
  auto o = search_counterexample("example-4.2-validity", exhaustive(4));
  ASSERT_TRUE(o);
  EXPECT_NE(o->detail.find("z ≰ z°° = y"), std::string::npos) << o->detail;
}

TEST(RunProperty, OmegaFilterCounterexample) {
  auto loaded = support::load(fixtures::diamond);
  const auto& lat = loaded.lattice;
  Instance inst{*loaded.ms, FuzzySet::characteristic(lat, lat->subset({"1"})), lat->subset({"a", "b"}),
                std::nullopt, std::nullopt, std::nullopt};
  auto o = run_property("thm-4.3", inst);
  ASSERT_EQ(o.verdict, Verdict::Fail);
  EXPECT_EQ(o.detail, "Ω(a∧b)=Ω(0)=0 but Ω(a)∧Ω(b)=1");
  EXPECT_EQ(run_property("thm-4.3-singleton", inst).verdict, Verdict::Pass);
}

TEST(Sweep, HoldingClaimsHaveNoFailuresUpToFiveElements) {
  auto report = sweep(kHolding, exhaustive(5));
  for (const auto& t : report.tallies) {
    EXPECT_EQ(t.failed, 0u) << t.id << ": " << (t.first_witness ? t.first_witness->detail : "");
    EXPECT_GT(t.passed, 0u) << t.id;
  }
}

TEST(Sweep, SearchTargetsAreRefuted) {
  auto report = sweep({"thm-3.1-prime", "lemma-3.2.3-proof", "cor-3.9-literal", "lemma-5.4-neg", "thm-4.3"},
                      exhaustive(4));
  for (const auto& t : report.tallies) {
    EXPECT_GT(t.failed, 0u) << t.id;
    ASSERT_TRUE(t.first_witness) << t.id;
    auto replay = run_property(t.id, t.first_witness->instance, exhaustive(4).context());
    EXPECT_EQ(replay.verdict, Verdict::Fail) << t.id;
  }
  EXPECT_EQ(report.theorem_failures(), report.find("thm-4.3")->failed);
}

TEST(Sweep, ThreadCountDoesNotChangeReport) {
  auto cfg = exhaustive(4);
  auto one = render_json(sweep_document(sweep({}, cfg)));
  cfg.threads = 3;
  EXPECT_EQ(render_json(sweep_document(sweep({}, cfg))), one);
}

TEST(Sweep, RandomizedModeIsSeeded) {
  auto cfg = exhaustive(5);
  cfg.mode = SearchConfig::Mode::Randomized;
  cfg.seed = 42;
  cfg.iterations = 300;
  auto a = render_json(sweep_document(sweep({}, cfg)));
  EXPECT_EQ(a, render_json(sweep_document(sweep({}, cfg))));
  cfg.seed = 43;
  EXPECT_NE(a, render_json(sweep_document(sweep({}, cfg))));
  auto report = sweep(kHolding, cfg);
  for (const auto& t : report.tallies) EXPECT_EQ(t.failed, 0u) << t.id;
}

TEST(Sweep, ConfigValidation) {
  auto cfg = exhaustive(9);
  try {
    sweep({}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SizeCapExceeded);
  }
  EXPECT_THROW(sweep({}, exhaustive(3, {Grade::zero(), Grade::half()})), Error);
  EXPECT_THROW(sweep({"no-such"}, exhaustive(3)), Error);
}

TEST(Search, PrimeWitnessIsTheDiamond) {
  auto w = search_counterexample("thm-3.1-prime", exhaustive(4, {Grade::zero(), Grade::one()}));
  ASSERT_TRUE(w);
  const auto& inst = w->instance;
  EXPECT_EQ(inst.ms.lattice().names(), (std::vector<std::string>{"0", "a", "b", "1"}));
  EXPECT_EQ(inst.chi.str(), "0:0 a:0 b:0 1:1");
  EXPECT_EQ(inst.ms.lattice().set_str(inst.w), "{0}");
  EXPECT_EQ(inst.phi->str(), "0:0 a:1 b:0 1:1");
  EXPECT_EQ(inst.psi->str(), "0:0 a:0 b:1 1:1");
}

TEST(Search, NoneForHoldingClaims) {
  for (std::string_view id : {"lemma-3.2.1", "thm-3.8", "prop-5.3"})
    EXPECT_FALSE(search_counterexample(id, exhaustive(5))) << id;
}

TEST(Search, WitnessDocumentsReplay) {
  for (std::string_view id : {"thm-3.1-prime", "lemma-3.2.3-proof", "cor-3.9-literal", "lemma-5.4-neg", "thm-4.3"}) {
    auto cfg = exhaustive(4);
    auto w = search_counterexample(id, cfg);
    ASSERT_TRUE(w) << id;
    auto text = witness_text(*w);
    auto loaded = support::load(text);
    auto replay = run_property(id, instance_from(loaded), cfg.context());
    EXPECT_EQ(replay.verdict, Verdict::Fail) << id << "\n" << text;
    EXPECT_EQ(replay.detail, w->detail) << id;
  }
}

TEST(Search, RandomizedFindsPrimeWitness) {
  auto cfg = exhaustive(4, {Grade::zero(), Grade::one()});
  cfg.mode = SearchConfig::Mode::Randomized;
  cfg.seed = 7;
  cfg.iterations = 2000;
  auto a = search_counterexample("thm-3.1-prime", cfg);
  ASSERT_TRUE(a);
  auto b = search_counterexample("thm-3.1-prime", cfg);
  EXPECT_EQ(witness_text(*a), witness_text(*b));
}
