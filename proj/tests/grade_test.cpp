#include <gtest/gtest.h>

#include "support.hpp"

using namespace msfuzzy;

TEST(Grade, DecimalsAreExact) {
  EXPECT_EQ(Grade::parse("0.7"), Grade(7, 10));
  EXPECT_EQ(Grade::parse("0.6"), Grade(3, 5));
  EXPECT_EQ(Grade::parse(".25"), Grade(1, 4));
  EXPECT_EQ(Grade::parse("1.0"), Grade::one());
  EXPECT_EQ(Grade::parse("0.7").str(), "7/10");
}

TEST(Grade, FractionsReduce) {
  EXPECT_EQ(Grade::parse("2/4"), Grade::half());
  EXPECT_EQ(Grade::parse("3/3").str(), "1");
  EXPECT_EQ(Grade::parse("0/5").str(), "0");
  EXPECT_EQ(Grade::parse("1"), Grade::one());
}

TEST(Grade, RangeIsEnforced) {
  for (std::string_view bad : {"1.2", "3/2", "-1/2", "-0.1", "2"}) {
    try {
      Grade::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::GradeOutOfRange) << bad;
    }
  }
}

TEST(Grade, MalformedInputIsSyntaxError) {
  for (std::string_view bad : {"", "x", "1/0", "0.", "1/", "/2", "0.5.5", "1e-1", "½"}) {
    try {
      Grade::parse(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::SyntaxError) << bad;
    }
  }
}

TEST(Grade, OrderIsRational) {
  EXPECT_LT(Grade(1, 3), Grade(1, 2));
  EXPECT_LT(Grade::parse("0.33"), Grade(1, 3));
  EXPECT_EQ(max(Grade(3, 5), Grade(7, 10)), Grade(7, 10));
  EXPECT_EQ(min(Grade(3, 5), Grade(7, 10)), Grade(3, 5));
}

TEST(Grade, ListIsSortedAndUnique) {
  auto gs = parse_grade_list("1, 0,1/2,0.5");
  ASSERT_EQ(gs.size(), 3u);
  EXPECT_EQ(gs[0], Grade::zero());
  EXPECT_EQ(gs[1], Grade::half());
  EXPECT_EQ(gs[2], Grade::one());
}

TEST(Grade, StrRoundTrips) {
  for (std::int64_t den = 1; den <= 12; ++den)
    for (std::int64_t num = 0; num <= den; ++num) {
      Grade g(num, den);
      EXPECT_EQ(Grade::parse(g.str()), g);
    }
}
