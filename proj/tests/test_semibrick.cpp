#include <gtest/gtest.h>

#include "tfjhp/error.hpp"
#include "tfjhp/semibrick.hpp"
#include "tfjhp/verify.hpp"

using namespace tfjhp;

namespace {

ShiftedInterval S(const char* t) { return ShiftedInterval::parse(t); }

}  // namespace

TEST(LinearModule, IntervalBridge) {
  EXPECT_EQ(LinearModule({0, 2}).to_interval(), (Interval{1, 3}));
  EXPECT_EQ(LinearModule::from_interval({2, 4}), (LinearModule{1, 3}));
  EXPECT_EQ(linear_lambda(3).to_string(), "<<");
  RepCategory lambda(linear_lambda(3));
  EXPECT_EQ(lambda.interval_hom(lambda.index_of(LinearModule{0, 2}.to_interval()),
                                lambda.index_of(LinearModule{1, 2}.to_interval())),
            1);
}

TEST(HSets, ClosedForm) {
  const HSets h = h_sets({0, 2}, 3);
  EXPECT_EQ(h.hom_out, (std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  EXPECT_THROW(h_sets({2, 2}, 3), DomainError);
  for (int n = 1; n <= 5; ++n) {
    RepCategory lambda(linear_lambda(n), 3);
    for (const auto& m : all_linear_modules(n)) {
      const HSets a = h_sets(m, n);
      const HSets b = h_sets_computed(lambda, m);
      EXPECT_EQ(a.hom_out, b.hom_out) << m.to_string();
      EXPECT_EQ(a.hom_in, b.hom_in) << m.to_string();
      EXPECT_EQ(a.ext_out, b.ext_out) << m.to_string();
      EXPECT_EQ(a.ext_in, b.ext_in) << m.to_string();
    }
  }
}

TEST(LinearSemibricks, PairRules) {
  EXPECT_TRUE(is_semibrick_linear({{0, 1}, {1, 2}}));
  EXPECT_FALSE(is_semibrick_linear({{0, 1}, {0, 2}}));
  EXPECT_TRUE(is_semibrick_linear({{1, 3}}));
  EXPECT_TRUE(is_semibrick_linear({}));
  EXPECT_TRUE(check_semibrick_linear_vs_hom(4, 2).pass);
}

TEST(LinearSemibricks, CatalanCounts) {
  const std::vector<long long> expected{2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(static_cast<long long>(enumerate_semibricks_linear(n).size()), expected[n - 1]);
    EXPECT_EQ(catalan_count(n), expected[n - 1]);
  }
  EXPECT_THROW(enumerate_semibricks_linear(8), DomainError);
}

TEST(ShiftedInterval, ParseErrors) {
  EXPECT_EQ(S("M(0,3)[-2]").shift, -2);
  EXPECT_EQ(S("M(0,3)[+1]").to_string(), "M(0,3)[1]");
  try {
    S("M(0,3)[x]");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(S("M(3,1)[0]"), ParseError);
  EXPECT_THROW(S("M(0,1)"), ParseError);
}

TEST(ShiftedHom, Values) {
  RepCategory lambda(linear_lambda(3));
  EXPECT_EQ(shifted_hom_dim(lambda, S("M(0,2)[0]"), S("M(0,2)[0]")), 1);
  EXPECT_EQ(shifted_hom_dim(lambda, S("M(0,1)[0]"), S("M(0,3)[3]")), 0);
  EXPECT_EQ(shifted_hom_dim(lambda, S("M(0,1)[0]"), S("M(0,3)[-2]")), 0);
}

TEST(ShiftedSemibricks, ExampleSets) {
  EXPECT_TRUE(is_semibrick_shifted({S("M(2,3)[-1]"), S("M(1,2)[-1]"), S("M(0,1)[-1]"), S("M(0,3)[0]")}, 3));
  EXPECT_TRUE(is_semibrick_shifted({S("M(1,2)[-1]"), S("M(0,1)[-1]"), S("M(0,3)[0]")}, 3));
  EXPECT_TRUE(is_semibrick_shifted({S("M(0,1)[0]"), S("M(0,3)[2]")}, 3));
  EXPECT_FALSE(is_semibrick_shifted({S("M(0,1)[0]"), S("M(0,2)[0]")}, 3));
  EXPECT_TRUE(check_shifted_examples(2).pass);
}

TEST(ShiftedSemibricks, CaseRulesMatchShiftedHom) {
  const CheckResult r = check_shifted_semibricks(3, 3, 2, 2);
  EXPECT_TRUE(r.pass) << r.detail;
}
