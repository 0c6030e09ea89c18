#include <gtest/gtest.h>

#include "tfjhp/error.hpp"
#include "tfjhp/reflect.hpp"
#include "tfjhp/table.hpp"
#include "tfjhp/torsion.hpp"
#include "tfjhp/verify.hpp"

using namespace tfjhp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
const TypeAQuiver kMid = TypeAQuiver::parse("><");

}  // namespace

TEST(ReflectInterval, SinkAtOne) {
  const auto q = TypeAQuiver::parse("<<");  // 1 <- 2 <- 3
  EXPECT_FALSE(reflect_plus_interval(q, 1, {1, 2}));
  EXPECT_EQ(*reflect_plus_interval(q, 1, {1, 3}), (Interval{2, 3}));
  EXPECT_EQ(*reflect_plus_interval(q, 1, {1, 4}), (Interval{2, 4}));
  EXPECT_EQ(*reflect_plus_interval(q, 1, {2, 4}), (Interval{1, 4}));
  EXPECT_EQ(*reflect_plus_interval(q, 1, {3, 4}), (Interval{3, 4}));
  EXPECT_THROW(reflect_plus_interval(q, 2, {1, 2}), DomainError);
}

TEST(ReflectInterval, InteriorSink) {
  EXPECT_EQ(*reflect_plus_interval(kMid, 2, {1, 3}), (Interval{1, 2}));
  EXPECT_EQ(*reflect_plus_interval(kMid, 2, {1, 2}), (Interval{1, 3}));
  EXPECT_EQ(*reflect_plus_interval(kMid, 2, {3, 4}), (Interval{2, 4}));
  EXPECT_EQ(*reflect_plus_interval(kMid, 2, {1, 4}), (Interval{1, 4}));
}

TEST(ReflectInterval, SourceInverts) {
  const auto q = TypeAQuiver::parse(">");  // 1 -> 2, source 1
  EXPECT_EQ(*reflect_minus_interval(q, 1, {2, 3}), (Interval{1, 3}));
  EXPECT_FALSE(reflect_minus_interval(q, 1, std::optional<Interval>{}));
}

TEST(ReflectRep, KernelAndCokernelAgreeWithTables) {
  const auto qs = sweep_quivers(VerifyConfig{}, 4);
  const CheckResult r = check_reflection_tables(qs, 3);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(AlphaBetaGamma, Examples) {
  EXPECT_TRUE(alpha(P("1234")).empty());
  EXPECT_EQ(alpha(P("1423")), std::vector<int>{4});
  EXPECT_TRUE(alpha(P("2134")).empty());
  EXPECT_TRUE(beta(P("1234"), 2).empty());
  EXPECT_TRUE(gamma(P("1432"), 2).empty());
  EXPECT_THROW(beta(P("1234"), 1), DomainError);
}

TEST(Dagger, FinalExampleValues) {
  EXPECT_EQ(dagger(2, P("3412")), 0);
  EXPECT_EQ(ddagger(2, P("3412")), 1);
  EXPECT_EQ(dagger(1, P("2413")), 1);
  EXPECT_EQ(ddagger(1, P("2413")), 1);
  EXPECT_EQ(dagger(1, P("2134")), 1);
  EXPECT_EQ(ddagger(1, P("2134")), 1);
  EXPECT_THROW(dagger(1, P("1234")), DomainError);
  EXPECT_THROW(dagger(3, P("1243")), DomainError);
}

TEST(Dagger, LiteralRuleDefectAtVertexOne) {
  // w = 4231 on 1 <- 2 -> 3: the literal rule gives 0, the Binv difference is 1.
  const auto w = P("4231");
  ASSERT_TRUE(is_c_sortable(w, TypeAQuiver::parse("<>")));
  EXPECT_EQ(ddagger(1, w, DdaggerRule::kAsDefined), 0);
  EXPECT_EQ(ddagger(1, w, DdaggerRule::kInversionFiltered), 1);
  EXPECT_EQ(static_cast<int>(bruhat_inversions(w).size() - bruhat_inversions(left_multiply_simple(1, w)).size()), 1);
}

TEST(Dagger, InversionFilteredRuleMatchesDifferences) {
  const auto qs = sweep_quivers(VerifyConfig{}, 5);
  const CheckResult r = check_dagger_lemma(qs, DdaggerRule::kInversionFiltered);
  EXPECT_TRUE(r.pass) << r.detail;
  const CheckResult m = check_plan_vs_count(qs, DdaggerRule::kInversionFiltered);
  EXPECT_TRUE(m.pass) << m.detail;
}

TEST(Plan, CanonicalPlans) {
  EXPECT_TRUE(sink_plan_to_linear(TypeAQuiver::parse(">>")).vertices.empty());
  EXPECT_EQ(sink_plan_to_linear(kMid).vertices, (std::vector<int>{2, 1}));
  EXPECT_EQ(sink_plan_to_linear(TypeAQuiver::parse("<")).vertices, std::vector<int>{1});
  for (int n = 1; n <= 6; ++n) {
    for (const auto& q : TypeAQuiver::all_orientations(n)) {
      const auto plan = sink_plan_to_linear(q);
      EXPECT_TRUE(plan.quivers.back().is_linear());
      EXPECT_EQ(plan.quivers.back(), TypeAQuiver::linear(n));
    }
  }
  EXPECT_THROW(ReflectionPlan::from_vertices(kMid, {1}), DomainError);
  EXPECT_THROW(ReflectionPlan::from_vertices(kMid, {2}), DomainError);
}

TEST(ReflectionSequence, Examples) {
  const auto plan = sink_plan_to_linear(kMid);
  const auto s = reflection_sequence(P("3412"), plan);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->vertices, (std::vector<int>{2, 1}));
  EXPECT_EQ(s->chain.back(), P("1423"));
  EXPECT_FALSE(reflection_sequence(P("1234"), plan));
  EXPECT_FALSE(reflection_sequence(P("1243"), plan));
}

TEST(PlanJhp, FinalExample) {
  const auto r = jhp_along_plan(P("3412"), kMid);
  EXPECT_EQ(r.dagger_total, 1);
  EXPECT_EQ(r.ddagger_total, 2);
  EXPECT_FALSE(r.jhp);
  EXPECT_EQ(r.final_perm, P("1423"));
  const auto ok = jhp_along_plan(P("4312"), kMid);
  EXPECT_EQ(ok.dagger_total, 0);
  EXPECT_EQ(ok.ddagger_total, 0);
  EXPECT_TRUE(ok.jhp);
  const auto e = jhp_along_plan(P("1234"), kMid);
  EXPECT_TRUE(e.jhp);
  EXPECT_FALSE(e.sequence);
  EXPECT_THROW(jhp_along_plan(P("312"), TypeAQuiver::parse("<")), DomainError);
}

TEST(PlanJhp, JsonShape) {
  const auto j = jhp_along_plan(P("3412"), kMid).to_json();
  EXPECT_NE(j.find("\"plan\":[2,1]"), std::string::npos) << j;
  EXPECT_NE(j.find("\"totals\":{\"dagger\":1,\"ddagger\":2}"), std::string::npos) << j;
  EXPECT_NE(j.find("\"jhp\":false"), std::string::npos) << j;
}

TEST(JhpTable, CoxeterWordsAndSortingWords) {
  EXPECT_EQ(coxeter_word_largest_first(kMid), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(sorting_word(P("4312"), {2, 3, 1}), (std::vector<int>{2, 3, 1, 2, 1}));
  EXPECT_EQ(sorting_word(P("1234"), {2, 3, 1}), std::vector<int>{});
  const auto t = jhp_table(kMid);
  EXPECT_EQ(t.rows.size(), 14u);
  int unequal = 0;
  for (const auto& r : t.rows) unequal += r.dagger != r.ddagger;
  EXPECT_GE(unequal, 1);
}
