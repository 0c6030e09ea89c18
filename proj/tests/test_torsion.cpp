#include <gtest/gtest.h>

#include "tfjhp/error.hpp"
#include "tfjhp/torsion.hpp"

using namespace tfjhp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }
const TypeAQuiver kMid = TypeAQuiver::parse("><");  // 1 -> 2 <- 3

std::vector<Interval> I(std::initializer_list<Interval> ivs) { return ivs; }

}  // namespace

TEST(TorsionFreeClass, InversionScan) {
  EXPECT_TRUE(tf_class_of(P("1234"), kMid).intervals.empty());
  EXPECT_EQ(tf_class_of(P("4312"), kMid).intervals, I({{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}));
  EXPECT_EQ(tf_class_of(P("3412"), kMid).intervals, I({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_EQ(tf_class_of(P("4312"), kMid).to_json(), R"j(["[1,3)","[1,4)","[2,3)","[2,4)","[3,4)"])j");
}

TEST(TorsionFreeClass, RefusesUnsortable) {
  const auto q = TypeAQuiver::parse("<");
  EXPECT_THROW(tf_class_of(P("312"), q), DomainError);
  EXPECT_NO_THROW(raw_class_of(P("312"), q));
}

TEST(TorsionFreeClass, SimplesFromBruhatInversions) {
  EXPECT_EQ(simples_of(tf_class_of(P("4312"), kMid)), I({{1, 3}, {2, 3}, {3, 4}}));
  EXPECT_EQ(simples_of(tf_class_of(P("3412"), kMid)), I({{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_TRUE(simples_of(tf_class_of(P("1234"), kMid)).empty());
  EXPECT_EQ(supp_of_class(tf_class_of(P("4312"), kMid)), (std::vector<int>{1, 2, 3}));
}

TEST(Jhp, CountingCriterion) {
  EXPECT_TRUE(jhp_by_count(P("4312")));
  EXPECT_FALSE(jhp_by_count(P("3412")));
  EXPECT_TRUE(jhp_by_count(P("1234")));
}

TEST(TorsionOracle, SmallCases) {
  const auto q = TypeAQuiver::parse("<");
  EXPECT_EQ(is_torsion_free_oracle({}, q).verdict, TorsionVerdict::kTorsionFree);
  EXPECT_EQ(is_torsion_free_oracle(all_intervals(2), q).verdict, TorsionVerdict::kTorsionFree);
  const auto r = is_torsion_free_oracle({{1, 3}}, q);
  EXPECT_EQ(r.verdict, TorsionVerdict::kNotTorsionFree);
  EXPECT_FALSE(r.witness.empty());
  // Closed under submodules but not extensions: S1 and S2 without P2 on 1 <- 2.
  EXPECT_EQ(is_torsion_free_oracle({{1, 2}, {2, 3}}, q).verdict, TorsionVerdict::kNotTorsionFree);
  EXPECT_EQ(to_string(TorsionVerdict::kInconclusive), "inconclusive-at-bound");
}

TEST(TorsionOracle, BruteForceCounts) {
  EXPECT_EQ(enumerate_tf_classes_bruteforce(TypeAQuiver::parse("<")).classes.size(), 5u);
  const auto mid = enumerate_tf_classes_bruteforce(kMid);
  EXPECT_EQ(mid.classes.size(), 14u);
  EXPECT_TRUE(mid.inconclusive.empty());
  EXPECT_EQ(enumerate_tf_classes_bruteforce(TypeAQuiver::parse("<><")).classes.size(), 42u);
}

TEST(TorsionOracle, EverySortableGivesATorsionFreeClass) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& q : TypeAQuiver::all_orientations(n)) {
      const TorsionOracle oracle(q, OracleBounds{});
      for (const auto& w : all_permutations(n + 1)) {
        const auto verdict = oracle.check(raw_class_of(w, q).intervals).verdict;
        EXPECT_EQ(verdict == TorsionVerdict::kTorsionFree, is_c_sortable(w, q).has_value())
            << q.to_string() << " " << w.to_string();
      }
    }
  }
}

TEST(PatternCriterion, Examples) {
  const auto q = bb_quiver(3);
  EXPECT_EQ(q.to_string(), "<>");
  EXPECT_EQ(bb_quiver(4).to_string(), "<>>");
  EXPECT_EQ(bb_criterion(P("1234"), q), BbVerdict::kTorsionFreeJhp);
  EXPECT_EQ(bb_criterion(P("2314"), q), BbVerdict::kNotTorsionFree);
  EXPECT_EQ(bb_criterion(P("2134"), q), BbVerdict::kTorsionFreeJhp);
}
