#include <gtest/gtest.h>

#include "tfjhp/error.hpp"
#include "tfjhp/filt.hpp"
#include "tfjhp/torsion.hpp"

using namespace tfjhp;

namespace {

const TypeAQuiver kOne = TypeAQuiver::parse("<");   // 1 <- 2
const TypeAQuiver kMid = TypeAQuiver::parse("><");  // 1 -> 2 <- 3

std::vector<std::vector<std::string>> render(const GeneratorSet& x, const std::set<FiltrationRecord>& rs) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : rs) {
    std::vector<std::string> seq;
    for (int k : r.cone_sequence) seq.push_back(x.member_string(k));
    out.push_back(seq);
  }
  return out;
}

}  // namespace

TEST(Filtrations, ProjectiveOverSimples) {
  const auto x = GeneratorSet::of_intervals(kOne, {{1, 2}, {2, 3}});
  const Rep p2 = interval_to_rep(kOne, {1, 3});
  EXPECT_EQ(render(x, filtrations(p2, x)), (std::vector<std::vector<std::string>>{{"[1,2)", "[2,3)"}}));
  EXPECT_EQ(x_length(p2, x), 2);
  EXPECT_EQ(x_length(zero_rep(kOne), x), 0);
  EXPECT_EQ(filtrations(zero_rep(kOne), x).size(), 1u);
}

TEST(Filtrations, MemberHasSingletonFiltration) {
  const auto x = GeneratorSet::of_intervals(kOne, {{1, 2}, {1, 3}, {2, 3}});
  const auto recs = render(x, filtrations(interval_to_rep(kOne, {1, 3}), x));
  EXPECT_EQ(recs.size(), 2u);
  EXPECT_NE(std::find(recs.begin(), recs.end(), std::vector<std::string>{"[1,3)"}), recs.end());
}

TEST(Filtrations, OutsideFiltGivesNothing) {
  const auto x = GeneratorSet::of_intervals(kOne, {{2, 3}});
  EXPECT_TRUE(filtrations(interval_to_rep(kOne, {1, 3}), x).empty());
  EXPECT_FALSE(x_length(interval_to_rep(kOne, {1, 3}), x));
}

TEST(Filtrations, RejectsRepeatedMembers) {
  EXPECT_THROW(GeneratorSet::of_intervals(kOne, {{1, 2}, {1, 2}}), DomainError);
}

TEST(JhpChecks, SemibrickPasses) {
  const auto x = GeneratorSet::of_intervals(kOne, {{1, 2}, {2, 3}});
  EXPECT_EQ(check_wjhp(x).verdict(), "pass");
  EXPECT_EQ(check_jhp(x).verdict(), "pass");
  EXPECT_EQ(check_jhp(GeneratorSet::of_intervals(kOne, {{1, 2}})).verdict(), "pass");
}

TEST(JhpChecks, NonSemibrickFailsJhpButPassesWjhp) {
  const auto x = GeneratorSet::of_intervals(kOne, {{1, 3}, {1, 2}, {2, 3}});
  const JhpReport full = check_jhp(x);
  EXPECT_FALSE(full.pass);
  ASSERT_FALSE(full.counterexamples.empty());
  EXPECT_EQ(full.counterexamples.front().module, "{[1,3)}");
  EXPECT_TRUE(check_wjhp(x).pass);
  EXPECT_NE(full.to_json().find("\"verdict\":\"fail\""), std::string::npos);
}

TEST(JhpChecks, SimplesOfNonJhpClass) {
  const auto w = Permutation::parse("3412");
  const auto sim = simples_of(tf_class_of(w, kMid));
  const auto x = GeneratorSet::of_intervals(kMid, sim);
  EXPECT_FALSE(is_semibrick(x));
  EXPECT_FALSE(check_jhp(x).pass);
  // 0 -> [2,3) -> [1,3) + [2,4) -> [1,4) -> 0 gives two shortest filtrations with different factors.
  const JhpReport weak = check_wjhp(x);
  EXPECT_FALSE(weak.pass);
  ASSERT_FALSE(weak.counterexamples.empty());
  EXPECT_EQ(weak.counterexamples.front().module, "{[1,3),[2,4)}");
}

TEST(JhpChecks, ExampleClassOnMiddleSink) {
  const auto w = Permutation::parse("4312");
  const auto t = tf_class_of(w, kMid);
  const auto sim = simples_in(t.intervals, kMid);
  EXPECT_EQ(sim, (std::vector<Interval>{{1, 3}, {2, 3}, {3, 4}}));
  const auto x = GeneratorSet::of_intervals(kMid, sim);
  EXPECT_FALSE(is_semibrick(x));
  EXPECT_EQ(check_jhp(x).verdict(), "pass");
}

TEST(Semibricks, HomVanishing) {
  EXPECT_FALSE(is_semibrick(GeneratorSet::of_intervals(kMid, {{1, 3}, {1, 4}})));
  EXPECT_FALSE(is_semibrick(GeneratorSet::of_intervals(kMid, {{2, 3}, {1, 3}})));
  EXPECT_TRUE(is_semibrick(GeneratorSet::of_intervals(kOne, {{1, 2}, {2, 3}})));
  EXPECT_TRUE(is_semibrick(GeneratorSet::of_intervals(kMid, {{1, 4}})));
  EXPECT_EQ(simples_in({{1, 4}}, kMid), (std::vector<Interval>{{1, 4}}));
}

TEST(Universe, ReachableDimensionVectors) {
  const auto x = GeneratorSet::of_intervals(kOne, {{1, 3}});
  const auto u = enumerate_universe(x, 4);
  // Only dimension vectors (k, k) are reachable.
  for (const auto& m : u) EXPECT_EQ(m.dims()[0], m.dims()[1]);
  EXPECT_FALSE(u.empty());
}
