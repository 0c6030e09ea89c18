#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tfjhp/error.hpp"
#include "tfjhp/permutation.hpp"
#include "tfjhp/semibrick.hpp"

using namespace tfjhp;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::pair<int, int>> pairs(const std::vector<Transposition>& ts) {
  std::vector<std::pair<int, int>> out;
  for (const auto& t : ts) out.emplace_back(t.i, t.j);
  return out;
}

}  // namespace

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(P("534216").to_string(), "534216");
  EXPECT_EQ(P("1,2,3").to_string(), "123");
  EXPECT_EQ(Permutation::identity(11).to_string(), "1,2,3,4,5,6,7,8,9,10,11");
  EXPECT_EQ(P("2,1,3,4,5,6,7,8,9,10").rank(), 10);
}

TEST(Permutation, ParseErrorsCarryPositions) {
  try {
    P("12a4");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    P("1223");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  EXPECT_THROW(P(""), ParseError);
  EXPECT_THROW(P("1245"), ParseError);
}

TEST(Permutation, SimpleReflectionsActOnValues) {
  // s2 s1 = 3124 in S4 and s1 s2 = 231 in S3.
  EXPECT_EQ(compose(Permutation::simple_reflection(4, 2), Permutation::simple_reflection(4, 1)), P("3124"));
  EXPECT_EQ(compose(Permutation::simple_reflection(3, 1), Permutation::simple_reflection(3, 2)), P("231"));
  EXPECT_EQ(word_to_permutation(4, {2, 3, 1, 2}), P("3412"));
  EXPECT_EQ(word_to_permutation(4, {2, 3, 1, 2, 1}), P("4312"));
  EXPECT_EQ(left_multiply_simple(2, P("3412")), P("2413"));
  EXPECT_EQ(word_to_string({}), "e");
  EXPECT_EQ(word_to_string({2, 1}), "s2s1");
}

TEST(Permutation, InversionsOfSixLetterExample) {
  const auto w = P("534216");
  const std::vector<std::pair<int, int>> inv{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {4, 5}};
  const std::vector<std::pair<int, int>> binv{{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  EXPECT_EQ(pairs(inversions(w)), inv);
  EXPECT_EQ(pairs(bruhat_inversions(w)), binv);
  EXPECT_EQ(length(w), 9);
}

TEST(Permutation, AgreesWithDefinitionOracles) {
  for (int rank = 1; rank <= 5; ++rank) {
    for (const auto& w : all_permutations(rank)) {
      EXPECT_EQ(length(w), oracle::count_inversions(w.word()));
      EXPECT_EQ(static_cast<int>(inversions(w).size()), length(w));
      EXPECT_EQ(pairs(bruhat_inversions(w)), oracle::bruhat_by_length(w)) << w.to_string();
      const auto supp = support(w);
      EXPECT_EQ(std::set<int>(supp.begin(), supp.end()), oracle::support_by_words(w)) << w.to_string();
      const auto word = reduced_word(w);
      EXPECT_EQ(static_cast<int>(word.size()), length(w));
      EXPECT_EQ(word_to_permutation(rank, word), w);
    }
  }
}

TEST(Permutation, GroupLaws) {
  std::mt19937 rng(7);
  const auto all = all_permutations(5);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& u = all[pick(rng)];
    const auto& v = all[pick(rng)];
    const auto& x = all[pick(rng)];
    EXPECT_EQ(compose(compose(u, v), x), compose(u, compose(v, x)));
    EXPECT_TRUE(compose(u, u.inverse()).is_identity());
    EXPECT_EQ(length(u.inverse()), length(u));
  }
  EXPECT_THROW(compose(P("12"), P("123")), DomainError);
}

TEST(Coxeter, ElementOfOrientation) {
  EXPECT_EQ(coxeter_element(TypeAQuiver::parse("<")).word, (std::vector<int>{1, 2}));
  EXPECT_EQ(coxeter_element(TypeAQuiver::parse("><")).word, (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(coxeter_element(TypeAQuiver::parse(">>")).word, (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(coxeter_element(TypeAQuiver::parse(">>")).perm, word_to_permutation(4, {3, 2, 1}));
}

TEST(Sortable, FiveElementsForOneArrow) {
  const auto q = TypeAQuiver::parse("<");
  const auto s = enumerate_c_sortables(q);
  std::vector<std::string> got;
  for (const auto& w : s) got.push_back(w.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"123", "132", "213", "231", "321"}));
  EXPECT_FALSE(is_c_sortable(P("312"), q));
  EXPECT_EQ(is_c_sortable(P("321"), q)->to_string(), "s1s2 | s1");
}

TEST(Sortable, FourteenForOneSinkInTheMiddle) {
  EXPECT_EQ(enumerate_c_sortables(TypeAQuiver::parse("><")).size(), 14u);
  EXPECT_TRUE(is_c_sortable(P("3412"), TypeAQuiver::parse("><")));
  EXPECT_TRUE(is_c_sortable(P("4312"), TypeAQuiver::parse("><")));
}

TEST(Sortable, MatchesSubwordDefinition) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& q : TypeAQuiver::all_orientations(n)) {
      const auto cox = coxeter_element(q).word;
      for (const auto& w : all_permutations(n + 1)) {
        const auto cert = is_c_sortable(w, q);
        EXPECT_EQ(cert.has_value(), oracle::is_sortable_by_subwords(w, cox)) << q.to_string() << " " << w.to_string();
        if (cert) EXPECT_EQ(word_to_permutation(n + 1, cert->concatenated()), w);
      }
    }
  }
}

TEST(Sortable, CatalanCounts) {
  for (int n = 1; n <= 5; ++n)
    for (const auto& q : TypeAQuiver::all_orientations(n))
      EXPECT_EQ(static_cast<long long>(enumerate_c_sortables(q).size()), catalan_count(n)) << q.to_string();
}

TEST(Sortable, RankMismatchThrows) {
  EXPECT_THROW(is_c_sortable(P("123"), TypeAQuiver::parse("><")), DomainError);
}
