#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfjhp/permutation.hpp"
#include "tfjhp/quiver.hpp"
#include "tfjhp/reflect.hpp"

namespace tfjhp {

/// Coxeter word with the largest available sink taken first. Same element as
/// coxeter_element(q); only the order of commuting letters differs.
std::vector<int> coxeter_word_largest_first(const TypeAQuiver& q);

/// Reduced word of w read off c^infinity for the given Coxeter word (w must be sortable).
std::vector<int> sorting_word(const Permutation& w, const std::vector<int>& coxeter_word);

struct JhpTableRow {
  Permutation w;
  std::vector<int> w_word;
  std::optional<std::vector<int>> sequence;
  Permutation w_prime;
  std::vector<int> w_prime_word;
  int dagger = 0;
  int ddagger = 0;

  /// "s2s1=3124 | 2,1 | e=1234 | 2 | 2"
  std::string to_line() const;
};

struct JhpTable {
  TypeAQuiver quiver;
  ReflectionPlan plan;
  std::vector<JhpTableRow> rows;
};

/// One row per c_Q-sortable element, ordered by length and then by sorting word.
JhpTable jhp_table(const TypeAQuiver& q, DdaggerRule rule = DdaggerRule::kAsDefined);

std::string table_header();
std::string render_table(const JhpTable& t);
std::string render_csv(const JhpTable& t);
std::string render_json(const JhpTable& t);

}  // namespace tfjhp
