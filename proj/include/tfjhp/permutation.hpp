#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfjhp/quiver.hpp"

namespace tfjhp {

/// Largest supported rank (number of letters).
inline constexpr int kMaxRank = kMaxVertices + 1;

/// Element of S_{n+1} in one-line notation.
class Permutation {
 public:
  Permutation() : rank_(1) { letters_[0] = 1; }

  static Permutation identity(int rank);
  /// s_i swaps the letters i and i+1, 1 <= i < rank.
  static Permutation simple_reflection(int rank, int i);
  /// Builds from an explicit one-line word; validates bijectivity.
  static Permutation from_word(const std::vector<int>& word);
  /// "534216", or comma-separated letters for rank >= 10.
  static Permutation parse(std::string_view text);

  int rank() const noexcept { return rank_; }
  /// w(k), 1-based.
  int operator()(int k) const { return letters_[k - 1]; }
  /// w^{-1}(letter), 1-based.
  int position_of(int letter) const;
  std::vector<int> word() const;
  Permutation inverse() const;

  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  /// Lexicographic on the one-line word (shorter rank first).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_ = 0;
  std::array<std::uint8_t, kMaxRank> letters_{};
};

/// (i j) with i < j.
struct Transposition {
  int i = 1;
  int j = 2;
  std::string to_string() const;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

/// Builds (min, max); throws DomainError when a == b.
Transposition make_transposition(int a, int b);

/// (u o v)(k) = u(v(k)).
Permutation compose(const Permutation& u, const Permutation& v);

/// sigma * w: swaps the letters sigma.i and sigma.j in the one-line word.
Permutation apply_transposition(const Transposition& sigma, const Permutation& w);

/// s_i * w (swaps letters i and i+1).
Permutation left_multiply_simple(int i, const Permutation& w);

int length(const Permutation& w);

/// {(i j) : j appears before i}, sorted.
std::vector<Transposition> inversions(const Permutation& w);
bool is_inversion(const Permutation& w, int i, int j);

/// Inversions (i j) with no i < l < j such that (i l) and (l j) are both inversions.
std::vector<Transposition> bruhat_inversions(const Permutation& w);

/// i in supp(w) iff max(w(1..i)) > i. Sorted.
std::vector<int> support(const Permutation& w);

/// A reduced word [a1..ak] with w = s_{a1} ... s_{ak}.
std::vector<int> reduced_word(const Permutation& w);

/// s_{a1} ... s_{ak} as a permutation of the given rank.
Permutation word_to_permutation(int rank, const std::vector<int>& word);

/// "e" for the empty word, otherwise "s2s1s3".
std::string word_to_string(const std::vector<int>& word);

struct CoxeterElement {
  std::vector<int> word;
  Permutation perm;
};

/// Product of all simple reflections with s_i before s_j whenever j -> i is an arrow.
/// Among admissible orders, the smallest available index is taken first.
CoxeterElement coxeter_element(const TypeAQuiver& q);

/// Reduced factorization c^0 c^1 ... c^t of w into subwords of the Coxeter word.
struct SortabilityCertificate {
  std::vector<std::vector<int>> factors;
  std::vector<int> concatenated() const;
  std::string to_string() const;
};

/// Certificate iff w is c_Q-sortable. w must have rank q.n() + 1.
std::optional<SortabilityCertificate> is_c_sortable(const Permutation& w, const TypeAQuiver& q);

/// All c_Q-sortable elements in lexicographic one-line order.
std::vector<Permutation> enumerate_c_sortables(const TypeAQuiver& q);

/// All of S_rank in lexicographic order. rank <= 10.
std::vector<Permutation> all_permutations(int rank);

}  // namespace tfjhp
