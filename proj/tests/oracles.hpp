#pragma once

// Slow, definition-level reimplementations used only to cross-check the library.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "tfjhp/permutation.hpp"
#include "tfjhp/rep.hpp"

namespace oracle {

using tfjhp::Permutation;

inline int count_inversions(const std::vector<int>& word) {
  int c = 0;
  for (std::size_t a = 0; a < word.size(); ++a)
    for (std::size_t b = a + 1; b < word.size(); ++b) c += word[a] > word[b];
  return c;
}

// s_i acting on values.
inline std::vector<int> swap_values(std::vector<int> word, int x, int y) {
  for (int& v : word) {
    if (v == x) v = y;
    else if (v == y) v = x;
  }
  return word;
}

// All reduced words, by peeling left descents in every possible order.
inline std::vector<std::vector<int>> reduced_words(const Permutation& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cur) {
    if (count_inversions(cur) == 0) {
      out.push_back(prefix);
      return;
    }
    for (int i = 1; i < static_cast<int>(cur.size()); ++i) {
      const auto next = swap_values(cur, i, i + 1);
      if (count_inversions(next) < count_inversions(cur)) {
        prefix.push_back(i);
        rec(next);
        prefix.pop_back();
      }
    }
  };
  rec(w.word());
  return out;
}

// Sortability from the definition: take the reduced word whose leftmost embedding in
// c c c ... has lexicographically smallest positions, cut it into passes, and require
// the letter sets of consecutive passes to be nested.
inline bool is_sortable_by_subwords(const Permutation& w, const std::vector<int>& coxeter_word) {
  const int n = static_cast<int>(coxeter_word.size());
  std::vector<int> best_positions;
  bool found = false;
  for (const auto& word : reduced_words(w)) {
    std::vector<int> positions;
    int pos = -1;
    for (int letter : word) {
      int p = pos + 1;
      while (coxeter_word[p % n] != letter) ++p;
      positions.push_back(p);
      pos = p;
    }
    if (!found || positions < best_positions) {
      best_positions = positions;
      found = true;
    }
  }
  std::vector<std::set<int>> passes;
  for (int p : best_positions) {
    const std::size_t pass = p / n;
    if (passes.size() <= pass) passes.resize(pass + 1);
    passes[pass].insert(coxeter_word[p % n]);
  }
  for (std::size_t k = 1; k < passes.size(); ++k)
    if (!std::includes(passes[k - 1].begin(), passes[k - 1].end(), passes[k].begin(), passes[k].end())) return false;
  return true;
}

// (i j) is a Bruhat inversion iff swapping the values i and j lowers the length by exactly one.
inline std::vector<std::pair<int, int>> bruhat_by_length(const Permutation& w) {
  std::vector<std::pair<int, int>> out;
  const auto word = w.word();
  const int len = count_inversions(word);
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (count_inversions(swap_values(word, i, j)) == len - 1) out.emplace_back(i, j);
  return out;
}

// Letters occurring in any reduced word.
inline std::set<int> support_by_words(const Permutation& w) {
  std::set<int> out;
  for (const auto& word : reduced_words(w)) out.insert(word.begin(), word.end());
  return out;
}

// Counts morphisms a -> b by trying every tuple of matrices; returns dim over F_p.
inline int hom_dim_by_enumeration(const tfjhp::Rep& a, const tfjhp::Rep& b) {
  const int n = a.quiver.n();
  const int p = a.prime;
  std::vector<int> sizes(n);
  int entries = 0;
  for (int v = 0; v < n; ++v) entries += sizes[v] = a.dims[v] * b.dims[v];
  long long total = 1;
  for (int k = 0; k < entries; ++k) total *= p;
  long long count = 0;
  std::vector<int> digits(entries, 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int k = 0; k < entries; ++k) {
      digits[k] = static_cast<int>(c % p);
      c /= p;
    }
    std::vector<tfjhp::FpMatrix> comps;
    int offset = 0;
    for (int v = 0; v < n; ++v) {
      tfjhp::FpMatrix m(b.dims[v], a.dims[v], p);
      for (int r = 0; r < b.dims[v]; ++r)
        for (int col = 0; col < a.dims[v]; ++col) m.set(r, col, digits[offset++]);
      comps.push_back(m);
    }
    bool ok = true;
    for (int arrow = 1; arrow < n && ok; ++arrow) {
      const int s = a.quiver.arrow_source(arrow) - 1;
      const int t = a.quiver.arrow_target(arrow) - 1;
      ok = comps[t] * a.maps[arrow - 1] == b.maps[arrow - 1] * comps[s];
    }
    count += ok;
  }
  int dim = 0;
  while (count > 1) {
    count /= p;
    ++dim;
  }
  return dim;
}

}  // namespace oracle
