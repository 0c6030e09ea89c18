#include "tfjhp/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "tfjhp/error.hpp"

namespace tfjhp {

Permutation Permutation::identity(int rank) {
  if (rank < 1 || rank > kMaxRank) {
    throw DomainError("rank must be in [1, " + std::to_string(kMaxRank) + "], got " +
                      std::to_string(rank));
  }
  Permutation p;
  p.rank_ = rank;
  for (int k = 0; k < rank; ++k) p.letters_[k] = static_cast<std::uint8_t>(k + 1);
  return p;
}

Permutation Permutation::simple_reflection(int rank, int i) {
  if (i < 1 || i >= rank) {
    throw DomainError("s_" + std::to_string(i) + " does not exist in S_" + std::to_string(rank));
  }
  Permutation p = identity(rank);
  std::swap(p.letters_[i - 1], p.letters_[i]);
  return p;
}

Permutation Permutation::from_word(const std::vector<int>& word) {
  const int rank = static_cast<int>(word.size());
  Permutation p = identity(rank);
  std::array<bool, kMaxRank + 1> seen{};
  for (int k = 0; k < rank; ++k) {
    const int x = word[k];
    if (x < 1 || x > rank) {
      throw DomainError("letter " + std::to_string(x) + " out of range for S_" +
                        std::to_string(rank));
    }
    if (seen[x]) throw DomainError("letter " + std::to_string(x) + " repeated");
    seen[x] = true;
    p.letters_[k] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty permutation", 0);
  std::vector<int> word;
  std::vector<std::size_t> offsets;
  const bool comma_form = text.find(',') != std::string_view::npos;
  if (comma_form) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t start = pos;
      int value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 99) throw ParseError("letter too large", start);
        ++pos;
      }
      if (pos == start) throw ParseError("expected a letter", pos);
      word.push_back(value);
      offsets.push_back(start);
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' between letters", pos);
      ++pos;
    }
  } else {
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw ParseError(std::string("unexpected character '") + text[pos] + "' in permutation",
                         pos);
      }
      word.push_back(text[pos] - '0');
      offsets.push_back(pos);
    }
  }
  const int rank = static_cast<int>(word.size());
  if (rank > kMaxRank) {
    throw ParseError("permutation has " + std::to_string(rank) + " letters, at most " +
                         std::to_string(kMaxRank) + " supported",
                     offsets[kMaxRank]);
  }
  std::array<bool, kMaxRank + 1> seen{};
  for (int k = 0; k < rank; ++k) {
    const int x = word[k];
    if (x < 1 || x > rank) {
      throw ParseError("letter " + std::to_string(x) + " out of range 1.." + std::to_string(rank),
                       offsets[k]);
    }
    if (seen[x]) throw ParseError("letter " + std::to_string(x) + " repeated", offsets[k]);
    seen[x] = true;
  }
  return from_word(word);
}

int Permutation::position_of(int letter) const {
  for (int k = 0; k < rank_; ++k)
    if (letters_[k] == letter) return k + 1;
  throw DomainError("letter " + std::to_string(letter) + " not in permutation");
}

std::vector<int> Permutation::word() const {
  return std::vector<int>(letters_.begin(), letters_.begin() + rank_);
}

Permutation Permutation::inverse() const {
  Permutation p = *this;
  for (int k = 0; k < rank_; ++k) p.letters_[letters_[k] - 1] = static_cast<std::uint8_t>(k + 1);
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 0; k < rank_; ++k)
    if (letters_[k] != k + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int k = 0; k < rank_; ++k) {
    if (rank_ >= 10 && k > 0) s.push_back(',');
    s += std::to_string(letters_[k]);
  }
  return s;
}

std::string Transposition::to_string() const {
  return "(" + std::to_string(i) + " " + std::to_string(j) + ")";
}

Transposition make_transposition(int a, int b) {
  if (a == b) throw DomainError("transposition needs two distinct letters");
  return Transposition{std::min(a, b), std::max(a, b)};
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) {
    throw DomainError("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                      std::to_string(v.rank()));
  }
  std::vector<int> word(u.rank());
  for (int k = 1; k <= u.rank(); ++k) word[k - 1] = u(v(k));
  return Permutation::from_word(word);
}

Permutation apply_transposition(const Transposition& sigma, const Permutation& w) {
  if (sigma.i < 1 || sigma.i >= sigma.j || sigma.j > w.rank()) {
    throw DomainError("transposition " + sigma.to_string() + " out of range for S_" +
                      std::to_string(w.rank()));
  }
  std::vector<int> word = w.word();
  for (int& x : word) {
    if (x == sigma.i) x = sigma.j;
    else if (x == sigma.j) x = sigma.i;
  }
  return Permutation::from_word(word);
}

Permutation left_multiply_simple(int i, const Permutation& w) {
  return apply_transposition(Transposition{i, i + 1}, w);
}

int length(const Permutation& w) {
  int count = 0;
  for (int a = 1; a <= w.rank(); ++a)
    for (int b = a + 1; b <= w.rank(); ++b)
      if (w(a) > w(b)) ++count;
  return count;
}

bool is_inversion(const Permutation& w, int i, int j) {
  return w.position_of(j) < w.position_of(i);
}

std::vector<Transposition> inversions(const Permutation& w) {
  const Permutation inv = w.inverse();
  std::vector<Transposition> out;
  for (int i = 1; i <= w.rank(); ++i)
    for (int j = i + 1; j <= w.rank(); ++j)
      if (inv(j) < inv(i)) out.push_back({i, j});
  return out;
}

std::vector<Transposition> bruhat_inversions(const Permutation& w) {
  const Permutation inv = w.inverse();
  auto is_inv = [&](int a, int b) { return inv(b) < inv(a); };
  std::vector<Transposition> out;
  for (int i = 1; i <= w.rank(); ++i) {
    for (int j = i + 1; j <= w.rank(); ++j) {
      if (!is_inv(i, j)) continue;
      bool blocked = false;
      for (int l = i + 1; l < j && !blocked; ++l) blocked = is_inv(i, l) && is_inv(l, j);
      if (!blocked) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<int> support(const Permutation& w) {
  std::vector<int> out;
  int prefix_max = 0;
  for (int i = 1; i < w.rank(); ++i) {
    prefix_max = std::max(prefix_max, w(i));
    if (prefix_max > i) out.push_back(i);
  }
  return out;
}

std::vector<int> reduced_word(const Permutation& w) {
  // Peel left descents: if letter i+1 precedes letter i, then w = s_i (s_i w) with l(s_i w) = l(w)-1.
  std::vector<int> word;
  Permutation cur = w;
  while (!cur.is_identity()) {
    for (int i = 1; i < cur.rank(); ++i) {
      if (cur.position_of(i + 1) < cur.position_of(i)) {
        word.push_back(i);
        cur = left_multiply_simple(i, cur);
        break;
      }
    }
  }
  return word;
}

Permutation word_to_permutation(int rank, const std::vector<int>& word) {
  Permutation p = Permutation::identity(rank);
  for (auto it = word.rbegin(); it != word.rend(); ++it) p = left_multiply_simple(*it, p);
  return p;
}

std::string word_to_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

namespace {

// Vertex v is a sink of the subquiver on the non-frozen vertices.
bool is_sink_among(const TypeAQuiver& q, int v, const std::vector<bool>& frozen) {
  if (v > 1 && !frozen[v - 1] && q.arrow(v - 1) != Arrow::kRight) return false;
  if (v < q.n() && !frozen[v + 1] && q.arrow(v) != Arrow::kLeft) return false;
  return true;
}

}  // namespace

CoxeterElement coxeter_element(const TypeAQuiver& q) {
  const int n = q.n();
  std::vector<bool> used(n + 2, false);
  CoxeterElement out;
  for (int step = 0; step < n; ++step) {
    for (int v = 1; v <= n; ++v) {
      if (!used[v] && is_sink_among(q, v, used)) {
        out.word.push_back(v);
        used[v] = true;
        break;
      }
    }
  }
  if (static_cast<int>(out.word.size()) != n) throw InternalError("quiver has no sink order");
  out.perm = word_to_permutation(n + 1, out.word);
  return out;
}

std::vector<int> SortabilityCertificate::concatenated() const {
  std::vector<int> out;
  for (const auto& f : factors) out.insert(out.end(), f.begin(), f.end());
  return out;
}

std::string SortabilityCertificate::to_string() const {
  if (factors.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += " | ";
    s += word_to_string(factors[k]);
  }
  return s;
}

std::optional<SortabilityCertificate> is_c_sortable(const Permutation& w, const TypeAQuiver& q) {
  const int n = q.n();
  if (w.rank() != n + 1) {
    throw DomainError("permutation of rank " + std::to_string(w.rank()) +
                      " does not match quiver with " + std::to_string(n) + " vertices");
  }
  // Walk c^infinity: each pass over the Coxeter word is one factor. A letter
  // that cannot be used is frozen for the rest of the walk, which is exactly
  // the nested-support condition.
  const std::vector<int> cox = coxeter_element(q).word;
  std::vector<bool> frozen(n + 1, false);
  SortabilityCertificate cert;
  Permutation cur = w;
  int live = n;
  while (!cur.is_identity()) {
    if (live == 0) return std::nullopt;
    std::vector<int> factor;
    for (int letter : cox) {
      if (frozen[letter]) continue;
      if (cur.position_of(letter + 1) < cur.position_of(letter)) {
        factor.push_back(letter);
        cur = left_multiply_simple(letter, cur);
      } else {
        const auto supp = support(cur);
        if (std::binary_search(supp.begin(), supp.end(), letter)) return std::nullopt;
        frozen[letter] = true;
        --live;
      }
    }
    if (!factor.empty()) cert.factors.push_back(std::move(factor));
  }
  return cert;
}

std::vector<Permutation> all_permutations(int rank) {
  if (rank < 1 || rank > 10) throw DomainError("all_permutations supports rank 1..10");
  std::vector<int> word(rank);
  std::iota(word.begin(), word.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_word(word));
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

std::vector<Permutation> enumerate_c_sortables(const TypeAQuiver& q) {
  std::vector<Permutation> out;
  for (const auto& w : all_permutations(q.n() + 1))
    if (is_c_sortable(w, q)) out.push_back(w);
  return out;
}

}  // namespace tfjhp
