#include "tfjhp/semibrick.hpp"

#include <algorithm>
#include <cctype>

#include "tfjhp/error.hpp"

namespace tfjhp {

std::string LinearModule::to_string() const {
  return "M(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

TypeAQuiver linear_lambda(int n) { return TypeAQuiver::linear_reversed(n); }

std::vector<LinearModule> all_linear_modules(int n) {
  std::vector<LinearModule> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

namespace {

void check_module(const LinearModule& m, int n) {
  if (m.i < 0 || m.i >= m.j || m.j > n) {
    throw DomainError(m.to_string() + " needs 0 <= i < j <= " + std::to_string(n));
  }
}

}  // namespace

HSets h_sets(const LinearModule& m, int n) {
  check_module(m, n);
  const int i = m.i;
  const int j = m.j;
  HSets h;
  for (int s = 0; s <= n; ++s) {
    for (int t = s + 1; t <= n; ++t) {
      if (i <= s && s <= j - 1 && j <= t && t <= n) h.hom_out.emplace_back(s, t);
      if (0 <= s && s <= i && i + 1 <= t && t <= j) h.hom_in.emplace_back(s, t);
      if (0 <= s && s <= i - 1 && i <= t && t <= j - 1) h.ext_out.emplace_back(s, t);
      if (i + 1 <= s && s <= j && j + 1 <= t && t <= n) h.ext_in.emplace_back(s, t);
    }
  }
  return h;
}

HSets h_sets_computed(const RepCategory& lambda, const LinearModule& m) {
  const int n = lambda.n();
  check_module(m, n);
  const int a = lambda.index_of(m.to_interval());
  HSets h;
  for (const auto& other : all_linear_modules(n)) {
    const int b = lambda.index_of(other.to_interval());
    const std::pair<int, int> st{other.i, other.j};
    if (lambda.interval_hom(a, b)) h.hom_out.push_back(st);
    if (lambda.interval_hom(b, a)) h.hom_in.push_back(st);
    if (lambda.interval_ext(a, b)) h.ext_out.push_back(st);
    if (lambda.interval_ext(b, a)) h.ext_in.push_back(st);
  }
  return h;
}

bool is_semibrick_linear(const std::vector<LinearModule>& set) {
  auto sorted = set;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (sorted[k].i == sorted[k - 1].i) return false;
  for (std::size_t hi = 0; hi < sorted.size(); ++hi) {
    for (std::size_t lo = 0; lo < hi; ++lo) {
      const int yj = sorted[lo].j;
      if (!(yj <= sorted[hi].i || yj >= sorted[hi].j + 1)) return false;
    }
  }
  return true;
}

bool is_semibrick_linear_by_hom(const RepCategory& lambda, const std::vector<LinearModule>& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    const int ia = lambda.index_of(set[a].to_interval());
    if (lambda.interval_hom(ia, ia) != 1) return false;
    for (std::size_t b = 0; b < set.size(); ++b) {
      if (a == b) continue;
      const int ib = lambda.index_of(set[b].to_interval());
      if (ia == ib || lambda.interval_hom(ia, ib)) return false;
    }
  }
  return true;
}

std::vector<std::vector<LinearModule>> enumerate_semibricks_linear(int n) {
  if (n < 1 || n > 7) throw DomainError("semibrick listing supports 1 <= n <= 7");
  const auto mods = all_linear_modules(n);
  std::vector<std::vector<LinearModule>> out;
  std::vector<LinearModule> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t k = from; k < mods.size(); ++k) {
      bool ok = true;
      for (const auto& m : cur) ok = ok && is_semibrick_linear({m, mods[k]});
      if (!ok) continue;
      cur.push_back(mods[k]);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long catalan_count(int n) {
  // C(2n+2, n+1) / (n+2), computed incrementally to stay exact.
  long long c = 1;
  for (int k = 0; k < n + 1; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

ShiftedInterval ShiftedInterval::parse(std::string_view text) {
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  };
  auto number = [&](bool allow_sign) {
    const std::size_t start = pos;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      negative = text[pos] == '-';
      ++pos;
    }
    const std::size_t digits = pos;
    int value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000) throw ParseError("number too large", start);
      ++pos;
    }
    if (pos == digits) throw ParseError("expected a number", pos);
    return negative ? -value : value;
  };
  expect('M');
  expect('(');
  const int i = number(false);
  expect(',');
  const std::size_t j_pos = pos;
  const int j = number(false);
  expect(')');
  expect('[');
  const int k = number(true);
  expect(']');
  if (pos != text.size()) throw ParseError("trailing characters after shifted module", pos);
  if (j <= i) throw ParseError("module needs i < j", j_pos);
  return ShiftedInterval{{i, j}, k};
}

std::string ShiftedInterval::to_string() const {
  return module.to_string() + "[" + std::to_string(shift) + "]";
}

int shifted_hom_dim(const RepCategory& lambda, const ShiftedInterval& x, const ShiftedInterval& y) {
  check_module(x.module, lambda.n());
  check_module(y.module, lambda.n());
  const int a = lambda.index_of(x.module.to_interval());
  const int b = lambda.index_of(y.module.to_interval());
  const int diff = y.shift - x.shift;
  if (diff == 0) return lambda.interval_hom(a, b);
  if (diff == 1) return lambda.interval_ext(a, b);
  return 0;
}

namespace {

// {X = M_ij[k], Y = M_st[l]} is a semibrick, by the index inequalities of each case.
bool pair_is_semibrick(const ShiftedInterval& x, const ShiftedInterval& y, int n) {
  const int i = x.module.i, j = x.module.j;
  const int s = y.module.i, t = y.module.j;
  const int d = y.shift - x.shift;
  if (d == 0) {
    if (0 <= s && s <= i - 1) return (s + 1 <= t && t <= i) || (j + 1 <= t && t <= n);
    if (i + 1 <= s && s <= j - 2) return s + 1 <= t && t <= j - 1;
    if (j <= s && s <= n) return s + 1 <= t && t <= n;
    return false;  // s == i or s == j - 1
  }
  if (d == 1) {
    if (0 <= s && s <= i - 1) return (s + 1 <= t && t <= i - 1) || (j <= t && t <= n);
    return i <= s && s <= n && s + 1 <= t && t <= n;
  }
  if (d == -1) {
    if (0 <= s && s <= i) return s + 1 <= t && t <= n;
    if (i + 1 <= s && s <= j - 1) return s + 1 <= t && t <= j;
    if (j + 1 <= s && s <= n) return s + 1 <= t && t <= n;
    return false;  // s == j
  }
  return true;
}

}  // namespace

bool is_semibrick_shifted(const std::vector<ShiftedInterval>& set, int n) {
  for (const auto& x : set) check_module(x.module, n);
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (set[a] == set[b]) continue;
      if (!pair_is_semibrick(set[a], set[b], n)) return false;
    }
  }
  return true;
}

bool is_semibrick_shifted_by_hom(const RepCategory& lambda, const std::vector<ShiftedInterval>& set) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    if (shifted_hom_dim(lambda, set[a], set[a]) != 1) return false;
    for (std::size_t b = 0; b < set.size(); ++b) {
      if (a == b || set[a] == set[b]) continue;
      if (shifted_hom_dim(lambda, set[a], set[b]) != 0) return false;
    }
  }
  return true;
}

}  // namespace tfjhp
