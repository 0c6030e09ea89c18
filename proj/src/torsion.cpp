#include "tfjhp/torsion.hpp"

#include <algorithm>
#include <set>

#include "tfjhp/error.hpp"
#include "tfjhp/reflect.hpp"

namespace tfjhp {

bool TorsionFreeClass::contains(const Interval& iv) const {
  return std::binary_search(intervals.begin(), intervals.end(), iv);
}

std::string TorsionFreeClass::to_json() const {
  std::string s = "[";
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    if (k) s += ",";
    s += "\"" + intervals[k].to_string() + "\"";
  }
  return s + "]";
}

TorsionFreeClass raw_class_of(const Permutation& w, const TypeAQuiver& q) {
  if (w.rank() != q.n() + 1) throw DomainError("permutation rank does not match the quiver");
  TorsionFreeClass f{q, {}, w};
  for (const auto& t : inversions(w)) f.intervals.push_back(Interval{t.i, t.j});
  std::sort(f.intervals.begin(), f.intervals.end());
  return f;
}

TorsionFreeClass tf_class_of(const Permutation& w, const TypeAQuiver& q) {
  if (!is_c_sortable(w, q)) {
    throw DomainError(w.to_string() + " is not c-sortable for " + q.pretty() +
                      "; use raw_class_of for the bare interval set");
  }
  return raw_class_of(w, q);
}

std::vector<Interval> simples_of(const TorsionFreeClass& f) {
  if (!f.source) throw DomainError("class has no source permutation");
  std::vector<Interval> out;
  for (const auto& t : bruhat_inversions(*f.source)) out.push_back(Interval{t.i, t.j});
  return out;
}

bool jhp_by_count(const Permutation& w) { return support(w).size() == bruhat_inversions(w).size(); }

std::vector<int> supp_of_class(const TorsionFreeClass& f) {
  std::set<int> vertices;
  for (const auto& iv : f.intervals)
    for (int v = iv.i; v < iv.j; ++v) vertices.insert(v);
  return {vertices.begin(), vertices.end()};
}

std::string to_string(TorsionVerdict v) {
  switch (v) {
    case TorsionVerdict::kTorsionFree: return "torsion-free";
    case TorsionVerdict::kNotTorsionFree: return "not-torsion-free";
    case TorsionVerdict::kInconclusive: return "inconclusive-at-bound";
  }
  return "?";
}

TorsionOracle::TorsionOracle(const TypeAQuiver& q, OracleBounds bounds)
    : quiver_(q), bounds_(bounds), intervals_(all_intervals(q.n())) {
  const int count = static_cast<int>(intervals_.size());
  if (count > 64) throw DomainError("too many intervals for the bitmask oracle");
  RepCategory cat(q, bounds.prime);
  cat.max_total_dim = std::max(bounds.max_total_dim, 1);

  // Direct sums of up to max_summands intervals and their indecomposable submodules.
  std::vector<int> members;
  auto add_rule = [&](const std::vector<int>& ms) {
    SubRule rule;
    rule.members = ms;
    IsoClass sum(q.n());
    for (int m : ms) {
      rule.needs |= 1ULL << m;
      sum.add_at(m);
    }
    if (sum.total_dim() <= bounds.max_total_dim) {
      rule.searched = true;
      for (int k = 0; k < count; ++k) {
        IsoClass sub(q.n());
        sub.add_at(k);
        if (!cat.monos(sub, sum).empty()) rule.subs |= 1ULL << k;
      }
    }
    sub_rules_.push_back(rule);
  };
  auto rec = [&](auto&& self, int from) -> void {
    if (!members.empty()) add_rule(members);
    if (static_cast<int>(members.size()) == bounds.max_summands) return;
    for (int k = from; k < count; ++k) {
      members.push_back(k);
      self(self, k);
      members.pop_back();
    }
  };
  rec(rec, 0);

  // Extensions 0 -> Y -> E -> X -> 0 between intervals, searched by middle-term iso class.
  for (int x = 0; x < count; ++x) {
    for (int y = 0; y < count; ++y) {
      ExtRule rule{x, y, 0, false};
      IsoClass xs(q.n()), ys(q.n());
      xs.add_at(x);
      ys.add_at(y);
      if (xs.total_dim() + ys.total_dim() <= bounds.max_total_dim) {
        rule.searched = true;
        auto d = xs.dims();
        const auto dy = ys.dims();
        for (int v = 0; v < q.n(); ++v) d[v] += dy[v];
        for (const auto& e : iso_classes_with_dims(q.n(), d)) {
          if (cat.monos(ys, e).count(xs)) {
            for (int k = 0; k < count; ++k)
              if (e.multiplicity_at(k)) rule.middle_summands |= 1ULL << k;
          }
        }
      }
      ext_rules_.push_back(rule);
    }
  }
}

TorsionOracleResult TorsionOracle::check_mask(unsigned long long mask) const {
  bool inconclusive = false;
  for (const auto& rule : sub_rules_) {
    if ((rule.needs & mask) != rule.needs) continue;
    if (!rule.searched) {
      inconclusive = true;
      continue;
    }
    const unsigned long long missing = rule.subs & ~mask;
    if (missing) {
      int k = 0;
      while (!((missing >> k) & 1ULL)) ++k;
      std::string sum;
      for (int m : rule.members) sum += (sum.empty() ? "" : "+") + intervals_[m].to_string();
      return {TorsionVerdict::kNotTorsionFree, intervals_[k].to_string() + " embeds in " + sum};
    }
  }
  for (const auto& rule : ext_rules_) {
    if (!((mask >> rule.quotient) & 1ULL) || !((mask >> rule.sub) & 1ULL)) continue;
    if (!rule.searched) {
      inconclusive = true;
      continue;
    }
    const unsigned long long missing = rule.middle_summands & ~mask;
    if (missing) {
      int k = 0;
      while (!((missing >> k) & 1ULL)) ++k;
      return {TorsionVerdict::kNotTorsionFree,
              intervals_[k].to_string() + " is a summand of an extension of " +
                  intervals_[rule.quotient].to_string() + " by " + intervals_[rule.sub].to_string()};
    }
  }
  if (inconclusive) return {TorsionVerdict::kInconclusive, "dimension bound reached"};
  return {TorsionVerdict::kTorsionFree, ""};
}

TorsionOracleResult TorsionOracle::check(const std::vector<Interval>& set) const {
  unsigned long long mask = 0;
  for (const auto& iv : set) mask |= 1ULL << interval_index(quiver_.n(), iv);
  return check_mask(mask);
}

TorsionOracleResult is_torsion_free_oracle(const std::vector<Interval>& set, const TypeAQuiver& q,
                                           const OracleBounds& bounds) {
  return TorsionOracle(q, bounds).check(set);
}

TfEnumeration enumerate_tf_classes_bruteforce(const TypeAQuiver& q, const OracleBounds& bounds) {
  if (q.n() > 5) throw DomainError("brute-force enumeration is limited to n <= 5");
  const TorsionOracle oracle(q, bounds);
  const auto ivs = all_intervals(q.n());
  const int count = static_cast<int>(ivs.size());
  TfEnumeration out;
  for (unsigned long long mask = 0; mask < (1ULL << count); ++mask) {
    const auto res = oracle.check_mask(mask);
    if (res.verdict == TorsionVerdict::kNotTorsionFree) continue;
    std::vector<Interval> set;
    for (int k = 0; k < count; ++k)
      if ((mask >> k) & 1ULL) set.push_back(ivs[k]);
    (res.verdict == TorsionVerdict::kTorsionFree ? out.classes : out.inconclusive).push_back(set);
  }
  std::sort(out.classes.begin(), out.classes.end());
  std::sort(out.inconclusive.begin(), out.inconclusive.end());
  return out;
}

std::string to_string(BbVerdict v) {
  switch (v) {
    case BbVerdict::kNotTorsionFree: return "not-torsion-free";
    case BbVerdict::kTorsionFreeJhp: return "torsion-free-jhp";
    case BbVerdict::kTorsionFreeNotJhp: return "torsion-free-not-jhp";
  }
  return "?";
}

TypeAQuiver bb_quiver(int n) {
  std::vector<Arrow> arrows;
  for (int a = 1; a < n; ++a) arrows.push_back(a == 1 ? Arrow::kLeft : Arrow::kRight);
  return TypeAQuiver(n, arrows);
}

BbVerdict bb_criterion(const Permutation& w, const TypeAQuiver& q) {
  const int n = q.n();
  if (!(q == bb_quiver(n))) {
    throw DomainError("pattern criterion needs the quiver " + bb_quiver(n).pretty() + ", got " +
                      q.pretty());
  }
  if (w.rank() != n + 1) throw DomainError("permutation rank does not match the quiver");
  auto pos = [&](int letter) { return w.position_of(letter); };
  if (n >= 1) {
    // (i) no 2 ... k ... 1 with 2 < k < n+1
    for (int k = 3; k < n + 1; ++k)
      if (pos(2) < pos(k) && pos(k) < pos(1)) return BbVerdict::kNotTorsionFree;
    // (ii) no k ... i ... j with j in {3..n}, i < j < k
    for (int j = 3; j <= n; ++j)
      for (int i = 1; i < j; ++i)
        for (int k = j + 1; k <= n + 1; ++k)
          if (pos(k) < pos(i) && pos(i) < pos(j)) return BbVerdict::kNotTorsionFree;
  }
  if (n == 1 || pos(1) < pos(2)) return BbVerdict::kTorsionFreeJhp;  // (iii)(a)
  if (w(1) == 2) return BbVerdict::kTorsionFreeJhp;
  return alpha(left_multiply_simple(1, w)).size() == 1 ? BbVerdict::kTorsionFreeJhp
                                                       : BbVerdict::kTorsionFreeNotJhp;
}

}  // namespace tfjhp
