#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfjhp/permutation.hpp"
#include "tfjhp/quiver.hpp"
#include "tfjhp/rep.hpp"

namespace tfjhp {

/// An additively closed set of intervals, usually F(w) for a c_Q-sortable w.
struct TorsionFreeClass {
  TypeAQuiver quiver;
  std::vector<Interval> intervals;  // sorted, no repeats
  std::optional<Permutation> source;

  bool contains(const Interval& iv) const;
  /// JSON array of interval strings, sorted.
  std::string to_json() const;
};

/// F(w) = add{[i,j) : (i j) in inv(w)}. Refuses w that is not c_Q-sortable.
TorsionFreeClass tf_class_of(const Permutation& w, const TypeAQuiver& q);
/// Same interval set without the sortability check; not guaranteed torsion-free.
TorsionFreeClass raw_class_of(const Permutation& w, const TypeAQuiver& q);

/// {[i,j) : (i j) in Binv(w)}; needs a recorded source permutation.
std::vector<Interval> simples_of(const TorsionFreeClass& f);

/// |supp(w)| == |Binv(w)|
bool jhp_by_count(const Permutation& w);

/// Union of the interval supports.
std::vector<int> supp_of_class(const TorsionFreeClass& f);

struct OracleBounds {
  int max_summands = 2;   // summands of the direct sums whose submodules are checked
  int max_total_dim = 8;  // modules above this are not searched
  int prime = 2;
};

enum class TorsionVerdict { kTorsionFree, kNotTorsionFree, kInconclusive };
std::string to_string(TorsionVerdict v);

struct TorsionOracleResult {
  TorsionVerdict verdict = TorsionVerdict::kTorsionFree;
  /// Human-readable reason for a refutation, e.g. "[1,2) embeds in [1,3)".
  std::string witness;
};

/// Precomputed closure tables for one quiver; answers many subset queries cheaply.
class TorsionOracle {
 public:
  TorsionOracle(const TypeAQuiver& q, OracleBounds bounds);

  TorsionOracleResult check(const std::vector<Interval>& set) const;
  TorsionOracleResult check_mask(unsigned long long mask) const;

  const TypeAQuiver& quiver() const noexcept { return quiver_; }
  int interval_count() const noexcept { return static_cast<int>(intervals_.size()); }

 private:
  struct SubRule {
    unsigned long long needs = 0;  // intervals of the direct sum
    unsigned long long subs = 0;   // indecomposable submodules; valid only when searched
    bool searched = false;
    std::vector<int> members;
  };
  struct ExtRule {
    int quotient = 0;
    int sub = 0;
    unsigned long long middle_summands = 0;
    bool searched = false;
  };
  TypeAQuiver quiver_;
  OracleBounds bounds_;
  std::vector<Interval> intervals_;
  std::vector<SubRule> sub_rules_;
  std::vector<ExtRule> ext_rules_;
};

TorsionOracleResult is_torsion_free_oracle(const std::vector<Interval>& set, const TypeAQuiver& q,
                                           const OracleBounds& bounds = {});

struct TfEnumeration {
  std::vector<std::vector<Interval>> classes;
  std::vector<std::vector<Interval>> inconclusive;
};

/// Every subset of the intervals passing the oracle, sorted lexicographically. n <= 5.
TfEnumeration enumerate_tf_classes_bruteforce(const TypeAQuiver& q, const OracleBounds& bounds = {});

enum class BbVerdict { kNotTorsionFree, kTorsionFreeJhp, kTorsionFreeNotJhp };
std::string to_string(BbVerdict v);

/// The quiver 1 <- 2 -> 3 -> ... -> n.
TypeAQuiver bb_quiver(int n);

/// Pattern criterion for F(w) on bb_quiver(n): conditions (i) and (ii) decide
/// torsion-freeness, (iii) decides the Jordan-Holder verdict. Evaluated literally.
BbVerdict bb_criterion(const Permutation& w, const TypeAQuiver& q);

}  // namespace tfjhp
