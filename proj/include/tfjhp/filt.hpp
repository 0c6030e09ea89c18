#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfjhp/quiver.hpp"
#include "tfjhp/rep.hpp"

namespace tfjhp {

/// A class X of objects, given by pairwise non-isomorphic members.
struct GeneratorSet {
  TypeAQuiver quiver;
  std::vector<IsoClass> members;

  static GeneratorSet of_intervals(const TypeAQuiver& q, const std::vector<Interval>& ivs);
  std::vector<std::string> member_strings() const;
  std::string member_string(int index) const;
};

/// Cone sequence of one X-filtration, as indices into GeneratorSet::members.
struct FiltrationRecord {
  std::vector<int> cone_sequence;
  int length() const { return static_cast<int>(cone_sequence.size()); }
  friend auto operator<=>(const FiltrationRecord&, const FiltrationRecord&) = default;
};

/// Filtration enumerator for one generator set, memoized per module.
class FiltrationEngine {
 public:
  FiltrationEngine(RepCategory& cat, GeneratorSet x);

  const GeneratorSet& generators() const noexcept { return x_; }

  /// Every cone sequence of an X-filtration of m. Throws BoundError past max_records.
  std::set<FiltrationRecord> filtrations(const IsoClass& m, std::size_t max_records = 200000);

  /// Cone multisets (member multiplicities) reachable for m, each with one witness sequence.
  const std::map<std::vector<int>, std::vector<int>>& cone_multisets(const IsoClass& m);

  bool in_filt(const IsoClass& m) { return !cone_multisets(m).empty(); }
  std::optional<int> x_length(const IsoClass& m);

 private:
  RepCategory& cat_;
  GeneratorSet x_;
  std::map<IsoClass, std::map<std::vector<int>, std::vector<int>>> summary_;
  std::map<IsoClass, std::set<FiltrationRecord>> full_;
};

std::set<FiltrationRecord> filtrations(const Rep& m, const GeneratorSet& x,
                                       std::size_t max_records = 200000);
std::optional<int> x_length(const Rep& m, const GeneratorSet& x);

struct Counterexample {
  std::string module;
  std::vector<std::string> seq_a;
  std::vector<std::string> seq_b;
};

struct JhpReport {
  std::vector<std::string> generator_set;
  int universe_bound = 8;
  bool pass = true;
  bool inconclusive = false;
  int modules_checked = 0;  // members of Filt(X) inside the universe
  std::vector<Counterexample> counterexamples;

  std::string verdict() const;
  std::string to_json() const;
};

/// Multisets of intervals with total dimension <= bound whose dimension vector is a
/// nonnegative combination of the member dimension vectors.
std::vector<IsoClass> enumerate_universe(const GeneratorSet& x, int bound);

/// All minimal-length filtrations agree as multisets, for every module of the universe.
JhpReport check_wjhp(FiltrationEngine& engine, int universe_bound = 8);
/// All filtrations agree as multisets (hence in length), for every module of the universe.
JhpReport check_jhp(FiltrationEngine& engine, int universe_bound = 8);

JhpReport check_wjhp(const GeneratorSet& x, int universe_bound = 8, int p = 2);
JhpReport check_jhp(const GeneratorSet& x, int universe_bound = 8, int p = 2);

/// Members have one-dimensional endomorphisms and vanishing Hom between distinct members.
bool is_semibrick(const GeneratorSet& x, int p = 2);

/// Members M of s with no short exact sequence 0 -> A -> M -> B -> 0, A and B nonzero in add s.
std::vector<Interval> simples_in(const std::vector<Interval>& s, const TypeAQuiver& q, int p = 2);
std::vector<Interval> simples_in(RepCategory& cat, const std::vector<Interval>& s);

}  // namespace tfjhp
