#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfjhp/permutation.hpp"
#include "tfjhp/quiver.hpp"
#include "tfjhp/rep.hpp"

namespace tfjhp {

/// R+_i on an interval at a sink i of q; nothing stands for the zero module.
std::optional<Interval> reflect_plus_interval(const TypeAQuiver& q, int sink, const Interval& iv);
/// R-_i on an interval at a source i of q.
std::optional<Interval> reflect_minus_interval(const TypeAQuiver& q, int source, const Interval& iv);
inline std::optional<Interval> reflect_minus_interval(const TypeAQuiver& q, int source,
                                                      const std::optional<Interval>& iv) {
  if (!iv) return std::nullopt;
  return reflect_minus_interval(q, source, *iv);
}

/// Kernel construction: the new space at the sink is ker(sum of incoming maps).
/// The result lives on q.mutate(sink).
Rep reflect_plus_rep(const Rep& m, int sink);
/// Cokernel construction at a source. The result lives on q.mutate(source).
Rep reflect_minus_rep(const Rep& m, int source);

/// {t >= 3 : (2 t) in Binv(u)}
std::vector<int> alpha(const Permutation& u);
/// {t <= i-1 : (t i) in Binv(u), u^-1(i) < u^-1(i+1) < u^-1(t)}; needs 1 < i < n.
std::vector<int> beta(const Permutation& u, int i);
/// {t >= i+2 : (i+1 t) in Binv(u), u^-1(t) < u^-1(i) < u^-1(i+1)}; needs 1 < i < n.
std::vector<int> gamma(const Permutation& u, int i);

/// Which rule ddagger uses at i = 1.
enum class DdaggerRule {
  kAsDefined,          // 1 - |alpha(s_1 w)| when w(1) != 2
  kInversionFiltered,  // 1 - |{t in alpha(s_1 w) : (2 t) in inv(w)}|
};

/// Both need l(s_i w) = l(w) - 1 and 1 <= i < n, where n = rank - 1.
int dagger(int i, const Permutation& w);
int ddagger(int i, const Permutation& w, DdaggerRule rule = DdaggerRule::kAsDefined);

/// Sink mutations j_1..j_s (each < n) turning a quiver into 1 -> 2 -> ... -> n.
struct ReflectionPlan {
  std::vector<int> vertices;
  std::vector<TypeAQuiver> quivers;  // quivers[0] is the start, quivers.back() the linear one

  /// Checks the sink and target conditions; throws DomainError otherwise.
  static ReflectionPlan from_vertices(const TypeAQuiver& start, const std::vector<int>& vertices);
};

/// Breadth-first shortest plan, ties broken lexicographically.
ReflectionPlan sink_plan_to_linear(const TypeAQuiver& q);

struct ReflectionSequence {
  std::vector<int> positions;          // 0-based indices into the plan
  std::vector<int> vertices;           // plan vertices at those positions
  std::vector<Permutation> chain;      // w, s_{j_t1} w, ...
};

/// Greedy subsequence of the plan along which the length drops; nothing when no step applies.
std::optional<ReflectionSequence> reflection_sequence(const Permutation& w, const ReflectionPlan& plan);

struct PlanJhpStep {
  int vertex = 0;
  int dagger = 0;
  int ddagger = 0;
  Permutation before;
  Permutation after;
};

struct PlanJhpResult {
  ReflectionPlan plan;
  std::optional<ReflectionSequence> sequence;
  std::vector<PlanJhpStep> steps;
  int dagger_total = 0;
  int ddagger_total = 0;
  Permutation final_perm;  // sortable for the linear orientation
  bool jhp = true;         // dagger_total == ddagger_total

  std::string to_json() const;
};

/// Runs the dagger/ddagger comparison along the canonical plan (or the given one).
/// Refuses non-sortable w; checks sortability of every intermediate permutation.
PlanJhpResult jhp_along_plan(const Permutation& w, const TypeAQuiver& q,
                      DdaggerRule rule = DdaggerRule::kAsDefined);
PlanJhpResult jhp_along_plan(const Permutation& w, const TypeAQuiver& q, const ReflectionPlan& plan,
                      DdaggerRule rule = DdaggerRule::kAsDefined);

}  // namespace tfjhp
