#include "tfjhp/reflect.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <json.hpp>

#include "tfjhp/error.hpp"

namespace tfjhp {

namespace {

// Shared by R+ at a sink and R- at a source: the dimension at i becomes
// (#neighbours of i in the support) - [i in support], other vertices stay.
std::optional<Interval> reflect_interval_at(int i, const Interval& iv) {
  const int s = iv.i;
  const int t = iv.j;
  if (s == i && t == i + 1) return std::nullopt;
  if (t == i) return Interval{s, i + 1};
  if (t == i + 1) return Interval{s, i};
  if (s == i + 1) return Interval{i, t};
  if (s == i) return Interval{i + 1, t};
  return iv;
}

void check_fits(const TypeAQuiver& q, const Interval& iv) {
  if (iv.i < 1 || iv.j > q.n() + 1 || iv.i >= iv.j) {
    throw DomainError("interval " + iv.to_string() + " does not fit " + q.pretty());
  }
}

}  // namespace

std::optional<Interval> reflect_plus_interval(const TypeAQuiver& q, int sink, const Interval& iv) {
  if (!q.is_sink(sink)) {
    throw DomainError("vertex " + std::to_string(sink) + " is not a sink of " + q.pretty());
  }
  check_fits(q, iv);
  return reflect_interval_at(sink, iv);
}

std::optional<Interval> reflect_minus_interval(const TypeAQuiver& q, int source, const Interval& iv) {
  if (!q.is_source(source)) {
    throw DomainError("vertex " + std::to_string(source) + " is not a source of " + q.pretty());
  }
  check_fits(q, iv);
  return reflect_interval_at(source, iv);
}

namespace {

std::vector<int> neighbours(const TypeAQuiver& q, int v) {
  std::vector<int> out;
  if (v > 1) out.push_back(v - 1);
  if (v < q.n()) out.push_back(v + 1);
  return out;
}

int edge_between(int a, int b) { return std::min(a, b); }

}  // namespace

Rep reflect_plus_rep(const Rep& m, int sink) {
  const TypeAQuiver& q = m.quiver;
  if (!q.is_sink(sink)) throw DomainError("vertex " + std::to_string(sink) + " is not a sink");
  const int p = m.prime;
  const auto nbs = neighbours(q, sink);
  // Incoming map [M_{a1->i} | M_{a2->i}] : M_a1 (+) M_a2 -> M_i.
  FpMatrix incoming(m.dim_at(sink), 0, p);
  for (int a : nbs) incoming = FpMatrix::hstack(incoming, m.maps[edge_between(a, sink) - 1]);
  const FpMatrix kernel = incoming.nullspace();  // columns span the new space

  Rep out = m;
  out.quiver = q.mutate(sink);
  out.dims[sink - 1] = kernel.cols();
  int row = 0;
  for (int a : nbs) {
    // New arrow i -> a: the a-block of the kernel inclusion.
    out.maps[edge_between(a, sink) - 1] = kernel.block(row, 0, m.dim_at(a), kernel.cols());
    row += m.dim_at(a);
  }
  out.validate();
  return out;
}

Rep reflect_minus_rep(const Rep& m, int source) {
  const TypeAQuiver& q = m.quiver;
  if (!q.is_source(source)) throw DomainError("vertex " + std::to_string(source) + " is not a source");
  const int p = m.prime;
  const auto nbs = neighbours(q, source);
  // Outgoing map [M_{i->a1}; M_{i->a2}] : M_i -> M_a1 (+) M_a2.
  FpMatrix outgoing(0, m.dim_at(source), p);
  for (int a : nbs) outgoing = FpMatrix::vstack(outgoing, m.maps[edge_between(a, source) - 1]);
  const int total = outgoing.rows();
  // Cokernel: complement of the image, projection read off [image | complement]^{-1}.
  FpMatrix image(total, 0, p);
  for (int c = 0; c < outgoing.cols(); ++c) {
    FpMatrix trial = FpMatrix::hstack(image, outgoing.column(c));
    if (trial.rank() > image.cols()) image = trial;
  }
  FpMatrix complement(total, 0, p);
  for (int e = 0; e < total && image.cols() + complement.cols() < total; ++e) {
    FpMatrix unit(total, 1, p);
    unit.set(e, 0, 1);
    FpMatrix trial = FpMatrix::hstack(FpMatrix::hstack(image, complement), unit);
    if (trial.rank() == trial.cols()) complement = FpMatrix::hstack(complement, unit);
  }
  const int cdim = complement.cols();
  FpMatrix projection(cdim, total, p);
  if (total > 0) {
    projection = FpMatrix::hstack(image, complement).inverse().block(image.cols(), 0, cdim, total);
  }

  Rep out = m;
  out.quiver = q.mutate(source);
  out.dims[source - 1] = cdim;
  int col = 0;
  for (int a : nbs) {
    // New arrow a -> i: the a-block of the projection.
    out.maps[edge_between(a, source) - 1] = projection.block(0, col, cdim, m.dim_at(a));
    col += m.dim_at(a);
  }
  out.validate();
  return out;
}

std::vector<int> alpha(const Permutation& u) {
  std::vector<int> out;
  for (const auto& t : bruhat_inversions(u))
    if (t.i == 2 && t.j >= 3) out.push_back(t.j);
  return out;
}

namespace {

void check_interior(const Permutation& u, int i) {
  const int n = u.rank() - 1;
  if (i <= 1 || i >= n) {
    throw DomainError("index " + std::to_string(i) + " must satisfy 1 < i < " + std::to_string(n));
  }
}

bool in_binv(const std::vector<Transposition>& binv, int a, int b) {
  return std::find(binv.begin(), binv.end(), Transposition{a, b}) != binv.end();
}

}  // namespace

std::vector<int> beta(const Permutation& u, int i) {
  check_interior(u, i);
  const auto binv = bruhat_inversions(u);
  std::vector<int> out;
  for (int t = 1; t <= i - 1; ++t) {
    if (in_binv(binv, t, i) && u.position_of(i) < u.position_of(i + 1) &&
        u.position_of(i + 1) < u.position_of(t)) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<int> gamma(const Permutation& u, int i) {
  check_interior(u, i);
  const auto binv = bruhat_inversions(u);
  std::vector<int> out;
  for (int t = i + 2; t <= u.rank(); ++t) {
    if (in_binv(binv, i + 1, t) && u.position_of(t) < u.position_of(i) &&
        u.position_of(i) < u.position_of(i + 1)) {
      out.push_back(t);
    }
  }
  return out;
}

namespace {

Permutation shortened(int i, const Permutation& w) {
  const int n = w.rank() - 1;
  if (i < 1 || i >= n) {
    throw DomainError("index " + std::to_string(i) + " must satisfy 1 <= i < " + std::to_string(n));
  }
  Permutation sw = left_multiply_simple(i, w);
  if (length(sw) != length(w) - 1) {
    throw DomainError("s_" + std::to_string(i) + " does not shorten " + w.to_string());
  }
  return sw;
}

}  // namespace

int dagger(int i, const Permutation& w) {
  const Permutation sw = shortened(i, w);
  if (i == 1) return w(1) == 2 ? 1 : 0;
  int prefix_max = 0;
  for (int k = 1; k <= i; ++k) prefix_max = std::max(prefix_max, sw(k));
  return prefix_max <= i ? 1 : 0;
}

int ddagger(int i, const Permutation& w, DdaggerRule rule) {
  const Permutation sw = shortened(i, w);
  if (i == 1) {
    if (w(1) == 2) return 1;
    const auto a = alpha(sw);
    if (rule == DdaggerRule::kAsDefined) return 1 - static_cast<int>(a.size());
    int kept = 0;
    for (int t : a)
      if (is_inversion(w, 2, t)) ++kept;
    return 1 - kept;
  }
  return 1 - static_cast<int>(beta(sw, i).size() + gamma(sw, i).size());
}

ReflectionPlan ReflectionPlan::from_vertices(const TypeAQuiver& start,
                                             const std::vector<int>& vertices) {
  ReflectionPlan plan;
  plan.vertices = vertices;
  plan.quivers.push_back(start);
  for (int v : vertices) {
    const TypeAQuiver& cur = plan.quivers.back();
    if (v < 1 || v >= cur.n()) {
      throw DomainError("plan vertex " + std::to_string(v) + " outside [1, n-1]");
    }
    if (!cur.is_sink(v)) {
      throw DomainError("plan vertex " + std::to_string(v) + " is not a sink of " + cur.pretty());
    }
    plan.quivers.push_back(cur.mutate(v));
  }
  if (!plan.quivers.back().is_linear()) {
    throw DomainError("plan ends at " + plan.quivers.back().pretty() + ", not the linear orientation");
  }
  return plan;
}

ReflectionPlan sink_plan_to_linear(const TypeAQuiver& q) {
  // BFS in lexicographic vertex order: the first path found to each quiver is the
  // lexicographically least among the shortest ones.
  std::map<std::string, std::vector<int>> seen;
  std::deque<TypeAQuiver> queue;
  seen[q.to_string()] = {};
  queue.push_back(q);
  while (!queue.empty()) {
    const TypeAQuiver cur = queue.front();
    queue.pop_front();
    const auto path = seen[cur.to_string()];
    if (cur.is_linear()) return ReflectionPlan::from_vertices(q, path);
    for (int v : cur.sinks()) {
      if (v >= cur.n()) continue;
      const TypeAQuiver next = cur.mutate(v);
      if (seen.count(next.to_string())) continue;
      auto extended = path;
      extended.push_back(v);
      seen[next.to_string()] = extended;
      queue.push_back(next);
    }
  }
  throw InternalError("no sink plan reaches the linear orientation of " + q.pretty());
}

std::optional<ReflectionSequence> reflection_sequence(const Permutation& w,
                                                      const ReflectionPlan& plan) {
  ReflectionSequence seq;
  seq.chain.push_back(w);
  Permutation cur = w;
  for (std::size_t y = 0; y < plan.vertices.size(); ++y) {
    const int v = plan.vertices[y];
    Permutation next = left_multiply_simple(v, cur);
    if (length(next) == length(cur) - 1) {
      seq.positions.push_back(static_cast<int>(y));
      seq.vertices.push_back(v);
      seq.chain.push_back(next);
      cur = next;
    }
  }
  if (seq.positions.empty()) return std::nullopt;
  return seq;
}

PlanJhpResult jhp_along_plan(const Permutation& w, const TypeAQuiver& q, DdaggerRule rule) {
  return jhp_along_plan(w, q, sink_plan_to_linear(q), rule);
}

PlanJhpResult jhp_along_plan(const Permutation& w, const TypeAQuiver& q, const ReflectionPlan& plan,
                      DdaggerRule rule) {
  if (plan.quivers.empty() || !(plan.quivers.front() == q)) {
    throw DomainError("plan does not start at " + q.pretty());
  }
  if (!is_c_sortable(w, q)) {
    throw DomainError(w.to_string() + " is not c-sortable for " + q.pretty());
  }
  PlanJhpResult res;
  res.plan = plan;
  res.sequence = reflection_sequence(w, plan);
  Permutation cur = w;
  std::size_t next_step = 0;
  for (std::size_t y = 0; y < plan.vertices.size(); ++y) {
    const int v = plan.vertices[y];
    if (res.sequence && next_step < res.sequence->positions.size() &&
        res.sequence->positions[next_step] == static_cast<int>(y)) {
      PlanJhpStep step{v, dagger(v, cur), ddagger(v, cur, rule), cur, left_multiply_simple(v, cur)};
      res.dagger_total += step.dagger;
      res.ddagger_total += step.ddagger;
      cur = step.after;
      res.steps.push_back(step);
      ++next_step;
    }
    if (!is_c_sortable(cur, plan.quivers[y + 1])) {
      throw InternalError(cur.to_string() + " is not c-sortable for " + plan.quivers[y + 1].pretty() +
                          " after step " + std::to_string(y + 1) + " of the plan");
    }
  }
  res.final_perm = cur;
  res.jhp = res.dagger_total == res.ddagger_total;
  return res;
}

std::string PlanJhpResult::to_json() const {
  nlohmann::ordered_json j;
  j["plan"] = plan.vertices;
  j["sequence"] = sequence ? nlohmann::ordered_json(sequence->vertices) : nlohmann::ordered_json(nullptr);
  auto steps_json = nlohmann::ordered_json::array();
  for (const auto& s : steps) {
    steps_json.push_back({{"vertex", s.vertex},
                          {"dagger", s.dagger},
                          {"ddagger", s.ddagger},
                          {"perm_before", s.before.to_string()},
                          {"perm_after", s.after.to_string()}});
  }
  j["steps"] = steps_json;
  j["totals"] = {{"dagger", dagger_total}, {"ddagger", ddagger_total}};
  j["final_perm"] = final_perm.to_string();
  j["jhp"] = jhp;
  return j.dump();
}

}  // namespace tfjhp
