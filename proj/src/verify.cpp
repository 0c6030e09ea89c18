#include "tfjhp/verify.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "tfjhp/error.hpp"
#include "tfjhp/filt.hpp"
#include "tfjhp/permutation.hpp"
#include "tfjhp/rep.hpp"
#include "tfjhp/semibrick.hpp"

namespace tfjhp {

namespace {

constexpr std::size_t kMaxReported = 5;

// Collects failures and renders "k mismatches out of m; first: ...".
class Tally {
 public:
  void ok() { ++checked_; }
  void fail(const std::string& what) {
    ++checked_;
    ++failed_;
    if (examples_.size() < kMaxReported) examples_.push_back(what);
  }
  void merge(const Tally& other) {
    checked_ += other.checked_;
    failed_ += other.failed_;
    for (const auto& e : other.examples_)
      if (examples_.size() < kMaxReported) examples_.push_back(e);
  }
  CheckResult result(std::string name, const std::string& unit = "cases") const {
    CheckResult r{std::move(name), failed_ == 0, false, ""};
    std::ostringstream os;
    os << failed_ << " mismatches out of " << checked_ << " " << unit;
    for (std::size_t k = 0; k < examples_.size(); ++k) os << (k ? "; " : "; e.g. ") << examples_[k];
    r.detail = os.str();
    return r;
  }

 private:
  long long checked_ = 0;
  long long failed_ = 0;
  std::vector<std::string> examples_;
};

// Runs fn(k) for k < count on up to `threads` workers; results keep index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, int threads, Fn fn) {
  std::vector<T> out(count);
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t k = next++; k < count; k = next++) out[k] = fn(k);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string where(const TypeAQuiver& q, const Permutation& w) {
  return "Q=\"" + q.to_string() + "\" w=" + w.to_string();
}

std::string intervals_string(const std::vector<Interval>& ivs) {
  std::string s = "{";
  for (std::size_t k = 0; k < ivs.size(); ++k) s += (k ? "," : "") + ivs[k].to_string();
  return s + "}";
}

}  // namespace

std::vector<TypeAQuiver> sweep_quivers(const VerifyConfig& cfg, int max_n, int min_n) {
  if (cfg.quiver) return {*cfg.quiver};
  std::vector<TypeAQuiver> out;
  for (int n = min_n; n <= max_n; ++n)
    for (const auto& q : TypeAQuiver::all_orientations(n)) out.push_back(q);
  return out;
}

CheckResult check_inversion_fidelity() {
  const auto w = Permutation::parse("534216");
  const std::vector<std::pair<int, int>> inv_expected{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                                      {2, 4}, {2, 5}, {3, 5}, {4, 5}};
  const std::vector<std::pair<int, int>> binv_expected{{1, 2}, {2, 3}, {2, 4}, {3, 5}, {4, 5}};
  auto as_pairs = [](const std::vector<Transposition>& ts) {
    std::vector<std::pair<int, int>> out;
    for (const auto& t : ts) out.emplace_back(t.i, t.j);
    std::sort(out.begin(), out.end());
    return out;
  };
  Tally tally;
  if (as_pairs(inversions(w)) == inv_expected) tally.ok(); else tally.fail("inv(534216)");
  if (as_pairs(bruhat_inversions(w)) == binv_expected) tally.ok(); else tally.fail("Binv(534216)");
  return tally.result("inversion fidelity", "sets");
}

CheckResult check_sortable_counts(const std::vector<TypeAQuiver>& quivers) {
  Tally tally;
  for (const auto& q : quivers) {
    const long long got = static_cast<long long>(enumerate_c_sortables(q).size());
    const long long want = catalan_count(q.n());
    if (got == want) tally.ok();
    else tally.fail("Q=\"" + q.to_string() + "\" " + std::to_string(got) + " != " + std::to_string(want));
  }
  return tally.result("sortable counts", "orientations");
}

CheckResult check_plan_vs_count(const std::vector<TypeAQuiver>& quivers, DdaggerRule rule) {
  Tally tally;
  for (const auto& q : quivers) {
    const ReflectionPlan plan = sink_plan_to_linear(q);
    for (const auto& w : enumerate_c_sortables(q)) {
      try {
        const bool by_plan = jhp_along_plan(w, q, plan, rule).jhp;
        if (by_plan == jhp_by_count(w)) tally.ok();
        else tally.fail(where(q, w) + (by_plan ? " plan yes, count no" : " plan no, count yes"));
      } catch (const std::exception& e) {
        tally.fail(where(q, w) + " threw: " + e.what());
      }
    }
  }
  return tally.result("dagger/ddagger totals vs support/Binv count", "sortable elements");
}

CheckResult check_bb_criterion(int max_n) {
  Tally tally;
  for (int n = 2; n <= max_n; ++n) {
    const TypeAQuiver q = bb_quiver(n);
    for (const auto& w : all_permutations(n + 1)) {
      BbVerdict want = BbVerdict::kNotTorsionFree;
      if (is_c_sortable(w, q)) want = jhp_by_count(w) ? BbVerdict::kTorsionFreeJhp : BbVerdict::kTorsionFreeNotJhp;
      const BbVerdict got = bb_criterion(w, q);
      if (got == want) tally.ok();
      else tally.fail(where(q, w) + " pattern says " + to_string(got) + ", expected " + to_string(want));
    }
  }
  return tally.result("pattern criterion on 1<-2->3->...->n", "permutations");
}

CheckResult check_tf_bijection(const std::vector<TypeAQuiver>& quivers, const OracleBounds& bounds,
                               int threads) {
  struct Part {
    Tally tally;
    bool inconclusive = false;
    std::string counts;
  };
  const auto parts = parallel_map<Part>(quivers.size(), threads, [&](std::size_t k) {
    Part part;
    const TypeAQuiver& q = quivers[k];
    const TfEnumeration found = enumerate_tf_classes_bruteforce(q, bounds);
    part.inconclusive = !found.inconclusive.empty();
    std::set<std::vector<Interval>> from_perms;
    for (const auto& w : enumerate_c_sortables(q)) from_perms.insert(tf_class_of(w, q).intervals);
    const std::set<std::vector<Interval>> from_oracle(found.classes.begin(), found.classes.end());
    for (const auto& c : from_oracle)
      if (!from_perms.count(c)) part.tally.fail("Q=\"" + q.to_string() + "\" extra " + intervals_string(c));
    for (const auto& c : from_perms) {
      if (from_oracle.count(c)) part.tally.ok();
      else part.tally.fail("Q=\"" + q.to_string() + "\" missing " + intervals_string(c));
    }
    part.counts = "\"" + q.to_string() + "\":" + std::to_string(from_oracle.size());
    return part;
  });
  Tally tally;
  bool inconclusive = false;
  std::string counts;
  for (const auto& p : parts) {
    tally.merge(p.tally);
    inconclusive = inconclusive || p.inconclusive;
    counts += (counts.empty() ? "" : " ") + p.counts;
  }
  CheckResult r = tally.result("torsion-free classes vs sortable elements", "classes");
  r.inconclusive = inconclusive;
  r.detail += "; classes per orientation " + counts;
  return r;
}

CheckResult check_count_vs_filtration(const std::vector<TypeAQuiver>& quivers, int universe_dim,
                                      int prime) {
  Tally tally;
  bool inconclusive = false;
  for (const auto& q : quivers) {
    RepCategory cat(q, prime);
    cat.max_total_dim = std::max(cat.max_total_dim, universe_dim);
    for (const auto& w : enumerate_c_sortables(q)) {
      const auto simples = simples_of(tf_class_of(w, q));
      FiltrationEngine engine(cat, GeneratorSet::of_intervals(q, simples));
      const JhpReport rep = check_jhp(engine, universe_dim);
      inconclusive = inconclusive || rep.inconclusive;
      if (rep.pass == jhp_by_count(w)) tally.ok();
      else tally.fail(where(q, w) + " filtration check " + rep.verdict());
    }
  }
  CheckResult r = tally.result("support/Binv count vs filtration oracle", "sortable elements");
  r.inconclusive = inconclusive;
  return r;
}

CheckResult check_semibrick_filtrations(const std::vector<TypeAQuiver>& quivers, int universe_dim,
                                        int prime, int threads) {
  struct Part {
    Tally tally;
    bool inconclusive = false;
  };
  const auto parts = parallel_map<Part>(quivers.size(), threads, [&](std::size_t k) {
    Part part;
    const TypeAQuiver& q = quivers[k];
    RepCategory cat(q, prime);
    cat.max_total_dim = std::max(cat.max_total_dim, universe_dim);
    const auto ivs = all_intervals(q.n());
    const int count = static_cast<int>(ivs.size());
    for (unsigned long long mask = 1; mask < (1ULL << count); ++mask) {
      bool semibrick = true;
      for (int a = 0; a < count && semibrick; ++a) {
        if (!(mask >> a & 1)) continue;
        for (int b = 0; b < count && semibrick; ++b)
          if (a != b && (mask >> b & 1) && cat.interval_hom(a, b)) semibrick = false;
      }
      if (!semibrick) continue;
      std::vector<Interval> members;
      for (int a = 0; a < count; ++a)
        if (mask >> a & 1) members.push_back(ivs[a]);
      FiltrationEngine engine(cat, GeneratorSet::of_intervals(q, members));
      for (bool full : {false, true}) {
        const JhpReport rep = full ? check_jhp(engine, universe_dim) : check_wjhp(engine, universe_dim);
        part.inconclusive = part.inconclusive || rep.inconclusive;
        if (rep.pass) {
          part.tally.ok();
        } else {
          std::string what = "Q=\"" + q.to_string() + "\" X=" + intervals_string(members) +
                             (full ? " JHP" : " WJHP");
          if (!rep.counterexamples.empty()) what += " at " + rep.counterexamples.front().module;
          part.tally.fail(what);
        }
      }
    }
    return part;
  });
  Tally tally;
  bool inconclusive = false;
  for (const auto& p : parts) {
    tally.merge(p.tally);
    inconclusive = inconclusive || p.inconclusive;
  }
  CheckResult r = tally.result("filtration checks on interval semibricks", "checks");
  r.inconclusive = inconclusive;
  return r;
}

CheckResult check_example_4312(int universe_dim, int prime) {
  const TypeAQuiver q = TypeAQuiver::parse("><");
  const auto w = Permutation::parse("4312");
  Tally tally;
  const TorsionFreeClass t = tf_class_of(w, q);
  const std::vector<Interval> expected_class{{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  if (t.intervals == expected_class) tally.ok();
  else tally.fail("F(4312)=" + intervals_string(t.intervals));

  OracleBounds bounds;
  bounds.prime = prime;
  const auto verdict = is_torsion_free_oracle(t.intervals, q, bounds);
  if (verdict.verdict == TorsionVerdict::kTorsionFree) tally.ok();
  else tally.fail("oracle says " + to_string(verdict.verdict) + " " + verdict.witness);

  RepCategory cat(q, prime);
  cat.max_total_dim = std::max(cat.max_total_dim, universe_dim);
  const auto simples = simples_in(cat, t.intervals);
  // P1 = [1,3), P2 = [2,3), S3 = [3,4) on 1 -> 2 <- 3
  const std::vector<Interval> expected_simples{{1, 3}, {2, 3}, {3, 4}};
  if (simples == expected_simples) tally.ok();
  else tally.fail("simples " + intervals_string(simples));

  const GeneratorSet sim = GeneratorSet::of_intervals(q, expected_simples);
  const int p2_to_p1 = cat.interval_hom(cat.index_of({2, 3}), cat.index_of({1, 3}));
  if (!is_semibrick(sim, prime) && p2_to_p1 != 0) tally.ok();
  else tally.fail("simples form a semibrick or Hom(P2,P1) = 0");

  FiltrationEngine engine(cat, sim);
  const JhpReport rep = check_jhp(engine, universe_dim);
  if (rep.pass && !rep.inconclusive) tally.ok();
  else tally.fail("filtration check " + rep.verdict());
  CheckResult r = tally.result("F(4312) on 1->2<-3", "facts");
  return r;
}

CheckResult check_interval_monos(const std::vector<TypeAQuiver>& quivers, int prime) {
  Tally tally;
  for (const auto& q : quivers) {
    RepCategory cat(q, prime);
    for (const auto& sub : all_intervals(q.n())) {
      for (const auto& big : all_intervals(q.n())) {
        try {
          interval_mono_cokernel(q, sub, big, prime);
          // Hom table against the Euler form: dim Hom - dim Ext = <d, e>.
          const int a = cat.index_of(sub), b = cat.index_of(big);
          const int euler = euler_form(q, sub.dims(q.n()), big.dims(q.n()));
          if (cat.interval_hom(a, b) - cat.interval_ext(a, b) == euler && cat.interval_hom(a, b) <= 1 &&
              cat.interval_ext(a, b) <= 1) {
            tally.ok();
          } else {
            tally.fail("Q=\"" + q.to_string() + "\" " + sub.to_string() + " vs " + big.to_string());
          }
        } catch (const InternalError& e) {
          tally.fail(e.what());
        }
      }
    }
  }
  return tally.result("interval monomorphisms and Hom/Ext table", "interval pairs");
}

CheckResult check_reflection_tables(const std::vector<TypeAQuiver>& quivers, int prime) {
  Tally tally;
  for (const auto& q : quivers) {
    const int n = q.n();
    for (int v = 1; v <= n; ++v) {
      const bool sink = q.is_sink(v), source = q.is_source(v);
      if (!sink && !source) continue;
      const TypeAQuiver flipped = q.mutate(v);
      for (const auto& iv : all_intervals(n)) {
        const std::string at = "Q=\"" + q.to_string() + "\" vertex " + std::to_string(v) + " " + iv.to_string();
        const Rep m = interval_to_rep(q, iv, prime);
        if (sink) {
          const auto table = reflect_plus_interval(q, v, iv);
          const IsoClass built = decompose(reflect_plus_rep(m, v));
          const IsoClass want = table ? IsoClass::of(n, {*table}) : IsoClass(n);
          if (built == want) tally.ok();
          else tally.fail(at + " R+ table " + want.to_string() + " vs kernel " + built.to_string());
          const auto back = reflect_minus_interval(flipped, v, table);
          const bool simple_here = iv == Interval{v, v + 1};
          if (simple_here ? !back : (back && *back == iv)) tally.ok();
          else tally.fail(at + " R-R+ round trip");
        }
        if (source) {
          const auto table = reflect_minus_interval(q, v, iv);
          const IsoClass built = decompose(reflect_minus_rep(m, v));
          const IsoClass want = table ? IsoClass::of(n, {*table}) : IsoClass(n);
          if (built == want) tally.ok();
          else tally.fail(at + " R- table " + want.to_string() + " vs cokernel " + built.to_string());
        }
      }
    }
  }
  return tally.result("reflection tables vs kernel/cokernel constructions", "cases");
}

CheckResult check_dagger_lemma(const std::vector<TypeAQuiver>& quivers, DdaggerRule rule) {
  Tally tally;
  for (const auto& q : quivers) {
    const int n = q.n();
    for (const auto& w : enumerate_c_sortables(q)) {
      for (int i = 1; i < n; ++i) {
        const Permutation sw = left_multiply_simple(i, w);
        if (length(sw) != length(w) - 1) continue;
        const int supp_diff = static_cast<int>(support(w).size()) - static_cast<int>(support(sw).size());
        const int binv_diff =
            static_cast<int>(bruhat_inversions(w).size()) - static_cast<int>(bruhat_inversions(sw).size());
        const int d = dagger(i, w), dd = ddagger(i, w, rule);
        if (d == supp_diff && dd == binv_diff) {
          tally.ok();
        } else {
          std::ostringstream os;
          os << where(q, w) << " i=" << i << " dagger " << d << " vs " << supp_diff << ", ddagger " << dd
             << " vs " << binv_diff;
          tally.fail(os.str());
        }
      }
    }
  }
  return tally.result("dagger/ddagger vs support/Binv differences", "applicable (w, i)");
}

CheckResult check_semibrick_catalan(int max_n) {
  Tally tally;
  std::string counts;
  for (int n = 1; n <= max_n; ++n) {
    const long long got = static_cast<long long>(enumerate_semibricks_linear(n).size());
    counts += (counts.empty() ? "" : ",") + std::to_string(got);
    if (got == catalan_count(n)) tally.ok();
    else tally.fail("n=" + std::to_string(n) + " " + std::to_string(got) + " != " + std::to_string(catalan_count(n)));
  }
  CheckResult r = tally.result("linear semibrick counts", "values of n");
  r.detail += "; counts " + counts;
  return r;
}

CheckResult check_semibrick_linear_vs_hom(int max_n, int prime) {
  Tally tally;
  for (int n = 1; n <= max_n; ++n) {
    RepCategory lambda(linear_lambda(n), prime);
    const auto mods = all_linear_modules(n);
    const int count = static_cast<int>(mods.size());
    for (unsigned long long mask = 0; mask < (1ULL << count); ++mask) {
      std::vector<LinearModule> set;
      for (int a = 0; a < count; ++a)
        if (mask >> a & 1) set.push_back(mods[a]);
      if (is_semibrick_linear(set) == is_semibrick_linear_by_hom(lambda, set)) {
        tally.ok();
      } else {
        std::string s;
        for (const auto& m : set) s += m.to_string();
        tally.fail("n=" + std::to_string(n) + " " + s);
      }
    }
  }
  return tally.result("linear semibrick rule vs Hom vanishing", "sets");
}

CheckResult check_hsets(int max_n, int prime) {
  Tally tally;
  for (int n = 1; n <= max_n; ++n) {
    RepCategory lambda(linear_lambda(n), prime);
    for (const auto& m : all_linear_modules(n)) {
      const HSets formula = h_sets(m, n);
      const HSets computed = h_sets_computed(lambda, m);
      if (formula.hom_out == computed.hom_out && formula.hom_in == computed.hom_in &&
          formula.ext_out == computed.ext_out && formula.ext_in == computed.ext_in) {
        tally.ok();
      } else {
        tally.fail("n=" + std::to_string(n) + " " + m.to_string());
      }
    }
  }
  return tally.result("closed-form Hom/Ext index sets vs computed", "modules");
}

CheckResult check_shifted_semibricks(int max_n, int max_size, int max_shift, int prime) {
  Tally tally;
  for (int n = 1; n <= max_n; ++n) {
    RepCategory lambda(linear_lambda(n), prime);
    std::vector<ShiftedInterval> objects;
    for (const auto& m : all_linear_modules(n))
      for (int k = -max_shift; k <= max_shift; ++k) objects.push_back({m, k});
    std::vector<ShiftedInterval> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
      if (!cur.empty()) {
        if (is_semibrick_shifted(cur, n) == is_semibrick_shifted_by_hom(lambda, cur)) {
          tally.ok();
        } else {
          std::string s = "n=" + std::to_string(n) + " ";
          for (const auto& x : cur) s += x.to_string();
          tally.fail(s);
        }
      }
      if (static_cast<int>(cur.size()) == max_size) return;
      for (std::size_t k = from; k < objects.size(); ++k) {
        cur.push_back(objects[k]);
        self(self, k + 1);
        cur.pop_back();
      }
    };
    rec(rec, 0);
  }
  return tally.result("shifted semibrick rule vs shifted Hom", "sets");
}

CheckResult check_shifted_examples(int prime) {
  const int n = 3;
  RepCategory lambda(linear_lambda(n), prime);
  auto parse_all = [](std::initializer_list<const char*> texts) {
    std::vector<ShiftedInterval> out;
    for (const char* t : texts) out.push_back(ShiftedInterval::parse(t));
    return out;
  };
  const std::vector<std::pair<std::string, std::vector<ShiftedInterval>>> sets{
      {"X0 restricted", parse_all({"M(0,3)[-2]", "M(0,1)[-1]", "M(1,2)[-1]", "M(2,3)[-1]", "M(0,3)[0]",
                                   "M(0,1)[1]", "M(1,2)[1]", "M(2,3)[1]", "M(0,3)[2]"})},
      {"X1", parse_all({"M(0,1)[-1]", "M(1,2)[-1]", "M(2,3)[-1]", "M(0,3)[0]"})},
      {"X2", parse_all({"M(1,2)[-1]", "M(2,3)[-1]", "M(0,3)[0]"})},
      {"X3", parse_all({"M(1,2)[-1]", "M(2,3)[-1]", "M(2,3)[0]"})},
  };
  Tally tally;
  for (const auto& [name, set] : sets) {
    if (is_semibrick_shifted(set, n) && is_semibrick_shifted_by_hom(lambda, set)) tally.ok();
    else tally.fail(name + " rejected");
  }
  return tally.result("example shifted semibricks", "sets");
}

std::vector<std::string> suite_names() {
  return {"symgroup", "quiver_rep", "torsion", "reflect", "filt_oracle", "semibrick"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& cfg) {
  const int n = cfg.max_n;
  if (suite == "symgroup") {
    return {check_inversion_fidelity(), check_sortable_counts(sweep_quivers(cfg, n))};
  }
  if (suite == "quiver_rep") {
    return {check_interval_monos(sweep_quivers(cfg, n), cfg.prime)};
  }
  if (suite == "torsion") {
    OracleBounds bounds;
    bounds.max_summands = cfg.pair_sum;
    bounds.max_total_dim = cfg.universe_dim;
    bounds.prime = cfg.prime;
    std::vector<CheckResult> out{
        check_tf_bijection(sweep_quivers(cfg, std::min(n, 4)), bounds, cfg.threads),
        check_count_vs_filtration(sweep_quivers(cfg, std::min(n, 3)), cfg.universe_dim, cfg.prime)};
    if (!cfg.quiver) out.push_back(check_bb_criterion(n));
    return out;
  }
  if (suite == "reflect") {
    const auto qs = sweep_quivers(cfg, n);
    return {check_reflection_tables(qs, cfg.prime), check_dagger_lemma(qs, cfg.rule),
            check_plan_vs_count(qs, cfg.rule)};
  }
  if (suite == "filt_oracle") {
    std::vector<CheckResult> out{
        check_semibrick_filtrations(sweep_quivers(cfg, std::min(n, 3)), cfg.universe_dim, cfg.prime, cfg.threads)};
    if (!cfg.quiver || cfg.quiver->to_string() == "><") out.push_back(check_example_4312(cfg.universe_dim, cfg.prime));
    return out;
  }
  if (suite == "semibrick") {
    return {check_semibrick_catalan(std::min(n + 1, 7)), check_semibrick_linear_vs_hom(n, cfg.prime),
            check_hsets(n + 1, cfg.prime), check_shifted_semibricks(n, 3, 2, cfg.prime),
            check_shifted_examples(cfg.prime)};
  }
  throw DomainError("unknown suite '" + suite + "'");
}

std::vector<CheckResult> run_all(const VerifyConfig& cfg) {
  std::vector<CheckResult> out;
  for (const auto& s : suite_names()) {
    auto part = run_suite(s, cfg);
    for (auto& r : part) {
      r.name = s + ": " + r.name;
      out.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace tfjhp
