#include "tfjhp/filt.hpp"

#include <algorithm>

#include <json.hpp>

#include "tfjhp/error.hpp"

namespace tfjhp {

GeneratorSet GeneratorSet::of_intervals(const TypeAQuiver& q, const std::vector<Interval>& ivs) {
  GeneratorSet g{q, {}};
  auto sorted = ivs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("generator set has repeated members");
  }
  for (const auto& iv : sorted) g.members.push_back(IsoClass::of(q.n(), {iv}));
  return g;
}

std::string GeneratorSet::member_string(int index) const {
  const IsoClass& m = members[index];
  if (m.summand_count() == 1) return m.summands().front().to_string();
  return m.to_string();
}

std::vector<std::string> GeneratorSet::member_strings() const {
  std::vector<std::string> out;
  for (int k = 0; k < static_cast<int>(members.size()); ++k) out.push_back(member_string(k));
  return out;
}

FiltrationEngine::FiltrationEngine(RepCategory& cat, GeneratorSet x) : cat_(cat), x_(std::move(x)) {
  if (!(x_.quiver == cat_.quiver())) throw DomainError("generator set lives on another quiver");
  auto sorted = x_.members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("generator set has repeated members");
  }
  for (const auto& m : x_.members)
    if (m.empty()) throw DomainError("zero object in a generator set");
}

const std::map<std::vector<int>, std::vector<int>>& FiltrationEngine::cone_multisets(
    const IsoClass& m) {
  auto it = summary_.find(m);
  if (it != summary_.end()) return it->second;
  std::map<std::vector<int>, std::vector<int>> result;
  const int count = static_cast<int>(x_.members.size());
  if (m.empty()) {
    result.emplace(std::vector<int>(count, 0), std::vector<int>{});
  } else {
    for (int k = 0; k < count; ++k) {
      for (const auto& coker : cat_.monos(x_.members[k], m)) {
        for (const auto& [ms, witness] : cone_multisets(coker)) {
          auto key = ms;
          ++key[k];
          if (result.count(key)) continue;
          std::vector<int> seq{k};
          seq.insert(seq.end(), witness.begin(), witness.end());
          result.emplace(std::move(key), std::move(seq));
        }
      }
    }
  }
  return summary_.emplace(m, std::move(result)).first->second;
}

std::set<FiltrationRecord> FiltrationEngine::filtrations(const IsoClass& m, std::size_t max_records) {
  auto it = full_.find(m);
  if (it != full_.end()) return it->second;
  std::set<FiltrationRecord> result;
  if (m.empty()) {
    result.insert(FiltrationRecord{});
  } else {
    for (int k = 0; k < static_cast<int>(x_.members.size()); ++k) {
      for (const auto& coker : cat_.monos(x_.members[k], m)) {
        for (const auto& rest : filtrations(coker, max_records)) {
          FiltrationRecord rec;
          rec.cone_sequence.push_back(k);
          rec.cone_sequence.insert(rec.cone_sequence.end(), rest.cone_sequence.begin(),
                                   rest.cone_sequence.end());
          result.insert(std::move(rec));
          if (result.size() > max_records) {
            throw BoundError("more than " + std::to_string(max_records) + " filtrations of " +
                             m.to_string());
          }
        }
      }
    }
  }
  return full_.emplace(m, result).first->second;
}

std::optional<int> FiltrationEngine::x_length(const IsoClass& m) {
  const auto& ms = cone_multisets(m);
  if (ms.empty()) return std::nullopt;
  int best = -1;
  for (const auto& [key, seq] : ms) {
    const int len = static_cast<int>(seq.size());
    if (best < 0 || len < best) best = len;
  }
  return best;
}

std::set<FiltrationRecord> filtrations(const Rep& m, const GeneratorSet& x, std::size_t max_records) {
  RepCategory cat(m.quiver, m.prime);
  cat.max_total_dim = std::max(cat.max_total_dim, m.total_dim());
  FiltrationEngine engine(cat, x);
  return engine.filtrations(cat.decompose(m), max_records);
}

std::optional<int> x_length(const Rep& m, const GeneratorSet& x) {
  RepCategory cat(m.quiver, m.prime);
  cat.max_total_dim = std::max(cat.max_total_dim, m.total_dim());
  FiltrationEngine engine(cat, x);
  return engine.x_length(cat.decompose(m));
}

std::string JhpReport::verdict() const {
  if (!pass) return "fail";
  return inconclusive ? "inconclusive" : "pass";
}

std::string JhpReport::to_json() const {
  nlohmann::ordered_json j;
  j["generator_set"] = generator_set;
  j["universe_bound"] = universe_bound;
  j["verdict"] = verdict();
  auto ce = nlohmann::ordered_json::array();
  for (const auto& c : counterexamples) {
    ce.push_back({{"module", c.module}, {"seq_a", c.seq_a}, {"seq_b", c.seq_b}});
  }
  j["counterexamples"] = ce;
  j["inconclusive"] = inconclusive;
  return j.dump();
}

std::vector<IsoClass> enumerate_universe(const GeneratorSet& x, int bound) {
  const int n = x.quiver.n();
  std::vector<int> all(n * (n + 1) / 2);
  for (int k = 0; k < static_cast<int>(all.size()); ++k) all[k] = k;
  // Reachable dimension vectors as nonnegative combinations of member dimension vectors.
  std::set<std::vector<int>> reachable{std::vector<int>(n, 0)};
  std::vector<std::vector<int>> frontier{std::vector<int>(n, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& d : frontier) {
      for (const auto& m : x.members) {
        auto e = d;
        const auto md = m.dims();
        int total = 0;
        for (int v = 0; v < n; ++v) total += (e[v] += md[v]);
        if (total > bound) continue;
        if (reachable.insert(e).second) next.push_back(e);
      }
    }
    frontier = std::move(next);
  }
  std::vector<IsoClass> out;
  for (const auto& cls : iso_classes_up_to_dim(n, bound, all))
    if (reachable.count(cls.dims())) out.push_back(cls);
  return out;
}

namespace {

std::vector<std::string> render(const GeneratorSet& x, const std::vector<int>& seq) {
  std::vector<std::string> out;
  for (int k : seq) out.push_back(x.member_string(k));
  return out;
}

JhpReport run_check(FiltrationEngine& engine, int universe_bound, bool minimal_only) {
  JhpReport report;
  const GeneratorSet& x = engine.generators();
  report.generator_set = x.member_strings();
  report.universe_bound = universe_bound;
  for (const auto& m : enumerate_universe(x, universe_bound)) {
    const std::map<std::vector<int>, std::vector<int>>* ms = nullptr;
    try {
      ms = &engine.cone_multisets(m);
    } catch (const BoundError&) {
      report.inconclusive = true;
      continue;
    }
    if (ms->empty()) continue;
    ++report.modules_checked;
    std::size_t shortest = SIZE_MAX;
    for (const auto& [key, seq] : *ms) shortest = std::min(shortest, seq.size());
    const std::vector<int>* first = nullptr;
    for (const auto& [key, seq] : *ms) {
      if (minimal_only && seq.size() != shortest) continue;
      if (!first) {
        first = &seq;
        continue;
      }
      report.pass = false;
      if (report.counterexamples.size() < 16) {
        report.counterexamples.push_back({m.to_string(), render(x, *first), render(x, seq)});
      }
      break;
    }
  }
  return report;
}

}  // namespace

JhpReport check_wjhp(FiltrationEngine& engine, int universe_bound) {
  return run_check(engine, universe_bound, true);
}

JhpReport check_jhp(FiltrationEngine& engine, int universe_bound) {
  return run_check(engine, universe_bound, false);
}

JhpReport check_wjhp(const GeneratorSet& x, int universe_bound, int p) {
  RepCategory cat(x.quiver, p);
  cat.max_total_dim = std::max(cat.max_total_dim, universe_bound);
  FiltrationEngine engine(cat, x);
  return check_wjhp(engine, universe_bound);
}

JhpReport check_jhp(const GeneratorSet& x, int universe_bound, int p) {
  RepCategory cat(x.quiver, p);
  cat.max_total_dim = std::max(cat.max_total_dim, universe_bound);
  FiltrationEngine engine(cat, x);
  return check_jhp(engine, universe_bound);
}

bool is_semibrick(const GeneratorSet& x, int p) {
  std::vector<Rep> reps;
  RepCategory cat(x.quiver, p);
  for (const auto& m : x.members) reps.push_back(cat.rep_of(m));
  for (std::size_t a = 0; a < reps.size(); ++a) {
    if (hom_dim(reps[a], reps[a]) != 1) return false;
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (a != b && hom_dim(reps[a], reps[b]) != 0) return false;
  }
  return true;
}

std::vector<Interval> simples_in(RepCategory& cat, const std::vector<Interval>& s) {
  const int n = cat.n();
  std::vector<int> allowed;
  for (const auto& iv : s) allowed.push_back(interval_index(n, iv));
  std::sort(allowed.begin(), allowed.end());
  allowed.erase(std::unique(allowed.begin(), allowed.end()), allowed.end());
  auto in_add_s = [&](const IsoClass& c) {
    for (int k = 0; k < static_cast<int>(cat.intervals().size()); ++k)
      if (c.multiplicity_at(k) && !std::binary_search(allowed.begin(), allowed.end(), k)) return false;
    return true;
  };
  std::vector<Interval> out;
  for (int idx : allowed) {
    const Interval& m = cat.intervals()[idx];
    IsoClass mc(n);
    mc.add_at(idx);
    bool simple = true;
    for (const auto& a : iso_classes_up_to_dim(n, m.length() - 1, allowed)) {
      for (const auto& coker : cat.monos(a, mc)) {
        if (!coker.empty() && in_add_s(coker)) {
          simple = false;
          break;
        }
      }
      if (!simple) break;
    }
    if (simple) out.push_back(m);
  }
  return out;
}

std::vector<Interval> simples_in(const std::vector<Interval>& s, const TypeAQuiver& q, int p) {
  RepCategory cat(q, p);
  return simples_in(cat, s);
}

}  // namespace tfjhp
