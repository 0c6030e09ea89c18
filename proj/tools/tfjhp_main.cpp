#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tfjhp/error.hpp"
#include "tfjhp/filt.hpp"
#include "tfjhp/permutation.hpp"
#include "tfjhp/quiver.hpp"
#include "tfjhp/reflect.hpp"
#include "tfjhp/rep.hpp"
#include "tfjhp/semibrick.hpp"
#include "tfjhp/table.hpp"
#include "tfjhp/torsion.hpp"
#include "tfjhp/verify.hpp"

using namespace tfjhp;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string quiver_text;
  std::string perm_text;
  std::string format = "table";
  std::string out_path;
  std::string rule = "as-defined";
  std::string plan_text;
  std::string suite;
  std::string set_text;
  std::string module_text;
  std::vector<std::string> items;
  int universe_dim = 8;
  int pair_sum = 2;
  int field = 2;
  int threads = 1;
  int max_n = 4;
  int n = 3;
  int sample = 0;
  unsigned long long seed = 0;
};

// Malformed input, reported with the offending text and a caret.
struct UsageError {
  std::string message;
  std::string input;
  std::size_t position = std::string::npos;
};

template <class Fn>
auto parse_field(const std::string& label, const std::string& text, Fn fn) -> decltype(fn(text)) {
  try {
    return fn(text);
  } catch (const ParseError& e) {
    throw UsageError{label + ": " + e.message(), text, e.position()};
  }
}

TypeAQuiver quiver_arg(const Options& o) {
  return parse_field("--quiver", o.quiver_text, [](const std::string& t) { return TypeAQuiver::parse(t); });
}

Permutation perm_from(const std::string& label, const std::string& text) {
  return parse_field(label, text, [](const std::string& t) { return Permutation::parse(t); });
}

Permutation perm_arg(const Options& o) { return perm_from("--perm", o.perm_text); }

// "[1,3),[2,3)" or "{[1,3),[2,3)}"; empty braces give the empty list.
std::vector<Interval> parse_interval_list(const std::string& text) {
  std::vector<Interval> out;
  std::size_t pos = 0;
  const bool braced = !text.empty() && text.front() == '{';
  if (braced) ++pos;
  const std::size_t end = braced ? text.size() - 1 : text.size();
  if (braced && text.back() != '}') throw ParseError("missing '}'", text.size());
  while (pos < end) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '[') throw ParseError("expected '['", pos);
    const std::size_t close = text.find(')', pos);
    if (close == std::string::npos || close >= end) throw ParseError("unterminated interval", pos);
    try {
      out.push_back(Interval::parse(std::string_view(text).substr(pos, close + 1 - pos)));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), pos + e.position());
    }
    pos = close + 1;
    while (pos < end && text[pos] == ' ') ++pos;
    if (pos < end) {
      if (text[pos] != ',') throw ParseError("expected ','", pos);
      ++pos;
    }
  }
  return out;
}

std::vector<Interval> intervals_arg(const std::string& label, const std::string& text, int n) {
  auto ivs = parse_field(label, text, parse_interval_list);
  for (const auto& iv : ivs) {
    if (iv.j > n + 1) {
      throw UsageError{label + ": " + iv.to_string() + " does not fit a quiver with " + std::to_string(n) +
                           " vertices",
                       text, text.find(iv.to_string())};
    }
  }
  return ivs;
}

DdaggerRule rule_arg(const Options& o) {
  if (o.rule == "as-defined") return DdaggerRule::kAsDefined;
  if (o.rule == "inversion-filtered") return DdaggerRule::kInversionFiltered;
  throw UsageError{"--rule must be as-defined or inversion-filtered", o.rule, 0};
}

std::vector<int> int_list(const std::string& label, const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      ++pos;
      if (v > 1000) throw UsageError{label + ": number too large", text, start};
    }
    if (pos == start) throw UsageError{label + ": expected a number", text, pos};
    out.push_back(v);
    if (pos < text.size()) {
      if (text[pos] != ',') throw UsageError{label + ": expected ','", text, pos};
      ++pos;
    }
  }
  return out;
}

std::string intervals_json(const std::vector<Interval>& ivs) {
  ojson a = ojson::array();
  for (const auto& iv : ivs) a.push_back(iv.to_string());
  return a.dump();
}

std::string intervals_text(const std::vector<Interval>& ivs) {
  std::string s = "{";
  for (std::size_t k = 0; k < ivs.size(); ++k) s += (k ? "," : "") + ivs[k].to_string();
  return s + "}";
}

std::string transpositions_text(const std::vector<Transposition>& ts) {
  std::string s = "{";
  for (std::size_t k = 0; k < ts.size(); ++k) s += (k ? "," : "") + ts[k].to_string();
  return s + "}";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError{"--format must be one of: " + list, o.format, 0};
}

// ---- verbs ----

int sortable_list(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json", "csv"});
  const TypeAQuiver q = quiver_arg(o);
  auto perms = enumerate_c_sortables(q);
  if (o.sample > 0 && o.sample < static_cast<int>(perms.size())) {
    std::mt19937_64 rng(o.seed);
    std::vector<Permutation> picked;
    std::sample(perms.begin(), perms.end(), std::back_inserter(picked), o.sample, rng);
    perms = std::move(picked);
  }
  if (o.format == "json") {
    ojson j;
    j["quiver"] = q.to_string();
    j["count"] = perms.size();
    ojson rows = ojson::array();
    for (const auto& w : perms) rows.push_back({{"w", w.to_string()}, {"certificate", is_c_sortable(w, q)->to_string()}});
    j["sortables"] = rows;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "w,certificate\n";
    for (const auto& w : perms) out << w.to_string() << "," << is_c_sortable(w, q)->to_string() << "\n";
  } else {
    for (const auto& w : perms) out << w.to_string() << "  " << is_c_sortable(w, q)->to_string() << "\n";
    out << perms.size() << " sortable elements\n";
  }
  return kExitPass;
}

int sortable_check(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  const TypeAQuiver q = quiver_arg(o);
  const Permutation w = perm_arg(o);
  const auto cert = is_c_sortable(w, q);
  if (o.format == "json") {
    ojson j{{"w", w.to_string()}, {"quiver", q.to_string()}, {"sortable", cert.has_value()}};
    j["certificate"] = cert ? ojson(cert->to_string()) : ojson(nullptr);
    out << j.dump() << "\n";
  } else {
    out << w.to_string() << (cert ? " is sortable: " + cert->to_string() : " is not sortable") << "\n";
  }
  return kExitPass;
}

OracleBounds bounds_of(const Options& o) {
  OracleBounds b;
  b.max_summands = o.pair_sum;
  b.max_total_dim = o.universe_dim;
  b.prime = o.field;
  return b;
}

int tf_enumerate(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json", "csv"});
  const TypeAQuiver q = quiver_arg(o);
  if (q.n() > 5) throw UsageError{"tf enumerate supports at most 5 vertices", o.quiver_text, 0};
  const TfEnumeration e = enumerate_tf_classes_bruteforce(q, bounds_of(o));
  if (o.format == "json") {
    ojson j;
    j["quiver"] = q.to_string();
    ojson classes = ojson::array();
    for (const auto& c : e.classes) classes.push_back(ojson::parse(intervals_json(c)));
    j["classes"] = classes;
    ojson inc = ojson::array();
    for (const auto& c : e.inconclusive) inc.push_back(ojson::parse(intervals_json(c)));
    j["inconclusive"] = inc;
    out << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    out << "class,verdict\n";
    for (const auto& c : e.classes) out << "\"" << intervals_text(c) << "\",torsion-free\n";
    for (const auto& c : e.inconclusive) out << "\"" << intervals_text(c) << "\",inconclusive-at-bound\n";
  } else {
    for (const auto& c : e.classes) out << intervals_text(c) << "\n";
    for (const auto& c : e.inconclusive) out << intervals_text(c) << "  inconclusive-at-bound\n";
    out << e.classes.size() << " torsion-free classes";
    if (!e.inconclusive.empty()) out << ", " << e.inconclusive.size() << " inconclusive";
    out << "\n";
  }
  return kExitPass;
}

int tf_oracle(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  const TypeAQuiver q = quiver_arg(o);
  std::vector<Interval> set;
  if (!o.perm_text.empty()) set = raw_class_of(perm_arg(o), q).intervals;
  else set = intervals_arg("--set", o.set_text, q.n());
  const TorsionOracleResult r = is_torsion_free_oracle(set, q, bounds_of(o));
  if (o.format == "json") {
    out << ojson{{"set", ojson::parse(intervals_json(set))}, {"verdict", to_string(r.verdict)}, {"witness", r.witness}}.dump()
        << "\n";
  } else {
    out << intervals_text(set) << ": " << to_string(r.verdict);
    if (!r.witness.empty()) out << " (" << r.witness << ")";
    out << "\n";
  }
  return kExitPass;
}

int jhp_check(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  const TypeAQuiver q = quiver_arg(o);
  const Permutation w = perm_arg(o);
  const DdaggerRule rule = rule_arg(o);
  const PlanJhpResult r = o.plan_text.empty()
                            ? jhp_along_plan(w, q, rule)
                            : jhp_along_plan(w, q, ReflectionPlan::from_vertices(q, int_list("--plan", o.plan_text)), rule);
  const bool by_count = jhp_by_count(w);
  if (o.format == "json") {
    ojson j = ojson::parse(r.to_json());
    j["count_jhp"] = by_count;
    j["supp"] = support(w).size();
    j["binv"] = bruhat_inversions(w).size();
    out << j.dump() << "\n";
  } else {
    out << "w = " << w.to_string() << " on " << q.pretty() << "\n";
    out << "dagger total " << r.dagger_total << ", ddagger total " << r.ddagger_total << ": "
        << (r.jhp ? "JHP" : "not JHP") << "\n";
    out << "|supp| = " << support(w).size() << ", |Binv| = " << bruhat_inversions(w).size() << ": "
        << (by_count ? "JHP" : "not JHP") << "\n";
  }
  return kExitPass;
}

int jhp_table_verb(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json", "csv"});
  const JhpTable t = jhp_table(quiver_arg(o), rule_arg(o));
  if (o.format == "json") out << render_json(t);
  else if (o.format == "csv") out << render_csv(t);
  else out << render_table(t);
  return kExitPass;
}

int jhp_bb(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  const Permutation w = perm_arg(o);
  if (w.rank() < 3) throw UsageError{"--perm needs at least 3 letters", o.perm_text, 0};
  const TypeAQuiver q = bb_quiver(w.rank() - 1);
  const BbVerdict v = bb_criterion(w, q);
  if (o.format == "json") out << ojson{{"w", w.to_string()}, {"quiver", q.to_string()}, {"verdict", to_string(v)}}.dump() << "\n";
  else out << w.to_string() << " on " << q.pretty() << ": " << to_string(v) << "\n";
  return kExitPass;
}

int reflect_trace(const Options& o, std::ostream& out) {
  require_format(o, {"json", "table"});
  const TypeAQuiver q = quiver_arg(o);
  const Permutation w = perm_arg(o);
  const DdaggerRule rule = rule_arg(o);
  const PlanJhpResult r = o.plan_text.empty()
                            ? jhp_along_plan(w, q, rule)
                            : jhp_along_plan(w, q, ReflectionPlan::from_vertices(q, int_list("--plan", o.plan_text)), rule);
  if (o.format == "json") {
    out << r.to_json() << "\n";
    return kExitPass;
  }
  out << "plan:";
  for (std::size_t k = 0; k < r.plan.vertices.size(); ++k) {
    out << " " << r.plan.vertices[k] << " (" << r.plan.quivers[k].pretty() << " -> " << r.plan.quivers[k + 1].pretty() << ")";
  }
  out << "\n";
  if (!r.sequence) out << "reflection sequence: absence\n";
  for (const auto& s : r.steps) {
    out << "s" << s.vertex << ": " << s.before.to_string() << " -> " << s.after.to_string() << "  dagger " << s.dagger
        << "  ddagger " << s.ddagger << "\n";
  }
  out << "final " << r.final_perm.to_string() << ", totals " << r.dagger_total << " / " << r.ddagger_total << "\n";
  return kExitPass;
}

int semibrick_count(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  if (o.n < 1 || o.n > 7) throw UsageError{"--n must be in 1..7", std::to_string(o.n), 0};
  const auto sets = enumerate_semibricks_linear(o.n);
  if (o.format == "json") {
    out << ojson{{"n", o.n}, {"count", sets.size()}, {"catalan", catalan_count(o.n)}}.dump() << "\n";
  } else {
    out << sets.size() << " semibricks (Catalan number " << catalan_count(o.n) << ")\n";
  }
  return kExitPass;
}

int semibrick_check(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  std::vector<ShiftedInterval> set;
  for (const auto& item : o.items) {
    const bool shifted = item.find('[') != std::string::npos;
    set.push_back(parse_field("module", shifted ? item : item + "[0]",
                              [](const std::string& t) { return ShiftedInterval::parse(t); }));
    const auto& m = set.back().module;
    if (m.j > o.n) throw UsageError{"module needs j <= " + std::to_string(o.n) + " (set --n)", item, 0};
  }
  RepCategory lambda(linear_lambda(o.n), o.field);
  const bool rule = is_semibrick_shifted(set, o.n);
  const bool by_hom = is_semibrick_shifted_by_hom(lambda, set);
  if (o.format == "json") {
    out << ojson{{"n", o.n}, {"semibrick", rule}, {"by_hom", by_hom}}.dump() << "\n";
  } else {
    out << (rule ? "semibrick" : "not a semibrick") << " (Hom check: " << (by_hom ? "semibrick" : "not a semibrick")
        << ")\n";
  }
  return rule == by_hom ? kExitPass : kExitFail;
}

GeneratorSet generators_arg(const Options& o, const TypeAQuiver& q) {
  try {
    return GeneratorSet::of_intervals(q, intervals_arg("--set", o.set_text, q.n()));
  } catch (const DomainError& e) {
    throw UsageError{std::string("--set: ") + e.what(), o.set_text, 0};
  }
}

std::string sequence_text(const GeneratorSet& x, const std::vector<int>& seq) {
  std::string s;
  for (std::size_t k = 0; k < seq.size(); ++k) s += (k ? " ; " : "") + x.member_string(seq[k]);
  return s;
}

int filt_list(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  const TypeAQuiver q = quiver_arg(o);
  const GeneratorSet x = generators_arg(o, q);
  const IsoClass m = IsoClass::of(q.n(), intervals_arg("--module", o.module_text, q.n()));
  RepCategory cat(q, o.field);
  cat.max_total_dim = std::max(cat.max_total_dim, m.total_dim());
  FiltrationEngine engine(cat, x);
  const auto records = engine.filtrations(m);
  if (o.format == "json") {
    ojson rows = ojson::array();
    for (const auto& r : records) {
      ojson seq = ojson::array();
      for (int k : r.cone_sequence) seq.push_back(x.member_string(k));
      rows.push_back(seq);
    }
    out << ojson{{"module", m.to_string()}, {"filtrations", rows}}.dump() << "\n";
  } else {
    for (const auto& r : records) out << sequence_text(x, r.cone_sequence) << "\n";
    out << records.size() << " filtrations of " << m.to_string() << "\n";
  }
  return kExitPass;
}

int filt_check(const Options& o, std::ostream& out, bool full) {
  require_format(o, {"table", "json"});
  const TypeAQuiver q = quiver_arg(o);
  const GeneratorSet x = generators_arg(o, q);
  const JhpReport r = full ? check_jhp(x, o.universe_dim, o.field) : check_wjhp(x, o.universe_dim, o.field);
  if (o.format == "json") {
    out << r.to_json() << "\n";
  } else {
    out << (full ? "JHP" : "WJHP") << ": " << r.verdict() << " (" << r.modules_checked
        << " modules in Filt(X) up to dimension " << r.universe_bound << ")\n";
    for (const auto& c : r.counterexamples) {
      out << "  " << c.module << ":";
      for (const auto& s : c.seq_a) out << " " << s;
      out << "  vs";
      for (const auto& s : c.seq_b) out << " " << s;
      out << "\n";
    }
  }
  return r.pass ? kExitPass : kExitFail;
}

int binv_verb(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json", "csv"});
  if (o.items.size() != 1) throw UsageError{"binv takes exactly one permutation", "", std::string::npos};
  const Permutation w = perm_from("permutation", o.items.front());
  const auto b = bruhat_inversions(w);
  if (o.format == "json") {
    ojson a = ojson::array();
    for (const auto& t : b) a.push_back({t.i, t.j});
    out << ojson{{"w", w.to_string()}, {"binv", a}}.dump() << "\n";
  } else if (o.format == "csv") {
    out << "i,j\n";
    for (const auto& t : b) out << t.i << "," << t.j << "\n";
  } else {
    out << transpositions_text(b) << "\n";
  }
  return kExitPass;
}

int verify_verb(const Options& o, std::ostream& out) {
  require_format(o, {"table", "json"});
  VerifyConfig cfg;
  if (!o.quiver_text.empty()) cfg.quiver = quiver_arg(o);
  cfg.max_n = o.max_n;
  cfg.universe_dim = o.universe_dim;
  cfg.pair_sum = o.pair_sum;
  cfg.prime = o.field;
  cfg.threads = o.threads;
  cfg.rule = rule_arg(o);
  std::vector<CheckResult> results;
  if (o.suite == "all") {
    results = run_all(cfg);
  } else {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
      std::string list = "all";
      for (const auto& s : names) list += ", " + s;
      throw UsageError{"unknown suite; expected one of: " + list, o.suite, 0};
    }
    results = run_suite(o.suite, cfg);
  }
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (o.format == "json") {
    ojson a = ojson::array();
    for (const auto& r : results)
      a.push_back({{"check", r.name}, {"pass", r.pass}, {"inconclusive", r.inconclusive}, {"detail", r.detail}});
    out << ojson{{"pass", pass}, {"checks", a}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << (r.inconclusive ? " (inconclusive at bound)" : "") << "  " << r.name
          << ": " << r.detail << "\n";
    }
    out << (pass ? "pass" : "fail") << "\n";
  }
  return pass ? kExitPass : kExitFail;
}

void print_usage_error(const UsageError& e) {
  std::cerr << "error: " << e.message << "\n";
  if (e.position != std::string::npos && !e.input.empty()) {
    std::cerr << "  " << e.input << "\n  " << std::string(std::min(e.position, e.input.size()), ' ') << "^\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jordan-Holder checks for torsion-free classes of type A quivers"};
  app.require_subcommand(1);
  Options o;
  int (*verb)(const Options&, std::ostream&) = nullptr;

  auto add_output = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    c->add_option("--out", o.out_path, "write the report to this file");
  };
  auto add_quiver = [&](CLI::App* c, bool required = true) {
    auto* opt = c->add_option("--quiver", o.quiver_text, "orientation string over {<,>}, e.g. \"><\"");
    if (required) opt->required();
  };
  auto add_bounds = [&](CLI::App* c) {
    c->add_option("--universe-dim", o.universe_dim, "largest total dimension searched")->check(CLI::Range(1, 16));
    c->add_option("--pair-sum", o.pair_sum, "summands of the direct sums checked for submodules")
        ->check(CLI::Range(1, 4));
    c->add_option("--field", o.field, "characteristic of the ground field")->check(CLI::IsMember({2, 3, 5}));
  };
  auto add_rule = [&](CLI::App* c) {
    c->add_option("--rule", o.rule, "ddagger rule at vertex 1: as-defined or inversion-filtered");
  };

  auto* sortable = app.add_subcommand("sortable", "c-sortable elements")->require_subcommand(1);
  auto* s_list = sortable->add_subcommand("list", "list every sortable element with its certificate");
  add_quiver(s_list);
  add_output(s_list);
  s_list->add_option("--sample", o.sample, "print only this many, chosen with --seed");
  s_list->add_option("--seed", o.seed, "seed for --sample");
  s_list->callback([&] { verb = sortable_list; });
  auto* s_check = sortable->add_subcommand("check", "decide sortability of --perm");
  add_quiver(s_check);
  s_check->add_option("--perm", o.perm_text)->required();
  add_output(s_check);
  s_check->callback([&] { verb = sortable_check; });

  auto* tf = app.add_subcommand("tf", "torsion-free classes")->require_subcommand(1);
  auto* tf_enum = tf->add_subcommand("enumerate", "brute-force every torsion-free set of intervals");
  add_quiver(tf_enum);
  add_bounds(tf_enum);
  add_output(tf_enum);
  tf_enum->callback([&] { verb = tf_enumerate; });
  auto* tf_or = tf->add_subcommand("oracle", "check one interval set (--set) or the inversion set of --perm");
  add_quiver(tf_or);
  add_bounds(tf_or);
  add_output(tf_or);
  tf_or->add_option("--set", o.set_text, "intervals, e.g. \"[1,3),[2,3)\"");
  tf_or->add_option("--perm", o.perm_text);
  tf_or->callback([&] { verb = tf_oracle; });

  auto* jhp = app.add_subcommand("jhp", "Jordan-Holder verdicts")->require_subcommand(1);
  auto* j_check = jhp->add_subcommand("check", "dagger/ddagger totals and the counting verdict for --perm");
  add_quiver(j_check);
  j_check->add_option("--perm", o.perm_text)->required();
  j_check->add_option("--plan", o.plan_text, "sink mutation plan, e.g. \"2,1\"");
  add_rule(j_check);
  add_output(j_check);
  j_check->callback([&] { verb = jhp_check; });
  auto* j_table = jhp->add_subcommand("table", "one row per sortable element");
  add_quiver(j_table);
  add_rule(j_table);
  add_output(j_table);
  j_table->callback([&] { verb = jhp_table_verb; });
  auto* j_bb = jhp->add_subcommand("bb", "pattern criterion on 1<-2->3->...->n");
  j_bb->add_option("--perm", o.perm_text)->required();
  add_output(j_bb);
  j_bb->callback([&] { verb = jhp_bb; });

  auto* reflect = app.add_subcommand("reflect", "reflection plans")->require_subcommand(1);
  auto* r_trace = reflect->add_subcommand("trace", "plan, reflection sequence and per-step values");
  add_quiver(r_trace);
  r_trace->add_option("--perm", o.perm_text)->required();
  r_trace->add_option("--plan", o.plan_text, "sink mutation plan, e.g. \"2,1\"");
  add_rule(r_trace);
  add_output(r_trace);
  r_trace->callback([&] { verb = reflect_trace; });

  auto* semibrick = app.add_subcommand("semibrick", "semibricks of the linear quiver")->require_subcommand(1);
  auto* sb_count = semibrick->add_subcommand("count", "count semibricks of n -> ... -> 1");
  sb_count->add_option("--n", o.n)->required();
  add_output(sb_count);
  sb_count->callback([&] { verb = semibrick_count; });
  auto* sb_check = semibrick->add_subcommand("check", "decide whether M(i,j)[k] objects form a semibrick");
  sb_check->add_option("--n", o.n)->required();
  sb_check->add_option("--field", o.field)->check(CLI::IsMember({2, 3, 5}));
  sb_check->add_option("modules", o.items, "objects such as \"M(0,3)[-1]\"");
  add_output(sb_check);
  sb_check->callback([&] { verb = semibrick_check; });

  auto* filt = app.add_subcommand("filt", "filtrations by a set of intervals")->require_subcommand(1);
  auto* f_list = filt->add_subcommand("list", "every cone sequence of --module");
  add_quiver(f_list);
  f_list->add_option("--set", o.set_text)->required();
  f_list->add_option("--module", o.module_text, "direct sum of intervals, e.g. \"{[1,2),[1,3)}\"")->required();
  f_list->add_option("--field", o.field)->check(CLI::IsMember({2, 3, 5}));
  add_output(f_list);
  f_list->callback([&] { verb = filt_list; });
  auto* f_wjhp = filt->add_subcommand("wjhp", "shortest filtrations agree");
  auto* f_jhp = filt->add_subcommand("jhp", "all filtrations agree");
  for (auto* c : {f_wjhp, f_jhp}) {
    add_quiver(c);
    c->add_option("--set", o.set_text)->required();
    add_bounds(c);
    add_output(c);
  }
  f_wjhp->callback([&] { verb = [](const Options& opts, std::ostream& out) { return filt_check(opts, out, false); }; });
  f_jhp->callback([&] { verb = [](const Options& opts, std::ostream& out) { return filt_check(opts, out, true); }; });

  auto* binv = app.add_subcommand("binv", "Bruhat inversions of a permutation");
  binv->add_option("perm", o.items)->required();
  add_output(binv);
  binv->callback([&] { verb = binv_verb; });

  auto* verify = app.add_subcommand("verify", "cross-checks between criteria and oracles");
  verify->add_option("suite", o.suite, "all, symgroup, quiver_rep, torsion, reflect, filt_oracle or semibrick")
      ->required();
  add_quiver(verify, false);
  add_bounds(verify);
  add_rule(verify);
  verify->add_option("--max-n", o.max_n, "largest n in orientation sweeps")->check(CLI::Range(1, 5));
  verify->add_option("--threads", o.threads)->check(CLI::Range(1, 256));
  add_output(verify);
  verify->callback([&] { verb = verify_verb; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    std::ostringstream buffer;
    const int code = verb(o, buffer);
    if (o.out_path.empty()) {
      std::cout << buffer.str();
    } else {
      std::ofstream file(o.out_path, std::ios::binary);
      if (!file) {
        std::cerr << "error: cannot write " << o.out_path << "\n";
        return kExitUsage;
      }
      file << buffer.str();
    }
    return code;
  } catch (const UsageError& e) {
    print_usage_error(e);
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundError& e) {
    std::cerr << "error: bound exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitFail;
  }
}
