// One PASS/FAIL line per acceptance criterion, with its time limit.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tfjhp/error.hpp"
#include "tfjhp/semibrick.hpp"
#include "tfjhp/table.hpp"
#include "tfjhp/verify.hpp"

using namespace tfjhp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool all_ok = true;

void run(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("threw: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs <= limit_seconds;
  const bool pass = o.pass && in_time;
  all_ok = all_ok && pass;
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << id << " " << title << " ["
            << std::fixed << std::setprecision(3) << secs << "s / " << limit_seconds << "s"
            << (in_time ? "" : ", over time") << "] " << o.detail << std::endl;
}

void info(const std::string& title, const CheckResult& r) {
  std::cout << "INFO " << title << ": " << (r.pass ? "pass" : "fail") << ", " << r.detail << std::endl;
}

Outcome from(const std::vector<CheckResult>& results) {
  Outcome o;
  for (const auto& r : results) {
    o.pass = o.pass && r.pass && !r.inconclusive;
    if (!o.detail.empty()) o.detail += " | ";
    o.detail += r.name + ": " + r.detail + (r.inconclusive ? " (inconclusive at bound)" : "");
  }
  return o;
}

std::vector<TypeAQuiver> orientations(int min_n, int max_n) {
  return sweep_quivers(VerifyConfig{}, max_n, min_n);
}

// A table row reduced to what it asserts: one-line forms, sequence, and the two totals.
struct RowContent {
  std::string w, sequence, w_prime, dagger, ddagger;
  auto operator<=>(const RowContent&) const = default;
  std::string to_string() const { return w + " | " + sequence + " | " + w_prime + " | " + dagger + " | " + ddagger; }
};

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  for (;;) {
    const std::size_t bar = line.find(" | ", start);
    cells.push_back(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start));
    if (bar == std::string::npos) break;
    start = bar + 3;
  }
  return cells;
}

std::string one_line_part(const std::string& cell) { return cell.substr(cell.find('=') + 1); }

RowContent content_of(const std::string& line) {
  const auto c = split_cells(line);
  if (c.size() != 5) throw std::runtime_error("malformed table row: " + line);
  return {one_line_part(c[0]), c[1], one_line_part(c[2]), c[3], c[4]};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

Outcome table_reproduction() {
  const auto golden = read_lines(std::string(TFJHP_GOLDEN_DIR) + "/jhp_table_reference.txt");
  const std::string rendered = render_table(jhp_table(TypeAQuiver::parse("><")));
  std::vector<std::string> ours;
  {
    std::istringstream is(rendered);
    for (std::string line; std::getline(is, line);) ours.push_back(line);
  }
  Outcome o;
  std::ostringstream detail;
  if (golden.empty() || golden.front() != ours.front()) {
    o.pass = false;
    detail << "header differs; ";
  }
  std::multiset<RowContent> want, got;
  for (std::size_t k = 1; k < golden.size(); ++k) want.insert(content_of(golden[k]));
  for (std::size_t k = 1; k < ours.size(); ++k) got.insert(content_of(ours[k]));
  detail << got.size() << " computed rows vs " << want.size() << " transcribed";
  std::vector<RowContent> only_reference, only_ours;
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(only_reference));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(only_ours));
  auto count_if = [](const std::multiset<RowContent>& rows, auto pred) {
    int c = 0;
    for (const auto& r : rows) c += pred(r);
    return c;
  };
  const int absence_reference = count_if(want, [](const RowContent& r) { return r.sequence == "absence"; });
  const int absence_ours = count_if(got, [](const RowContent& r) { return r.sequence == "absence"; });
  std::string unequal;
  for (const auto& r : got)
    if (r.dagger != r.ddagger) unequal += (unequal.empty() ? "" : ",") + r.w;
  detail << "; absence rows: computed " << absence_ours << ", transcribed " << absence_reference
         << "; rows with dagger != ddagger: " << unequal;
  if (!only_reference.empty() || !only_ours.empty()) o.pass = false;
  if (absence_ours != 4 || unequal != "3412") o.pass = false;
  for (const auto& r : only_reference) detail << "; transcribed only: " << r.to_string();
  for (const auto& r : only_ours) detail << "; computed only: " << r.to_string();
  o.detail = detail.str();
  return o;
}

}  // namespace

int main() {
  const int threads = 1;
  run(1, "inversion fidelity", 0.001, [] { return from({check_inversion_fidelity()}); });

  run(2, "sortable counts", 5, [] {
    Outcome o = from({check_sortable_counts(orientations(1, 4))});
    const auto a = enumerate_c_sortables(TypeAQuiver::parse("<")).size();
    const auto b = enumerate_c_sortables(TypeAQuiver::parse("><")).size();
    o.pass = o.pass && a == 5 && b == 14;
    o.detail += "; 1<-2: " + std::to_string(a) + ", 1->2<-3: " + std::to_string(b);
    return o;
  });

  run(3, "table reproduction", 1, table_reproduction);

  run(4, "dagger/ddagger totals vs counting criterion", 30,
      [] { return from({check_plan_vs_count(orientations(1, 4), DdaggerRule::kAsDefined)}); });
  info("criterion 4 with the inversion-filtered rule at vertex 1",
       check_plan_vs_count(orientations(1, 4), DdaggerRule::kInversionFiltered));

  run(5, "pattern criterion on 1<-2->3->...->n", 10, [] { return from({check_bb_criterion(4)}); });

  run(6, "torsion-free classes vs sortable elements", 120, [&] {
    Outcome o = from({check_tf_bijection(orientations(1, 4), OracleBounds{}, threads)});
    for (int n = 3; n <= 4; ++n) {
      const std::size_t want = n == 3 ? 14 : 42;
      for (const auto& q : TypeAQuiver::all_orientations(n))
        o.pass = o.pass && enumerate_tf_classes_bruteforce(q).classes.size() == want;
    }
    return o;
  });

  run(7, "filtration checks on interval semibricks", 300,
      [&] { return from({check_semibrick_filtrations(orientations(1, 3), 8, 2, threads)}); });

  run(8, "F(4312) example end to end", 10, [] { return from({check_example_4312(8, 2)}); });

  run(9, "reflection tables and round trip", 30,
      [] { return from({check_reflection_tables(orientations(1, 5), 2)}); });

  run(10, "dagger/ddagger vs support/Binv differences", 60,
      [] { return from({check_dagger_lemma(orientations(1, 4), DdaggerRule::kAsDefined)}); });
  info("criterion 10 with the inversion-filtered rule at vertex 1",
       check_dagger_lemma(orientations(1, 4), DdaggerRule::kInversionFiltered));

  run(11, "linear semibrick counts and Hom vanishing", 60, [] {
    Outcome o = from({check_semibrick_catalan(5), check_semibrick_linear_vs_hom(4, 2)});
    const std::vector<std::size_t> expected{2, 5, 14, 42, 132};
    for (int n = 1; n <= 5; ++n) o.pass = o.pass && enumerate_semibricks_linear(n).size() == expected[n - 1];
    return o;
  });

  run(12, "index sets and shifted semibricks", 120, [] {
    return from({check_hsets(5, 2), check_shifted_semibricks(4, 3, 2, 2), check_shifted_examples(2)});
  });

  std::cout << (all_ok ? "ALL PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all_ok ? 0 : 1;
}
