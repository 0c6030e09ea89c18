#include "tfjhp/table.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "tfjhp/error.hpp"

namespace tfjhp {

std::vector<int> coxeter_word_largest_first(const TypeAQuiver& q) {
  const int n = q.n();
  std::vector<bool> used(n + 2, false);
  std::vector<int> word;
  for (int step = 0; step < n; ++step) {
    for (int v = n; v >= 1; --v) {
      if (used[v]) continue;
      const bool left_ok = v == 1 || used[v - 1] || q.arrow(v - 1) == Arrow::kRight;
      const bool right_ok = v == n || used[v + 1] || q.arrow(v) == Arrow::kLeft;
      if (left_ok && right_ok) {
        word.push_back(v);
        used[v] = true;
        break;
      }
    }
  }
  return word;
}

std::vector<int> sorting_word(const Permutation& w, const std::vector<int>& coxeter_word) {
  std::vector<int> out;
  std::vector<bool> frozen(w.rank() + 1, false);
  Permutation cur = w;
  int live = static_cast<int>(coxeter_word.size());
  while (!cur.is_identity()) {
    if (live == 0) throw DomainError(w.to_string() + " is not sortable for this Coxeter word");
    for (int letter : coxeter_word) {
      if (frozen[letter]) continue;
      if (cur.position_of(letter + 1) < cur.position_of(letter)) {
        out.push_back(letter);
        cur = left_multiply_simple(letter, cur);
      } else {
        frozen[letter] = true;
        --live;
      }
    }
  }
  return out;
}

namespace {

std::string cell(const std::vector<int>& word, const Permutation& p) {
  return word_to_string(word) + "=" + p.to_string();
}

std::string sequence_cell(const std::optional<std::vector<int>>& seq) {
  if (!seq) return "absence";
  std::string s;
  for (std::size_t k = 0; k < seq->size(); ++k) s += (k ? "," : "") + std::to_string((*seq)[k]);
  return s;
}

}  // namespace

std::string JhpTableRow::to_line() const {
  return cell(w_word, w) + " | " + sequence_cell(sequence) + " | " + cell(w_prime_word, w_prime) +
         " | " + std::to_string(dagger) + " | " + std::to_string(ddagger);
}

JhpTable jhp_table(const TypeAQuiver& q, DdaggerRule rule) {
  JhpTable t{q, sink_plan_to_linear(q), {}};
  const auto cox = coxeter_word_largest_first(q);
  const auto cox_linear = coxeter_word_largest_first(t.plan.quivers.back());
  for (const auto& w : enumerate_c_sortables(q)) {
    const PlanJhpResult r = jhp_along_plan(w, q, t.plan, rule);
    JhpTableRow row;
    row.w = w;
    row.w_word = sorting_word(w, cox);
    if (r.sequence) row.sequence = r.sequence->vertices;
    row.w_prime = r.final_perm;
    row.w_prime_word = sorting_word(r.final_perm, cox_linear);
    row.dagger = r.dagger_total;
    row.ddagger = r.ddagger_total;
    t.rows.push_back(std::move(row));
  }
  std::stable_sort(t.rows.begin(), t.rows.end(), [](const JhpTableRow& a, const JhpTableRow& b) {
    if (a.w_word.size() != b.w_word.size()) return a.w_word.size() < b.w_word.size();
    return a.w_word < b.w_word;
  });
  return t;
}

std::string table_header() { return "w | reflection sequence | w' | dagger | ddagger"; }

std::string render_table(const JhpTable& t) {
  std::ostringstream os;
  os << table_header() << "\n";
  for (const auto& row : t.rows) os << row.to_line() << "\n";
  return os.str();
}

std::string render_csv(const JhpTable& t) {
  std::ostringstream os;
  os << "w_word,w,sequence,w_prime_word,w_prime,dagger,ddagger\n";
  for (const auto& r : t.rows) {
    std::string seq = "absence";
    if (r.sequence) {
      seq.clear();
      for (std::size_t k = 0; k < r.sequence->size(); ++k) seq += (k ? " " : "") + std::to_string((*r.sequence)[k]);
    }
    os << word_to_string(r.w_word) << "," << r.w.to_string() << "," << seq << ","
       << word_to_string(r.w_prime_word) << "," << r.w_prime.to_string() << "," << r.dagger << ","
       << r.ddagger << "\n";
  }
  return os.str();
}

std::string render_json(const JhpTable& t) {
  nlohmann::ordered_json j;
  j["quiver"] = t.quiver.to_string();
  j["plan"] = t.plan.vertices;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    rows.push_back({{"w", r.w.to_string()},
                    {"w_word", word_to_string(r.w_word)},
                    {"sequence", r.sequence ? nlohmann::ordered_json(*r.sequence) : nlohmann::ordered_json(nullptr)},
                    {"w_prime", r.w_prime.to_string()},
                    {"w_prime_word", word_to_string(r.w_prime_word)},
                    {"dagger", r.dagger},
                    {"ddagger", r.ddagger},
                    {"jhp", r.dagger == r.ddagger}});
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

}  // namespace tfjhp
