#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfjhp/quiver.hpp"
#include "tfjhp/reflect.hpp"
#include "tfjhp/torsion.hpp"

namespace tfjhp {

struct CheckResult {
  std::string name;
  bool pass = true;
  bool inconclusive = false;
  std::string detail;  // counts, or the first few counterexamples
};

struct VerifyConfig {
  std::optional<TypeAQuiver> quiver;  // restricts quiver sweeps to one orientation
  int max_n = 4;
  int universe_dim = 8;
  int pair_sum = 2;
  int prime = 2;
  int threads = 1;
  DdaggerRule rule = DdaggerRule::kAsDefined;
};

/// Every orientation of A_n for 1 <= n <= max_n, or just the configured one.
std::vector<TypeAQuiver> sweep_quivers(const VerifyConfig& cfg, int max_n, int min_n = 1);

CheckResult check_inversion_fidelity();
CheckResult check_sortable_counts(const std::vector<TypeAQuiver>& quivers);
CheckResult check_plan_vs_count(const std::vector<TypeAQuiver>& quivers, DdaggerRule rule);
CheckResult check_bb_criterion(int max_n);
CheckResult check_tf_bijection(const std::vector<TypeAQuiver>& quivers, const OracleBounds& bounds,
                               int threads);
CheckResult check_count_vs_filtration(const std::vector<TypeAQuiver>& quivers, int universe_dim,
                                      int prime);
CheckResult check_semibrick_filtrations(const std::vector<TypeAQuiver>& quivers, int universe_dim,
                                        int prime, int threads);
CheckResult check_example_4312(int universe_dim, int prime);
CheckResult check_interval_monos(const std::vector<TypeAQuiver>& quivers, int prime);
CheckResult check_reflection_tables(const std::vector<TypeAQuiver>& quivers, int prime);
CheckResult check_dagger_lemma(const std::vector<TypeAQuiver>& quivers, DdaggerRule rule);
CheckResult check_semibrick_catalan(int max_n);
CheckResult check_semibrick_linear_vs_hom(int max_n, int prime);
CheckResult check_hsets(int max_n, int prime);
CheckResult check_shifted_semibricks(int max_n, int max_size, int max_shift, int prime);
CheckResult check_shifted_examples(int prime);

std::vector<std::string> suite_names();
/// Throws DomainError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyConfig& cfg);
std::vector<CheckResult> run_all(const VerifyConfig& cfg);

}  // namespace tfjhp
