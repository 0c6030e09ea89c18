#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfjhp/quiver.hpp"
#include "tfjhp/rep.hpp"

namespace tfjhp {

/// M_{ij} over the quiver n -> n-1 -> ... -> 1, 0 <= i < j <= n, supported on i < l <= j.
struct LinearModule {
  int i = 0;
  int j = 1;

  /// Same module in the [i,j) convention on the all-'<' quiver: [i+1, j+1).
  Interval to_interval() const { return Interval{i + 1, j + 1}; }
  static LinearModule from_interval(const Interval& iv) { return LinearModule{iv.i - 1, iv.j - 1}; }
  std::string to_string() const;

  friend auto operator<=>(const LinearModule&, const LinearModule&) = default;
};

/// n -> n-1 -> ... -> 1 as a quiver string of '<'.
TypeAQuiver linear_lambda(int n);
std::vector<LinearModule> all_linear_modules(int n);

/// The four index sets of a module, each a sorted list of (s, t).
struct HSets {
  std::vector<std::pair<int, int>> hom_out;  // Hom(M, -) != 0
  std::vector<std::pair<int, int>> hom_in;   // Hom(-, M) != 0
  std::vector<std::pair<int, int>> ext_out;  // Ext^1(M, -) != 0
  std::vector<std::pair<int, int>> ext_in;   // Ext^1(-, M) != 0
};

/// Closed-form index sets.
HSets h_sets(const LinearModule& m, int n);
/// The same sets read off the linear-algebra Hom/Ext table.
HSets h_sets_computed(const RepCategory& lambda, const LinearModule& m);

/// Pairwise-distinct x-coordinates and, in increasing x order, y_j <= x_i or y_j >= y_i + 1 for j < i.
bool is_semibrick_linear(const std::vector<LinearModule>& set);
/// Pairwise Hom vanishing computed from representations.
bool is_semibrick_linear_by_hom(const RepCategory& lambda, const std::vector<LinearModule>& set);

/// All semibricks (empty set included), in lexicographic order. n <= 7.
std::vector<std::vector<LinearModule>> enumerate_semibricks_linear(int n);

/// (1/(n+2)) C(2n+2, n+1)
long long catalan_count(int n);

/// M_{ij}[k] in the bounded derived category of the linear quiver.
struct ShiftedInterval {
  LinearModule module;
  int shift = 0;

  /// "M(i,j)[k]"
  static ShiftedInterval parse(std::string_view text);
  std::string to_string() const;

  friend auto operator<=>(const ShiftedInterval&, const ShiftedInterval&) = default;
};

/// dim Hom(X, Y): Hom when the shifts agree, Ext^1 when Y sits one shift above X, else 0.
int shifted_hom_dim(const RepCategory& lambda, const ShiftedInterval& x, const ShiftedInterval& y);

/// Pairwise case rules on index inequalities.
bool is_semibrick_shifted(const std::vector<ShiftedInterval>& set, int n);
/// Pairwise shifted_hom_dim vanishing plus one-dimensional endomorphisms.
bool is_semibrick_shifted_by_hom(const RepCategory& lambda, const std::vector<ShiftedInterval>& set);

}  // namespace tfjhp
