#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tfjhp/fp_matrix.hpp"
#include "tfjhp/quiver.hpp"

namespace tfjhp {

/// A finite-dimensional representation of an A_n quiver over F_p.
/// maps[a-1] belongs to the edge between a and a+1 and has shape
/// dims[target] x dims[source].
struct Rep {
  TypeAQuiver quiver;
  int prime = 2;
  std::vector<int> dims;
  std::vector<FpMatrix> maps;

  int dim_at(int v) const { return dims[v - 1]; }
  int total_dim() const;
  /// Throws DomainError when a matrix shape disagrees with dims.
  void validate() const;
};

Rep zero_rep(const TypeAQuiver& q, int p = 2);
Rep interval_to_rep(const TypeAQuiver& q, const Interval& iv, int p = 2);
Rep direct_sum(const Rep& a, const Rep& b);

/// components[v-1] : M_v -> N_v.
struct Morphism {
  std::vector<FpMatrix> components;
};

bool is_morphism(const Morphism& f, const Rep& from, const Rep& to);
bool is_injective(const Morphism& f, const Rep& from);
Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<int>& coeffs, int p);

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

/// sum_v d_v e_v - sum_{arrows s->t} d_s e_t
int euler_form(const TypeAQuiver& q, const std::vector<int>& d, const std::vector<int>& e);
/// hom_dim(m, n) - euler_form; throws InternalError when negative.
int ext_dim(const Rep& m, const Rep& n);

/// Cokernel of an injective-or-not morphism f : x -> m.
Rep cokernel(const Morphism& f, const Rep& x, const Rep& m);

/// Multiset of intervals of A_n, stored as multiplicities indexed like all_intervals(n).
class IsoClass {
 public:
  IsoClass() = default;
  explicit IsoClass(int n);
  static IsoClass of(int n, const std::vector<Interval>& summands);

  int n() const noexcept { return n_; }
  int multiplicity(const Interval& iv) const;
  int multiplicity_at(int index) const { return mult_[index]; }
  void add(const Interval& iv, int count = 1);
  void add_at(int index, int count = 1);
  IsoClass plus(const IsoClass& other) const;

  bool empty() const;
  int summand_count() const;
  int total_dim() const;
  std::vector<int> dims() const;
  /// Sorted, with repetition.
  std::vector<Interval> summands() const;
  std::string to_string() const;

  friend bool operator==(const IsoClass&, const IsoClass&) = default;
  friend auto operator<=>(const IsoClass&, const IsoClass&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> mult_;
};

/// Per-quiver cache: interval reps, the interval Hom table, and mono/cokernel results.
/// Not thread-safe; use one instance per thread.
class RepCategory {
 public:
  explicit RepCategory(TypeAQuiver q, int p = 2);

  const TypeAQuiver& quiver() const noexcept { return quiver_; }
  int prime() const noexcept { return prime_; }
  int n() const noexcept { return quiver_.n(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  int index_of(const Interval& iv) const { return interval_index(n(), iv); }

  const Rep& interval_rep(int index) const { return interval_reps_[index]; }
  int interval_hom(int from, int to) const { return hom_[from][to]; }
  int interval_ext(int from, int to) const { return ext_[from][to]; }

  Rep rep_of(const IsoClass& cls) const;
  IsoClass decompose(const Rep& m) const;

  /// Cokernel classes of all monomorphisms x -> m. Cached.
  const std::set<IsoClass>& monos(const IsoClass& x, const IsoClass& m);

  /// Upper bound on p^{dim Hom} explored per mono enumeration.
  static constexpr long long kMaxMapCount = 1LL << 20;
  /// Largest total dimension accepted by monos().
  int max_total_dim = 16;

 private:
  TypeAQuiver quiver_;
  int prime_;
  std::vector<Interval> intervals_;
  std::vector<Rep> interval_reps_;
  std::vector<std::vector<int>> hom_;
  std::vector<std::vector<int>> ext_;
  std::vector<int> solve_order_;
  std::map<std::pair<IsoClass, IsoClass>, std::set<IsoClass>> mono_cache_;
};

IsoClass decompose(const Rep& m);

/// Every multiset of intervals of A_n whose dimension vector is exactly dims, sorted.
std::vector<IsoClass> iso_classes_with_dims(int n, const std::vector<int>& dims);

/// Every multiset of the given intervals (indices into all_intervals(n)) with total
/// dimension in [1, max_total_dim], sorted by total dimension then lexicographically.
std::vector<IsoClass> iso_classes_up_to_dim(int n, int max_total_dim,
                                            const std::vector<int>& allowed_indices);

/// Cokernel classes of all monomorphisms x -> m, found by enumerating Hom(x, m) over F_p.
std::set<IsoClass> monos_up_to_cokernel(const Rep& x, const Rep& m, int max_total_dim = 16);

/// {[i,l), [l',j)} when [l,l') embeds into [i,j); nothing when no mono exists.
std::optional<IsoClass> interval_mono_cokernel(const TypeAQuiver& q, const Interval& sub,
                                               const Interval& big, int p = 2);

}  // namespace tfjhp
