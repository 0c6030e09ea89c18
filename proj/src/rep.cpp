#include "tfjhp/rep.hpp"

#include <algorithm>
#include <numeric>

#include "tfjhp/error.hpp"

namespace tfjhp {

int Rep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void Rep::validate() const {
  const int n = quiver.n();
  if (static_cast<int>(dims.size()) != n) throw DomainError("dims has wrong length");
  if (static_cast<int>(maps.size()) != n - 1) throw DomainError("maps has wrong length");
  for (int a = 1; a < n; ++a) {
    const FpMatrix& m = maps[a - 1];
    if (m.rows() != dim_at(quiver.arrow_target(a)) || m.cols() != dim_at(quiver.arrow_source(a))) {
      throw DomainError("map on edge " + std::to_string(a) + " has shape " +
                        std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.prime() != prime) throw DomainError("map over the wrong field");
  }
}

Rep zero_rep(const TypeAQuiver& q, int p) {
  Rep r{q, p, std::vector<int>(q.n(), 0), {}};
  for (int a = 1; a < q.n(); ++a) r.maps.emplace_back(0, 0, p);
  return r;
}

Rep interval_to_rep(const TypeAQuiver& q, const Interval& iv, int p) {
  if (iv.i < 1 || iv.j > q.n() + 1 || iv.i >= iv.j) {
    throw DomainError("interval " + iv.to_string() + " does not fit " + q.pretty());
  }
  Rep r{q, p, iv.dims(q.n()), {}};
  for (int a = 1; a < q.n(); ++a) {
    const int s = q.arrow_source(a);
    const int t = q.arrow_target(a);
    FpMatrix m(r.dim_at(t), r.dim_at(s), p);
    if (iv.contains(s) && iv.contains(t)) m.set(0, 0, 1);
    r.maps.push_back(m);
  }
  return r;
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (!(a.quiver == b.quiver) || a.prime != b.prime) throw DomainError("direct sum across quivers");
  const int n = a.quiver.n();
  Rep r{a.quiver, a.prime, std::vector<int>(n), {}};
  for (int v = 0; v < n; ++v) r.dims[v] = a.dims[v] + b.dims[v];
  for (int e = 1; e < n; ++e) {
    const FpMatrix& ma = a.maps[e - 1];
    const FpMatrix& mb = b.maps[e - 1];
    FpMatrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols(), a.prime);
    for (int i = 0; i < ma.rows(); ++i)
      for (int j = 0; j < ma.cols(); ++j) m.set(i, j, ma.at(i, j));
    for (int i = 0; i < mb.rows(); ++i)
      for (int j = 0; j < mb.cols(); ++j) m.set(ma.rows() + i, ma.cols() + j, mb.at(i, j));
    r.maps.push_back(m);
  }
  return r;
}

bool is_morphism(const Morphism& f, const Rep& from, const Rep& to) {
  const TypeAQuiver& q = from.quiver;
  if (static_cast<int>(f.components.size()) != q.n()) return false;
  for (int v = 1; v <= q.n(); ++v) {
    const FpMatrix& c = f.components[v - 1];
    if (c.rows() != to.dim_at(v) || c.cols() != from.dim_at(v)) return false;
  }
  for (int a = 1; a < q.n(); ++a) {
    const int s = q.arrow_source(a);
    const int t = q.arrow_target(a);
    if (!(f.components[t - 1] * from.maps[a - 1] == to.maps[a - 1] * f.components[s - 1])) {
      return false;
    }
  }
  return true;
}

bool is_injective(const Morphism& f, const Rep& from) {
  for (int v = 1; v <= from.quiver.n(); ++v)
    if (f.components[v - 1].rank() != from.dim_at(v)) return false;
  return true;
}

Morphism linear_combination(const std::vector<Morphism>& basis, const std::vector<int>& coeffs,
                            int p) {
  if (basis.empty()) throw DomainError("empty basis");
  Morphism out = basis.front();
  for (auto& c : out.components) c = FpMatrix(c.rows(), c.cols(), p);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (coeffs[k] % p == 0) continue;
    for (std::size_t v = 0; v < out.components.size(); ++v) {
      out.components[v] = out.components[v] + basis[k].components[v].scaled(coeffs[k]);
    }
  }
  return out;
}

std::vector<Morphism> hom_basis(const Rep& m, const Rep& n) {
  if (!(m.quiver == n.quiver)) throw DomainError("hom between representations of different quivers");
  if (m.prime != n.prime) throw DomainError("hom between representations over different fields");
  const TypeAQuiver& q = m.quiver;
  const int p = m.prime;
  // Unknown phi_v is an n_v x m_v block; offsets[v] is its first variable.
  std::vector<int> offsets(q.n() + 1, 0);
  for (int v = 1; v <= q.n(); ++v) offsets[v] = offsets[v - 1] + n.dim_at(v) * m.dim_at(v);
  const int vars = offsets[q.n()];
  auto var = [&](int v, int r, int c) { return offsets[v - 1] + r * m.dim_at(v) + c; };

  int equations = 0;
  for (int a = 1; a < q.n(); ++a) equations += n.dim_at(q.arrow_target(a)) * m.dim_at(q.arrow_source(a));
  FpMatrix sys(equations, vars, p);
  int row = 0;
  for (int a = 1; a < q.n(); ++a) {
    const int s = q.arrow_source(a);
    const int t = q.arrow_target(a);
    const FpMatrix& ma = m.maps[a - 1];
    const FpMatrix& na = n.maps[a - 1];
    // (phi_t * M_a - N_a * phi_s)[r][c] = 0
    for (int r = 0; r < n.dim_at(t); ++r) {
      for (int c = 0; c < m.dim_at(s); ++c) {
        for (int k = 0; k < m.dim_at(t); ++k)
          if (ma.at(k, c)) sys.set(row, var(t, r, k), sys.at(row, var(t, r, k)) + ma.at(k, c));
        for (int k = 0; k < n.dim_at(s); ++k)
          if (na.at(r, k)) sys.set(row, var(s, k, c), sys.at(row, var(s, k, c)) - na.at(r, k));
        ++row;
      }
    }
  }
  const FpMatrix kernel = sys.nullspace();
  std::vector<Morphism> basis;
  for (int b = 0; b < kernel.cols(); ++b) {
    Morphism f;
    for (int v = 1; v <= q.n(); ++v) {
      FpMatrix c(n.dim_at(v), m.dim_at(v), p);
      for (int r = 0; r < n.dim_at(v); ++r)
        for (int cc = 0; cc < m.dim_at(v); ++cc) c.set(r, cc, kernel.at(var(v, r, cc), b));
      f.components.push_back(c);
    }
    basis.push_back(std::move(f));
  }
  return basis;
}

int hom_dim(const Rep& m, const Rep& n) { return static_cast<int>(hom_basis(m, n).size()); }

int euler_form(const TypeAQuiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  int value = 0;
  for (int v = 1; v <= q.n(); ++v) value += d[v - 1] * e[v - 1];
  for (int a = 1; a < q.n(); ++a) value -= d[q.arrow_source(a) - 1] * e[q.arrow_target(a) - 1];
  return value;
}

int ext_dim(const Rep& m, const Rep& n) {
  const int value = hom_dim(m, n) - euler_form(m.quiver, m.dims, n.dims);
  if (value < 0) throw InternalError("negative Ext dimension; Euler form inconsistent with Hom");
  return value;
}

Rep cokernel(const Morphism& f, const Rep& x, const Rep& m) {
  const TypeAQuiver& q = m.quiver;
  const int p = m.prime;
  // Per vertex: image basis plus standard complement vectors, then project onto the complement.
  std::vector<FpMatrix> section(q.n());     // coker_v -> M_v
  std::vector<FpMatrix> projection(q.n());  // M_v -> coker_v
  Rep out{q, p, std::vector<int>(q.n(), 0), {}};
  for (int v = 1; v <= q.n(); ++v) {
    const FpMatrix& phi = f.components[v - 1];
    const int dim = m.dim_at(v);
    // Independent image columns.
    FpMatrix basis(dim, 0, p);
    for (int c = 0; c < phi.cols(); ++c) {
      FpMatrix trial = FpMatrix::hstack(basis, phi.column(c));
      if (trial.rank() > basis.cols()) basis = trial;
    }
    const int r = basis.cols();
    FpMatrix complement(dim, 0, p);
    for (int e = 0; e < dim && basis.cols() + complement.cols() < dim; ++e) {
      FpMatrix unit(dim, 1, p);
      unit.set(e, 0, 1);
      FpMatrix trial = FpMatrix::hstack(FpMatrix::hstack(basis, complement), unit);
      if (trial.rank() == trial.cols()) complement = FpMatrix::hstack(complement, unit);
    }
    const int cdim = complement.cols();
    if (r + cdim != dim) throw InternalError("cokernel complement has the wrong size");
    out.dims[v - 1] = cdim;
    section[v - 1] = complement;
    if (dim == 0) {
      projection[v - 1] = FpMatrix(0, 0, p);
    } else {
      const FpMatrix inv = FpMatrix::hstack(basis, complement).inverse();
      projection[v - 1] = inv.block(r, 0, cdim, dim);
    }
  }
  for (int a = 1; a < q.n(); ++a) {
    const int s = q.arrow_source(a);
    const int t = q.arrow_target(a);
    out.maps.push_back(projection[t - 1] * m.maps[a - 1] * section[s - 1]);
  }
  (void)x;
  return out;
}

IsoClass::IsoClass(int n) : n_(n), mult_(static_cast<std::size_t>(n) * (n + 1) / 2, 0) {}

IsoClass IsoClass::of(int n, const std::vector<Interval>& summands) {
  IsoClass c(n);
  for (const auto& iv : summands) c.add(iv);
  return c;
}

int IsoClass::multiplicity(const Interval& iv) const { return mult_[interval_index(n_, iv)]; }

void IsoClass::add(const Interval& iv, int count) { add_at(interval_index(n_, iv), count); }

void IsoClass::add_at(int index, int count) {
  const int value = mult_[index] + count;
  if (value < 0 || value > 255) throw DomainError("multiplicity out of range");
  mult_[index] = static_cast<std::uint8_t>(value);
}

IsoClass IsoClass::plus(const IsoClass& other) const {
  if (n_ != other.n_) throw DomainError("iso classes over different quivers");
  IsoClass out = *this;
  for (std::size_t k = 0; k < mult_.size(); ++k) out.add_at(static_cast<int>(k), other.mult_[k]);
  return out;
}

bool IsoClass::empty() const {
  return std::all_of(mult_.begin(), mult_.end(), [](auto m) { return m == 0; });
}

int IsoClass::summand_count() const { return std::accumulate(mult_.begin(), mult_.end(), 0); }

int IsoClass::total_dim() const {
  int total = 0;
  const auto ivs = all_intervals(n_);
  for (std::size_t k = 0; k < ivs.size(); ++k) total += mult_[k] * ivs[k].length();
  return total;
}

std::vector<int> IsoClass::dims() const {
  std::vector<int> d(n_, 0);
  const auto ivs = all_intervals(n_);
  for (std::size_t k = 0; k < ivs.size(); ++k)
    for (int v = ivs[k].i; v < ivs[k].j; ++v) d[v - 1] += mult_[k];
  return d;
}

std::vector<Interval> IsoClass::summands() const {
  std::vector<Interval> out;
  const auto ivs = all_intervals(n_);
  for (std::size_t k = 0; k < ivs.size(); ++k)
    for (int c = 0; c < mult_[k]; ++c) out.push_back(ivs[k]);
  return out;
}

std::string IsoClass::to_string() const {
  std::string s = "{";
  bool first = true;
  for (const auto& iv : summands()) {
    if (!first) s += ",";
    s += iv.to_string();
    first = false;
  }
  return s + "}";
}

RepCategory::RepCategory(TypeAQuiver q, int p) : quiver_(std::move(q)), prime_(p) {
  if (!is_supported_prime(p)) throw DomainError("unsupported field characteristic " + std::to_string(p));
  intervals_ = all_intervals(quiver_.n());
  const int count = static_cast<int>(intervals_.size());
  for (const auto& iv : intervals_) interval_reps_.push_back(interval_to_rep(quiver_, iv, p));
  hom_.assign(count, std::vector<int>(count, 0));
  ext_.assign(count, std::vector<int>(count, 0));
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      hom_[a][b] = hom_dim(interval_reps_[a], interval_reps_[b]);
      ext_[a][b] = hom_[a][b] - euler_form(quiver_, interval_reps_[a].dims, interval_reps_[b].dims);
      if (ext_[a][b] < 0) throw InternalError("negative Ext between intervals");
    }
  }
  // Order the intervals so that nonzero Hom(I, J), I != J, puts I before J.
  std::vector<int> indegree(count, 0);
  for (int a = 0; a < count; ++a)
    for (int b = 0; b < count; ++b)
      if (a != b && hom_[a][b]) ++indegree[b];
  std::vector<bool> done(count, false);
  for (int step = 0; step < count; ++step) {
    int pick = -1;
    for (int a = 0; a < count; ++a) {
      if (!done[a] && indegree[a] == 0) {
        pick = a;
        break;
      }
    }
    if (pick < 0) throw InternalError("Hom relation among intervals has a cycle");
    done[pick] = true;
    solve_order_.push_back(pick);
    for (int b = 0; b < count; ++b)
      if (b != pick && hom_[pick][b]) --indegree[b];
  }
  for (int a = 0; a < count; ++a) {
    if (hom_[a][a] != 1) throw InternalError("interval is not a brick");
  }
}

Rep RepCategory::rep_of(const IsoClass& cls) const {
  Rep out = zero_rep(quiver_, prime_);
  for (int k = 0; k < static_cast<int>(intervals_.size()); ++k)
    for (int c = 0; c < cls.multiplicity_at(k); ++c) out = direct_sum(out, interval_reps_[k]);
  return out;
}

IsoClass RepCategory::decompose(const Rep& m) const {
  const int count = static_cast<int>(intervals_.size());
  std::vector<int> h(count);
  for (int a = 0; a < count; ++a) h[a] = hom_dim(interval_reps_[a], m);
  // h_I = sum_J mult_J Hom(I, J); Hom(I, J) != 0 only when I precedes J, so solve from the back.
  std::vector<int> mult(count, 0);
  for (int pos = count - 1; pos >= 0; --pos) {
    const int a = solve_order_[pos];
    int value = h[a];
    for (int later = pos + 1; later < count; ++later) {
      const int b = solve_order_[later];
      value -= mult[b] * hom_[a][b];
    }
    if (value < 0) throw InternalError("decomposition produced a negative multiplicity");
    mult[a] = value;
  }
  IsoClass out(n());
  for (int a = 0; a < count; ++a) out.add_at(a, mult[a]);
  if (out.dims() != m.dims) throw InternalError("decomposition does not match the dimension vector");
  return out;
}

const std::set<IsoClass>& RepCategory::monos(const IsoClass& x, const IsoClass& m) {
  const auto key = std::make_pair(x, m);
  auto it = mono_cache_.find(key);
  if (it != mono_cache_.end()) return it->second;

  std::set<IsoClass> result;
  const auto xd = x.dims();
  const auto md = m.dims();
  bool possible = true;
  for (int v = 0; v < n(); ++v) possible = possible && xd[v] <= md[v];
  if (x.empty()) {
    result.insert(m);
  } else if (possible) {
    if (m.total_dim() > max_total_dim) {
      throw BoundError("module " + m.to_string() + " exceeds the dimension cap " +
                       std::to_string(max_total_dim));
    }
    const Rep xr = rep_of(x);
    const Rep mr = rep_of(m);
    const auto basis = hom_basis(xr, mr);
    const int d = static_cast<int>(basis.size());
    long long total = 1;
    for (int k = 0; k < d; ++k) {
      total *= prime_;
      if (total > kMaxMapCount) throw BoundError("Hom space too large to enumerate");
    }
    // Coefficient vectors up to scaling: first nonzero entry is 1.
    std::vector<int> coeffs(d, 0);
    for (long long code = 1; code < total; ++code) {
      long long rest = code;
      int lead = -1;
      for (int k = 0; k < d; ++k) {
        coeffs[k] = static_cast<int>(rest % prime_);
        rest /= prime_;
        if (coeffs[k] && lead < 0) lead = k;
      }
      if (coeffs[lead] != 1) continue;
      const Morphism f = linear_combination(basis, coeffs, prime_);
      if (!is_injective(f, xr)) continue;
      result.insert(decompose(cokernel(f, xr, mr)));
    }
  }
  return mono_cache_.emplace(key, std::move(result)).first->second;
}

std::vector<IsoClass> iso_classes_with_dims(int n, const std::vector<int>& dims) {
  std::vector<IsoClass> out;
  IsoClass cur(n);
  std::vector<int> remaining = dims;
  // Fill the lowest vertex with remaining dimension first; an interval covering it must start there.
  auto rec = [&](auto&& self) -> void {
    int v = 0;
    while (v < n && remaining[v] == 0) ++v;
    if (v == n) {
      out.push_back(cur);
      return;
    }
    for (int j = v + 2; j <= n + 1; ++j) {
      if (remaining[j - 2] == 0) break;
      const Interval iv{v + 1, j};
      // Canonical order: the summands starting at v are added with non-decreasing end.
      bool ok = true;
      for (int jj = j + 1; jj <= n + 1 && ok; ++jj) ok = cur.multiplicity(Interval{v + 1, jj}) == 0;
      if (!ok) continue;
      for (int a = v; a < j - 1; ++a) --remaining[a];
      cur.add(iv);
      self(self);
      cur.add(iv, -1);
      for (int a = v; a < j - 1; ++a) ++remaining[a];
    }
  };
  for (int d : dims)
    if (d < 0) throw DomainError("negative dimension");
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IsoClass> iso_classes_up_to_dim(int n, int max_total_dim,
                                            const std::vector<int>& allowed_indices) {
  const auto ivs = all_intervals(n);
  std::vector<IsoClass> out;
  IsoClass cur(n);
  auto rec = [&](auto&& self, std::size_t from, int budget) -> void {
    for (std::size_t k = from; k < allowed_indices.size(); ++k) {
      const int idx = allowed_indices[k];
      const int len = ivs[idx].length();
      if (len > budget) continue;
      cur.add_at(idx);
      out.push_back(cur);
      self(self, k, budget - len);
      cur.add_at(idx, -1);
    }
  };
  rec(rec, 0, max_total_dim);
  std::sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) {
    const int da = a.total_dim();
    const int db = b.total_dim();
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

IsoClass decompose(const Rep& m) { return RepCategory(m.quiver, m.prime).decompose(m); }

std::set<IsoClass> monos_up_to_cokernel(const Rep& x, const Rep& m, int max_total_dim) {
  RepCategory cat(m.quiver, m.prime);
  cat.max_total_dim = max_total_dim;
  return cat.monos(cat.decompose(x), cat.decompose(m));
}

std::optional<IsoClass> interval_mono_cokernel(const TypeAQuiver& q, const Interval& sub,
                                               const Interval& big, int p) {
  const auto found = monos_up_to_cokernel(interval_to_rep(q, sub, p), interval_to_rep(q, big, p));
  if (found.empty()) return std::nullopt;
  IsoClass expected(q.n());
  if (sub.i < big.i || sub.j > big.j) throw InternalError("mono between non-nested intervals");
  if (auto left = make_interval(big.i, sub.i)) expected.add(*left);
  if (auto right = make_interval(sub.j, big.j)) expected.add(*right);
  if (found.size() != 1 || *found.begin() != expected) {
    throw InternalError("cokernel of " + sub.to_string() + " -> " + big.to_string() +
                        " disagrees with the interval formula");
  }
  return expected;
}

}  // namespace tfjhp
