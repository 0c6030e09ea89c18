#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tfjhp {

/// Largest supported n for A_n (so that n + 1 <= 12 letters).
inline constexpr int kMaxVertices = 11;

enum class Arrow : std::uint8_t {
  kRight,  // a -> a+1
  kLeft,   // a+1 -> a
};

/// An orientation of the A_n path 1 - 2 - ... - n.
///
/// Text format: a string of length n-1 over {'>', '<'}; position a (1-based)
/// holds '>' iff the arrow between a and a+1 points a -> a+1. The empty
/// string is A_1.
class TypeAQuiver {
 public:
  TypeAQuiver() : n_(1) {}
  TypeAQuiver(int n, std::vector<Arrow> arrows);

  static TypeAQuiver parse(std::string_view text);
  /// 1 -> 2 -> ... -> n
  static TypeAQuiver linear(int n);
  /// n -> n-1 -> ... -> 1
  static TypeAQuiver linear_reversed(int n);
  /// Every orientation of A_n, ordered by their text form.
  static std::vector<TypeAQuiver> all_orientations(int n);

  int n() const noexcept { return n_; }
  int edge_count() const noexcept { return n_ - 1; }

  /// Direction of the edge between a and a+1, 1 <= a < n.
  Arrow arrow(int a) const;
  int arrow_source(int a) const;
  int arrow_target(int a) const;

  bool is_sink(int v) const;
  bool is_source(int v) const;
  std::vector<int> sinks() const;
  std::vector<int> sources() const;

  /// Flips every arrow incident to v. Requires v to be a sink or a source.
  TypeAQuiver mutate(int v) const;

  bool is_linear() const;
  std::string to_string() const;

  /// Human-readable form such as "1->2<-3".
  std::string pretty() const;

  friend bool operator==(const TypeAQuiver&, const TypeAQuiver&) = default;
  friend auto operator<=>(const TypeAQuiver& a, const TypeAQuiver& b) {
    return a.to_string() <=> b.to_string();
  }

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

/// The interval module M_[i,j): k at vertices i <= a < j, identity maps
/// along arrows inside the support.
struct Interval {
  int i = 1;
  int j = 2;

  int length() const noexcept { return j - i; }
  bool contains(int vertex) const noexcept { return i <= vertex && vertex < j; }
  /// Dimension vector over n vertices.
  std::vector<int> dims(int n) const;
  std::string to_string() const;

  /// Parses "[i,j)". Checks 1 <= i < j; the caller checks j against n+1.
  static Interval parse(std::string_view text);

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// All intervals of A_n in lexicographic order. There are n(n+1)/2.
std::vector<Interval> all_intervals(int n);

/// Position of iv in all_intervals(n).
int interval_index(int n, const Interval& iv);

/// [s,t), or nothing when s == t (the zero object).
std::optional<Interval> make_interval(int s, int t);

}  // namespace tfjhp
