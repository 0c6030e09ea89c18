#include "tfjhp/quiver.hpp"

#include <cctype>
#include <sstream>

#include "tfjhp/error.hpp"

namespace tfjhp {

TypeAQuiver::TypeAQuiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n_ < 1 || n_ > kMaxVertices) {
    throw DomainError("quiver must have between 1 and " + std::to_string(kMaxVertices) +
                      " vertices, got " + std::to_string(n_));
  }
  if (static_cast<int>(arrows_.size()) != n_ - 1) {
    throw DomainError("A_n quiver needs n-1 arrows");
  }
}

TypeAQuiver TypeAQuiver::parse(std::string_view text) {
  if (text.size() + 1 > static_cast<std::size_t>(kMaxVertices)) {
    throw ParseError("quiver string too long (at most " + std::to_string(kMaxVertices - 1) +
                         " arrows)",
                     static_cast<std::size_t>(kMaxVertices - 1));
  }
  std::vector<Arrow> arrows;
  arrows.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    switch (text[pos]) {
      case '>': arrows.push_back(Arrow::kRight); break;
      case '<': arrows.push_back(Arrow::kLeft); break;
      default:
        throw ParseError(std::string("quiver string may only contain '>' or '<', got '") +
                             text[pos] + "'",
                         pos);
    }
  }
  return TypeAQuiver(static_cast<int>(text.size()) + 1, std::move(arrows));
}

TypeAQuiver TypeAQuiver::linear(int n) {
  return TypeAQuiver(n, std::vector<Arrow>(n > 0 ? n - 1 : 0, Arrow::kRight));
}

TypeAQuiver TypeAQuiver::linear_reversed(int n) {
  return TypeAQuiver(n, std::vector<Arrow>(n > 0 ? n - 1 : 0, Arrow::kLeft));
}

std::vector<TypeAQuiver> TypeAQuiver::all_orientations(int n) {
  std::vector<TypeAQuiver> out;
  const int edges = n - 1;
  // Iterate masks so that the text forms come out sorted: '<' < '>'.
  for (unsigned mask = 0; mask < (1u << edges); ++mask) {
    std::vector<Arrow> arrows(edges);
    for (int a = 0; a < edges; ++a) {
      const bool right = (mask >> (edges - 1 - a)) & 1u;
      arrows[a] = right ? Arrow::kRight : Arrow::kLeft;
    }
    out.emplace_back(n, std::move(arrows));
  }
  return out;
}

Arrow TypeAQuiver::arrow(int a) const {
  if (a < 1 || a >= n_) throw DomainError("edge index " + std::to_string(a) + " out of range");
  return arrows_[a - 1];
}

int TypeAQuiver::arrow_source(int a) const { return arrow(a) == Arrow::kRight ? a : a + 1; }
int TypeAQuiver::arrow_target(int a) const { return arrow(a) == Arrow::kRight ? a + 1 : a; }

bool TypeAQuiver::is_sink(int v) const {
  if (v < 1 || v > n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (v > 1 && arrow(v - 1) != Arrow::kRight) return false;
  if (v < n_ && arrow(v) != Arrow::kLeft) return false;
  return true;
}

bool TypeAQuiver::is_source(int v) const {
  if (v < 1 || v > n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (v > 1 && arrow(v - 1) != Arrow::kLeft) return false;
  if (v < n_ && arrow(v) != Arrow::kRight) return false;
  return true;
}

std::vector<int> TypeAQuiver::sinks() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (is_sink(v)) out.push_back(v);
  return out;
}

std::vector<int> TypeAQuiver::sources() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (is_source(v)) out.push_back(v);
  return out;
}

TypeAQuiver TypeAQuiver::mutate(int v) const {
  if (!is_sink(v) && !is_source(v)) {
    throw DomainError("cannot mutate at vertex " + std::to_string(v) + " of " + to_string() +
                      ": neither a sink nor a source");
  }
  auto flipped = arrows_;
  auto flip = [](Arrow& a) { a = a == Arrow::kRight ? Arrow::kLeft : Arrow::kRight; };
  if (v > 1) flip(flipped[v - 2]);
  if (v < n_) flip(flipped[v - 1]);
  return TypeAQuiver(n_, std::move(flipped));
}

bool TypeAQuiver::is_linear() const {
  for (Arrow a : arrows_)
    if (a != Arrow::kRight) return false;
  return true;
}

std::string TypeAQuiver::to_string() const {
  std::string s;
  for (Arrow a : arrows_) s.push_back(a == Arrow::kRight ? '>' : '<');
  return s;
}

std::string TypeAQuiver::pretty() const {
  std::ostringstream os;
  os << 1;
  for (int a = 1; a < n_; ++a) os << (arrow(a) == Arrow::kRight ? "->" : "<-") << a + 1;
  return os.str();
}

std::vector<int> Interval::dims(int n) const {
  std::vector<int> d(n, 0);
  for (int v = i; v < j && v <= n; ++v) d[v - 1] = 1;
  return d;
}

std::string Interval::to_string() const {
  return "[" + std::to_string(i) + "," + std::to_string(j) + ")";
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  int value = 0;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
    value = value * 10 + (text[pos] - '0');
    if (value > 1000) throw ParseError("integer too large", start);
    ++pos;
  }
  if (pos == start) throw ParseError("expected an integer", pos);
  return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
  if (pos >= text.size() || text[pos] != c) {
    throw ParseError(std::string("expected '") + c + "'", pos);
  }
  ++pos;
}

}  // namespace

Interval Interval::parse(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, '[');
  const int i = parse_int(text, pos);
  expect(text, pos, ',');
  const std::size_t j_pos = pos;
  const int j = parse_int(text, pos);
  expect(text, pos, ')');
  if (pos != text.size()) throw ParseError("trailing characters after interval", pos);
  if (i < 1) throw ParseError("interval start must be >= 1", 1);
  if (j <= i) throw ParseError("interval needs i < j", j_pos);
  return Interval{i, j};
}

std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n + 1; ++j) out.push_back(Interval{i, j});
  return out;
}

int interval_index(int n, const Interval& iv) {
  if (iv.i < 1 || iv.j > n + 1 || iv.i >= iv.j) {
    throw DomainError("interval " + iv.to_string() + " does not live on A_" + std::to_string(n));
  }
  // Rows i' < i contribute (n + 1 - i') intervals each.
  int idx = 0;
  for (int r = 1; r < iv.i; ++r) idx += n + 1 - r;
  return idx + (iv.j - iv.i - 1);
}

std::optional<Interval> make_interval(int s, int t) {
  if (s == t) return std::nullopt;
  if (s > t) throw DomainError("interval [" + std::to_string(s) + "," + std::to_string(t) + ") is reversed");
  return Interval{s, t};
}

}  // namespace tfjhp
