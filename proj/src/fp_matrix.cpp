#include "tfjhp/fp_matrix.hpp"

#include <sstream>

#include "tfjhp/error.hpp"

namespace tfjhp {

bool is_supported_prime(int p) { return p == 2 || p == 3 || p == 5; }

int fp_inverse(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  for (int x = 1; x < p; ++x)
    if ((a * x) % p == 1) return x;
  throw DomainError("0 has no inverse in F_" + std::to_string(p));
}

FpMatrix::FpMatrix(int rows, int cols, int p) : rows_(rows), cols_(cols), p_(p) {
  if (!is_supported_prime(p)) throw DomainError("unsupported field characteristic " + std::to_string(p));
  if (rows < 0 || cols < 0) throw DomainError("negative matrix shape");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FpMatrix FpMatrix::identity(int size, int p) {
  FpMatrix m(size, size, p);
  for (int k = 0; k < size; ++k) m.set(k, k, 1);
  return m;
}

void FpMatrix::set(int r, int c, int value) {
  value %= p_;
  if (value < 0) value += p_;
  data_[static_cast<std::size_t>(r) * cols_ + c] = static_cast<std::uint8_t>(value);
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw DomainError("matrix product shape mismatch");
  FpMatrix out(rows_, other.cols_, p_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const int a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols_; ++c) {
        const int b = other.at(k, c);
        if (b) out.set(r, c, out.at(r, c) + a * b);
      }
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_ || p_ != other.p_) {
    throw DomainError("matrix sum shape mismatch");
  }
  FpMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = static_cast<std::uint8_t>((data_[k] + other.data_[k]) % p_);
  return out;
}

FpMatrix FpMatrix::scaled(int factor) const {
  FpMatrix out = *this;
  factor %= p_;
  if (factor < 0) factor += p_;
  for (auto& x : out.data_) x = static_cast<std::uint8_t>((x * factor) % p_);
  return out;
}

std::vector<int> FpMatrix::rref_in_place() {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols_ && row < rows_; ++c) {
    int found = -1;
    for (int r = row; r < rows_; ++r) {
      if (at(r, c)) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != row) {
      for (int k = 0; k < cols_; ++k) std::swap(data_[static_cast<std::size_t>(found) * cols_ + k], data_[static_cast<std::size_t>(row) * cols_ + k]);
    }
    const int inv = fp_inverse(at(row, c), p_);
    for (int k = c; k < cols_; ++k) set(row, k, at(row, k) * inv);
    for (int r = 0; r < rows_; ++r) {
      if (r == row) continue;
      const int f = at(r, c);
      if (!f) continue;
      for (int k = c; k < cols_; ++k) set(r, k, at(r, k) - f * at(row, k));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

int FpMatrix::rank() const {
  FpMatrix copy = *this;
  return static_cast<int>(copy.rref_in_place().size());
}

FpMatrix FpMatrix::nullspace() const {
  FpMatrix r = *this;
  const std::vector<int> pivots = r.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  FpMatrix basis(cols_, static_cast<int>(free_cols.size()), p_);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    basis.set(f, static_cast<int>(k), 1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) {
      basis.set(pivots[pr], static_cast<int>(k), -r.at(static_cast<int>(pr), f));
    }
  }
  return basis;
}

FpMatrix FpMatrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  FpMatrix aug = hstack(*this, identity(rows_, p_));
  const auto pivots = aug.rref_in_place();
  if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots[rows_ - 1] != rows_ - 1)) {
    throw DomainError("matrix is singular");
  }
  return aug.block(0, cols_, rows_, cols_);
}

FpMatrix FpMatrix::block(int r0, int c0, int nrows, int ncols) const {
  if (r0 < 0 || c0 < 0 || r0 + nrows > rows_ || c0 + ncols > cols_) throw DomainError("block out of range");
  FpMatrix out(nrows, ncols, p_);
  for (int r = 0; r < nrows; ++r)
    for (int c = 0; c < ncols; ++c) out.set(r, c, at(r0 + r, c0 + c));
  return out;
}

FpMatrix FpMatrix::hstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.rows_ != b.rows_ || a.p_ != b.p_) throw DomainError("hstack shape mismatch");
  FpMatrix out(a.rows_, a.cols_ + b.cols_, a.p_);
  for (int r = 0; r < a.rows_; ++r) {
    for (int c = 0; c < a.cols_; ++c) out.set(r, c, a.at(r, c));
    for (int c = 0; c < b.cols_; ++c) out.set(r, a.cols_ + c, b.at(r, c));
  }
  return out;
}

FpMatrix FpMatrix::vstack(const FpMatrix& a, const FpMatrix& b) {
  if (a.cols_ != b.cols_ || a.p_ != b.p_) throw DomainError("vstack shape mismatch");
  FpMatrix out(a.rows_ + b.rows_, a.cols_, a.p_);
  for (int c = 0; c < a.cols_; ++c) {
    for (int r = 0; r < a.rows_; ++r) out.set(r, c, a.at(r, c));
    for (int r = 0; r < b.rows_; ++r) out.set(a.rows_ + r, c, b.at(r, c));
  }
  return out;
}

bool FpMatrix::is_zero() const {
  for (auto x : data_)
    if (x) return false;
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c);
  }
  os << "]";
  return os.str();
}

}  // namespace tfjhp
