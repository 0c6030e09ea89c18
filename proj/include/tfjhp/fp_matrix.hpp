#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tfjhp {

/// Dense matrix over the prime field F_p, p in {2, 3, 5}. Entries are kept reduced.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int rows, int cols, int p);

  static FpMatrix identity(int size, int p);
  static FpMatrix zero(int rows, int cols, int p) { return FpMatrix(rows, cols, p); }

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int prime() const noexcept { return p_; }

  int at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, int value);

  FpMatrix operator*(const FpMatrix& other) const;
  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix scaled(int factor) const;

  /// Reduced row echelon form; returns pivot columns.
  std::vector<int> rref_in_place();
  int rank() const;
  /// Basis of {x : A x = 0}, one column per vector, as a cols x k matrix.
  FpMatrix nullspace() const;
  /// Throws DomainError when singular.
  FpMatrix inverse() const;

  FpMatrix block(int r0, int c0, int nrows, int ncols) const;
  FpMatrix column(int c) const { return block(0, c, rows_, 1); }
  static FpMatrix hstack(const FpMatrix& a, const FpMatrix& b);
  static FpMatrix vstack(const FpMatrix& a, const FpMatrix& b);

  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  int p_ = 2;
  std::vector<std::uint8_t> data_;
};

int fp_inverse(int a, int p);
bool is_supported_prime(int p);

}  // namespace tfjhp
