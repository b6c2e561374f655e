#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace chipfire {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> values);

// Sign of |a| - |b|.
inline int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

Integer total(std::span<const Integer> v);
Integer gcd_of(std::span<const Integer> v);

// Floor and ceiling division; divisor must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
// Residue in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer u;
  Integer v;  // u*a + v*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

std::string to_string(const IntVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty = 0);
  static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty = 0);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;

  IntMatrix transpose() const;
  // Remove one row and/or column; pass npos to keep all.
  IntMatrix without(std::size_t row, std::size_t col) const;
  // Horizontal concatenation [this | rhs].
  IntMatrix append_columns(const IntMatrix& rhs) const;

  Integer max_abs() const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntVector operator*(const IntMatrix& m, std::span<const Integer> x);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVector subtract(std::span<const Integer> a, std::span<const Integer> b);
IntVector add(std::span<const Integer> a, std::span<const Integer> b);
IntVector scale(const Integer& k, std::span<const Integer> a);

std::string to_string(const IntMatrix& m);

}  // namespace chipfire
