#include "chipfire/integer.hpp"

#include <cassert>
#include <sstream>

#include "chipfire/error.hpp"

namespace chipfire {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

Integer total(std::span<const Integer> v) {
  Integer sum = 0;
  for (const auto& x : v) sum += x;
  return sum;
}

Integer gcd_of(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  ExtendedGcd out;
  mpz_gcdext(out.g.get_mpz_t(), out.u.get_mpz_t(), out.v.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols_if_empty) {
  const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty) {
  const std::size_t rows = cols.empty() ? rows_if_empty : cols.front().size();
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "ragged columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::without(std::size_t row, std::size_t col) const {
  const std::size_t nr = rows_ - (row < rows_ ? 1 : 0);
  const std::size_t nc = cols_ - (col < cols_ ? 1 : 0);
  IntMatrix out(nr, nc);
  for (std::size_t r = 0, orow = 0; r < rows_; ++r) {
    if (r == row) continue;
    for (std::size_t c = 0, ocol = 0; c < cols_; ++c) {
      if (c == col) continue;
      out(orow, ocol++) = (*this)(r, c);
    }
    ++orow;
  }
  return out;
}

IntMatrix IntMatrix::append_columns(const IntMatrix& rhs) const {
  if (rhs.rows_ != rows_) throw Error(ErrorCode::DimensionMismatch, "append_columns");
  IntMatrix out(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, cols_ + c) = rhs(r, c);
  }
  return out;
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : data_) {
    if (cmpabs(x, best) > 0) best = abs(x);
  }
  return best;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

IntVector operator*(const IntMatrix& m, std::span<const Integer> x) {
  if (x.size() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
  IntVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(x[c]) != 0) acc += m(r, c) * x[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector subtract(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector subtract");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector add");
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector scale(const Integer& k, std::span<const Integer> a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << to_string(m.row(r));
  }
  os << ']';
  return os.str();
}

}  // namespace chipfire
