#include "chipfire/linalg.hpp"

#include <algorithm>
#include <utility>

#include "chipfire/error.hpp"

namespace chipfire {
namespace {

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// col_dst -= q * col_src, touching rows >= from_row.
void column_axpy(IntMatrix& m, std::size_t dst, const Integer& q, std::size_t src,
                 std::size_t from_row = 0) {
  if (sgn(q) == 0) return;
  for (std::size_t r = from_row; r < m.rows(); ++r) {
    if (sgn(m(r, src)) != 0) m(r, dst) -= q * m(r, src);
  }
}

// Unimodular 2-column step zeroing m(row, j) into m(row, p).
//   col_p <- u col_p + v col_j,   col_j <- (a/g) col_j - (b/g) col_p
void combine_columns(IntMatrix& m, std::size_t row, std::size_t p, std::size_t j) {
  const Integer a = m(row, p);
  const Integer b = m(row, j);
  const ExtendedGcd e = extended_gcd(a, b);
  const Integer ag = a / e.g;
  const Integer bg = b / e.g;
  for (std::size_t r = row; r < m.rows(); ++r) {
    const Integer cp = m(r, p);
    const Integer cj = m(r, j);
    m(r, p) = e.u * cp + e.v * cj;
    m(r, j) = ag * cj - bg * cp;
  }
}

struct StatsTracker {
  HermiteStats* stats;
  void see(const Integer& x) {
    if (stats && cmpabs(x, stats->max_stored_entry) > 0) stats->max_stored_entry = abs(x);
  }
};

// Rational row reduction; returns pivot columns.
std::vector<std::size_t> rational_pivots(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> w(rows, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) w[r][c] = Rational(m(r, c));
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t sel = prow;
    while (sel < rows && sgn(w[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(w[sel], w[prow]);
    for (std::size_t r = prow + 1; r < rows; ++r) {
      if (sgn(w[r][c]) == 0) continue;
      const Rational f = w[r][c] / w[prow][c];
      for (std::size_t k = c; k < cols; ++k) w[r][k] -= f * w[prow][k];
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorCode::NotSquare, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t sel = k + 1;
      while (sel < n && sgn(a(sel, k)) == 0) ++sel;
      if (sel == n) return 0;
      swap_rows(a, k, sel);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) { return rational_pivots(m).size(); }

std::vector<std::size_t> independent_columns(const IntMatrix& m) { return rational_pivots(m); }

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Integer> b) {
  if (!a.square()) throw Error(ErrorCode::NotSquare, "solve_rational");
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_rational");
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w[r][c] = Rational(a(r, c));
    w[r][n] = Rational(b[r]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && sgn(w[sel][c]) == 0) ++sel;
    if (sel == n) return std::nullopt;
    std::swap(w[sel], w[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(w[r][c]) == 0) continue;
      const Rational f = w[r][c] / w[c][c];
      for (std::size_t k = c; k <= n; ++k) w[r][k] -= f * w[c][k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t r = 0; r < n; ++r) {
    x[r] = w[r][n] / w[r][r];
    x[r].canonicalize();
  }
  return x;
}

IntMatrix hermite_normal_form_mod(const IntMatrix& generators, const Integer& modulus,
                                  HermiteStats* stats) {
  const std::size_t m = generators.rows();
  const std::size_t k = generators.cols();
  if (k < m) throw Error(ErrorCode::RankDeficient, "fewer generators than rows");
  if (sgn(modulus) <= 0) throw Error(ErrorCode::SingularMatrix, "modulus must be positive");
  StatsTracker track{stats};
  if (stats) {
    stats->modulus = modulus;
    stats->max_stored_entry = 0;
  }

  IntMatrix w = generators;
  Integer r_mod = modulus;
  auto reduce_column = [&](std::size_t col, std::size_t from_row) {
    for (std::size_t r = from_row; r < m; ++r) {
      w(r, col) = mod_floor(w(r, col), r_mod);
      track.see(w(r, col));
    }
  };
  for (std::size_t c = 0; c < k; ++c) reduce_column(c, 0);

  IntMatrix h(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    // Pivot column for row i is column i; earlier columns are already spent.
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sgn(w(i, j)) == 0) continue;
      if (sgn(w(i, i)) == 0) {
        swap_columns(w, i, j);
        continue;
      }
      combine_columns(w, i, i, j);
      reduce_column(i, i);
      reduce_column(j, i);
    }
    const ExtendedGcd e = extended_gcd(w(i, i), r_mod);
    for (std::size_t r = i; r < m; ++r) {
      h(r, i) = mod_floor(e.u * w(r, i), r_mod);
      track.see(h(r, i));
    }
    if (sgn(h(i, i)) == 0) h(i, i) = r_mod;
    r_mod /= e.g;
  }

  // Lower-triangular with the right diagonal and columns in L, so adding
  // multiples of det(L) e_r below the diagonal keeps the span. Reduce each
  // row against its pivot, then keep lower entries modulo det.
  Integer det = 1;
  for (std::size_t i = 0; i < m; ++i) det *= h(i, i);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Integer q = floor_div(h(i, j), h(i, i));
      column_axpy(h, j, q, i, i);
      for (std::size_t r = i + 1; r < m; ++r) {
        h(r, j) = mod_floor(h(r, j), det);
        track.see(h(r, j));
      }
      track.see(h(i, j));
    }
  }
  return h;
}

HermiteForm hermite_normal_form(const IntMatrix& a, HermiteStats* stats) {
  if (!a.square()) throw Error(ErrorCode::NotSquare, "hermite_normal_form");
  const Integer d = abs(determinant(a));
  if (sgn(d) == 0) throw Error(ErrorCode::SingularMatrix, "hermite_normal_form");
  HermiteForm out{hermite_normal_form_mod(a, d, stats), 1};
  for (std::size_t i = 0; i < a.rows(); ++i) out.det *= out.h(i, i);
  if (out.det != d) throw std::logic_error("modular HNF lost the determinant");
  return out;
}

namespace detail {

ColumnEchelon column_echelon_form_direct(const IntMatrix& generators) {
  IntMatrix w = generators;
  const std::size_t m = w.rows();
  const std::size_t k = w.cols();
  std::vector<std::size_t> pivots;
  std::size_t c = 0;
  for (std::size_t r = 0; r < m && c < k; ++r) {
    for (std::size_t j = c + 1; j < k; ++j) {
      if (sgn(w(r, j)) == 0) continue;
      if (sgn(w(r, c)) == 0) {
        swap_columns(w, c, j);
        continue;
      }
      combine_columns(w, r, c, j);
    }
    if (sgn(w(r, c)) == 0) continue;
    if (sgn(w(r, c)) < 0) {
      for (std::size_t i = r; i < m; ++i) w(i, c) = -w(i, c);
    }
    for (std::size_t j = 0; j < c; ++j) column_axpy(w, j, floor_div(w(r, j), w(r, c)), c, r);
    pivots.push_back(r);
    ++c;
  }
  IntMatrix basis(m, c);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < c; ++j) basis(i, j) = w(i, j);
  return {std::move(basis), std::move(pivots)};
}

}  // namespace detail

ColumnEchelon column_echelon_form(const IntMatrix& generators) {
  const std::size_t m = generators.rows();
  const auto cols = independent_columns(generators);
  if (m == 0 || cols.size() < m) return detail::column_echelon_form_direct(generators);

  // Full row rank: the independent square block bounds the lattice determinant.
  IntMatrix block(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) block(i, j) = generators(i, cols[j]);
  const Integer d = abs(determinant(block));
  ColumnEchelon out{hermite_normal_form_mod(generators, d), {}};
  for (std::size_t i = 0; i < m; ++i) out.pivot_rows.push_back(i);
  return out;
}

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  SmithForm out;
  for (std::size_t t = 0; t < std::min(m, k); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = m, pc = k;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < k; ++j) {
          if (sgn(a(i, j)) != 0 && (pr == m || cmpabs(a(i, j), a(pr, pc)) < 0)) {
            pr = i;
            pc = j;
          }
        }
      if (pr == m) return out;
      swap_rows(a, t, pr);
      swap_columns(a, t, pc);

      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        const Integer q = floor_div(a(i, t), a(t, t));
        for (std::size_t j = t; j < k; ++j) a(i, j) -= q * a(t, j);
        if (sgn(a(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < k; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        column_axpy(a, j, floor_div(a(t, j), a(t, t)), t);
        if (sgn(a(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility by folding an offending row into row t.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < k; ++j) {
          if (sgn(a(i, j) % a(t, t)) != 0) {
            bad = i;
            break;
          }
        }
      if (bad == m) break;
      for (std::size_t j = t; j < k; ++j) a(t, j) += a(bad, j);
    }
    out.factors.push_back(abs(a(t, t)));
    ++out.rank;
  }
  return out;
}

bool lattice_contains(const IntMatrix& generators, std::span<const Integer> v) {
  if (v.size() != generators.rows()) throw Error(ErrorCode::DimensionMismatch, "lattice_contains");
  const ColumnEchelon e = column_echelon_form(generators);
  IntVector rest(v.begin(), v.end());
  std::size_t next = 0;
  for (std::size_t r = 0; r < rest.size(); ++r) {
    if (next < e.pivot_rows.size() && e.pivot_rows[next] == r) {
      const Integer& p = e.basis(r, next);
      if (sgn(rest[r] % p) != 0) return false;
      const Integer q = rest[r] / p;
      for (std::size_t i = r; i < rest.size(); ++i) rest[i] -= q * e.basis(i, next);
      ++next;
    } else if (sgn(rest[r]) != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "lattice_equal");
  const ColumnEchelon ea = column_echelon_form(a);
  const ColumnEchelon eb = column_echelon_form(b);
  return ea.pivot_rows == eb.pivot_rows && ea.basis == eb.basis;
}

}  // namespace chipfire
