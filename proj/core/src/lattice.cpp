#include "chipfire/lattice.hpp"

#include <stdexcept>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/linalg.hpp"

namespace chipfire {
namespace {

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t m = a.rows();
  IntMatrix adj(m, m);
  if (m == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Integer minor = determinant(a.without(j, i));
      adj(i, j) = (i + j) % 2 == 0 ? minor : Integer(-minor);
    }
  return adj;
}

}  // namespace

ZeroSumLatticeBasis ZeroSumLatticeBasis::from_columns(const IntMatrix& basis) {
  const std::size_t n = basis.rows();
  if (n < 2 || basis.cols() + 1 != n) {
    throw Error(ErrorCode::DimensionMismatch, "expected an n x (n-1) basis with n >= 2");
  }
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    if (sgn(total(basis.column(j))) != 0) {
      throw Error(ErrorCode::ColumnsNotZeroSum, "column " + std::to_string(j));
    }
  }
  // Zero-sum columns are independent iff the top block is nonsingular.
  if (sgn(determinant(basis.without(n - 1, IntMatrix::npos))) == 0) {
    throw Error(ErrorCode::RankDeficient, "basis columns are linearly dependent");
  }
  return ZeroSumLatticeBasis(basis);
}

LatticeLaplacian laplacian_from_lattice(const ZeroSumLatticeBasis& lattice) {
  const std::size_t n = lattice.dimension();
  const std::size_t m = n - 1;

  ConstructionTrace t;
  t.a = lattice.basis().without(n - 1, IntMatrix::npos);
  HermiteForm hnf = hermite_normal_form(t.a);
  t.h = std::move(hnf.h);
  t.d = 1;
  for (std::size_t i = 0; i < m; ++i) t.d *= t.h(i, i);  // recomputed from H

  t.b = t.h;
  t.k.assign(m > 0 ? m - 1 : 0, 0);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    t.k[j] = ceil_div(total(t.h.column(j)), t.d);
    t.b(j + 1, j) -= t.k[j] * t.d;
  }

  IntMatrix& lap = t.laplacian;
  lap = IntMatrix(n, n);
  lap(0, 0) = t.d;
  lap(n - 1, 0) = -t.d;
  for (std::size_t j = 0; j < m; ++j) {
    Integer colsum = 0;
    for (std::size_t i = 0; i < m; ++i) {
      lap(i, j + 1) = -t.b(i, j);
      colsum += t.b(i, j);
    }
    lap(n - 1, j + 1) = colsum;
  }

  DirectedMultigraph graph = DirectedMultigraph::from_laplacian(lap);

  if (!lattice_equal(lap.without(n - 1, IntMatrix::npos), t.a)) {
    throw std::logic_error("constructed Laplacian does not generate the input lattice");
  }
  if (lap.max_abs() > Integer(n) * t.d) throw std::logic_error("Laplacian entry exceeds n*d");
  return LatticeLaplacian{std::move(graph), std::move(t)};
}

bool nonneg_rank_bruteforce(const ZeroSumLatticeBasis& lattice, const IntVector& sigma,
                            std::optional<Integer> box_bound, const Integer& max_points) {
  const std::size_t n = lattice.dimension();
  const std::size_t m = n - 1;
  if (sigma.size() != n) throw Error(ErrorCode::DimensionMismatch, "sigma length");
  const IntMatrix& basis = lattice.basis();

  IntVector bound(m);
  if (box_bound) {
    bound.assign(m, *box_bound);
  } else {
    const IntMatrix a = basis.without(n - 1, IntMatrix::npos);
    const Integer det = abs(determinant(a));
    const IntMatrix adj = adjugate(a);
    Integer surplus = total(sigma);
    if (sgn(surplus) < 0) surplus = 0;
    for (std::size_t i = 0; i < m; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j < m; ++j) acc += abs(adj(i, j)) * (abs(sigma[j]) + surplus);
      bound[i] = acc / det;
    }
  }
  Integer points = 1;
  for (const auto& b : bound) points *= 2 * b + 1;
  if (points > max_points) {
    throw Error(ErrorCode::TooLarge, "coefficient box has " + points.get_str() + " points");
  }

  IntVector c(m);
  for (std::size_t i = 0; i < m; ++i) c[i] = -bound[i];
  for (;;) {
    const IntVector rest = subtract(sigma, basis * c);
    bool nonneg = true;
    for (const auto& x : rest) {
      if (sgn(x) < 0) {
        nonneg = false;
        break;
      }
    }
    if (nonneg) return true;
    std::size_t i = 0;
    while (i < m && c[i] == bound[i]) {
      c[i] = -bound[i];
      ++i;
    }
    if (i == m) return false;
    ++c[i];
  }
}

HaltingInstance reduce_rank_to_halting(const ZeroSumLatticeBasis& lattice, const IntVector& sigma) {
  if (sigma.size() != lattice.dimension()) throw Error(ErrorCode::DimensionMismatch, "sigma length");
  LatticeLaplacian built = laplacian_from_lattice(lattice);
  ChipConfig config{subtract(max_stable(built.graph).chips, sigma)};
  return HaltingInstance{std::move(built.graph), std::move(config)};
}

}  // namespace chipfire
