#include <gtest/gtest.h>

#include "chipfire/chipfire.hpp"
#include "error_matchers.hpp"
#include "oracles.hpp"

namespace chipfire {
namespace {

using testing::Rng;

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
  return m;
}

bool is_lower_hermite(const IntMatrix& h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (sgn(h(i, i)) <= 0) return false;
    for (std::size_t j = 0; j < h.cols(); ++j) {
      if (j > i && sgn(h(i, j)) != 0) return false;
      if (j < i && (sgn(h(i, j)) < 0 || h(i, j) >= h(i, i))) return false;
    }
  }
  return true;
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{7}}), 7);
  EXPECT_EQ(determinant(IntMatrix{{2, -1}, {-1, 2}}), 3);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_CHIPFIRE_ERROR(determinant(IntMatrix(2, 3)), ErrorCode::NotSquare);
}

TEST(Determinant, MatchesCofactorExpansion) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = random_matrix(rng, n, n, 9);
    EXPECT_EQ(determinant(m), testing::cofactor_determinant(m)) << to_string(m);
  }
}

TEST(Determinant, LargeEntriesStayExact) {
  IntMatrix m{{1, 0}, {0, 1}};
  m(0, 0) = Integer("123456789012345678901234567890");
  m(1, 1) = Integer("987654321098765432109876543210");
  m(0, 1) = 5;
  m(1, 0) = 3;
  EXPECT_EQ(determinant(m), m(0, 0) * m(1, 1) - 15);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(rank(IntMatrix{{1, 0, 1}, {0, 1, 1}}), 2u);
  EXPECT_EQ(rank(IntMatrix(3, 2)), 0u);
  EXPECT_EQ(independent_columns(IntMatrix{{1, 2, 0}, {1, 2, 1}}), (std::vector<std::size_t>{0, 2}));
}

TEST(SolveRational, Examples) {
  const auto x = solve_rational(IntMatrix{{2, 0}, {0, 4}}, make_vector({1, 2}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ((*x)[0], Rational(1, 2));
  EXPECT_EQ((*x)[1], Rational(1, 2));
  EXPECT_FALSE(solve_rational(IntMatrix{{1, 2}, {2, 4}}, make_vector({1, 0})).has_value());
}

TEST(Hermite, KnownExample) {
  // Lattice spanned by (2, 1) and (0, 3): already in lower Hermite form.
  const HermiteForm f = hermite_normal_form(IntMatrix{{2, 0}, {1, 3}});
  EXPECT_EQ(f.h, (IntMatrix{{2, 0}, {1, 3}}));
  EXPECT_EQ(f.det, 6);
  // Columns (4, 2) and (2, 4): det 12, HNF diagonal (2, 6).
  const HermiteForm g = hermite_normal_form(IntMatrix{{4, 2}, {2, 4}});
  EXPECT_EQ(g.det, 12);
  EXPECT_EQ(g.h, (IntMatrix{{2, 0}, {4, 6}}));
}

TEST(Hermite, Errors) {
  EXPECT_CHIPFIRE_ERROR(hermite_normal_form(IntMatrix(2, 3)), ErrorCode::NotSquare);
  EXPECT_CHIPFIRE_ERROR(hermite_normal_form(IntMatrix{{1, 2}, {2, 4}}), ErrorCode::SingularMatrix);
}

TEST(Hermite, PropertiesOnRandomMatrices) {
  Rng rng(12);
  int checked = 0;
  while (checked < 150) {
    const std::size_t n = 1 + checked % 6;
    const IntMatrix a = random_matrix(rng, n, n, 20);
    const Integer det = testing::cofactor_determinant(a);
    if (sgn(det) == 0) continue;
    ++checked;
    HermiteStats stats;
    const HermiteForm f = hermite_normal_form(a, &stats);
    EXPECT_TRUE(is_lower_hermite(f.h)) << to_string(f.h);
    EXPECT_EQ(f.det, abs(det));
    Integer diag = 1;
    for (std::size_t i = 0; i < n; ++i) diag *= f.h(i, i);
    EXPECT_EQ(diag, abs(det));
    // Same lattice: each side's columns are integer combinations of the other.
    for (std::size_t c = 0; c < n; ++c) {
      EXPECT_TRUE(testing::rational_lattice_contains(a, f.h.column(c)));
      EXPECT_TRUE(testing::rational_lattice_contains(f.h, a.column(c)));
    }
    EXPECT_EQ(stats.modulus, abs(det));
    EXPECT_LE(cmpabs(stats.max_stored_entry, stats.modulus), 0);
    // Canonical: the direct elimination path gives the identical basis.
    EXPECT_EQ(detail::column_echelon_form_direct(a).basis, f.h);
  }
}

TEST(Hermite, ModularAgreesWithDirectOnWideGenerators) {
  Rng rng(13);
  int checked = 0;
  while (checked < 100) {
    const std::size_t m = 1 + checked % 4;
    const IntMatrix gens = random_matrix(rng, m, m + 2, 15);
    if (rank(gens) != m) continue;
    ++checked;
    const ColumnEchelon direct = detail::column_echelon_form_direct(gens);
    const ColumnEchelon fast = column_echelon_form(gens);
    EXPECT_EQ(direct.basis, fast.basis) << to_string(gens);
    EXPECT_EQ(direct.pivot_rows, fast.pivot_rows);
  }
}

TEST(ColumnEchelon, RankDeficientGenerators) {
  const IntMatrix gens{{1, 2, 3}, {2, 4, 6}, {0, 0, 1}};
  const ColumnEchelon e = column_echelon_form(gens);
  EXPECT_EQ(e.basis.cols(), 2u);
  for (std::size_t c = 0; c < gens.cols(); ++c) EXPECT_TRUE(lattice_contains(e.basis, gens.column(c)));
}

TEST(Smith, KnownExamples) {
  const SmithForm lap = smith_normal_form(IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  EXPECT_EQ(lap.factors, (std::vector<Integer>{1, 3}));
  EXPECT_EQ(lap.rank, 2u);
  const SmithForm s = smith_normal_form(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.factors, (std::vector<Integer>{2, 6, 12}));
  EXPECT_EQ(s.rank, 3u);
}

TEST(Smith, TorsionCountsMatchEnumeration) {
  // #{x : t x in M Z^k} = prod gcd(t, d_i) for nonsingular M.
  Rng rng(14);
  int checked = 0;
  while (checked < 40) {
    const std::size_t k = 1 + checked % 3;
    const IntMatrix m = random_matrix(rng, k, k, 4);
    const Integer det = abs(testing::cofactor_determinant(m));
    if (sgn(det) == 0 || det > 40) continue;
    ++checked;
    const SmithForm s = smith_normal_form(m);
    Integer prod = 1;
    for (const auto& f : s.factors) prod *= f;
    EXPECT_EQ(prod, det);
    for (std::size_t i = 1; i < s.factors.size(); ++i) EXPECT_EQ(s.factors[i] % s.factors[i - 1], 0);
    for (long t : {2L, 3L, 4L, 6L}) {
      Integer expected = 1;
      for (const auto& f : s.factors) expected *= gcd(Integer(t), f);
      EXPECT_EQ(testing::brute_torsion_count(m, t), expected) << to_string(m) << " t=" << t;
    }
  }
}

TEST(Lattice, ContainsAndEqual) {
  const IntMatrix l{{2, 0}, {0, 3}};
  EXPECT_TRUE(lattice_contains(l, make_vector({4, -3})));
  EXPECT_FALSE(lattice_contains(l, make_vector({1, 0})));
  EXPECT_TRUE(lattice_equal(l, IntMatrix{{2, 2, 4}, {3, 0, 3}}));
  EXPECT_FALSE(lattice_equal(l, IntMatrix{{1, 0}, {0, 3}}));
  EXPECT_CHIPFIRE_ERROR(lattice_contains(l, make_vector({1, 2, 3})), ErrorCode::DimensionMismatch);
  EXPECT_CHIPFIRE_ERROR(lattice_equal(l, IntMatrix(3, 1)), ErrorCode::DimensionMismatch);
}

TEST(Lattice, MembershipMatchesRationalSolve) {
  Rng rng(15);
  int checked = 0;
  while (checked < 100) {
    const std::size_t n = 2 + checked % 3;
    const IntMatrix a = random_matrix(rng, n, n, 6);
    if (sgn(testing::cofactor_determinant(a)) == 0) continue;
    ++checked;
    const IntVector v = testing::random_vector(rng, n, -10, 10);
    EXPECT_EQ(lattice_contains(a, v), testing::rational_lattice_contains(a, v));
  }
}

TEST(IntegerHelpers, DivisionAndGcd) {
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(ceil_div(Integer(-7), Integer(2)), -3);
  EXPECT_EQ(ceil_div(Integer(7), Integer(2)), 4);
  EXPECT_EQ(mod_floor(Integer(-7), Integer(3)), 2);
  EXPECT_EQ(gcd_of(make_vector({12, -18, 30})), 6);
  const ExtendedGcd e = extended_gcd(Integer(240), Integer(46));
  EXPECT_EQ(e.g, 2);
  EXPECT_EQ(e.u * 240 + e.v * 46, 2);
}

}  // namespace
}  // namespace chipfire
