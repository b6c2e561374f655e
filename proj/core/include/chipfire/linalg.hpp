#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "chipfire/integer.hpp"

namespace chipfire {

using Rational = mpq_class;

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Every intermediate value is a minor of the input, so entries stay bounded
/// by Hadamard's inequality. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

// Indices of a maximal set of linearly independent columns, chosen greedily
// from the left.
std::vector<std::size_t> independent_columns(const IntMatrix& m);

// Unique solution of a x = b for square nonsingular a; nullopt if singular.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Integer> b);

/// Lower-triangular Hermite normal form H = AU of a nonsingular square matrix:
/// h_ii > 0, 0 <= h_ij < h_ii for j < i, and H Z^m = A Z^m.
struct HermiteForm {
  IntMatrix h;
  Integer det;  // product of the diagonal, equal to |det A|
};

// Instrumentation for the modular HNF. `max_stored_entry` is the largest
// magnitude ever written back into the working matrix.
struct HermiteStats {
  Integer modulus;
  Integer max_stored_entry;
};

/// Throws Error{NotSquare, SingularMatrix}. Entries of the working matrix are
/// kept reduced modulo |det A| throughout, so they never exceed it.
HermiteForm hermite_normal_form(const IntMatrix& a, HermiteStats* stats = nullptr);

/// Modular HNF of the lattice generated by the columns of an m x k matrix of
/// rank m. `modulus` must be a positive multiple of the lattice determinant
/// (for instance |det| of any nonsingular m x m column subset). Returns the
/// m x m lower-triangular HNF.
IntMatrix hermite_normal_form_mod(const IntMatrix& generators, const Integer& modulus,
                                  HermiteStats* stats = nullptr);

/// Canonical column-echelon basis of the lattice generated by arbitrary
/// integer columns. Column j has its leading nonzero entry at pivot_rows[j],
/// that entry is positive, and entries of earlier columns in that row are
/// reduced into [0, pivot). Two generating sets span the same lattice iff
/// their echelon bases are equal.
struct ColumnEchelon {
  IntMatrix basis;  // rows x rank
  std::vector<std::size_t> pivot_rows;
};
ColumnEchelon column_echelon_form(const IntMatrix& generators);

namespace detail {
// Plain extended-gcd column elimination with no modular reduction.
ColumnEchelon column_echelon_form_direct(const IntMatrix& generators);
}  // namespace detail

/// Invariant factors d_1 | d_2 | ... | d_r of the cokernel Z^rows / M Z^cols,
/// listed with the unit factors, r = rank(M).
struct SmithForm {
  std::vector<Integer> factors;
  std::size_t rank = 0;
};
SmithForm smith_normal_form(const IntMatrix& m);

/// True iff v is an integer combination of the columns of `generators`.
/// Throws Error{DimensionMismatch}.
bool lattice_contains(const IntMatrix& generators, std::span<const Integer> v);

// True iff both column sets generate the same lattice. Throws DimensionMismatch.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

}  // namespace chipfire
