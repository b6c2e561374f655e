#pragma once

#include <cstddef>
#include <optional>

#include "chipfire/engine.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

/// Basis of an (n-1)-dimensional lattice inside Z^n_0: an n x (n-1) matrix
/// whose columns each sum to zero and are linearly independent.
class ZeroSumLatticeBasis {
 public:
  /// Throws Error{DimensionMismatch, ColumnsNotZeroSum, RankDeficient}.
  static ZeroSumLatticeBasis from_columns(const IntMatrix& basis);

  std::size_t dimension() const noexcept { return basis_.rows(); }  // n
  const IntMatrix& basis() const noexcept { return basis_; }

 private:
  explicit ZeroSumLatticeBasis(IntMatrix basis) : basis_(std::move(basis)) {}
  IntMatrix basis_;
};

/// Intermediate values of the lattice-to-Laplacian construction.
struct ConstructionTrace {
  IntMatrix a;          // basis with its last row removed, nonsingular
  IntMatrix h;          // lower-triangular HNF of a
  Integer d;            // det h
  IntVector k;          // subdiagonal multipliers, (k_j - 1) d < colsum_j(h) <= k_j d
  IntMatrix b;          // h with k_j d subtracted just below the diagonal
  IntMatrix laplacian;  // n x n output
};

struct LatticeLaplacian {
  DirectedMultigraph graph;
  ConstructionTrace trace;
};

/// Builds a strongly connected multigraph whose Laplacian column lattice is
/// exactly L.
///
/// The first column of the Laplacian is d e_1 - d e_n, the upper-right block
/// is -b, and the bottom row restores zero column sums. Every entry is at
/// most n·d in magnitude, and the graph contains the Hamiltonian cycle
/// 0 -> n-1 -> n-2 -> ... -> 0. The lattice equality is re-checked before
/// returning.
LatticeLaplacian laplacian_from_lattice(const ZeroSumLatticeBasis& lattice);

/// Test oracle for nonnegative rank: searches coefficient vectors c with
/// |c_i| <= bound_i for sigma - basis·c >= 0.
///
/// Without an explicit `box_bound` each bound_i is derived so the search is
/// provably exhaustive: any witness tau >= 0 has |tau| = |sigma|, which caps
/// |sigma - tau| and therefore c = A^{-1}(sigma - tau) through the adjugate.
/// Throws Error{TooLarge} when the box has more than `max_points` points.
bool nonneg_rank_bruteforce(const ZeroSumLatticeBasis& lattice, const IntVector& sigma,
                            std::optional<Integer> box_bound = std::nullopt,
                            const Integer& max_points = Integer(20'000'000));

struct HaltingInstance {
  DirectedMultigraph graph;
  ChipConfig config;  // sigma_max - sigma, possibly negative
};

/// Karp reduction: sigma has nonnegative rank relative to L iff the returned
/// configuration stabilizes on the returned graph.
HaltingInstance reduce_rank_to_halting(const ZeroSumLatticeBasis& lattice, const IntVector& sigma);

}  // namespace chipfire
