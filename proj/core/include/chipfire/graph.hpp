#pragma once

#include <cstddef>
#include <vector>

#include "chipfire/integer.hpp"

namespace chipfire {

/// A finite, strongly connected directed multigraph with loops allowed.
///
/// Vertices are 0..n-1 and `multiplicity(v, w)` counts the edges v -> w.
/// Instances are only produced by the validating factories, so every
/// DirectedMultigraph has n >= 1, positive outdegrees and a single strongly
/// connected component. Values are immutable after construction.
class DirectedMultigraph {
 public:
  /// Throws Error{NotSquare, NegativeMultiplicity, ZeroOutdegree, NotStronglyConnected}.
  static DirectedMultigraph from_adjacency(const IntMatrix& adjacency);

  /// Builds the loopless multigraph whose total Laplacian is `laplacian`
  /// (columns summing to zero, nonnegative diagonal, nonpositive off-diagonal).
  static DirectedMultigraph from_laplacian(const IntMatrix& laplacian);

  std::size_t vertex_count() const noexcept { return adjacency_.rows(); }
  const IntMatrix& adjacency() const noexcept { return adjacency_; }
  const Integer& multiplicity(std::size_t from, std::size_t to) const { return adjacency_(from, to); }

  const Integer& outdegree(std::size_t v) const { return outdegree_[v]; }
  const Integer& indegree(std::size_t v) const { return indegree_[v]; }
  const IntVector& outdegrees() const noexcept { return outdegree_; }

  /// #E, counting loops and parallel edges.
  const Integer& edge_count() const noexcept { return edge_count_; }
  bool has_loops() const;

  friend bool operator==(const DirectedMultigraph& a, const DirectedMultigraph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  explicit DirectedMultigraph(IntMatrix adjacency);

  IntMatrix adjacency_;
  IntVector outdegree_;
  IntVector indegree_;
  Integer edge_count_;
};

// Single SCC test on the support of a square matrix (entry > 0 means an edge).
bool is_strongly_connected(const IntMatrix& adjacency);

/// Total Laplacian: L(v,v) = d_v - d_vv and L(v,w) = -d_wv for v != w.
/// Firing v subtracts column v, and every column sums to zero.
IntMatrix laplacian(const DirectedMultigraph& g);

// Laplacian with row and column `sink` struck out.
IntMatrix reduced_laplacian(const DirectedMultigraph& g, std::size_t sink);

void check_vertex(const DirectedMultigraph& g, std::size_t v);

}  // namespace chipfire
