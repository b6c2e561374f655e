#pragma once

#include <cstddef>

#include "chipfire/graph.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

struct GraphInvariants {
  IntVector kappa;       // oriented spanning trees rooted at each vertex
  Integer pham_index;    // gcd of kappa
  IntVector period;      // kappa / pham_index, the primitive period vector
  Integer cokernel_order;  // order of Z^n_0 / Laplacian Z^n
  bool is_eulerian = false;
  bool is_coeulerian = false;
  bool is_cactus = false;
};

/// kappa(v) = det of the reduced Laplacian at v (matrix tree theorem).
IntVector tree_count_vector(const DirectedMultigraph& g);

Integer pham_index(const DirectedMultigraph& g);

/// The unique primitive, strictly positive vector p with Laplacian * p = 0.
IntVector period_vector(const DirectedMultigraph& g);

/// Order of Z^n_0 / Laplacian Z^n, computed from the lattice alone: the
/// Laplacian columns are written in the basis {e_i - e_{n-1}} of Z^n_0 by
/// dropping the last row, and the answer is the determinant of their HNF.
/// It never looks at tree counts.
Integer cokernel_order(const DirectedMultigraph& g);

// In-degree equals out-degree everywhere.
bool is_eulerian(const DirectedMultigraph& g);

bool is_coeulerian(const DirectedMultigraph& g);

/// Loopless with exactly one oriented spanning tree toward every vertex.
/// Graphs with loops are rejected outright.
bool is_directed_cactus(const DirectedMultigraph& g);

/// Exhaustive check that every edge (each parallel copy counted separately)
/// lies on exactly one simple directed cycle. Exponential; throws
/// Error{TooLarge} above `max_vertices`.
bool ucp_bruteforce(const DirectedMultigraph& g, std::size_t max_vertices = 10);

GraphInvariants compute_invariants(const DirectedMultigraph& g);

}  // namespace chipfire
