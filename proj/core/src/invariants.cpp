#include "chipfire/invariants.hpp"

#include <stdexcept>
#include <vector>

#include "chipfire/error.hpp"
#include "chipfire/linalg.hpp"

namespace chipfire {
namespace {

bool is_zero_vector(const IntVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

// Weighted count of simple paths from `at` to `target` avoiding `used`,
// each path weighted by the product of its edge multiplicities.
Integer count_simple_paths(const DirectedMultigraph& g, std::size_t at, std::size_t target,
                           std::vector<bool>& used) {
  if (at == target) return 1;
  Integer count = 0;
  used[at] = true;
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    if (used[w] || w == at || sgn(g.multiplicity(at, w)) == 0) continue;
    count += g.multiplicity(at, w) * count_simple_paths(g, w, target, used);
  }
  used[at] = false;
  return count;
}

}  // namespace

IntVector tree_count_vector(const DirectedMultigraph& g) {
  const IntMatrix lap = laplacian(g);
  IntVector kappa(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) kappa[v] = determinant(lap.without(v, v));
  return kappa;
}

Integer pham_index(const DirectedMultigraph& g) { return gcd_of(tree_count_vector(g)); }

IntVector period_vector(const DirectedMultigraph& g) {
  IntVector kappa = tree_count_vector(g);
  const Integer m = gcd_of(kappa);
  for (auto& k : kappa) {
    mpz_divexact(k.get_mpz_t(), k.get_mpz_t(), m.get_mpz_t());
    if (sgn(k) <= 0) throw std::logic_error("period vector must be strictly positive");
  }
  if (!is_zero_vector(laplacian(g) * kappa)) throw std::logic_error("period vector not in kernel");
  return kappa;
}

Integer cokernel_order(const DirectedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  const IntMatrix projected = laplacian(g).without(n - 1, IntMatrix::npos);
  const ColumnEchelon e = column_echelon_form(projected);
  if (e.pivot_rows.size() != n - 1) throw std::logic_error("Laplacian rank is not n-1");
  Integer order = 1;
  for (std::size_t j = 0; j < e.pivot_rows.size(); ++j) order *= e.basis(e.pivot_rows[j], j);
  return order;
}

bool is_eulerian(const DirectedMultigraph& g) {
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.indegree(v) != g.outdegree(v)) return false;
  }
  return true;
}

bool is_coeulerian(const DirectedMultigraph& g) { return pham_index(g) == 1; }

bool is_directed_cactus(const DirectedMultigraph& g) {
  if (g.has_loops()) return false;
  for (const auto& k : tree_count_vector(g)) {
    if (k != 1) return false;
  }
  return true;
}

bool ucp_bruteforce(const DirectedMultigraph& g, std::size_t max_vertices) {
  const std::size_t n = g.vertex_count();
  if (n > max_vertices) {
    throw Error(ErrorCode::TooLarge, "ucp_bruteforce limited to " + std::to_string(max_vertices) + " vertices");
  }
  std::vector<bool> used(n, false);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (sgn(g.multiplicity(u, v)) == 0) continue;
      // Cycles through one copy of u -> v correspond to simple paths v ~> u.
      if (u == v) continue;  // a loop is its own unique cycle
      if (count_simple_paths(g, v, u, used) != 1) return false;
    }
  return true;
}

GraphInvariants compute_invariants(const DirectedMultigraph& g) {
  GraphInvariants out;
  out.kappa = tree_count_vector(g);
  out.pham_index = gcd_of(out.kappa);
  out.period = out.kappa;
  for (auto& p : out.period) p /= out.pham_index;
  out.cokernel_order = cokernel_order(g);
  out.is_eulerian = is_eulerian(g);
  out.is_coeulerian = out.pham_index == 1;
  out.is_cactus = !g.has_loops() && out.is_eulerian && out.is_coeulerian;
  return out;
}

}  // namespace chipfire
