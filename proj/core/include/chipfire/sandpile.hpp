#pragma once

#include <cstddef>
#include <vector>

#include "chipfire/engine.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

struct SandpileGroupDesc {
  std::size_t sink = 0;
  Integer order;                      // kappa(sink) = #K(G, sink)
  std::vector<Integer> invariant_factors;
  Sandpile beta;                      // beta(v) = multiplicity(sink, v)
  Integer order_of_beta;              // kappa(sink) / M
};

inline constexpr long kDefaultCosetWalkBound = 10'000;

/// The sandpile group K(G, s) realised on recurrent sandpiles.
///
/// Construction computes the recurrent identity once: the maximal stable
/// sandpile is recurrent, so raising it to the ⊕-power kappa(s) by repeated
/// doubling lands on the identity. All later queries reuse it. The object
/// holds its own copy of the graph and is immutable after construction.
class SandpileGroup {
 public:
  SandpileGroup(const DirectedMultigraph& g, std::size_t sink);

  const DirectedMultigraph& graph() const noexcept { return graph_; }
  std::size_t sink() const noexcept { return sink_; }
  const Integer& order() const noexcept { return order_; }
  const IntMatrix& reduced() const noexcept { return reduced_; }
  const Sandpile& identity() const noexcept { return identity_; }

  Sandpile stabilize(const Sandpile& eta) const;
  Sandpile max_stable() const;
  Sandpile beta() const;

  /// (eta + e_s)°, after shifting negative entries up by multiples of
  /// kappa(s)·1, which lies in the reduced Laplacian lattice.
  Sandpile recurrent_rep(const Sandpile& eta) const;

  // Throws Error{NotStable} for an unstable argument.
  bool is_recurrent(const Sandpile& eta) const;

  // eta ⊕ xi = (eta + xi)°. Throws Error{NotRecurrent}.
  Sandpile add(const Sandpile& eta, const Sandpile& xi) const;

  // k-fold ⊕ power for k >= 1, by repeated doubling. No recurrence check.
  Sandpile power(const Sandpile& eta, const Integer& k) const;

  // gamma_s = (e_s + beta_s)°.
  Sandpile gamma() const;

  /// Order of a recurrent element found by walking its cyclic orbit.
  Integer element_order(const Sandpile& recurrent) const;

  /// Least m >= 1 with m·beta in the reduced Laplacian lattice, from the
  /// denominators of the rational solution of reduced * y = beta.
  Integer order_of_beta() const;

  /// Number of cosets of <gamma_s>. Walks the orbit of gamma when
  /// kappa(s) <= walk_bound, otherwise uses order_of_beta().
  Integer coset_count(const Integer& walk_bound = kDefaultCosetWalkBound) const;

  // Same class in K(G, s).
  bool same_class(const Sandpile& eta, const Sandpile& xi) const;

  SandpileGroupDesc describe() const;

 private:
  Sandpile zero() const;

  DirectedMultigraph graph_;
  std::size_t sink_;
  IntMatrix reduced_;
  Integer order_;
  Sandpile identity_;
};

SandpileGroupDesc group_structure(const DirectedMultigraph& g, std::size_t sink);
Sandpile recurrent_identity(const DirectedMultigraph& g, std::size_t sink);
Sandpile recurrent_rep(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta);
bool is_recurrent(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta);
Sandpile add_rec(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta, const Sandpile& xi);
Sandpile gamma(const DirectedMultigraph& g, std::size_t sink);
Integer coset_count(const DirectedMultigraph& g, std::size_t sink);

/// sigma ≡ tau mod Laplacian Z^n. Throws Error{UnequalTotals}.
bool same_class_total(const DirectedMultigraph& g, const ChipConfig& sigma, const ChipConfig& tau);

// Restrictions agree modulo reduced Z^{n-1} + Z beta_s.
bool same_class_mod_beta(const SandpileGroup& group, const ChipConfig& sigma, const ChipConfig& tau);

// (sigma~ + e_s)° lies in (tau~ + e_s)° ⊕ <gamma_s>, by walking the orbit.
bool same_gamma_coset(const SandpileGroup& group, const ChipConfig& sigma, const ChipConfig& tau);

}  // namespace chipfire
