#include "chipfire/sandpile.hpp"

#include <algorithm>
#include <stdexcept>

#include "chipfire/error.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/linalg.hpp"

namespace chipfire {
namespace {

std::size_t nonsink_vertex(std::size_t index, std::size_t sink) { return index < sink ? index : index + 1; }

void check_length(const SandpileGroup& grp, const Sandpile& eta) {
  if (eta.size() + 1 != grp.graph().vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch, "sandpile length");
  }
}

void check_equal_totals(const ChipConfig& sigma, const ChipConfig& tau) {
  if (sigma.size() != tau.size()) throw Error(ErrorCode::DimensionMismatch, "configuration lengths");
  if (sigma.total() != tau.total()) throw Error(ErrorCode::UnequalTotals, "|sigma| != |tau|");
}

}  // namespace

SandpileGroup::SandpileGroup(const DirectedMultigraph& g, std::size_t sink)
    : graph_(g), sink_(sink) {
  check_vertex(g, sink);
  reduced_ = reduced_laplacian(g, sink);
  order_ = determinant(reduced_);
  identity_ = power(max_stable(), order_);
  if (!lattice_contains(reduced_, identity_.grains)) {
    throw std::logic_error("recurrent identity is not in the reduced Laplacian lattice");
  }
}

Sandpile SandpileGroup::zero() const { return Sandpile{IntVector(graph_.vertex_count() - 1, 0)}; }

Sandpile SandpileGroup::stabilize(const Sandpile& eta) const {
  return stabilize_with_sink(graph_, sink_, eta).stable;
}

Sandpile SandpileGroup::max_stable() const {
  Sandpile out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out.grains[i] = graph_.outdegree(nonsink_vertex(i, sink_)) - 1;
  return out;
}

Sandpile SandpileGroup::beta() const {
  Sandpile out = zero();
  for (std::size_t i = 0; i < out.size(); ++i) out.grains[i] = graph_.multiplicity(sink_, nonsink_vertex(i, sink_));
  return out;
}

Sandpile SandpileGroup::power(const Sandpile& eta, const Integer& k) const {
  if (sgn(k) <= 0) throw std::invalid_argument("power exponent must be positive");
  Sandpile result = eta;
  for (std::size_t bit = mpz_sizeinbase(k.get_mpz_t(), 2) - 1; bit-- > 0;) {
    result = stabilize(Sandpile{chipfire::add(result.grains, result.grains)});
    if (mpz_tstbit(k.get_mpz_t(), bit)) result = stabilize(Sandpile{chipfire::add(result.grains, eta.grains)});
  }
  return result;
}

Sandpile SandpileGroup::recurrent_rep(const Sandpile& eta) const {
  check_length(*this, eta);
  Sandpile shifted = eta;
  Integer lowest = 0;
  for (const auto& x : eta.grains) lowest = std::min(lowest, x);
  if (sgn(lowest) < 0) {
    const Integer lift = ceil_div(-lowest, order_) * order_;
    for (auto& x : shifted.grains) x += lift;
  }
  return stabilize(Sandpile{chipfire::add(shifted.grains, identity_.grains)});
}

bool SandpileGroup::is_recurrent(const Sandpile& eta) const {
  check_length(*this, eta);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta.grains[i] >= graph_.outdegree(nonsink_vertex(i, sink_))) {
      throw Error(ErrorCode::NotStable, "is_recurrent needs a stable sandpile");
    }
  }
  return stabilize(Sandpile{chipfire::add(eta.grains, identity_.grains)}) == eta;
}

Sandpile SandpileGroup::add(const Sandpile& eta, const Sandpile& xi) const {
  for (const Sandpile* s : {&eta, &xi}) {
    bool ok = false;
    try {
      ok = is_recurrent(*s);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotStable) throw;
    }
    if (!ok) throw Error(ErrorCode::NotRecurrent, to_string(s->grains));
  }
  return stabilize(Sandpile{chipfire::add(eta.grains, xi.grains)});
}

Sandpile SandpileGroup::gamma() const { return stabilize(Sandpile{chipfire::add(identity_.grains, beta().grains)}); }

Integer SandpileGroup::element_order(const Sandpile& recurrent) const {
  Integer k = 1;
  Sandpile walk = recurrent;
  while (!(walk == identity_)) {
    walk = stabilize(Sandpile{chipfire::add(walk.grains, recurrent.grains)});
    ++k;
    if (k > order_) throw std::logic_error("element order exceeds the group order");
  }
  return k;
}

Integer SandpileGroup::order_of_beta() const {
  if (reduced_.rows() == 0) return 1;
  const auto y = solve_rational(reduced_, beta().grains);
  if (!y) throw std::logic_error("reduced Laplacian is singular");
  Integer m = 1;
  for (const auto& q : *y) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den_mpz_t());
  return m;
}

Integer SandpileGroup::coset_count(const Integer& walk_bound) const {
  const Integer ord = order_ <= walk_bound ? element_order(gamma()) : order_of_beta();
  return order_ / ord;
}

bool SandpileGroup::same_class(const Sandpile& eta, const Sandpile& xi) const {
  check_length(*this, eta);
  check_length(*this, xi);
  return lattice_contains(reduced_, subtract(eta.grains, xi.grains));
}

SandpileGroupDesc SandpileGroup::describe() const {
  SandpileGroupDesc d;
  d.sink = sink_;
  d.order = order_;
  d.invariant_factors = smith_normal_form(reduced_).factors;
  d.beta = beta();
  d.order_of_beta = order_of_beta();
  if (!lattice_contains(reduced_, scale(d.order_of_beta, d.beta.grains))) {
    throw std::logic_error("order_of_beta * beta is not in the reduced lattice");
  }
  if (d.order_of_beta != period_vector(graph_)[sink_]) {
    throw std::logic_error("order of beta differs from the period vector entry at the sink");
  }
  return d;
}

SandpileGroupDesc group_structure(const DirectedMultigraph& g, std::size_t sink) {
  return SandpileGroup(g, sink).describe();
}

Sandpile recurrent_identity(const DirectedMultigraph& g, std::size_t sink) { return SandpileGroup(g, sink).identity(); }

Sandpile recurrent_rep(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta) {
  return SandpileGroup(g, sink).recurrent_rep(eta);
}

bool is_recurrent(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta) {
  return SandpileGroup(g, sink).is_recurrent(eta);
}

Sandpile add_rec(const DirectedMultigraph& g, std::size_t sink, const Sandpile& eta, const Sandpile& xi) {
  return SandpileGroup(g, sink).add(eta, xi);
}

Sandpile gamma(const DirectedMultigraph& g, std::size_t sink) { return SandpileGroup(g, sink).gamma(); }

Integer coset_count(const DirectedMultigraph& g, std::size_t sink) { return SandpileGroup(g, sink).coset_count(); }

bool same_class_total(const DirectedMultigraph& g, const ChipConfig& sigma, const ChipConfig& tau) {
  check_equal_totals(sigma, tau);
  if (sigma.size() != g.vertex_count()) throw Error(ErrorCode::DimensionMismatch, "configuration length");
  return lattice_contains(laplacian(g), subtract(sigma.chips, tau.chips));
}

bool same_class_mod_beta(const SandpileGroup& group, const ChipConfig& sigma, const ChipConfig& tau) {
  check_equal_totals(sigma, tau);
  const std::size_t s = group.sink();
  const Sandpile beta = group.beta();
  const IntMatrix gens = group.reduced().append_columns(IntMatrix::from_columns({beta.grains}, beta.size()));
  return lattice_contains(gens, subtract(restrict_to_nonsink(sigma, s).grains, restrict_to_nonsink(tau, s).grains));
}

bool same_gamma_coset(const SandpileGroup& group, const ChipConfig& sigma, const ChipConfig& tau) {
  check_equal_totals(sigma, tau);
  const std::size_t s = group.sink();
  const Sandpile target = group.recurrent_rep(restrict_to_nonsink(sigma, s));
  const Sandpile start = group.recurrent_rep(restrict_to_nonsink(tau, s));
  const Sandpile g = group.gamma();
  Sandpile walk = start;
  do {
    if (walk == target) return true;
    walk = group.stabilize(Sandpile{chipfire::add(walk.grains, g.grains)});
  } while (!(walk == start));
  return false;
}

}  // namespace chipfire
