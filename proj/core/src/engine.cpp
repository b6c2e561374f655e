#include "chipfire/engine.hpp"

#include <deque>
#include <string>

#include "chipfire/error.hpp"
#include "chipfire/invariants.hpp"

namespace chipfire {
namespace {

void check_size(const DirectedMultigraph& g, std::size_t size, const char* what) {
  if (size != g.vertex_count()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " has length " + std::to_string(size) + ", graph has " +
                    std::to_string(g.vertex_count()) + " vertices");
  }
}

// Applies one firing of v in place using the adjacency directly.
void fire_in_place(const DirectedMultigraph& g, IntVector& chips, std::size_t v) {
  chips[v] -= g.outdegree(v);
  for (std::size_t w = 0; w < g.vertex_count(); ++w) {
    const Integer& m = g.multiplicity(v, w);
    if (sgn(m) != 0) chips[w] += m;
  }
}

std::size_t nonsink_vertex(std::size_t index, std::size_t sink) { return index < sink ? index : index + 1; }

}  // namespace

const char* to_string(HaltStatus status) {
  switch (status) {
    case HaltStatus::Halts: return "halts";
    case HaltStatus::Diverges: return "diverges";
    case HaltStatus::Unknown: return "unknown";
  }
  return "unknown";
}

ChipConfig max_stable(const DirectedMultigraph& g) {
  ChipConfig out{IntVector(g.vertex_count())};
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out.chips[v] = g.outdegree(v) - 1;
  return out;
}

bool is_active(const DirectedMultigraph& g, const ChipConfig& sigma, std::size_t v) {
  return sigma.chips[v] >= g.outdegree(v);
}

bool is_stable(const DirectedMultigraph& g, const ChipConfig& sigma) {
  check_size(g, sigma.size(), "configuration");
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (is_active(g, sigma, v)) return false;
  }
  return true;
}

ChipConfig fire(const DirectedMultigraph& g, const ChipConfig& sigma, std::size_t v) {
  check_vertex(g, v);
  check_size(g, sigma.size(), "configuration");
  ChipConfig out = sigma;
  fire_in_place(g, out.chips, v);
  return out;
}

ChipConfig apply_firing_vector(const DirectedMultigraph& g, const ChipConfig& sigma,
                               std::span<const Integer> x) {
  check_size(g, sigma.size(), "configuration");
  check_size(g, x.size(), "firing vector");
  return ChipConfig{subtract(sigma.chips, laplacian(g) * x)};
}

bool verify_halting_certificate(const DirectedMultigraph& g, const ChipConfig& sigma,
                                const FiringVector& x) {
  return is_stable(g, apply_firing_vector(g, sigma, x.counts));
}

FiringVector replay_legal_sequence(const DirectedMultigraph& g, const ChipConfig& sigma,
                                   std::span<const std::size_t> sequence) {
  check_size(g, sigma.size(), "configuration");
  ChipConfig current = sigma;
  FiringVector odometer{IntVector(g.vertex_count(), 0)};
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const std::size_t v = sequence[i];
    check_vertex(g, v);
    if (!is_active(g, current, v)) {
      throw Error(ErrorCode::NotStable,
                  "firing " + std::to_string(i) + " of vertex " + std::to_string(v) + " is not legal");
    }
    fire_in_place(g, current.chips, v);
    ++odometer.counts[v];
  }
  return odometer;
}

HaltingVerdict decide_halting(const DirectedMultigraph& g, const ChipConfig& sigma,
                              const HaltingOptions& options) {
  check_size(g, sigma.size(), "configuration");
  const std::size_t n = g.vertex_count();
  const IntVector period = period_vector(g);

  HaltingVerdict verdict;
  verdict.final_config = sigma;
  verdict.odometer.counts.assign(n, 0);
  IntVector& odometer = verdict.odometer.counts;
  std::size_t saturated = 0;  // vertices whose count has reached the period

  for (;;) {
    std::size_t next = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (!is_active(g, verdict.final_config, v)) continue;
      if (next == n || odometer[v] < odometer[next]) next = v;
    }
    if (next == n) {
      verdict.status = HaltStatus::Halts;
      return verdict;
    }
    if (options.step_cap && verdict.steps >= *options.step_cap) {
      verdict.status = HaltStatus::Unknown;
      return verdict;
    }

    fire_in_place(g, verdict.final_config.chips, next);
    ++odometer[next];
    ++verdict.steps;
    if (options.record_sequence) verdict.sequence.push_back(next);
    if (options.trace) options.trace(verdict.steps, next, verdict.final_config);
    if (odometer[next] == period[next]) ++saturated;
    if (saturated == n) {
      verdict.status = HaltStatus::Diverges;
      verdict.threshold = period;
      return verdict;
    }
  }
}

bool decide_halting_coeulerian(const DirectedMultigraph& g, const ChipConfig& sigma,
                               bool check_coeulerian) {
  check_size(g, sigma.size(), "configuration");
  for (const auto& c : sigma.chips) {
    if (sgn(c) < 0) throw Error(ErrorCode::NegativeChips, "coEulerian test needs sigma >= 0");
  }
  if (check_coeulerian && pham_index(g) != 1) {
    throw Error(ErrorCode::NotCoEulerian, "Pham index is not 1");
  }
  return sigma.total() <= g.edge_count() - Integer(g.vertex_count());
}

SinkStabilization stabilize_with_sink(const DirectedMultigraph& g, std::size_t sink,
                                      const Sandpile& eta) {
  check_vertex(g, sink);
  const std::size_t m = g.vertex_count() - 1;
  if (eta.size() != m) throw Error(ErrorCode::DimensionMismatch, "sandpile length");

  SinkStabilization out{eta, FiringVector{IntVector(m, 0)}, 0};
  IntVector& grains = out.stable.grains;
  std::deque<std::size_t> work;
  std::vector<bool> queued(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (grains[i] >= g.outdegree(nonsink_vertex(i, sink))) {
      work.push_back(i);
      queued[i] = true;
    }
  }
  while (!work.empty()) {
    const std::size_t i = work.front();
    work.pop_front();
    queued[i] = false;
    const std::size_t v = nonsink_vertex(i, sink);
    const Integer& dv = g.outdegree(v);
    if (grains[i] < dv) continue;
    // Firing v repeatedly is legal while it stays active; each firing
    // removes d_v - d_vv >= 1 grains from v.
    const Integer loss = dv - g.multiplicity(v, v);
    const Integer times = (grains[i] - dv) / loss + 1;
    grains[i] -= times * loss;
    out.odometer.counts[i] += times;
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t w = nonsink_vertex(j, sink);
      if (w == v || sgn(g.multiplicity(v, w)) == 0) continue;
      grains[j] += times * g.multiplicity(v, w);
      if (!queued[j] && grains[j] >= g.outdegree(w)) {
        work.push_back(j);
        queued[j] = true;
      }
    }
    out.grains_to_sink += times * g.multiplicity(v, sink);
  }
  return out;
}

SinkStabilization stabilize_with_sink(const DirectedMultigraph& g, std::size_t sink,
                                      const Sandpile& eta, const FiringChooser& choose) {
  check_vertex(g, sink);
  const std::size_t m = g.vertex_count() - 1;
  if (eta.size() != m) throw Error(ErrorCode::DimensionMismatch, "sandpile length");

  SinkStabilization out{eta, FiringVector{IntVector(m, 0)}, 0};
  IntVector& grains = out.stable.grains;
  std::vector<std::size_t> active;
  for (;;) {
    active.clear();
    for (std::size_t i = 0; i < m; ++i) {
      if (grains[i] >= g.outdegree(nonsink_vertex(i, sink))) active.push_back(i);
    }
    if (active.empty()) return out;
    const std::size_t i = choose(active);
    if (i >= m || grains[i] < g.outdegree(nonsink_vertex(i, sink))) {
      throw Error(ErrorCode::VertexOutOfRange, "chooser picked an inactive vertex");
    }
    const std::size_t v = nonsink_vertex(i, sink);
    grains[i] -= g.outdegree(v);
    for (std::size_t j = 0; j < m; ++j) grains[j] += g.multiplicity(v, nonsink_vertex(j, sink));
    out.grains_to_sink += g.multiplicity(v, sink);
    ++out.odometer.counts[i];
  }
}

Sandpile restrict_to_nonsink(const ChipConfig& sigma, std::size_t sink) {
  if (sink >= sigma.size()) throw Error(ErrorCode::VertexOutOfRange, "sink");
  Sandpile out;
  out.grains.reserve(sigma.size() - 1);
  for (std::size_t v = 0; v < sigma.size(); ++v) {
    if (v != sink) out.grains.push_back(sigma.chips[v]);
  }
  return out;
}

ChipConfig extend_with_total(const Sandpile& eta, std::size_t sink, const Integer& total_chips) {
  if (sink > eta.size()) throw Error(ErrorCode::VertexOutOfRange, "sink");
  ChipConfig out{IntVector(eta.size() + 1)};
  for (std::size_t i = 0; i < eta.size(); ++i) out.chips[nonsink_vertex(i, sink)] = eta.grains[i];
  out.chips[sink] = total_chips - total(eta.grains);
  return out;
}

}  // namespace chipfire
