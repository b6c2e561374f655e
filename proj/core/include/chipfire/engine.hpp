#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "chipfire/graph.hpp"
#include "chipfire/integer.hpp"

namespace chipfire {

/// Total chip configuration indexed by every vertex. Negative entries are holes.
struct ChipConfig {
  IntVector chips;

  Integer total() const { return chipfire::total(chips); }
  std::size_t size() const noexcept { return chips.size(); }
  friend bool operator==(const ChipConfig&, const ChipConfig&) = default;
};

/// Sandpile indexed by the nonsink vertices in increasing vertex order.
struct Sandpile {
  IntVector grains;

  std::size_t size() const noexcept { return grains.size(); }
  friend bool operator==(const Sandpile&, const Sandpile&) = default;
};

/// Per-vertex firing counts (the odometer).
struct FiringVector {
  IntVector counts;

  friend bool operator==(const FiringVector&, const FiringVector&) = default;
};

enum class HaltStatus { Halts, Diverges, Unknown };
const char* to_string(HaltStatus status);

struct HaltingVerdict {
  HaltStatus status = HaltStatus::Unknown;
  // Halts: the stabilizing odometer (a Least-Action certificate).
  // Diverges: the odometer at the moment it dominated `threshold`.
  FiringVector odometer;
  // The primitive period vector; only set when Diverges.
  IntVector threshold;
  ChipConfig final_config;
  Integer steps = 0;
  // Vertices in firing order, filled only when requested.
  std::vector<std::size_t> sequence;
};

using TraceSink = std::function<void(const Integer& step, std::size_t vertex, const ChipConfig& after)>;

struct HaltingOptions {
  std::optional<Integer> step_cap;
  bool record_sequence = false;
  TraceSink trace;
};

// sigma_max(v) = d_v - 1.
ChipConfig max_stable(const DirectedMultigraph& g);

bool is_stable(const DirectedMultigraph& g, const ChipConfig& sigma);
bool is_active(const DirectedMultigraph& g, const ChipConfig& sigma, std::size_t v);

// sigma - Laplacian * delta_v. Legality is not checked.
ChipConfig fire(const DirectedMultigraph& g, const ChipConfig& sigma, std::size_t v);

// sigma - Laplacian * x. Negative counts are allowed.
ChipConfig apply_firing_vector(const DirectedMultigraph& g, const ChipConfig& sigma,
                               std::span<const Integer> x);

/// Least Action Principle check: true iff sigma - Laplacian * x is stable.
/// With x >= 0 this certifies that sigma stabilizes.
bool verify_halting_certificate(const DirectedMultigraph& g, const ChipConfig& sigma,
                                const FiringVector& x);

/// Replays `sequence` from sigma, throwing Error{NotStable} at the first
/// illegal firing. Returns the resulting odometer.
FiringVector replay_legal_sequence(const DirectedMultigraph& g, const ChipConfig& sigma,
                                   std::span<const std::size_t> sequence);

/// Decides whether sigma stabilizes by legal firing.
///
/// The active vertex with the smallest odometer fires next (lowest index on
/// ties), so in any infinite run every count grows without bound. The run
/// stops as soon as the configuration is stable (Halts) or the odometer
/// dominates the primitive period vector pointwise (Diverges). Without a step
/// cap one of the two always happens; with a cap the result may be Unknown.
HaltingVerdict decide_halting(const DirectedMultigraph& g, const ChipConfig& sigma,
                              const HaltingOptions& options = {});

/// Linear-time decision on coEulerian graphs: sigma >= 0 stabilizes iff
/// |sigma| <= #E - #V. With `check_coeulerian` the Pham index is computed and
/// Error{NotCoEulerian} is thrown if it is not 1.
bool decide_halting_coeulerian(const DirectedMultigraph& g, const ChipConfig& sigma,
                               bool check_coeulerian = false);

struct SinkStabilization {
  Sandpile stable;
  FiringVector odometer;  // over nonsink vertices
  Integer grains_to_sink;
};

// Picks which of the currently active nonsink vertices fires next. Receives
// sandpile indices and returns one of them.
using FiringChooser = std::function<std::size_t(std::span<const std::size_t> active)>;

/// Stabilizes a sandpile with the sink never firing. Every sandpile on a
/// strongly connected graph stabilizes and the result does not depend on the
/// order of firings.
SinkStabilization stabilize_with_sink(const DirectedMultigraph& g, std::size_t sink,
                                      const Sandpile& eta);

// Same, firing one vertex at a time in the order chosen by `choose`.
SinkStabilization stabilize_with_sink(const DirectedMultigraph& g, std::size_t sink,
                                      const Sandpile& eta, const FiringChooser& choose);

// Restriction of a total configuration to the nonsink vertices.
Sandpile restrict_to_nonsink(const ChipConfig& sigma, std::size_t sink);
// Extension of a sandpile to a total configuration with the given total.
ChipConfig extend_with_total(const Sandpile& eta, std::size_t sink, const Integer& total);

}  // namespace chipfire
