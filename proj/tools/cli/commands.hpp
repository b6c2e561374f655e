#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "cli/documents.hpp"

namespace chipfire::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitDiverges = 3,
  kExitUnknown = 4,
};

// Name of the environment variable holding the default step cap for `halts`.
inline constexpr const char* kMaxStepsEnv = "COEUL_MAX_STEPS";

json classify(const json& graph_doc);

struct HaltsOptions {
  bool fast_if_coeulerian = false;
  std::optional<Integer> max_steps;
  std::ostream* trace = nullptr;  // newline-delimited {step, vertex, config}
};

struct HaltsResult {
  int exit_code = kExitOk;
  json report;
};

HaltsResult halts(const json& graph_doc, const json& config_doc, const HaltsOptions& options);

json stabilize(const json& graph_doc, const json& config_doc, std::optional<std::size_t> sink);

json group(const json& graph_doc, std::size_t sink);

json lattice_to_graph(const json& lattice_doc);

json reduce(const json& lattice_doc, const json& config_doc);

/// Seeded random strongly connected multigraph: each ordered pair gets a
/// multiplicity in [0, max_multiplicity], then the cycle 0 -> 1 -> ... -> 0 is
/// forced present. Byte-identical for identical arguments on every platform.
DirectedMultigraph random_graph(std::size_t n, unsigned max_multiplicity, std::uint64_t seed,
                                bool allow_loops = true);

/// Full command-line entry point. Returns an exit code from ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chipfire::cli
