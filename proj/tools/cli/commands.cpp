#include "cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

namespace chipfire::cli {
namespace {

json factor_list(const std::vector<Integer>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(f.get_str());
  return out;
}

std::optional<Integer> env_step_cap() {
  const char* raw = std::getenv(kMaxStepsEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  Integer cap;
  if (cap.set_str(raw, 10) != 0 || sgn(cap) < 0) {
    throw InputError(std::string(kMaxStepsEnv) + " must be a nonnegative integer");
  }
  return cap;
}

}  // namespace

json classify(const json& graph_doc) {
  const DirectedMultigraph g = parse_graph(graph_doc);
  const GraphInvariants inv = compute_invariants(g);
  return json{
      {"format", kFormatVersion},
      {"kappa", integer_array(inv.kappa)},
      {"pham_index", inv.pham_index.get_str()},
      {"period", integer_array(inv.period)},
      {"eulerian", inv.is_eulerian},
      {"coeulerian", inv.is_coeulerian},
      {"cactus", inv.is_cactus},
      {"cokernel_order", inv.cokernel_order.get_str()},
  };
}

HaltsResult halts(const json& graph_doc, const json& config_doc, const HaltsOptions& options) {
  const DirectedMultigraph g = parse_graph(graph_doc);
  const ChipConfig sigma = parse_chips(config_doc, g.vertex_count());

  bool nonnegative = true;
  for (const auto& c : sigma.chips) nonnegative = nonnegative && sgn(c) >= 0;
  if (options.fast_if_coeulerian && nonnegative && is_coeulerian(g)) {
    const bool stops = decide_halting_coeulerian(g, sigma);
    const Integer capacity = g.edge_count() - Integer(g.vertex_count());
    return {stops ? kExitOk : kExitDiverges,
            json{{"format", kFormatVersion},
                 {"status", stops ? "halts" : "diverges"},
                 {"method", "coeulerian"},
                 {"chips", sigma.total().get_str()},
                 {"capacity", capacity.get_str()}}};
  }

  HaltingOptions opts;
  opts.step_cap = options.max_steps ? options.max_steps : env_step_cap();
  if (options.trace != nullptr) {
    std::ostream& trace = *options.trace;
    opts.trace = [&trace](const Integer& step, std::size_t vertex, const ChipConfig& after) {
      trace << json{{"step", step.get_str()}, {"vertex", vertex}, {"config", integer_array(after.chips)}}.dump()
            << '\n';
    };
  }
  const HaltingVerdict v = decide_halting(g, sigma, opts);
  json report{{"format", kFormatVersion},
              {"status", to_string(v.status)},
              {"method", "simulation"},
              {"steps", v.steps.get_str()},
              {"odometer", integer_array(v.odometer.counts)},
              {"final", integer_array(v.final_config.chips)}};
  if (v.status == HaltStatus::Diverges) report["threshold"] = integer_array(v.threshold);
  const int code = v.status == HaltStatus::Halts      ? kExitOk
                   : v.status == HaltStatus::Diverges ? kExitDiverges
                                                      : kExitUnknown;
  return {code, std::move(report)};
}

json stabilize(const json& graph_doc, const json& config_doc, std::optional<std::size_t> sink) {
  const DirectedMultigraph g = parse_graph(graph_doc);
  const SandpileInput in = parse_sandpile(config_doc, g.vertex_count(), sink);
  const SinkStabilization r = stabilize_with_sink(g, in.sink, in.sand);
  return json{{"format", kFormatVersion},
              {"sink", in.sink},
              {"stable", integer_array(r.stable.grains)},
              {"odometer", integer_array(r.odometer.counts)},
              {"grains_to_sink", r.grains_to_sink.get_str()}};
}

json group(const json& graph_doc, std::size_t sink) {
  const DirectedMultigraph g = parse_graph(graph_doc);
  if (sink >= g.vertex_count()) throw InputError("sink out of range");
  const SandpileGroup grp(g, sink);
  const SandpileGroupDesc d = grp.describe();
  const Integer cosets = grp.coset_count();
  return json{{"format", kFormatVersion},
              {"sink", sink},
              {"order", d.order.get_str()},
              {"invariant_factors", factor_list(d.invariant_factors)},
              {"beta", integer_array(d.beta.grains)},
              {"order_of_beta", d.order_of_beta.get_str()},
              {"identity", integer_array(grp.identity().grains)},
              {"gamma", integer_array(grp.gamma().grains)},
              {"gamma_order", Integer(d.order / cosets).get_str()},
              {"coset_count", cosets.get_str()}};
}

json lattice_to_graph(const json& lattice_doc) {
  const LatticeLaplacian built = laplacian_from_lattice(parse_lattice(lattice_doc));
  const ConstructionTrace& t = built.trace;
  return json{{"format", kFormatVersion},
              {"graph", graph_document(built.graph)},
              {"trace",
               {{"a", integer_matrix(t.a)},
                {"h", integer_matrix(t.h)},
                {"d", t.d.get_str()},
                {"k", integer_array(t.k)},
                {"b", integer_matrix(t.b)},
                {"laplacian", integer_matrix(t.laplacian)}}}};
}

json reduce(const json& lattice_doc, const json& config_doc) {
  const ZeroSumLatticeBasis lattice = parse_lattice(lattice_doc);
  const IntVector sigma = parse_chips(config_doc, lattice.dimension()).chips;
  const HaltingInstance inst = reduce_rank_to_halting(lattice, sigma);
  return json{{"format", kFormatVersion},
              {"graph", graph_document(inst.graph)},
              {"config", {{"format", kFormatVersion}, {"chips", integer_array(inst.config.chips)}}}};
}

DirectedMultigraph random_graph(std::size_t n, unsigned max_multiplicity, std::uint64_t seed, bool allow_loops) {
  if (n == 0) throw InputError("n must be at least 1");
  // Raw engine output only; distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  IntMatrix adj(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      const std::uint64_t draw = rng() % (static_cast<std::uint64_t>(max_multiplicity) + 1);
      if (v == w && !allow_loops && n > 1) continue;
      adj(v, w) = static_cast<unsigned long>(draw);
    }
  for (std::size_t v = 0; v < n; ++v) {
    Integer& m = adj(v, (v + 1) % n);
    if (sgn(m) == 0) m = 1;
  }
  return DirectedMultigraph::from_adjacency(adj);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chip-firing invariants, halting decisions and lattice constructions"};
  app.require_subcommand(1);

  std::string graph_file, config_file, lattice_file, trace_file;
  std::optional<std::size_t> sink;
  std::size_t group_sink = 0;
  bool fast = false;
  std::string max_steps;

  auto* classify_cmd = app.add_subcommand("classify", "Tree counts, Pham index, period vector and class flags");
  classify_cmd->add_option("graph", graph_file, "Graph JSON file")->required();

  auto* halts_cmd = app.add_subcommand("halts", "Decide whether a chip configuration stabilizes");
  halts_cmd->add_option("graph", graph_file, "Graph JSON file")->required();
  halts_cmd->add_option("config", config_file, "Configuration JSON file")->required();
  halts_cmd->add_flag("--fast-if-coeulerian", fast, "Use the chip-count test when the Pham index is 1");
  halts_cmd->add_option("--max-steps", max_steps, "Step cap (default from COEUL_MAX_STEPS, else none)");
  halts_cmd->add_option("--trace", trace_file, "Write newline-delimited JSON firing records here");

  auto* stab_cmd = app.add_subcommand("stabilize", "Stabilize a sandpile with a sink");
  stab_cmd->add_option("graph", graph_file, "Graph JSON file")->required();
  stab_cmd->add_option("config", config_file, "Sandpile or configuration JSON file")->required();
  stab_cmd->add_option("--sink", sink, "Sink vertex");

  auto* group_cmd = app.add_subcommand("group", "Sandpile group structure for a sink");
  group_cmd->add_option("graph", graph_file, "Graph JSON file")->required();
  group_cmd->add_option("--sink", group_sink, "Sink vertex")->required();

  auto* l2g_cmd = app.add_subcommand("lattice2graph", "Realize a zero-sum lattice as a Laplacian lattice");
  l2g_cmd->add_option("lattice", lattice_file, "Lattice JSON file")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce nonnegative rank to a halting instance");
  reduce_cmd->add_option("lattice", lattice_file, "Lattice JSON file")->required();
  reduce_cmd->add_option("sigma", config_file, "Configuration JSON file with \"chips\"")->required();

  std::size_t rand_n = 0;
  unsigned rand_max = 1;
  std::uint64_t rand_seed = 0;
  bool no_loops = false;
  auto* rand_cmd = app.add_subcommand("random-graph", "Seeded random strongly connected multigraph");
  rand_cmd->add_option("n", rand_n, "Vertex count")->required();
  rand_cmd->add_option("max_multiplicity", rand_max, "Largest edge multiplicity")->required();
  rand_cmd->add_option("seed", rand_seed, "Seed")->required();
  rand_cmd->add_flag("--no-loops", no_loops, "Never draw loops (n > 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*classify_cmd) {
      out << classify(read_json_file(graph_file)).dump() << '\n';
    } else if (*halts_cmd) {
      HaltsOptions opts;
      opts.fast_if_coeulerian = fast;
      if (!max_steps.empty()) {
        Integer cap;
        if (cap.set_str(max_steps, 10) != 0 || sgn(cap) < 0) throw InputError("--max-steps must be >= 0");
        opts.max_steps = cap;
      }
      std::ofstream trace;
      if (!trace_file.empty()) {
        trace.open(trace_file);
        if (!trace) throw InputError("cannot write " + trace_file);
        opts.trace = &trace;
      }
      const HaltsResult r = halts(read_json_file(graph_file), read_json_file(config_file), opts);
      out << r.report.dump() << '\n';
      return r.exit_code;
    } else if (*stab_cmd) {
      out << stabilize(read_json_file(graph_file), read_json_file(config_file), sink).dump() << '\n';
    } else if (*group_cmd) {
      out << group(read_json_file(graph_file), group_sink).dump() << '\n';
    } else if (*l2g_cmd) {
      out << lattice_to_graph(read_json_file(lattice_file)).dump() << '\n';
    } else if (*reduce_cmd) {
      out << reduce(read_json_file(lattice_file), read_json_file(config_file)).dump() << '\n';
    } else if (*rand_cmd) {
      out << graph_document(random_graph(rand_n, rand_max, rand_seed, !no_loops)).dump() << '\n';
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInputError;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid JSON document: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    // The exit-code contract has no separate slot for internal failures.
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace chipfire::cli
