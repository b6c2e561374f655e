#include "cli/documents.hpp"

#include <fstream>

namespace chipfire::cli {
namespace {

void check_format(const json& doc) {
  if (!doc.is_object()) throw InputError("document must be a JSON object");
  if (doc.contains("format") && doc.at("format") != kFormatVersion) {
    throw InputError("unsupported format version " + doc.at("format").dump());
  }
}

std::size_t parse_index(const json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

Integer parse_integer(const json& value) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Integer(value.get<unsigned long>()) : Integer(value.get<long>());
  }
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0) {
      throw InputError("not a decimal integer: " + value.dump());
    }
    return out;
  }
  throw InputError("expected an integer, got " + value.dump());
}

IntVector parse_integer_array(const json& value) {
  if (!value.is_array()) throw InputError("expected an array, got " + value.dump());
  IntVector out;
  out.reserve(value.size());
  for (const auto& x : value) out.push_back(parse_integer(x));
  return out;
}

json integer_array(const IntVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

json integer_matrix(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(integer_array(m.row(r)));
  return out;
}

DirectedMultigraph parse_graph(const json& doc) {
  check_format(doc);
  if (!doc.contains("n") || !doc.contains("adj")) throw InputError("graph needs \"n\" and \"adj\"");
  const std::size_t n = parse_index(doc.at("n"), "n");
  const json& adj = doc.at("adj");
  if (!adj.is_array() || adj.size() != n) throw InputError("\"adj\" must have n rows");
  std::vector<IntVector> rows;
  for (const auto& row : adj) {
    rows.push_back(parse_integer_array(row));
    if (rows.back().size() != n) throw InputError("every \"adj\" row must have n entries");
  }
  return DirectedMultigraph::from_adjacency(IntMatrix::from_rows(rows, n));
}

json graph_document(const DirectedMultigraph& g) {
  return json{{"format", kFormatVersion}, {"n", g.vertex_count()}, {"adj", integer_matrix(g.adjacency())}};
}

ChipConfig parse_chips(const json& doc, std::size_t n) {
  check_format(doc);
  if (!doc.contains("chips")) throw InputError("configuration needs \"chips\"");
  ChipConfig out{parse_integer_array(doc.at("chips"))};
  if (out.size() != n) throw InputError("\"chips\" length does not match the graph");
  return out;
}

SandpileInput parse_sandpile(const json& doc, std::size_t n, std::optional<std::size_t> sink) {
  check_format(doc);
  SandpileInput out;
  if (doc.contains("sand")) {
    std::optional<std::size_t> doc_sink;
    if (doc.contains("sink")) doc_sink = parse_index(doc.at("sink"), "sink");
    if (sink && doc_sink && *sink != *doc_sink) throw InputError("--sink disagrees with the document");
    if (!sink && !doc_sink) throw InputError("sandpile needs a sink");
    out.sink = sink ? *sink : *doc_sink;
    out.sand.grains = parse_integer_array(doc.at("sand"));
  } else if (doc.contains("chips")) {
    if (!sink) throw InputError("--sink is required with a total configuration");
    out.sink = *sink;
    if (out.sink >= n) throw InputError("sink out of range");
    out.sand = restrict_to_nonsink(parse_chips(doc, n), out.sink);
  } else {
    throw InputError("configuration needs \"sand\" or \"chips\"");
  }
  if (out.sink >= n) throw InputError("sink out of range");
  if (out.sand.size() + 1 != n) throw InputError("\"sand\" must have n-1 entries");
  return out;
}

ZeroSumLatticeBasis parse_lattice(const json& doc) {
  check_format(doc);
  if (!doc.contains("n") || !doc.contains("basis")) throw InputError("lattice needs \"n\" and \"basis\"");
  const std::size_t n = parse_index(doc.at("n"), "n");
  const json& basis = doc.at("basis");
  if (!basis.is_array()) throw InputError("\"basis\" must be an array of columns");
  std::vector<IntVector> cols;
  for (const auto& c : basis) {
    cols.push_back(parse_integer_array(c));
    if (cols.back().size() != n) throw InputError("every basis column must have n entries");
  }
  return ZeroSumLatticeBasis::from_columns(IntMatrix::from_columns(cols, n));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace chipfire::cli
