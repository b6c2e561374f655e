#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chipfire/chipfire.hpp"

namespace chipfire::cli {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Malformed or inconsistent input documents.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integers are written as decimal strings; either strings or JSON numbers are
// accepted on input.
Integer parse_integer(const json& value);
IntVector parse_integer_array(const json& value);
json integer_array(const IntVector& v);
json integer_matrix(const IntMatrix& m);

// {"n": int, "adj": [[int]]}
DirectedMultigraph parse_graph(const json& doc);
json graph_document(const DirectedMultigraph& g);

// {"chips": [int]}
ChipConfig parse_chips(const json& doc, std::size_t n);

// {"sand": [int], "sink": s} or {"chips": [int]} restricted at `sink`.
struct SandpileInput {
  std::size_t sink = 0;
  Sandpile sand;
};
SandpileInput parse_sandpile(const json& doc, std::size_t n, std::optional<std::size_t> sink);

// {"n": int, "basis": [[int]]}, a list of n-1 columns each of length n.
ZeroSumLatticeBasis parse_lattice(const json& doc);

json read_json_file(const std::string& path);

}  // namespace chipfire::cli
