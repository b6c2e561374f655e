#include "chipfire/graph.hpp"

#include <string>
#include <utility>

#include "chipfire/error.hpp"

namespace chipfire {
namespace {

// Vertices reachable from 0 following edges forward (or backward).
std::vector<bool> reach_from_zero(const IntMatrix& adj, bool reverse) {
  const std::size_t n = adj.rows();
  std::vector<bool> seen(n, false);
  if (n == 0) return seen;
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w) {
      const Integer& m = reverse ? adj(w, v) : adj(v, w);
      if (!seen[w] && sgn(m) > 0) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace

bool is_strongly_connected(const IntMatrix& adjacency) {
  if (!adjacency.square()) throw Error(ErrorCode::NotSquare, "adjacency matrix");
  if (adjacency.rows() == 0) return false;
  for (bool reverse : {false, true}) {
    for (bool b : reach_from_zero(adjacency, reverse)) {
      if (!b) return false;
    }
  }
  return true;
}

DirectedMultigraph::DirectedMultigraph(IntMatrix adjacency)
    : adjacency_(std::move(adjacency)) {
  const std::size_t n = adjacency_.rows();
  outdegree_.assign(n, 0);
  indegree_.assign(n, 0);
  edge_count_ = 0;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      outdegree_[v] += adjacency_(v, w);
      indegree_[w] += adjacency_(v, w);
    }
  for (const auto& d : outdegree_) edge_count_ += d;
}

DirectedMultigraph DirectedMultigraph::from_adjacency(const IntMatrix& adjacency) {
  if (!adjacency.square() || adjacency.rows() == 0) {
    throw Error(ErrorCode::NotSquare, "adjacency must be a nonempty square matrix");
  }
  const std::size_t n = adjacency.rows();
  for (std::size_t v = 0; v < n; ++v) {
    Integer out = 0;
    for (std::size_t w = 0; w < n; ++w) {
      if (sgn(adjacency(v, w)) < 0) {
        throw Error(ErrorCode::NegativeMultiplicity,
                    "entry (" + std::to_string(v) + "," + std::to_string(w) + ")");
      }
      out += adjacency(v, w);
    }
    if (sgn(out) == 0) throw Error(ErrorCode::ZeroOutdegree, "vertex " + std::to_string(v));
  }
  if (!is_strongly_connected(adjacency)) {
    throw Error(ErrorCode::NotStronglyConnected, "graph has more than one strong component");
  }
  return DirectedMultigraph(adjacency);
}

DirectedMultigraph DirectedMultigraph::from_laplacian(const IntMatrix& lap) {
  if (!lap.square()) throw Error(ErrorCode::NotSquare, "laplacian");
  const std::size_t n = lap.rows();
  IntMatrix adj(n, n);
  for (std::size_t w = 0; w < n; ++w) {
    Integer col = 0;
    for (std::size_t v = 0; v < n; ++v) {
      col += lap(v, w);
      if (v == w) {
        if (sgn(lap(v, w)) < 0) throw Error(ErrorCode::NotLaplacian, "negative diagonal");
      } else {
        if (sgn(lap(v, w)) > 0) throw Error(ErrorCode::NotLaplacian, "positive off-diagonal");
        adj(w, v) = -lap(v, w);
      }
    }
    if (sgn(col) != 0) throw Error(ErrorCode::NotLaplacian, "column does not sum to zero");
  }
  return from_adjacency(adj);
}

bool DirectedMultigraph::has_loops() const {
  for (std::size_t v = 0; v < vertex_count(); ++v) {
    if (sgn(adjacency_(v, v)) > 0) return true;
  }
  return false;
}

void check_vertex(const DirectedMultigraph& g, std::size_t v) {
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::VertexOutOfRange,
                std::to_string(v) + " >= " + std::to_string(g.vertex_count()));
  }
}

IntMatrix laplacian(const DirectedMultigraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix lap(n, n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      lap(v, w) = v == w ? g.outdegree(v) - g.multiplicity(v, v) : Integer(-g.multiplicity(w, v));
    }
  return lap;
}

IntMatrix reduced_laplacian(const DirectedMultigraph& g, std::size_t sink) {
  check_vertex(g, sink);
  return laplacian(g).without(sink, sink);
}

}  // namespace chipfire
