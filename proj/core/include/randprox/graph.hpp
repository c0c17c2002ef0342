#pragma once

#include <string>
#include <utility>
#include <vector>

#include "randprox/errors.hpp"

namespace randprox {

using VertexId = int;

/// Unordered vertex pair in canonical form (first < second).
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId v, VertexId w) {
  return v < w ? Edge{v, w} : Edge{w, v};
}

// Non-oriented graph over integer agent identifiers. Vertices and edges are
// stored sorted so that indices are stable across runs. Immutable after
// construction; safe to share across threads.
class Graph {
 public:
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool has_vertex(VertexId v) const;
  bool has_edge(VertexId v, VertexId w) const;

  /// Position of v in vertices(); throws INDEX_OUT_OF_RANGE for unknown ids.
  int index_of(VertexId v) const;

  /// Neighborhood N_v, sorted.
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;

  bool connected() const;

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;  // aligned to vertices_
};

// The component collection A_1..A_L covering the agents. Components are kept
// in a canonical order (each component sorted, the list sorted
// lexicographically) so that component indices are deterministic across runs.
// Component indices are zero-based throughout the library.
class ComponentCover {
 public:
  ComponentCover(const Graph& g, std::vector<std::vector<VertexId>> components);

  int component_count() const { return static_cast<int>(components_.size()); }
  const std::vector<std::vector<VertexId>>& components() const { return components_; }
  const std::vector<VertexId>& component(int l) const;
  int component_size(int l) const;

  /// Vertex universe the cover was built against (sorted, same order as the
  /// graph's).
  const std::vector<VertexId>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int index_of(VertexId v) const;

  /// sigma(v) = { l : v in A_l }, sorted component indices.
  const std::vector<int>& sigma(VertexId v) const;
  const std::vector<int>& sigma_by_index(int vertex_index) const;
  int sigma_size(VertexId v) const { return static_cast<int>(sigma(v).size()); }

  /// All sigma sets, aligned to vertices().
  const std::vector<std::vector<int>>& sigma_map() const { return sigma_; }

  /// Position of v inside component l, or -1 when v is not a member.
  int position_in(int l, VertexId v) const;

  /// Index of the component equal to {v, w}, or -1. Only meaningful for
  /// pairwise (edge) covers.
  int find_pair_component(VertexId v, VertexId w) const;

 private:
  std::vector<std::vector<VertexId>> components_;
  std::vector<VertexId> vertices_;
  std::vector<std::vector<int>> sigma_;  // aligned to vertices_
};

struct CoverVerdict {
  enum class Code { Ok, CoverIncomplete, UnionDisconnected };

  Code code = Code::Ok;
  VertexId witness_a = 0;  // CoverIncomplete: the uncovered vertex
  VertexId witness_b = 0;  // UnionDisconnected: (witness_a, witness_b) lie in
                           // different pieces of the union graph
  std::string message;     // "ok" or "<CODE>: <witness>"
  std::vector<std::string> warnings;  // per-component connectivity remarks

  bool ok() const { return code == Code::Ok; }
  explicit operator bool() const { return ok(); }
};

// Checks the two cover conditions: every vertex is covered, and the union of
// the induced subgraphs G(A_l) is connected. A component whose own induced
// subgraph is disconnected is reported as a warning, not a failure.
CoverVerdict validate_cover(const Graph& g, const ComponentCover& cover);

/// One component per edge, in canonical edge order. Throws EMPTY_GRAPH when
/// the graph has no edges.
ComponentCover edge_cover(const Graph& g);

/// The single component A_1 = V.
ComponentCover full_cover(const Graph& g);

}  // namespace randprox
