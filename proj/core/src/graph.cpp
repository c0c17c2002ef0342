#include "randprox/graph.hpp"

#include <algorithm>
#include <numeric>

namespace randprox {
namespace {

// Disjoint-set forest used for the connectivity checks.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b) { parent_[find(a)] = find(b); }

  bool same(int a, int b) { return find(a) == find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  if (vertices_.empty()) {
    throw Error(ErrorCode::MalformedGraph, "graph has no vertices");
  }

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.first == e.second) {
      throw Error(ErrorCode::MalformedGraph,
                  "self-loop at vertex " + std::to_string(e.first));
    }
    if (!std::binary_search(vertices_.begin(), vertices_.end(), e.first) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), e.second)) {
      throw Error(ErrorCode::MalformedGraph,
                  "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                      "} references an unknown vertex");
    }
    edges_.push_back(make_edge(e.first, e.second));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.resize(vertices_.size());
  for (const Edge& e : edges_) {
    adjacency_[index_of(e.first)].push_back(e.second);
    adjacency_[index_of(e.second)].push_back(e.first);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_vertex(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Graph::has_edge(VertexId v, VertexId w) const {
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(v, w));
}

int Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw Error(ErrorCode::IndexOutOfRange, "unknown vertex " + std::to_string(v));
  }
  return static_cast<int>(it - vertices_.begin());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  return adjacency_[index_of(v)];
}

int Graph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

bool Graph::connected() const {
  UnionFind uf(vertex_count());
  for (const Edge& e : edges_) uf.unite(index_of(e.first), index_of(e.second));
  for (int i = 1; i < vertex_count(); ++i) {
    if (!uf.same(0, i)) return false;
  }
  return true;
}

ComponentCover::ComponentCover(const Graph& g,
                               std::vector<std::vector<VertexId>> components)
    : components_(std::move(components)), vertices_(g.vertices()) {
  if (components_.empty()) {
    throw Error(ErrorCode::MalformedCover, "cover has no components");
  }
  for (auto& comp : components_) {
    if (comp.empty()) {
      throw Error(ErrorCode::MalformedCover, "empty component");
    }
    std::sort(comp.begin(), comp.end());
    if (std::adjacent_find(comp.begin(), comp.end()) != comp.end()) {
      throw Error(ErrorCode::MalformedCover, "repeated vertex inside a component");
    }
    for (VertexId v : comp) {
      if (!g.has_vertex(v)) {
        throw Error(ErrorCode::MalformedCover,
                    "component references unknown vertex " + std::to_string(v));
      }
    }
  }
  std::sort(components_.begin(), components_.end());

  sigma_.resize(vertices_.size());
  for (int l = 0; l < component_count(); ++l) {
    for (VertexId v : components_[l]) sigma_[index_of(v)].push_back(l);
  }
}

const std::vector<VertexId>& ComponentCover::component(int l) const {
  if (l < 0 || l >= component_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "component index " + std::to_string(l) + " out of range");
  }
  return components_[l];
}

int ComponentCover::component_size(int l) const {
  return static_cast<int>(component(l).size());
}

int ComponentCover::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) {
    throw Error(ErrorCode::IndexOutOfRange, "unknown vertex " + std::to_string(v));
  }
  return static_cast<int>(it - vertices_.begin());
}

const std::vector<int>& ComponentCover::sigma(VertexId v) const {
  return sigma_[index_of(v)];
}

const std::vector<int>& ComponentCover::sigma_by_index(int vertex_index) const {
  if (vertex_index < 0 || vertex_index >= vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex index " + std::to_string(vertex_index) + " out of range");
  }
  return sigma_[vertex_index];
}

int ComponentCover::position_in(int l, VertexId v) const {
  const auto& comp = component(l);
  auto it = std::lower_bound(comp.begin(), comp.end(), v);
  if (it == comp.end() || *it != v) return -1;
  return static_cast<int>(it - comp.begin());
}

int ComponentCover::find_pair_component(VertexId v, VertexId w) const {
  Edge e = make_edge(v, w);
  std::vector<VertexId> key{e.first, e.second};
  auto it = std::lower_bound(components_.begin(), components_.end(), key);
  if (it == components_.end() || *it != key) return -1;
  return static_cast<int>(it - components_.begin());
}

CoverVerdict validate_cover(const Graph& g, const ComponentCover& cover) {
  CoverVerdict verdict;

  // Clause one: the components cover every vertex.
  for (VertexId v : g.vertices()) {
    if (cover.sigma(v).empty()) {
      verdict.code = CoverVerdict::Code::CoverIncomplete;
      verdict.witness_a = v;
      verdict.message = "COVER_INCOMPLETE: vertex " + std::to_string(v);
      return verdict;
    }
  }

  // Clause two: the union of the induced subgraphs is connected. An edge of G
  // survives into the union iff both endpoints share some component.
  const int n = g.vertex_count();
  UnionFind uf(n);
  for (const Edge& e : g.edges()) {
    for (int l : cover.sigma(e.first)) {
      if (cover.position_in(l, e.second) >= 0) {
        uf.unite(g.index_of(e.first), g.index_of(e.second));
        break;
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    if (!uf.same(0, i)) {
      VertexId unreachable = g.vertices()[i];
      // Prefer a witness that is G-adjacent to the unreachable vertex.
      VertexId reached = g.vertices()[0];
      for (VertexId u : g.neighbors(unreachable)) {
        if (uf.same(0, g.index_of(u))) {
          reached = u;
          break;
        }
      }
      verdict.code = CoverVerdict::Code::UnionDisconnected;
      verdict.witness_a = reached;
      verdict.witness_b = unreachable;
      verdict.message = "UNION_DISCONNECTED: vertices " + std::to_string(reached) +
                        " and " + std::to_string(unreachable);
      return verdict;
    }
  }

  // Per-component connectivity is not required, but flag it: the in-component
  // averaging step presumes members can talk to each other.
  for (int l = 0; l < cover.component_count(); ++l) {
    const auto& comp = cover.component(l);
    if (comp.size() <= 1) continue;
    UnionFind local(static_cast<int>(comp.size()));
    for (size_t i = 0; i < comp.size(); ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        if (g.has_edge(comp[i], comp[j])) {
          local.unite(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    for (size_t i = 1; i < comp.size(); ++i) {
      if (!local.same(0, static_cast<int>(i))) {
        verdict.warnings.push_back("component " + std::to_string(l) +
                                   " induces a disconnected subgraph");
        break;
      }
    }
  }

  verdict.message = "ok";
  return verdict;
}

ComponentCover edge_cover(const Graph& g) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::EmptyGraph, "edge cover needs at least one edge");
  }
  std::vector<std::vector<VertexId>> components;
  components.reserve(g.edges().size());
  for (const Edge& e : g.edges()) components.push_back({e.first, e.second});
  return ComponentCover(g, std::move(components));
}

ComponentCover full_cover(const Graph& g) {
  return ComponentCover(g, {g.vertices()});
}

}  // namespace randprox
