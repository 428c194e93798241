#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace turan {

// Vertex capacity of a Graph. Vertices are 0-based and contiguous.
inline constexpr int kMaxVertices = 64;

// One bit per vertex.
using VertexSet = std::uint64_t;

using Edge = std::pair<int, int>;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

// All vertices 0..n-1.
constexpr VertexSet prefix_set(int n) {
  return n >= kMaxVertices ? ~VertexSet{0} : bit(n) - 1;
}

template <class Fn>
void for_each_vertex(VertexSet set, Fn&& fn) {
  while (set) {
    fn(std::countr_zero(set));
    set &= set - 1;
  }
}

// Simple undirected graph with per-vertex adjacency bitsets.
//
// The adjacency relation is kept symmetric and irreflexive by every mutator;
// `edge_count()` is maintained incrementally.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1U;
  }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  VertexSet vertices() const { return prefix_set(n_); }

  // Throws std::invalid_argument on self-loops or out-of-range endpoints.
  // Adding an existing edge (or removing a missing one) is a no-op.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  std::vector<int> degrees() const;

  // Copy with one extra vertex (index order()) adjacent to `nbrs`.
  Graph with_vertex(VertexSet nbrs) const;

  // Copy where vertex v becomes vertex perm[v].
  Graph relabeled(std::span<const int> perm) const;

  // Graph induced on the vertices of `keep`, renumbered in increasing order.
  Graph induced(VertexSet keep) const;

  // Checks symmetry, irreflexivity, range and the cached edge count.
  bool is_consistent() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Total map from vertices to 0-based color ids.
struct Coloring {
  std::vector<int> color;

  int size() const { return static_cast<int>(color.size()); }
  int operator[](int v) const { return color[static_cast<std::size_t>(v)]; }
  int num_colors() const;

  // Throws std::invalid_argument unless the map covers exactly g's vertices
  // with non-negative ids.
  void check_total_for(const Graph& g) const;

  // No edge of g joins two vertices of the same color.
  bool is_proper_for(const Graph& g) const;
};

// Greedy proper coloring visiting vertices by descending degree (ties by
// index), giving each the smallest color absent from its colored neighbors.
Coloring greedy_coloring(const Graph& g);

struct MultipartiteGraph {
  Graph graph;
  Coloring parts;
};

Graph empty_graph(int k);
Graph complete_graph(int k);
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph star_graph(int leaves);

// Parts are numbered consecutively: part 0 holds vertices 0..sizes[0]-1, etc.
MultipartiteGraph complete_multipartite(std::span<const int> part_sizes);

// Balanced part sizes of T(n, r), larger parts first.
std::vector<int> turan_part_sizes(int n, int r);

MultipartiteGraph turan_partition(int n, int r);
Graph turan_graph(int n, int r);

// Vertices of g keep their labels; h's vertices follow.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// The two n-vertex {K_{r+1}, L_{n,s}}-free graphs whose larger edge count is
// the extremal value: T(s, r) padded with n - s isolated vertices, and
// T(m, r-1) joined with E_{n-m} where m = floor((s-1)/2).
std::array<Graph, 2> extremal_construction(int n, int r, int s);

}  // namespace turan
