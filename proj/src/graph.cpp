#include "turan/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "turan/errors.hpp"

namespace turan {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} out of range for n=" +
                                std::to_string(n_));
  }
  if (u == v) {
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  }
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  if (has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
  ++m_;
  assert(m_ <= n_ * (n_ - 1) / 2);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  if (!has_edge(u, v)) return;
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
  --m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    for_each_vertex(neighbors(u) & ~prefix_set(u + 1),
                    [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

Graph Graph::with_vertex(VertexSet nbrs) const {
  if (n_ >= kMaxVertices) throw std::invalid_argument("vertex capacity exceeded");
  if (nbrs & ~vertices()) throw std::invalid_argument("neighbor out of range");
  Graph g = *this;
  g.n_ = n_ + 1;
  g.adj_[static_cast<std::size_t>(n_)] = nbrs;
  for_each_vertex(nbrs, [&](int v) { g.adj_[static_cast<std::size_t>(v)] |= bit(n_); });
  g.m_ += std::popcount(nbrs);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw std::invalid_argument("permutation size mismatch");
  }
  Graph g(n_);
  for (int u = 0; u < n_; ++u) {
    VertexSet row = 0;
    for_each_vertex(neighbors(u), [&](int v) { row |= bit(perm[static_cast<std::size_t>(v)]); });
    g.adj_[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] = row;
  }
  g.m_ = m_;
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_vertex(keep, [&](int v) { index[static_cast<std::size_t>(v)] = k++; });
  Graph g(k);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(neighbors(u) & keep & ~prefix_set(u + 1), [&](int v) {
      g.add_edge(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(v)]);
    });
  });
  return g;
}

bool Graph::is_consistent() const {
  if (n_ < 0 || n_ > kMaxVertices) return false;
  int twice = 0;
  for (int u = 0; u < kMaxVertices; ++u) {
    const VertexSet row = adj_[static_cast<std::size_t>(u)];
    if (u >= n_) {
      if (row != 0) return false;
      continue;
    }
    if (row & bit(u)) return false;
    if (row & ~vertices()) return false;
    bool symmetric = true;
    for_each_vertex(row, [&](int v) { symmetric = symmetric && has_edge(v, u); });
    if (!symmetric) return false;
    twice += std::popcount(row);
  }
  return twice == 2 * m_;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
}

int Coloring::num_colors() const {
  if (color.empty()) return 0;
  return *std::max_element(color.begin(), color.end()) + 1;
}

void Coloring::check_total_for(const Graph& g) const {
  if (size() != g.order()) {
    throw std::invalid_argument("coloring covers " + std::to_string(size()) +
                                " vertices, graph has " +
                                std::to_string(g.order()));
  }
  for (int c : color) {
    if (c < 0) throw std::invalid_argument("negative color id");
  }
}

bool Coloring::is_proper_for(const Graph& g) const {
  if (size() != g.order()) return false;
  for (const auto& [u, v] : g.edges()) {
    if ((*this)[u] == (*this)[v]) return false;
  }
  return true;
}

Coloring greedy_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  Coloring c{std::vector<int>(static_cast<std::size_t>(n), -1)};
  for (int v : order) {
    std::uint64_t used = 0;
    for_each_vertex(g.neighbors(v), [&](int u) {
      if (c[u] >= 0) used |= std::uint64_t{1} << c[u];
    });
    c.color[static_cast<std::size_t>(v)] = std::countr_one(used);
  }
  return c;
}

Graph empty_graph(int k) { return Graph(k); }

Graph complete_graph(int k) {
  Graph g(k);
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int k) {
  Graph g(k);
  for (int v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(0, k - 1);
  return g;
}

Graph star_graph(int leaves) { return join(complete_graph(1), empty_graph(leaves)); }

MultipartiteGraph complete_multipartite(std::span<const int> part_sizes) {
  int n = 0;
  for (int s : part_sizes) {
    if (s < 0) throw std::invalid_argument("negative part size");
    n += s;
  }
  MultipartiteGraph out{Graph(n), Coloring{}};
  out.parts.color.reserve(static_cast<std::size_t>(n));
  for (int p = 0; p < static_cast<int>(part_sizes.size()); ++p) {
    out.parts.color.insert(out.parts.color.end(),
                           static_cast<std::size_t>(part_sizes[static_cast<std::size_t>(p)]), p);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (out.parts[u] != out.parts[v]) out.graph.add_edge(u, v);
  return out;
}

std::vector<int> turan_part_sizes(int n, int r) {
  if (r < 1) throw ParameterError("Turan graph needs r >= 1");
  if (n < 0) throw ParameterError("Turan graph needs n >= 0");
  std::vector<int> sizes(static_cast<std::size_t>(r), n / r);
  for (int p = 0; p < n % r; ++p) ++sizes[static_cast<std::size_t>(p)];
  // Empty parts only arise when n < r; drop them so the graph is K_n.
  std::erase(sizes, 0);
  return sizes;
}

MultipartiteGraph turan_partition(int n, int r) {
  return complete_multipartite(turan_part_sizes(n, r));
}

Graph turan_graph(int n, int r) { return turan_partition(n, r).graph; }

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  Graph out(offset + h.order());
  for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
  for (const auto& [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
  return out;
}

std::array<Graph, 2> extremal_construction(int n, int r, int s) {
  if (s < 1 || r < 2 || n < 2 * s + 1) {
    throw ParameterError("extremal construction needs s >= 1, r >= 2, n >= 2s+1");
  }
  if (n > kMaxVertices) throw ParameterError("n exceeds vertex capacity");
  const int m = (s - 1) / 2;
  return {disjoint_union(turan_graph(s, r), empty_graph(n - s)),
          join(turan_graph(m, r - 1), empty_graph(n - m))};
}

}  // namespace turan
