#include "turan/transforms.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace turan {
namespace {

void check_pair(const Graph& g, int i, int j) {
  if (i < 0 || j >= g.order() || i >= j) {
    throw std::invalid_argument("shift needs 0 <= i < j < n, got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j) + ", n=" + std::to_string(g.order()));
  }
}

// Moves {j,k} to {i,k} for every k in `movable`.
Graph apply_moves(const Graph& g, int i, int j, VertexSet movable) {
  Graph out = g;
  for_each_vertex(movable, [&](int k) {
    assert(!g.has_edge(i, k));
    out.remove_edge(j, k);
    out.add_edge(i, k);
  });
  assert(out.edge_count() == g.edge_count());
  return out;
}

VertexSet shift_candidates(const Graph& g, int i, int j) {
  return g.neighbors(j) & ~g.neighbors(i) & ~bit(i);
}

VertexSet colored_unlike(const Coloring& c, int i, VertexSet set) {
  VertexSet out = 0;
  for_each_vertex(set, [&](int k) {
    if (c[k] != c[i]) out |= bit(k);
  });
  return out;
}

template <class PairShift>
Graph sweep_to_fixpoint(Graph g, SweepOrder order, PairShift&& step) {
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    auto visit = [&](int i, int j) {
      Graph next = step(g, i, j);
      if (!(next == g)) {
        g = std::move(next);
        changed = true;
      }
    };
    if (order == SweepOrder::kAscending) {
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) visit(i, j);
    } else {
      for (int j = n - 1; j >= 1; --j)
        for (int i = j - 1; i >= 0; --i) visit(i, j);
    }
  }
  return g;
}

template <class Qualifies>
Graph close_over(Graph g, int k, std::span<const Edge> pairs, Qualifies&& qualifies) {
  bool added = true;
  while (added) {
    added = false;
    for (const auto& [u, v] : pairs) {
      if (g.has_edge(u, v) || !qualifies(u, v)) continue;
      if (g.degree(u) + g.degree(v) >= k) {
        g.add_edge(u, v);
        added = true;
      }
    }
  }
  return g;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

Graph shift(const Graph& g, int i, int j) {
  check_pair(g, i, j);
  return apply_moves(g, i, j, shift_candidates(g, i, j));
}

Graph strong_shift(const Graph& g, int i, int j, const Coloring& c) {
  check_pair(g, i, j);
  c.check_total_for(g);
  return apply_moves(g, i, j, colored_unlike(c, i, shift_candidates(g, i, j)));
}

Graph full_shift(const Graph& g, SweepOrder order) {
  return sweep_to_fixpoint(g, order, [](const Graph& h, int i, int j) { return shift(h, i, j); });
}

Graph full_strong_shift(const Graph& g, const Coloring& c, SweepOrder order) {
  c.check_total_for(g);
  return sweep_to_fixpoint(
      g, order, [&](const Graph& h, int i, int j) { return strong_shift(h, i, j, c); });
}

Graph closure(const Graph& g, int k) {
  const auto pairs = all_pairs(g.order());
  return closure_in_order(g, k, pairs);
}

Graph closure_in_order(const Graph& g, int k, std::span<const Edge> pair_order) {
  for (const auto& [u, v] : pair_order) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) {
      throw std::invalid_argument("closure pair out of range");
    }
  }
  return close_over(g, k, pair_order, [](int, int) { return true; });
}

Graph strong_closure(const Graph& g, int s, const Coloring& c) {
  c.check_total_for(g);
  const auto pairs = all_pairs(g.order());
  return close_over(g, s, pairs, [&](int u, int v) { return c[u] != c[v]; });
}

}  // namespace turan
