#include "turan/freeness.hpp"

#include <algorithm>
#include <array>
#include <queue>

#include "turan/errors.hpp"

namespace turan {
namespace {

std::uint64_t count_from(const Graph& g, VertexSet cand, int remaining) {
  if (remaining == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  while (std::popcount(cand) >= remaining) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    total += count_from(g, cand & g.neighbors(v), remaining - 1);
  }
  return total;
}

bool clique_in(const Graph& g, VertexSet cand, int remaining) {
  if (remaining == 0) return true;
  while (std::popcount(cand) >= remaining) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (clique_in(g, cand & g.neighbors(v), remaining - 1)) return true;
  }
  return false;
}

class Blossom {
 public:
  Blossom(const Graph& g, VertexSet active) : g_(g), active_(active & g.vertices()) {}

  int run() {
    match_.fill(-1);
    int size = 0;
    for_each_vertex(active_, [&](int v) {
      if (match_[idx(v)] != -1) return;
      // Greedy pairing before augmenting keeps the BFS count low.
      const VertexSet free_nbrs = g_.neighbors(v) & active_ & unmatched();
      if (free_nbrs) {
        const int u = std::countr_zero(free_nbrs);
        match_[idx(v)] = u;
        match_[idx(u)] = v;
        ++size;
      }
    });
    for_each_vertex(active_, [&](int root) {
      if (match_[idx(root)] != -1) return;
      int v = find_path(root);
      if (v == -1) return;
      ++size;
      while (v != -1) {
        const int pv = parent_[idx(v)];
        const int ppv = match_[idx(pv)];
        match_[idx(v)] = pv;
        match_[idx(pv)] = v;
        v = ppv;
      }
    });
    return size;
  }

 private:
  static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

  VertexSet unmatched() const {
    VertexSet s = 0;
    for_each_vertex(active_, [&](int v) {
      if (match_[idx(v)] == -1) s |= bit(v);
    });
    return s;
  }

  int lca(int a, int b) const {
    std::array<bool, kMaxVertices> seen{};
    for (;;) {
      a = base_[idx(a)];
      seen[idx(a)] = true;
      if (match_[idx(a)] == -1) break;
      a = parent_[idx(match_[idx(a)])];
    }
    for (;;) {
      b = base_[idx(b)];
      if (seen[idx(b)]) return b;
      b = parent_[idx(match_[idx(b)])];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[idx(v)] != b) {
      in_blossom_[idx(base_[idx(v)])] = true;
      in_blossom_[idx(base_[idx(match_[idx(v)])])] = true;
      parent_[idx(v)] = child;
      child = match_[idx(v)];
      v = parent_[idx(match_[idx(v)])];
    }
  }

  int find_path(int root) {
    used_.fill(false);
    parent_.fill(-1);
    for (int i = 0; i < kMaxVertices; ++i) base_[idx(i)] = i;
    used_[idx(root)] = true;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      VertexSet nbrs = g_.neighbors(v) & active_;
      while (nbrs) {
        const int to = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        if (base_[idx(v)] == base_[idx(to)] || match_[idx(v)] == to) continue;
        if (to == root || (match_[idx(to)] != -1 && parent_[idx(match_[idx(to)])] != -1)) {
          const int cur = lca(v, to);
          in_blossom_.fill(false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for_each_vertex(active_, [&](int i) {
            if (!in_blossom_[idx(base_[idx(i)])]) return;
            base_[idx(i)] = cur;
            if (!used_[idx(i)]) {
              used_[idx(i)] = true;
              queue.push(i);
            }
          });
        } else if (parent_[idx(to)] == -1) {
          parent_[idx(to)] = v;
          if (match_[idx(to)] == -1) return to;
          used_[idx(match_[idx(to)])] = true;
          queue.push(match_[idx(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet active_;
  std::array<int, kMaxVertices> match_{};
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> base_{};
  std::array<bool, kMaxVertices> used_{};
  std::array<bool, kMaxVertices> in_blossom_{};
};

// Union-find with union by size and an undo log; no path compression.
class RollbackDsu {
 public:
  explicit RollbackDsu(int n) {
    for (int v = 0; v < n; ++v) {
      parent_[static_cast<std::size_t>(v)] = v;
      size_[static_cast<std::size_t>(v)] = 1;
    }
  }
  int find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    log_.push_back(b);
  }
  void undo() {
    const int b = log_.back();
    log_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::array<int, kMaxVertices> parent_{};
  std::array<int, kMaxVertices> size_{};
  std::vector<int> log_;
};

class LinearForestSearch {
 public:
  // target < 0 maximizes; otherwise stops once `target` edges are reached.
  LinearForestSearch(const Graph& g, int target)
      : g_(g), edges_(g.edges()), dsu_(g.order()), target_(target) {}

  void run() { dfs(0); }

  int best() const { return best_; }
  bool reached() const { return reached_; }
  std::vector<Edge> best_edges() const {
    std::vector<Edge> out;
    for (std::size_t i : best_set_) out.push_back(edges_[i]);
    return out;
  }

 private:
  bool admissible(const Edge& e) const {
    const auto [u, v] = e;
    return deg_[static_cast<std::size_t>(u)] < 2 && deg_[static_cast<std::size_t>(v)] < 2 &&
           dsu_.find(u) != dsu_.find(v);
  }

  int bound(std::size_t from) const {
    const int n = g_.order();
    std::array<VertexSet, kMaxVertices> adm{};
    std::array<int, kMaxVertices> root{};
    for (int v = 0; v < n; ++v) root[static_cast<std::size_t>(v)] = dsu_.find(v);
    // Component merges over the admissible edges, on forest roots.
    std::array<int, kMaxVertices> up{};
    for (int v = 0; v < n; ++v) up[static_cast<std::size_t>(v)] = v;
    auto top = [&](int v) {
      while (up[static_cast<std::size_t>(v)] != v) v = up[static_cast<std::size_t>(v)];
      return v;
    };
    int merges = 0;
    for (std::size_t i = from; i < edges_.size(); ++i) {
      if (!admissible(edges_[i])) continue;
      const auto [u, v] = edges_[i];
      adm[static_cast<std::size_t>(u)] |= bit(v);
      adm[static_cast<std::size_t>(v)] |= bit(u);
      const int a = top(root[static_cast<std::size_t>(u)]);
      const int b = top(root[static_cast<std::size_t>(v)]);
      if (a != b) {
        up[static_cast<std::size_t>(b)] = a;
        ++merges;
      }
    }
    int slots = 0;
    for (int v = 0; v < n; ++v) {
      slots += std::min(2 - deg_[static_cast<std::size_t>(v)],
                        std::popcount(adm[static_cast<std::size_t>(v)]));
    }
    int best_bound = std::min(merges, slots / 2);

    int cover = 0;
    for (;;) {
      int pick = -1;
      int pick_deg = 0;
      for (int v = 0; v < n; ++v) {
        const int d = std::popcount(adm[static_cast<std::size_t>(v)]);
        if (d > pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      if (pick < 0) break;
      cover += 2 - deg_[static_cast<std::size_t>(pick)];
      if (cover >= best_bound) break;
      for_each_vertex(adm[static_cast<std::size_t>(pick)],
                      [&](int u) { adm[static_cast<std::size_t>(u)] &= ~bit(pick); });
      adm[static_cast<std::size_t>(pick)] = 0;
    }
    return std::min(best_bound, cover);
  }

  void dfs(std::size_t idx) {
    if (target_ >= 0 && current_ >= target_) {
      reached_ = true;
      return;
    }
    while (idx < edges_.size() && !admissible(edges_[idx])) ++idx;
    if (idx == edges_.size()) {
      if (current_ > best_) {
        best_ = current_;
        best_set_ = chosen_;
      }
      return;
    }
    const int gain = bound(idx);
    if (target_ >= 0 ? current_ + gain < target_ : current_ + gain <= best_) return;

    const auto [u, v] = edges_[idx];
    ++deg_[static_cast<std::size_t>(u)];
    ++deg_[static_cast<std::size_t>(v)];
    dsu_.unite(u, v);
    chosen_.push_back(idx);
    ++current_;
    dfs(idx + 1);
    --current_;
    chosen_.pop_back();
    dsu_.undo();
    --deg_[static_cast<std::size_t>(u)];
    --deg_[static_cast<std::size_t>(v)];
    if (reached_) return;

    dfs(idx + 1);
  }

  const Graph& g_;
  std::vector<Edge> edges_;
  std::array<int, kMaxVertices> deg_{};
  RollbackDsu dsu_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_set_;
  int current_ = 0;
  int best_ = -1;
  int target_;
  bool reached_ = false;
};

}  // namespace

std::uint64_t count_cliques(const Graph& g, int r) {
  if (r < 1) throw ParameterError("clique size must be >= 1");
  return count_from(g, g.vertices(), r);
}

bool is_clique_free(const Graph& g, int q) {
  if (q < 1) throw ParameterError("clique size must be >= 1");
  return !clique_in(g, g.vertices(), q);
}

int clique_number(const Graph& g) {
  int omega = 0;
  while (omega < g.order() && clique_in(g, g.vertices(), omega + 1)) ++omega;
  return omega;
}

bool MatchingWitness::is_valid_for(const Graph& g) const {
  VertexSet covered = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
    if (!g.has_edge(u, v)) return false;
    if (covered & (bit(u) | bit(v))) return false;
    covered |= bit(u) | bit(v);
  }
  return true;
}

int matching_number(const Graph& g, VertexSet active) { return Blossom(g, active).run(); }

MatchingResult max_matching(const Graph& g) {
  MatchingResult out;
  out.value = matching_number(g);
  VertexSet free = g.vertices();
  int need = out.value;
  for (const auto& [u, v] : g.edges()) {
    if (need == 0) break;
    if (!(free & bit(u)) || !(free & bit(v))) continue;
    const VertexSet rest = free & ~bit(u) & ~bit(v);
    if (matching_number(g, rest) == need - 1) {
      out.witness.edges.emplace_back(u, v);
      free = rest;
      --need;
    }
  }
  return out;
}

bool LinearForestWitness::is_valid_for(const Graph& g) const {
  std::array<int, kMaxVertices> deg{};
  RollbackDsu dsu(g.order());
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v) return false;
    if (!g.has_edge(u, v)) return false;
    if (++deg[static_cast<std::size_t>(u)] > 2 || ++deg[static_cast<std::size_t>(v)] > 2) return false;
    if (dsu.find(u) == dsu.find(v)) return false;
    dsu.unite(u, v);
  }
  return true;
}

LinearForestResult max_linear_forest(const Graph& g) {
  LinearForestSearch search(g, -1);
  search.run();
  return {search.best(), {search.best_edges()}};
}

bool has_linear_forest(const Graph& g, int s) {
  if (s <= 0) return true;
  if (s >= g.order()) return false;
  LinearForestSearch search(g, s);
  search.run();
  return search.reached();
}

bool is_linear_forest_free(const Graph& g, int s) {
  if (s < 1) throw ParameterError("linear forest size must be >= 1");
  return !has_linear_forest(g, s);
}

}  // namespace turan
