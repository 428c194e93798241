#include "turan/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace turan {
namespace {

using Cells = std::vector<VertexSet>;

// Splits cells until every vertex of a cell has the same number of
// neighbors in every cell. Only cell order and counts steer the splits, so
// refining a relabeled graph gives the relabeled result.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size(); ++w) {
      const VertexSet splitter = cells[w];
      for (std::size_t x = 0; x < cells.size(); ++x) {
        const VertexSet cell = cells[x];
        if (std::popcount(cell) == 1) continue;
        std::array<VertexSet, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices;
        int hi = 0;
        for_each_vertex(cell, [&](int v) {
          const int c = std::popcount(g.neighbors(v) & splitter);
          by_count[static_cast<std::size_t>(c)] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        });
        if (lo == hi) continue;
        Cells pieces;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[static_cast<std::size_t>(c)]) pieces.push_back(by_count[static_cast<std::size_t>(c)]);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
        x += pieces.size() - 1;
        changed = true;
      }
    }
  }
}

// Union-find over vertices, keeping the smallest vertex as root.
struct OrbitSets {
  std::array<int, kMaxVertices> up{};
  explicit OrbitSets(int n) { std::iota(up.begin(), up.begin() + n, 0); }
  int find(int v) {
    while (up[static_cast<std::size_t>(v)] != v) {
      up[static_cast<std::size_t>(v)] = up[static_cast<std::size_t>(up[static_cast<std::size_t>(v)])];
      v = up[static_cast<std::size_t>(v)];
    }
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    up[static_cast<std::size_t>(a)] = b;
  }
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) cells.push_back(g_.vertices());
    visit(std::move(cells));

    CanonicalLabeling out;
    out.label = best_label_;
    out.canonical = g_.relabeled(best_label_);
    OrbitSets orbits(n_);
    for (const auto& gamma : generators_)
      for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[static_cast<std::size_t>(v)]);
    out.orbit.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) out.orbit[static_cast<std::size_t>(v)] = orbits.find(v);
    out.generators = std::move(generators_);
    return out;
  }

 private:
  static constexpr int kNoJump = -1;

  using Code = std::vector<VertexSet>;

  Code code_of(const std::vector<int>& label) const {
    Code code(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(v), [&](int u) { row |= bit(label[static_cast<std::size_t>(u)]); });
      code[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = row;
    }
    return code;
  }

  // The automorphism sending the leaf `from` onto the leaf `to`.
  std::vector<int> map_between(const std::vector<int>& from, const std::vector<int>& to) const {
    std::vector<int> at_position(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) at_position[static_cast<std::size_t>(to[static_cast<std::size_t>(v)])] = v;
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      gamma[static_cast<std::size_t>(v)] = at_position[static_cast<std::size_t>(from[static_cast<std::size_t>(v)])];
    }
    return gamma;
  }

  int leaf(const Cells& cells) {
    std::vector<int> label(static_cast<std::size_t>(n_));
    for (std::size_t pos = 0; pos < cells.size(); ++pos) {
      label[static_cast<std::size_t>(std::countr_zero(cells[pos]))] = static_cast<int>(pos);
    }
    Code code = code_of(label);
    if (!have_first_) {
      have_first_ = true;
      first_path_ = path_;
      first_label_ = label;
      first_code_ = code;
      best_label_ = std::move(label);
      best_code_ = std::move(code);
      return kNoJump;
    }
    if (code == first_code_) {
      generators_.push_back(map_between(first_label_, label));
      std::size_t common = 0;
      while (common < path_.size() && common < first_path_.size() &&
             path_[common] == first_path_[common]) {
        ++common;
      }
      return static_cast<int>(common);
    }
    if (code == best_code_) {
      generators_.push_back(map_between(best_label_, label));
      return kNoJump;
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_label_ = std::move(label);
    }
    return kNoJump;
  }

  // Orbits of the group generated by the known automorphisms fixing path_.
  OrbitSets stabilizer_orbits() const {
    OrbitSets orbits(n_);
    for (const auto& gamma : generators_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(), [&](int v) {
        return gamma[static_cast<std::size_t>(v)] == v;
      });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) orbits.unite(v, gamma[static_cast<std::size_t>(v)]);
    }
    return orbits;
  }

  int visit(Cells cells) {
    refine(g_, cells);
    const auto target = std::find_if(cells.begin(), cells.end(),
                                     [](VertexSet c) { return std::popcount(c) > 1; });
    if (target == cells.end()) return leaf(cells);
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    const int level = static_cast<int>(path_.size());

    std::vector<int> explored;
    std::size_t known_generators = 0;
    OrbitSets orbits(n_);
    VertexSet candidates = cells[t];
    while (candidates) {
      const int v = std::countr_zero(candidates);
      candidates &= candidates - 1;
      if (generators_.size() != known_generators) {
        orbits = stabilizer_orbits();
        known_generators = generators_.size();
      }
      const int root = orbits.find(v);
      if (std::any_of(explored.begin(), explored.end(), [&](int u) { return orbits.find(u) == root; })) {
        continue;
      }
      explored.push_back(v);

      Cells child = cells;
      child[t] &= ~bit(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(t), bit(v));
      path_.push_back(v);
      const int jump = visit(std::move(child));
      path_.pop_back();
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  std::vector<int> path_;
  std::vector<int> first_path_;
  std::vector<int> first_label_;
  Code first_code_;
  std::vector<int> best_label_;
  Code best_code_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) { return CanonSearch(g).run(); }

Graph canonical_form(const Graph& g) { return canonical_labeling(g).canonical; }

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace turan
