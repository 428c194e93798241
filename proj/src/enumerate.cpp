#include "turan/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "turan/errors.hpp"

namespace turan {
namespace {

void check_order(int max_order) {
  if (max_order < 1 || max_order > kExhaustiveCap) {
    throw ParameterError("exhaustive order must lie in [1, " + std::to_string(kExhaustiveCap) +
                         "], got " + std::to_string(max_order));
  }
}

VertexSet image(VertexSet set, const std::vector<int>& gamma) {
  VertexSet out = 0;
  for_each_vertex(set, [&](int v) { out |= bit(gamma[static_cast<std::size_t>(v)]); });
  return out;
}

// One subset per orbit of the parent's automorphism group, smallest first.
std::vector<VertexSet> subset_orbit_representatives(const GenerationNode& parent) {
  const int k = parent.graph.order();
  const std::size_t count = std::size_t{1} << k;
  std::vector<std::uint32_t> up(count);
  std::iota(up.begin(), up.end(), 0U);
  auto find = [&](std::uint32_t x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  };
  for (const auto& gamma : parent.labeling.generators) {
    for (std::uint32_t s = 0; s < count; ++s) {
      const auto a = find(s);
      const auto b = find(static_cast<std::uint32_t>(image(s, gamma)));
      if (a != b) up[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<VertexSet> reps;
  for (std::uint32_t s = 0; s < count; ++s) {
    if (find(s) == s) reps.push_back(s);
  }
  return reps;
}

// (degree, sum of neighbor degrees), packed so smaller compares smaller.
std::int64_t deletion_invariant(const Graph& g, int v) {
  std::int64_t sum = 0;
  for_each_vertex(g.neighbors(v), [&](int u) { sum += g.degree(u); });
  return static_cast<std::int64_t>(g.degree(v)) * 4096 + sum;
}

}  // namespace

GenerationNode generation_root() {
  Graph k1(1);
  return {k1, canonical_labeling(k1)};
}

std::vector<GenerationNode> generation_children(const GenerationNode& parent,
                                                const GraphFilter& filter) {
  const int k = parent.graph.order();
  if (k >= kExhaustiveCap) throw ParameterError("generation beyond exhaustive cap");
  std::vector<GenerationNode> children;
  for (VertexSet nbrs : subset_orbit_representatives(parent)) {
    Graph child = parent.graph.with_vertex(nbrs);
    std::array<std::int64_t, kMaxVertices> inv{};
    std::int64_t lowest = INT64_MAX;
    for (int v = 0; v <= k; ++v) {
      inv[static_cast<std::size_t>(v)] = deletion_invariant(child, v);
      lowest = std::min(lowest, inv[static_cast<std::size_t>(v)]);
    }
    if (inv[static_cast<std::size_t>(k)] != lowest) continue;
    if (filter && !filter(child)) continue;

    CanonicalLabeling lab = canonical_labeling(child);
    int deletion = -1;
    for (int v = 0; v <= k; ++v) {
      if (inv[static_cast<std::size_t>(v)] != lowest) continue;
      if (deletion < 0 || lab.label[static_cast<std::size_t>(v)] > lab.label[static_cast<std::size_t>(deletion)]) {
        deletion = v;
      }
    }
    if (lab.orbit[static_cast<std::size_t>(k)] != lab.orbit[static_cast<std::size_t>(deletion)]) continue;
    children.push_back({std::move(child), std::move(lab)});
  }
  return children;
}

void enumerate_serial(int max_order, const GraphFilter& filter, const GraphVisitor& visit) {
  check_order(max_order);
  const GenerationNode root = generation_root();
  if (filter && !filter(root.graph)) return;
  auto dfs = [&](auto&& self, const GenerationNode& node) -> void {
    visit(node.graph, node.labeling);
    if (node.graph.order() == max_order) return;
    for (const auto& child : generation_children(node, filter)) self(self, child);
  };
  dfs(dfs, root);
}

EnumerationPlan::EnumerationPlan(int max_order, GraphFilter filter, int split_order)
    : max_order_(max_order), filter_(std::move(filter)) {
  check_order(max_order);
  split_order_ = split_order > 0 ? std::min(split_order, max_order)
                                 : std::clamp(max_order - 2, 1, 7);
  const GenerationNode root = generation_root();
  if (filter_ && !filter_(root.graph)) return;
  auto dfs = [&](auto&& self, const GenerationNode& node) -> void {
    prefix_.push_back(node);
    if (node.graph.order() == split_order_) {
      if (split_order_ < max_order_) frontier_.push_back(node);
      return;
    }
    for (const auto& child : generation_children(node, filter_)) self(self, child);
  };
  dfs(dfs, root);
}

void EnumerationPlan::expand(const GenerationNode& node, const GraphVisitor& visit) const {
  if (node.graph.order() == max_order_) return;
  for (const auto& child : generation_children(node, filter_)) {
    visit(child.graph, child.labeling);
    expand(child, visit);
  }
}

void EnumerationPlan::run_task(std::size_t task, const GraphVisitor& visit) const {
  if (task == 0) {
    for (const auto& node : prefix_) visit(node.graph, node.labeling);
    return;
  }
  expand(frontier_.at(task - 1), visit);
}

std::vector<std::int64_t> count_classes(int max_order, const GraphFilter& filter,
                                        const ExecutionPolicy& policy) {
  using Counts = std::vector<std::int64_t>;
  if (policy.mode == Execution::kSerial) {
    Counts total(static_cast<std::size_t>(max_order), 0);
    enumerate_serial(max_order, filter, [&](const Graph& g, const CanonicalLabeling&) {
      ++total[static_cast<std::size_t>(g.order() - 1)];
    });
    return total;
  }
  const EnumerationPlan plan(max_order, filter);
  const auto per_task = run_plan<Counts>(plan, policy, [&](Counts& acc, const Graph& g, const CanonicalLabeling&) {
    if (acc.empty()) acc.assign(static_cast<std::size_t>(max_order), 0);
    ++acc[static_cast<std::size_t>(g.order() - 1)];
  });
  Counts total(static_cast<std::size_t>(max_order), 0);
  for (const auto& acc : per_task)
    for (std::size_t i = 0; i < acc.size(); ++i) total[i] += acc[i];
  return total;
}

}  // namespace turan
