#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "turan/canonical.hpp"
#include "turan/execution.hpp"
#include "turan/graph.hpp"

namespace turan {

// Largest order the exhaustive generator accepts.
inline constexpr int kExhaustiveCap = 10;

// Must be hereditary: whenever a graph passes, so do its induced subgraphs.
// Generation prunes every extension of a rejected graph.
using GraphFilter = std::function<bool(const Graph&)>;

using GraphVisitor = std::function<void(const Graph&, const CanonicalLabeling&)>;

// Orderly generation by canonical augmentation. A child is its parent plus
// one new vertex whose neighborhood ranges over the parent's subsets, taken
// one per orbit of the parent's automorphism group. It is accepted iff the
// new vertex lies in the automorphism orbit of the child's canonical
// deletion vertex: the vertex of smallest (degree, neighbor-degree sum) with
// the largest canonical label. Each isomorphism class is produced once.
struct GenerationNode {
  Graph graph;
  CanonicalLabeling labeling;
};

GenerationNode generation_root();

// Accepted children of `parent` that pass `filter`, in subset order.
std::vector<GenerationNode> generation_children(const GenerationNode& parent,
                                                const GraphFilter& filter);

// Serial reference: depth-first over the generation tree, visiting every
// class of order 1..max_order that passes `filter` (a null filter admits
// everything). Throws ParameterError unless 1 <= max_order <= kExhaustiveCap.
void enumerate_serial(int max_order, const GraphFilter& filter, const GraphVisitor& visit);

// The generation tree cut at a split order into independent tasks. Task 0
// covers orders up to the split order; task t >= 1 covers the strict
// descendants of the t-th split-order node.
class EnumerationPlan {
 public:
  EnumerationPlan(int max_order, GraphFilter filter, int split_order = 0);

  std::size_t task_count() const { return 1 + frontier_.size(); }
  void run_task(std::size_t task, const GraphVisitor& visit) const;

 private:
  void expand(const GenerationNode& node, const GraphVisitor& visit) const;

  int max_order_;
  int split_order_;
  GraphFilter filter_;
  std::vector<GenerationNode> prefix_;    // every node of order <= split
  std::vector<GenerationNode> frontier_;  // nodes of order == split
};

// Runs every task of `plan`, each with its own accumulator, and returns the
// accumulators in task order. `visit(acc, graph, labeling)`. Under kParallel
// tasks are scheduled dynamically over OpenMP threads.
template <class Acc, class Visit>
std::vector<Acc> run_plan(const EnumerationPlan& plan, const ExecutionPolicy& policy, Visit visit);

// Number of classes of each order 1..max_order passing `filter`.
std::vector<std::int64_t> count_classes(int max_order, const GraphFilter& filter,
                                        const ExecutionPolicy& policy = {});

template <class Acc, class Visit>
std::vector<Acc> run_plan(const EnumerationPlan& plan, const ExecutionPolicy& policy, Visit visit) {
  std::vector<Acc> accs(plan.task_count());
  run_tasks(plan.task_count(), policy, [&](std::size_t t) {
    Acc& acc = accs[t];
    plan.run_task(t, [&](const Graph& g, const CanonicalLabeling& lab) { visit(acc, g, lab); });
  });
  return accs;
}

}  // namespace turan
