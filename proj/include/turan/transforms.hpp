#pragma once

#include <span>

#include "turan/graph.hpp"

namespace turan {

// Kelmans shift S_ij with i < j: every edge {j,k} with k != i becomes {i,k}
// unless {i,k} is already an edge. Targets are tested against g itself, so
// the rewrite is simultaneous over all edges at j. Preserves edge count.
// Throws std::invalid_argument unless 0 <= i < j < n.
Graph shift(const Graph& g, int i, int j);

// Strong shift S'_ij: as `shift`, but {j,k} only moves when c(k) != c(i).
// Throws std::invalid_argument on i >= j or a coloring that is not total.
Graph strong_shift(const Graph& g, int i, int j, const Coloring& c);

enum class SweepOrder {
  kAscending,   // j = 1..n-1, then i = 0..j-1
  kDescending,  // j = n-1..1, then i = j-1..0
};

// Applies S_ij (or S'_ij) over all pairs i < j in sweep order, repeating
// sweeps until one changes nothing. The result is a fixpoint of every
// single-pair shift. Terminates because each move lowers the sum of
// endpoint labels.
Graph full_shift(const Graph& g, SweepOrder order = SweepOrder::kAscending);
Graph full_strong_shift(const Graph& g, const Coloring& c,
                        SweepOrder order = SweepOrder::kAscending);

// cl_k(g): repeatedly joins non-adjacent u, v with d(u) + d(v) >= k.
// Candidate pairs are scanned in lexicographic order, restarting the scan
// after each full pass that added something.
Graph closure(const Graph& g, int k);

// Same closure, scanning candidate pairs in the caller's order. The result
// does not depend on the order.
Graph closure_in_order(const Graph& g, int k, std::span<const Edge> pair_order);

// Like `closure`, but only pairs with c(u) != c(v) qualify.
Graph strong_closure(const Graph& g, int s, const Coloring& c);

}  // namespace turan
