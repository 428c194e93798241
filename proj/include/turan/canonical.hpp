#pragma once

#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct CanonicalLabeling {
  // label[v] is the canonical position of vertex v.
  std::vector<int> label;
  // g relabeled by `label`; equal for isomorphic inputs.
  Graph canonical;
  // orbit[v] is the smallest vertex in v's automorphism orbit.
  std::vector<int> orbit;
  // Automorphisms found during the search (vertex maps). They generate the
  // full automorphism group.
  std::vector<std::vector<int>> generators;
};

// Canonical labeling by equitable partition refinement and individualization.
// The search tree is pruned with the automorphisms it discovers: a child is
// skipped when an automorphism fixing the current prefix maps an explored
// sibling onto it, and a leaf matching the first leaf returns to the common
// ancestor with the first path.
CanonicalLabeling canonical_labeling(const Graph& g);

Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace turan
