#pragma once

#include <cstdint>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Number of r-vertex subsets of g inducing a complete graph.
// N(g, K_1) = n and N(g, K_2) = e(g). Throws ParameterError for r < 1.
std::uint64_t count_cliques(const Graph& g, int r);

// True iff g contains no K_q. Throws ParameterError for q < 1.
bool is_clique_free(const Graph& g, int q);

int clique_number(const Graph& g);

struct MatchingWitness {
  std::vector<Edge> edges;

  // Every edge present in g, no shared endpoints.
  bool is_valid_for(const Graph& g) const;
};

struct MatchingResult {
  int value = 0;
  MatchingWitness witness;
};

// Matching number via Edmonds' blossom algorithm, restricted to `active`.
int matching_number(const Graph& g, VertexSet active);
inline int matching_number(const Graph& g) { return matching_number(g, g.vertices()); }

// Maximum matching; the witness is the lexicographically smallest edge list
// among all maximum matchings.
MatchingResult max_matching(const Graph& g);

struct LinearForestWitness {
  std::vector<Edge> edges;

  // Every edge present in g, maximum degree at most 2, acyclic.
  bool is_valid_for(const Graph& g) const;
};

struct LinearForestResult {
  int value = 0;
  LinearForestWitness witness;
};

// lf(g): the most edges of any linear-forest subgraph of g. The witness is
// the lexicographically smallest edge list among the maxima.
//
// Branch and bound over the edges in lexicographic order, trying inclusion
// first. A node's remaining gain is bounded by the minimum of
//   - half the sum over vertices of min(free degree slots, admissible degree),
//   - the drop in component count when every admissible edge is added,
//   - the free slots of a greedy vertex cover of the admissible edges.
// Exponential in the worst case; exact and fast on the graphs we search.
LinearForestResult max_linear_forest(const Graph& g);

// lf(g) >= s, with early exit as soon as an s-edge linear forest is found.
bool has_linear_forest(const Graph& g, int s);

// g contains no linear forest with s edges (lf(g) < s). A linear forest with
// at least s edges contains one with exactly s edges by deleting leaf edges,
// and isolated vertices pad it to order n, so this is L_{n,s}-freeness.
// Throws ParameterError for s < 1.
bool is_linear_forest_free(const Graph& g, int s);

}  // namespace turan
