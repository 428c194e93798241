#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turan/execution.hpp"
#include "turan/formulas.hpp"
#include "turan/graph.hpp"

namespace turan {

// Conjunction of forbidden structures. All three are closed under taking
// subgraphs, so they prune generation.
struct ConstraintSpec {
  std::optional<int> clique_bound;     // forbid K_q
  std::optional<int> matching_bound;   // forbid M_{s+1}: matching number <= s
  std::optional<int> linforest_bound;  // forbid L_{n,s}: lf <= s-1

  // Throws ParameterError unless some bound is set, the clique bound is >= 2
  // and the other bounds are >= 1.
  void validate() const;

  // Cheapest test first: clique, matching, linear forest.
  bool admits(const Graph& g) const;

  std::string describe() const;
};

// Number of K_r copies to maximize; "edges" is K_2 under its own name.
struct Objective {
  int clique_size = 2;
  bool named_edges = true;

  static Objective edges() { return {2, true}; }
  static Objective cliques(int r) { return {r, false}; }

  Count evaluate(const Graph& g) const;
  std::string name() const;  // "edges" or "cliques(r)"
};

// Parses "edges" or "cliques(r)" / "cliques:r". Throws ParameterError.
Objective parse_objective(std::string_view text);

enum class Method { kFormula, kExhaustive, kConstruction };
std::string_view method_name(Method m);

struct ExtremalRecord {
  FormulaParams params;
  ConstraintSpec constraints;
  Objective objective;
  Count value = 0;
  // Canonical graph6 of every extremal class, sorted.
  std::vector<std::string> witnesses;
  Method method = Method::kExhaustive;
};

// Exact maximum of `objective` over all n-vertex graphs satisfying
// `constraints`, with every extremal class up to isomorphism.
// Throws ParameterError beyond the exhaustive cap or on an empty spec.
ExtremalRecord extremal_search(int n, const Objective& objective, const ConstraintSpec& constraints,
                               const ExecutionPolicy& policy = {});

// One generation pass serving every order 1..max_n; element i is order i+1.
std::vector<ExtremalRecord> extremal_search_orders(int max_n, const Objective& objective,
                                                   const ConstraintSpec& constraints,
                                                   const ExecutionPolicy& policy = {});

// The five closed-form extremal results this library checks.
enum class Theorem {
  kCliqueMatchingEdges,      // "thm1.1": edges, no K_{r+1}, no M_{s+1}
  kMatchingCliques,          // "thm1.2": K_r copies, no M_{s+1}
  kLinearForestCliques,      // "thm1.3": K_r copies, no L_{n,s}
  kCliqueMatchingCliques,    // "thm1.4": K_r copies, no K_{k+1}, no M_{s+1}
  kCliqueLinearForestEdges,  // "thm1.5": edges, no K_{r+1}, no L_{n,s}
};

inline constexpr Theorem kAllTheorems[] = {
    Theorem::kCliqueMatchingEdges, Theorem::kMatchingCliques, Theorem::kLinearForestCliques,
    Theorem::kCliqueMatchingCliques, Theorem::kCliqueLinearForestEdges};

std::string_view theorem_key(Theorem t);
std::optional<Theorem> parse_theorem(std::string_view key);

bool theorem_uses_k(Theorem t);

// The validity window the closed form is stated for.
bool in_window(Theorem t, const FormulaParams& p);

// Smallest n of the window for the given r, s.
int window_min_n(Theorem t, const FormulaParams& p);

Count formula_value(Theorem t, const FormulaParams& p, Window w = Window::kChecked);

struct TheoremProblem {
  Objective objective;
  ConstraintSpec constraints;
};
TheoremProblem theorem_problem(Theorem t, const FormulaParams& p);

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool contains(int x) const { return lo <= x && x <= hi; }
};

// Parses "a..b" or a single integer.
IntRange parse_range(std::string_view text);

struct VerifyRanges {
  IntRange s{1, 3};
  IntRange r{2, 3};
  IntRange k{3, 4};
  std::optional<IntRange> n;  // nullopt: window minimum up to `cap`
  int cap = 9;
  // Adds rows for n in [s+1, 2s] (for the linear-forest clique count,
  // [ceil((s+1)/2), s]); they are reported but never fail the run.
  bool probe_low_n = false;
};

struct VerificationRow {
  FormulaParams params;
  bool probe = false;
  Count formula = 0;
  Count exhaustive = 0;
  std::vector<std::string> witnesses;
  bool agree() const { return formula == exhaustive; }
};

struct VerificationReport {
  Theorem theorem;
  std::vector<VerificationRow> rows;
  bool passed() const;
};

// Compares the closed form with exhaustive search on every in-range
// parameter tuple inside the window (plus probe rows on request).
VerificationReport verify_theorem(Theorem t, const VerifyRanges& ranges,
                                  const ExecutionPolicy& policy = {});

}  // namespace turan
