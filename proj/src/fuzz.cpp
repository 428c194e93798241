#include "turan/fuzz.hpp"

#include <algorithm>
#include <string>

#include "turan/errors.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"
#include "turan/transforms.hpp"

namespace turan {
namespace {

using Params = std::map<std::string, int>;

struct TrialOutcome {
  std::int64_t checks = 0;
  std::vector<FuzzViolation> violations;

  void flag(const Graph& g, Params params, std::string detail) {
    violations.push_back({encode_graph6(g), std::move(params), std::move(detail)});
  }
};

int at(const Params& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) throw ParameterError(std::string("violation lacks parameter '") + key + "'");
  return it->second;
}

int clique_parameter(const Graph& g) { return std::max(2, clique_number(g)); }

bool free_of_both(const Graph& g, int r, int s) {
  return is_clique_free(g, r + 1) && is_linear_forest_free(g, s);
}

Graph with_edge(Graph g, int u, int v) {
  g.add_edge(u, v);
  return g;
}

// A strong-shift instance uses pair (i, j), or the full sweep when i < 0.
Graph strong_shift_instance(const Graph& g, const Coloring& c, int i, int j) {
  return i < 0 ? full_strong_shift(g, c) : strong_shift(g, i, j, c);
}

void check_edge_count(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      ++out.checks;
      const int after = shift(g, i, j).edge_count();
      if (after != g.edge_count()) {
        out.flag(g, {{"i", i}, {"j", j}},
                 "edges " + std::to_string(g.edge_count()) + " -> " + std::to_string(after));
      }
    }
  }
}

void check_linear_forest_free(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  const int lf = max_linear_forest(g).value;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const int shifted = max_linear_forest(shift(g, i, j)).value;
      // Hypothesis holds for s in (lf, n-1]; the conclusion fails exactly
      // for s in (lf, shifted].
      out.checks += std::max(0, n - 1 - lf);
      if (shifted > lf && lf + 1 <= n - 1) {
        out.flag(g, {{"i", i}, {"j", j}, {"s", lf + 1}},
                 "lf " + std::to_string(lf) + " -> " + std::to_string(shifted));
      }
    }
  }
}

void check_matching(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  const int nu = matching_number(g);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      ++out.checks;
      const int after = matching_number(shift(g, i, j));
      if (after > nu) {
        out.flag(g, {{"i", i}, {"j", j}}, "nu " + std::to_string(nu) + " -> " + std::to_string(after));
      }
    }
  }
}

void check_cliques(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const Graph h = shift(g, i, j);
      for (int r = 2; r <= 5; ++r) {
        ++out.checks;
        const auto before = count_cliques(g, r);
        const auto after = count_cliques(h, r);
        if (after < before) {
          out.flag(g, {{"i", i}, {"j", j}, {"r", r}},
                   "K_r count " + std::to_string(before) + " -> " + std::to_string(after));
        }
      }
    }
  }
}

void check_degree_sum(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  const int lf = max_linear_forest(g).value;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) continue;
      const int top = std::min(g.degree(u) + g.degree(v), n - 1);
      if (top < 1) continue;
      const int lf_plus = max_linear_forest(with_edge(g, u, v)).value;
      for (int s = 1; s <= top; ++s) {
        ++out.checks;
        if ((lf < s) != (lf_plus < s)) {
          out.flag(g, {{"u", u}, {"v", v}, {"s", s}},
                   "lf " + std::to_string(lf) + " vs " + std::to_string(lf_plus) + " after adding uv");
        }
      }
    }
  }
}

void check_strong_shift(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  const int s = max_linear_forest(g).value + 1;
  if (s > n - 1) return;
  const int r = clique_parameter(g);
  const Coloring c = greedy_coloring(g);
  auto test = [&](int i, int j) {
    ++out.checks;
    const Graph h = strong_shift_instance(g, c, i, j);
    const bool clique_ok = is_clique_free(h, r + 1);
    const bool lf_ok = is_linear_forest_free(h, s);
    if (clique_ok && lf_ok) return;
    std::string detail = i < 0 ? "full sweep" : "pair";
    if (!clique_ok) detail += ": K_" + std::to_string(r + 1) + " created";
    if (!lf_ok) detail += ": L_{n," + std::to_string(s) + "} created";
    detail += " (" + std::to_string(c.num_colors()) + " colors)";
    out.flag(g, {{"i", i}, {"j", j}, {"r", r}, {"s", s}}, detail);
  };
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) test(i, j);
  test(-1, -1);
}

void check_strong_closure(const Graph& g, TrialOutcome& out) {
  const int n = g.order();
  const int r = clique_parameter(g);
  const int lf = max_linear_forest(g).value;
  const bool clique_free = is_clique_free(g, r + 1);
  const Coloring c = greedy_coloring(g);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v) || c[u] == c[v]) continue;
      const int top = std::min(g.degree(u) + g.degree(v), n - 1);
      if (top < 1) continue;
      const Graph h = with_edge(g, u, v);
      const bool h_clique_free = is_clique_free(h, r + 1);
      const int lf_plus = max_linear_forest(h).value;
      for (int s = 1; s <= top; ++s) {
        ++out.checks;
        const bool before = clique_free && lf < s;
        const bool after = h_clique_free && lf_plus < s;
        if (before != after) {
          std::string detail = h_clique_free ? "" : "K_" + std::to_string(r + 1) + " created";
          if (lf_plus >= s) detail += std::string(detail.empty() ? "" : ", ") + "lf reaches " + std::to_string(lf_plus);
          out.flag(g, {{"u", u}, {"v", v}, {"r", r}, {"s", s}}, detail);
        }
      }
    }
  }
}

}  // namespace

std::string_view property_key(FuzzProperty p) {
  switch (p) {
    case FuzzProperty::kShiftEdgeCount: return "shift-edge-count";
    case FuzzProperty::kShiftKeepsLinearForestFree: return "shift-linear-forest-free";
    case FuzzProperty::kShiftMatchingNumber: return "shift-matching-number";
    case FuzzProperty::kShiftCliqueCounts: return "shift-clique-counts";
    case FuzzProperty::kDegreeSumStability: return "degree-sum-stability";
    case FuzzProperty::kStrongShiftKeepsFree: return "strong-shift-free";
    case FuzzProperty::kStrongClosureStability: return "strong-closure-stability";
  }
  return "";
}

std::optional<FuzzProperty> parse_property(std::string_view key) {
  for (FuzzProperty p : kAllFuzzProperties) {
    if (property_key(p) == key) return p;
  }
  return std::nullopt;
}

bool property_is_proved(FuzzProperty p) {
  return p != FuzzProperty::kStrongShiftKeepsFree && p != FuzzProperty::kStrongClosureStability;
}

std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  // splitmix64 over (seed, trial).
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

FuzzReport lemma_fuzz(FuzzProperty property, const FuzzOptions& options) {
  if (options.n_max < 2 || options.n_max > 12) throw ParameterError("fuzz n_max must lie in [2, 12]");
  if (options.trials < 0) throw ParameterError("trial count must be non-negative");

  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(options.trials));
  run_tasks(outcomes.size(), options.policy, [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(options.seed, static_cast<int>(t)));
    std::uniform_int_distribution<int> order(2, options.n_max);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    const int n = order(rng);
    const double p = density(rng);
    const Graph g = random_graph(rng, n, p);
    TrialOutcome& out = outcomes[t];
    switch (property) {
      case FuzzProperty::kShiftEdgeCount: check_edge_count(g, out); break;
      case FuzzProperty::kShiftKeepsLinearForestFree: check_linear_forest_free(g, out); break;
      case FuzzProperty::kShiftMatchingNumber: check_matching(g, out); break;
      case FuzzProperty::kShiftCliqueCounts: check_cliques(g, out); break;
      case FuzzProperty::kDegreeSumStability: check_degree_sum(g, out); break;
      case FuzzProperty::kStrongShiftKeepsFree: check_strong_shift(g, out); break;
      case FuzzProperty::kStrongClosureStability: check_strong_closure(g, out); break;
    }
  });

  FuzzReport report{property, options.seed, options.trials, options.n_max, 0, {}};
  for (auto& out : outcomes) {
    report.checks += out.checks;
    report.violations.insert(report.violations.end(), std::make_move_iterator(out.violations.begin()),
                             std::make_move_iterator(out.violations.end()));
  }
  return report;
}

bool replay_violation(FuzzProperty property, const FuzzViolation& violation) {
  const Graph g = decode_graph6(violation.graph6);
  const Params& p = violation.params;
  switch (property) {
    case FuzzProperty::kShiftEdgeCount:
      return shift(g, at(p, "i"), at(p, "j")).edge_count() != g.edge_count();
    case FuzzProperty::kShiftKeepsLinearForestFree: {
      const int s = at(p, "s");
      return is_linear_forest_free(g, s) && !is_linear_forest_free(shift(g, at(p, "i"), at(p, "j")), s);
    }
    case FuzzProperty::kShiftMatchingNumber:
      return matching_number(shift(g, at(p, "i"), at(p, "j"))) > matching_number(g);
    case FuzzProperty::kShiftCliqueCounts: {
      const int r = at(p, "r");
      return count_cliques(shift(g, at(p, "i"), at(p, "j")), r) < count_cliques(g, r);
    }
    case FuzzProperty::kDegreeSumStability: {
      const int u = at(p, "u");
      const int v = at(p, "v");
      const int s = at(p, "s");
      if (g.has_edge(u, v) || g.degree(u) + g.degree(v) < s) return false;
      return is_linear_forest_free(g, s) != is_linear_forest_free(with_edge(g, u, v), s);
    }
    case FuzzProperty::kStrongShiftKeepsFree: {
      const int r = at(p, "r");
      const int s = at(p, "s");
      if (!free_of_both(g, r, s)) return false;
      const Graph h = strong_shift_instance(g, greedy_coloring(g), at(p, "i"), at(p, "j"));
      return !free_of_both(h, r, s);
    }
    case FuzzProperty::kStrongClosureStability: {
      const int u = at(p, "u");
      const int v = at(p, "v");
      const int r = at(p, "r");
      const int s = at(p, "s");
      const Coloring c = greedy_coloring(g);
      if (g.has_edge(u, v) || c[u] == c[v] || g.degree(u) + g.degree(v) < s) return false;
      return free_of_both(g, r, s) != free_of_both(with_edge(g, u, v), r, s);
    }
  }
  return false;
}

}  // namespace turan
