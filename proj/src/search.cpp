#include "turan/search.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "turan/enumerate.hpp"
#include "turan/errors.hpp"
#include "turan/freeness.hpp"
#include "turan/graph6.hpp"

namespace turan {
namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParameterError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return value;
}

struct LevelBest {
  Count value = -1;
  std::vector<std::string> witnesses;

  void offer(Count v, const Graph& canonical) {
    if (v < value) return;
    if (v > value) {
      value = v;
      witnesses.clear();
    }
    witnesses.push_back(encode_graph6(canonical));
  }

  void merge(LevelBest&& other) {
    if (other.value < value) return;
    if (other.value > value) {
      *this = std::move(other);
      return;
    }
    witnesses.insert(witnesses.end(), std::make_move_iterator(other.witnesses.begin()),
                     std::make_move_iterator(other.witnesses.end()));
  }
};

using Levels = std::vector<LevelBest>;

}  // namespace

void ConstraintSpec::validate() const {
  if (!clique_bound && !matching_bound && !linforest_bound) {
    throw ParameterError("constraint spec needs at least one bound");
  }
  // K_1 excludes every non-empty graph, so clique bounds start at 2.
  if (clique_bound && *clique_bound < 2) throw ParameterError("clique bound must be >= 2");
  if (matching_bound && *matching_bound < 1) throw ParameterError("matching bound must be >= 1");
  if (linforest_bound && *linforest_bound < 1) throw ParameterError("linear forest bound must be >= 1");
}

bool ConstraintSpec::admits(const Graph& g) const {
  if (clique_bound && !is_clique_free(g, *clique_bound)) return false;
  if (matching_bound && matching_number(g) > *matching_bound) return false;
  if (linforest_bound && has_linear_forest(g, *linforest_bound)) return false;
  return true;
}

std::string ConstraintSpec::describe() const {
  std::string out;
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += ", ";
    out += part;
  };
  if (clique_bound) add("no K_" + std::to_string(*clique_bound));
  if (matching_bound) add("no M_" + std::to_string(*matching_bound + 1));
  if (linforest_bound) add("no L_{n," + std::to_string(*linforest_bound) + "}");
  return out;
}

Count Objective::evaluate(const Graph& g) const {
  if (clique_size == 2) return g.edge_count();
  return static_cast<Count>(count_cliques(g, clique_size));
}

std::string Objective::name() const {
  return named_edges ? "edges" : "cliques(" + std::to_string(clique_size) + ")";
}

Objective parse_objective(std::string_view text) {
  if (text == "edges") return Objective::edges();
  for (std::string_view prefix : {"cliques(", "cliques:"}) {
    if (!text.starts_with(prefix)) continue;
    std::string_view rest = text.substr(prefix.size());
    if (prefix.back() == '(') {
      if (!rest.ends_with(')')) break;
      rest.remove_suffix(1);
    }
    const int r = parse_int(rest, "clique size");
    if (r < 1) throw ParameterError("clique size must be >= 1");
    return Objective::cliques(r);
  }
  throw ParameterError("objective must be 'edges' or 'cliques(r)', got '" + std::string(text) + "'");
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kFormula: return "formula";
    case Method::kExhaustive: return "exhaustive";
    case Method::kConstruction: return "construction";
  }
  return "unknown";
}

std::vector<ExtremalRecord> extremal_search_orders(int max_n, const Objective& objective,
                                                   const ConstraintSpec& constraints,
                                                   const ExecutionPolicy& policy) {
  constraints.validate();
  if (max_n < 1 || max_n > kExhaustiveCap) {
    throw ParameterError("search order must lie in [1, " + std::to_string(kExhaustiveCap) + "]");
  }
  const GraphFilter filter = [&](const Graph& g) { return constraints.admits(g); };
  auto visit = [&](Levels& acc, const Graph& g, const CanonicalLabeling& lab) {
    if (acc.empty()) acc.resize(static_cast<std::size_t>(max_n));
    acc[static_cast<std::size_t>(g.order() - 1)].offer(objective.evaluate(g), lab.canonical);
  };

  Levels total(static_cast<std::size_t>(max_n));
  if (policy.mode == Execution::kSerial) {
    enumerate_serial(max_n, filter, [&](const Graph& g, const CanonicalLabeling& lab) { visit(total, g, lab); });
  } else {
    const EnumerationPlan plan(max_n, filter);
    for (auto& acc : run_plan<Levels>(plan, policy, visit)) {
      for (std::size_t i = 0; i < acc.size(); ++i) total[i].merge(std::move(acc[i]));
    }
  }

  std::vector<ExtremalRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    LevelBest& level = total[static_cast<std::size_t>(n - 1)];
    std::sort(level.witnesses.begin(), level.witnesses.end());
    ExtremalRecord rec;
    rec.params.n = n;
    rec.params.r = objective.clique_size;
    rec.constraints = constraints;
    rec.objective = objective;
    rec.value = level.value;
    rec.witnesses = std::move(level.witnesses);
    rec.method = Method::kExhaustive;
    out.push_back(std::move(rec));
  }
  return out;
}

ExtremalRecord extremal_search(int n, const Objective& objective, const ConstraintSpec& constraints,
                               const ExecutionPolicy& policy) {
  auto all = extremal_search_orders(n, objective, constraints, policy);
  return std::move(all.back());
}

std::string_view theorem_key(Theorem t) {
  switch (t) {
    case Theorem::kCliqueMatchingEdges: return "thm1.1";
    case Theorem::kMatchingCliques: return "thm1.2";
    case Theorem::kLinearForestCliques: return "thm1.3";
    case Theorem::kCliqueMatchingCliques: return "thm1.4";
    case Theorem::kCliqueLinearForestEdges: return "thm1.5";
  }
  return "";
}

std::optional<Theorem> parse_theorem(std::string_view key) {
  for (Theorem t : kAllTheorems) {
    if (theorem_key(t) == key) return t;
  }
  return std::nullopt;
}

bool theorem_uses_k(Theorem t) { return t == Theorem::kCliqueMatchingCliques; }

int window_min_n(Theorem t, const FormulaParams& p) {
  return t == Theorem::kLinearForestCliques ? p.s + 1 : 2 * p.s + 1;
}

namespace {

bool parameters_valid(Theorem t, const FormulaParams& p) {
  switch (t) {
    case Theorem::kCliqueMatchingEdges:
    case Theorem::kMatchingCliques:
      return p.r >= 2 && p.s >= 0;
    case Theorem::kLinearForestCliques:
    case Theorem::kCliqueLinearForestEdges:
      return p.r >= 2 && p.s >= 1;
    case Theorem::kCliqueMatchingCliques:
      return p.k >= p.r && p.r >= 3 && p.s >= 0;
  }
  return false;
}

}  // namespace

bool in_window(Theorem t, const FormulaParams& p) {
  return parameters_valid(t, p) && p.n >= window_min_n(t, p);
}

Count formula_value(Theorem t, const FormulaParams& p, Window w) {
  switch (t) {
    case Theorem::kCliqueMatchingEdges: return ex_clique_matching(p, w);
    case Theorem::kMatchingCliques: return gex_matching(p, w);
    case Theorem::kLinearForestCliques: return gex_linear_forest(p, w);
    case Theorem::kCliqueMatchingCliques: return gex_clique_matching(p, w);
    case Theorem::kCliqueLinearForestEdges: return ex_clique_linear_forest(p, w);
  }
  throw ParameterError("unknown theorem");
}

TheoremProblem theorem_problem(Theorem t, const FormulaParams& p) {
  TheoremProblem out;
  switch (t) {
    case Theorem::kCliqueMatchingEdges:
      out.objective = Objective::edges();
      out.constraints.clique_bound = p.r + 1;
      out.constraints.matching_bound = p.s;
      break;
    case Theorem::kMatchingCliques:
      out.objective = Objective::cliques(p.r);
      out.constraints.matching_bound = p.s;
      break;
    case Theorem::kLinearForestCliques:
      out.objective = Objective::cliques(p.r);
      out.constraints.linforest_bound = p.s;
      break;
    case Theorem::kCliqueMatchingCliques:
      out.objective = Objective::cliques(p.r);
      out.constraints.clique_bound = p.k + 1;
      out.constraints.matching_bound = p.s;
      break;
    case Theorem::kCliqueLinearForestEdges:
      out.objective = Objective::edges();
      out.constraints.clique_bound = p.r + 1;
      out.constraints.linforest_bound = p.s;
      break;
  }
  return out;
}

IntRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int v = parse_int(text, "range");
    return {v, v};
  }
  const IntRange r{parse_int(text.substr(0, dots), "range start"),
                   parse_int(text.substr(dots + 2), "range end")};
  if (r.lo > r.hi) throw ParameterError("empty range '" + std::string(text) + "'");
  return r;
}

bool VerificationReport::passed() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerificationRow& row) { return row.probe || row.agree(); });
}

VerificationReport verify_theorem(Theorem t, const VerifyRanges& ranges, const ExecutionPolicy& policy) {
  if (ranges.cap < 1 || ranges.cap > kExhaustiveCap) {
    throw ParameterError("exhaustive cap must lie in [1, " + std::to_string(kExhaustiveCap) + "]");
  }
  if (ranges.n && ranges.n->hi > ranges.cap) {
    throw ParameterError("n range exceeds the exhaustive cap " + std::to_string(ranges.cap));
  }
  VerificationReport report{t, {}};
  const IntRange ks = theorem_uses_k(t) ? ranges.k : IntRange{0, 0};
  for (int s = ranges.s.lo; s <= ranges.s.hi; ++s) {
    for (int r = ranges.r.lo; r <= ranges.r.hi; ++r) {
      for (int k = ks.lo; k <= ks.hi; ++k) {
        FormulaParams base{0, r, s, k};
        if (!parameters_valid(t, base)) continue;
        const int lo = window_min_n(t, base);
        std::vector<VerificationRow> group;
        if (ranges.probe_low_n) {
          const int probe_lo = t == Theorem::kLinearForestCliques ? (s + 2) / 2 : s + 1;
          for (int n = std::max(1, probe_lo); n < lo && n <= ranges.cap; ++n) {
            if (ranges.n && !ranges.n->contains(n)) continue;
            VerificationRow row;
            row.params = {n, r, s, k};
            row.probe = true;
            row.formula = formula_value(t, row.params, Window::kUnchecked);
            group.push_back(std::move(row));
          }
        }
        const IntRange ns = ranges.n.value_or(IntRange{lo, ranges.cap});
        for (int n = std::max(lo, ns.lo); n <= ns.hi; ++n) {
          VerificationRow row;
          row.params = {n, r, s, k};
          row.formula = formula_value(t, row.params);
          group.push_back(std::move(row));
        }
        if (group.empty()) continue;

        int max_n = 0;
        for (const auto& row : group) max_n = std::max(max_n, row.params.n);
        const TheoremProblem problem = theorem_problem(t, base);
        auto records = extremal_search_orders(max_n, problem.objective, problem.constraints, policy);
        for (auto& row : group) {
          auto& rec = records[static_cast<std::size_t>(row.params.n - 1)];
          row.exhaustive = rec.value;
          row.witnesses = rec.witnesses;
          report.rows.push_back(std::move(row));
        }
      }
    }
  }
  return report;
}

}  // namespace turan
