// turan: command-line front end for the library.
//
// Exit codes: 0 success, 2 usage / parameter window / malformed graph6,
// 3 verification failure (or a violation of a proved fuzz property).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turan/canonical.hpp"
#include "turan/enumerate.hpp"
#include "turan/errors.hpp"
#include "turan/formulas.hpp"
#include "turan/freeness.hpp"
#include "turan/fuzz.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/report.hpp"
#include "turan/search.hpp"
#include "turan/transforms.hpp"

using nlohmann::ordered_json;
using namespace turan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailed = 3;

struct RunConfig {
  std::string format = "table";
  int threads = 0;
  std::uint64_t seed = 0;
  int cap = 9;
  bool serial = false;

  OutputFormat output() const {
    if (format == "json") return OutputFormat::kJson;
    if (format == "csv") return OutputFormat::kCsv;
    return OutputFormat::kTable;
  }
  ExecutionPolicy policy() const {
    return {serial ? Execution::kSerial : Execution::kParallel, threads};
  }
};

struct GraphInput {
  std::string g6;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string (one graph)");
    cmd->add_option("--input", file, "file with one graph6 per line (default: stdin)");
  }

  std::vector<Graph6Line> read() const {
    if (!g6.empty()) {
      std::istringstream in(g6);
      return read_graph6_stream(in);
    }
    if (!file.empty()) {
      std::ifstream in(file);
      if (!in) throw ParameterError("cannot open " + file);
      return read_graph6_stream(in);
    }
    return read_graph6_stream(std::cin);
  }
};

int need(const std::optional<int>& v, const std::string& what, const std::string& flag) {
  if (!v) throw ParameterError(what + " needs " + flag);
  return *v;
}

void print(const ordered_json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParameterError("bad integer '" + item + "' in list");
    out.push_back(v);
  }
  return out;
}

Coloring coloring_for(const Graph& g, const std::string& spec) {
  if (spec == "greedy") return greedy_coloring(g);
  Coloring c{parse_int_list(spec)};
  c.check_total_for(g);
  return c;
}

ordered_json edges_json(const std::vector<Edge>& edges) {
  ordered_json out = ordered_json::array();
  for (const auto& [u, v] : edges) out.push_back({u, v});
  return out;
}

// ---- formula ---------------------------------------------------------------

struct FormulaArgs {
  std::string name;
  std::optional<int> n, r, s, k, t;
  bool unchecked = false;
};

int cmd_formula(const FormulaArgs& a, const RunConfig& cfg) {
  const Window w = a.unchecked ? Window::kUnchecked : Window::kChecked;
  ordered_json params;
  Count value = 0;
  if (a.name == "turan") {
    const int n = need(a.n, a.name, "--n");
    const int r = need(a.r, a.name, "--r");
    params = {{"n", n}, {"r", r}};
    value = turan_number(n, r);
  } else if (a.name == "turan-cliques") {
    const int t = need(a.t, a.name, "--t");
    const int k = need(a.k, a.name, "--k");
    const int r = need(a.r, a.name, "--r");
    params = {{"t", t}, {"k", k}, {"r", r}};
    value = turan_clique_count(t, k, r);
  } else if (auto thm = parse_theorem(a.name)) {
    FormulaParams p{need(a.n, a.name, "--n"), need(a.r, a.name, "--r"), need(a.s, a.name, "--s"), 0};
    params = {{"n", p.n}, {"r", p.r}, {"s", p.s}};
    if (theorem_uses_k(*thm)) {
      p.k = need(a.k, a.name, "--k");
      params["k"] = p.k;
    }
    value = formula_value(*thm, p, w);
  } else {
    throw ParameterError("unknown formula '" + a.name + "'");
  }

  switch (cfg.output()) {
    case OutputFormat::kJson:
      print({{"formula", a.name},
             {"params", params},
             {"window", a.unchecked ? "unchecked" : "checked"},
             {"value", value}});
      break;
    case OutputFormat::kCsv: {
      Table t;
      t.header.push_back("formula");
      t.rows.push_back({a.name});
      for (const auto& [key, v] : params.items()) {
        t.header.push_back(key);
        t.rows[0].push_back(std::to_string(v.get<int>()));
      }
      t.header.push_back("value");
      t.rows[0].push_back(std::to_string(value));
      std::cout << t.csv();
      break;
    }
    case OutputFormat::kTable:
      std::cout << value << '\n';
      break;
  }
  return kExitOk;
}

// ---- construct -------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  std::optional<int> n, r, s;
  std::string parts;
};

int cmd_construct(const ConstructArgs& a, const RunConfig& cfg) {
  std::vector<std::pair<std::string, Graph>> graphs;
  ordered_json params = ordered_json::object();
  if (a.name == "thm1.5") {
    const int n = need(a.n, a.name, "--n");
    const int r = need(a.r, a.name, "--r");
    const int s = need(a.s, a.name, "--s");
    params = {{"n", n}, {"r", r}, {"s", s}};
    const auto pair = extremal_construction(n, r, s);
    graphs = {{"turan-padded", pair[0]}, {"join", pair[1]}};
  } else if (a.name == "turan") {
    const int n = need(a.n, a.name, "--n");
    const int r = need(a.r, a.name, "--r");
    if (n < 0 || r < 1) throw ParameterError("turan needs n >= 0 and r >= 1");
    params = {{"n", n}, {"r", r}};
    graphs = {{"turan", turan_graph(n, r)}};
  } else if (a.name == "multipartite") {
    if (a.parts.empty()) throw ParameterError("multipartite needs --parts");
    const auto sizes = parse_int_list(a.parts);
    for (int p : sizes) {
      if (p < 0) throw ParameterError("part sizes must be >= 0");
    }
    params = {{"parts", sizes}};
    graphs = {{"multipartite", complete_multipartite(sizes).graph}};
  } else if (a.name == "empty" || a.name == "complete" || a.name == "path" || a.name == "cycle" ||
             a.name == "star") {
    const int n = need(a.n, a.name, "--n");
    if (n < 0) throw ParameterError(a.name + " needs n >= 0");
    params = {{"n", n}};
    Graph g;
    if (a.name == "empty") g = empty_graph(n);
    if (a.name == "complete") g = complete_graph(n);
    if (a.name == "path") g = path_graph(n);
    if (a.name == "cycle") g = cycle_graph(n);
    if (a.name == "star") g = star_graph(n);
    graphs = {{a.name, g}};
  } else {
    throw ParameterError("unknown construction '" + a.name + "'");
  }

  switch (cfg.output()) {
    case OutputFormat::kJson: {
      ordered_json list = ordered_json::array();
      for (const auto& [label, g] : graphs) {
        ordered_json j = {{"label", label}};
        j.update(graph_json(g));
        list.push_back(std::move(j));
      }
      print({{"construction", a.name}, {"params", params}, {"graphs", list}});
      break;
    }
    case OutputFormat::kCsv: {
      Table t{{"label", "graph6", "n", "edge_count"}, {}};
      for (const auto& [label, g] : graphs) {
        t.rows.push_back({label, encode_graph6(g), std::to_string(g.order()), std::to_string(g.edge_count())});
      }
      std::cout << t.csv();
      break;
    }
    case OutputFormat::kTable:
      for (const auto& [label, g] : graphs) std::cout << encode_graph6(g) << '\n';
      break;
  }
  return kExitOk;
}

// ---- check -----------------------------------------------------------------

struct CheckArgs {
  GraphInput input;
  std::optional<int> clique_free, linear_forest_free, matching_free;
};

int cmd_check(const CheckArgs& a, const RunConfig& cfg) {
  if (a.clique_free && *a.clique_free < 1) throw ParameterError("--clique-free needs q >= 1");
  if (a.linear_forest_free && *a.linear_forest_free < 1) throw ParameterError("--linear-forest-free needs s >= 1");
  if (a.matching_free && *a.matching_free < 1) throw ParameterError("--matching-free needs k >= 1");
  const bool any_check = a.clique_free || a.linear_forest_free || a.matching_free;
  const auto lines = a.input.read();

  ordered_json results = ordered_json::array();
  Table table;
  if (any_check) {
    table.header = {"line", "graph6", "result"};
  } else {
    table.header = {"line", "graph6", "n", "edges", "clique_number", "matching_number", "linear_forest_number"};
  }

  for (const auto& [line, g] : lines) {
    ordered_json j = {{"line", line}, {"graph6", encode_graph6(g)}, {"n", g.order()}, {"edge_count", g.edge_count()}};
    if (any_check) {
      bool result = true;
      ordered_json checks = ordered_json::object();
      if (a.clique_free) {
        const bool ok = is_clique_free(g, *a.clique_free);
        checks["clique_free"] = {{"q", *a.clique_free}, {"result", ok}};
        result = result && ok;
      }
      if (a.matching_free) {
        const bool ok = matching_number(g) < *a.matching_free;
        checks["matching_free"] = {{"k", *a.matching_free}, {"result", ok}};
        result = result && ok;
      }
      if (a.linear_forest_free) {
        const bool ok = is_linear_forest_free(g, *a.linear_forest_free);
        checks["linear_forest_free"] = {{"s", *a.linear_forest_free}, {"result", ok}};
        result = result && ok;
      }
      j["checks"] = checks;
      j["result"] = result;
      table.rows.push_back({std::to_string(line), encode_graph6(g), result ? "true" : "false"});
    } else {
      const auto matching = max_matching(g);
      const auto forest = max_linear_forest(g);
      const int omega = clique_number(g);
      j["clique_number"] = omega;
      j["matching"] = {{"value", matching.value}, {"witness", edges_json(matching.witness.edges)}};
      j["linear_forest"] = {{"value", forest.value}, {"witness", edges_json(forest.witness.edges)}};
      table.rows.push_back({std::to_string(line), encode_graph6(g), std::to_string(g.order()),
                            std::to_string(g.edge_count()), std::to_string(omega),
                            std::to_string(matching.value), std::to_string(forest.value)});
    }
    results.push_back(std::move(j));
  }

  switch (cfg.output()) {
    case OutputFormat::kJson:
      print({{"results", results}});
      break;
    case OutputFormat::kCsv:
      std::cout << table.csv();
      break;
    case OutputFormat::kTable:
      if (any_check) {
        for (const auto& row : table.rows) std::cout << row[2] << '\n';
      } else {
        std::cout << table.aligned();
      }
      break;
  }
  return kExitOk;
}

// ---- transform -------------------------------------------------------------

struct TransformArgs {
  GraphInput input;
  std::string op;
  std::optional<int> i, j, k, s;
  std::string coloring = "greedy";
  std::string order = "asc";
  bool strong = false;
  bool order_check = false;
};

int cmd_transform(const TransformArgs& a, const RunConfig& cfg) {
  if (a.order != "asc" && a.order != "desc") throw ParameterError("--order must be asc or desc");
  const SweepOrder order = a.order == "asc" ? SweepOrder::kAscending : SweepOrder::kDescending;
  const bool colored = a.op == "strong-shift" || a.op == "strong-closure" || (a.op == "full-shift" && a.strong);
  const auto lines = a.input.read();

  ordered_json results = ordered_json::array();
  Table table{{"line", "graph6", "n", "edge_count"}, {}};
  if (a.order_check) table.header.push_back("order_sensitive");

  for (const auto& [line, g] : lines) {
    std::optional<Coloring> c;
    if (colored) c = coloring_for(g, a.coloring);
    Graph out;
    ordered_json extra = ordered_json::object();
    if (a.op == "shift") {
      out = shift(g, need(a.i, a.op, "--i"), need(a.j, a.op, "--j"));
    } else if (a.op == "strong-shift") {
      out = strong_shift(g, need(a.i, a.op, "--i"), need(a.j, a.op, "--j"), *c);
    } else if (a.op == "full-shift") {
      auto run = [&](SweepOrder o) { return c ? full_strong_shift(g, *c, o) : full_shift(g, o); };
      out = run(order);
      if (a.order_check) {
        const SweepOrder other = order == SweepOrder::kAscending ? SweepOrder::kDescending : SweepOrder::kAscending;
        const Graph alt = run(other);
        const bool sensitive = !(alt == out);
        extra["order_sensitive"] = sensitive;
        extra["other_order"] = graph_json(alt);
        std::cerr << "line " << line << ": sweep order " << (sensitive ? "changes" : "does not change")
                  << " the result\n";
      }
    } else if (a.op == "closure") {
      const int k = need(a.k, a.op, "--k");
      if (k < 0) throw ParameterError("closure needs k >= 0");
      out = closure(g, k);
    } else if (a.op == "strong-closure") {
      out = strong_closure(g, need(a.s, a.op, "--s"), *c);
    }

    ordered_json j = {{"line", line}, {"input", graph_json(g)}};
    if (c) j["coloring"] = c->color;
    j["output"] = graph_json(out);
    j.update(extra);
    results.push_back(std::move(j));

    std::vector<std::string> row = {std::to_string(line), encode_graph6(out), std::to_string(out.order()),
                                    std::to_string(out.edge_count())};
    if (a.order_check) row.push_back(extra["order_sensitive"].get<bool>() ? "true" : "false");
    table.rows.push_back(std::move(row));
  }

  switch (cfg.output()) {
    case OutputFormat::kJson:
      print({{"transform", a.op}, {"results", results}});
      break;
    case OutputFormat::kCsv:
      std::cout << table.csv();
      break;
    case OutputFormat::kTable:
      for (const auto& row : table.rows) std::cout << row[1] << '\n';
      break;
  }
  return kExitOk;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  int n = 0;
  std::string objective = "edges";
  std::optional<int> clique_bound, matching_bound, linforest_bound;
  bool all_orders = false;
};

int cmd_search(const SearchArgs& a, const RunConfig& cfg) {
  ConstraintSpec spec{a.clique_bound, a.matching_bound, a.linforest_bound};
  spec.validate();
  const Objective objective = parse_objective(a.objective);
  if (a.n < 1 || a.n > cfg.cap) {
    throw ParameterError("--n must lie in [1, " + std::to_string(cfg.cap) + "] (the exhaustive cap)");
  }
  auto records = extremal_search_orders(a.n, objective, spec, cfg.policy());
  if (!a.all_orders) records.erase(records.begin(), records.end() - 1);

  switch (cfg.output()) {
    case OutputFormat::kJson: {
      ordered_json list = ordered_json::array();
      for (const auto& rec : records) list.push_back(record_json(rec));
      print({{"records", list}});
      break;
    }
    case OutputFormat::kCsv:
    case OutputFormat::kTable: {
      Table t;
      for (const auto& rec : records) {
        Table one = record_table(rec);
        t.header = one.header;
        t.rows.insert(t.rows.end(), one.rows.begin(), one.rows.end());
      }
      std::cout << t.render(cfg.output());
      break;
    }
  }
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string s, r, k, n = "auto";
  bool probe_low_n = false;
  std::string report_file;
};

int cmd_verify(const VerifyArgs& a, const RunConfig& cfg) {
  const auto thm = parse_theorem(a.theorem);
  if (!thm) throw ParameterError("unknown theorem '" + a.theorem + "'");
  VerifyRanges ranges;
  if (!a.s.empty()) ranges.s = parse_range(a.s);
  if (!a.r.empty()) ranges.r = parse_range(a.r);
  if (!a.k.empty()) ranges.k = parse_range(a.k);
  if (a.n != "auto") ranges.n = parse_range(a.n);
  ranges.cap = cfg.cap;
  ranges.probe_low_n = a.probe_low_n;

  const VerificationReport report = verify_theorem(*thm, ranges, cfg.policy());
  if (!a.report_file.empty()) {
    std::ofstream out(a.report_file);
    if (!out) throw ParameterError("cannot write " + a.report_file);
    out << verification_json(report).dump(2) << '\n';
  }
  if (cfg.output() == OutputFormat::kJson) {
    print(verification_json(report));
  } else {
    std::cout << verification_table(report).render(cfg.output());
  }
  if (report.passed()) return kExitOk;

  for (const auto& row : report.rows) {
    if (row.probe || row.agree()) continue;
    std::cerr << "counterexample " << a.theorem << " n=" << row.params.n << " r=" << row.params.r
              << " s=" << row.params.s;
    if (theorem_uses_k(*thm)) std::cerr << " k=" << row.params.k;
    std::cerr << ": formula " << row.formula << ", exhaustive " << row.exhaustive << '\n';
    for (const auto& w : row.witnesses) std::cerr << w << '\n';
  }
  return kExitFailed;
}

// ---- fuzz ------------------------------------------------------------------

struct FuzzArgs {
  std::string property;
  int trials = 10000;
  int n_max = 9;
  std::size_t max_listed = 20;
};

int cmd_fuzz(const FuzzArgs& a, const RunConfig& cfg) {
  std::vector<FuzzProperty> props;
  if (a.property == "all") {
    props.assign(std::begin(kAllFuzzProperties), std::end(kAllFuzzProperties));
  } else if (auto p = parse_property(a.property)) {
    props.push_back(*p);
  } else {
    throw ParameterError("unknown fuzz property '" + a.property + "'");
  }
  if (a.trials < 0) throw ParameterError("--trials must be >= 0");

  FuzzOptions opts;
  opts.trials = a.trials;
  opts.n_max = a.n_max;
  opts.seed = cfg.seed;
  opts.policy = cfg.policy();

  bool failed = false;
  ordered_json reports = ordered_json::array();
  Table table;
  for (FuzzProperty p : props) {
    const FuzzReport report = lemma_fuzz(p, opts);
    if (property_is_proved(p) && !report.violations.empty()) failed = true;
    reports.push_back(fuzz_json(report, a.max_listed));
    Table one = fuzz_table(report, a.max_listed);
    table.header = one.header;
    table.rows.insert(table.rows.end(), one.rows.begin(), one.rows.end());
  }
  if (cfg.output() == OutputFormat::kJson) {
    print({{"reports", reports}});
  } else {
    std::cout << table.render(cfg.output());
  }
  return failed ? kExitFailed : kExitOk;
}

// ---- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  bool graphs = false;
};

int cmd_enumerate(const EnumerateArgs& a, const RunConfig& cfg) {
  if (a.n < 1 || a.n > cfg.cap) {
    throw ParameterError("--n must lie in [1, " + std::to_string(cfg.cap) + "] (the exhaustive cap)");
  }
  const auto counts = count_classes(a.n, {}, cfg.policy());
  std::vector<std::string> listed;
  if (a.graphs) {
    using Names = std::vector<std::string>;
    const EnumerationPlan plan(a.n, {});
    ExecutionPolicy policy = cfg.policy();
    for (auto& acc : run_plan<Names>(plan, policy, [&](Names& out, const Graph& g, const CanonicalLabeling& lab) {
           if (g.order() == a.n) out.push_back(encode_graph6(lab.canonical));
         })) {
      listed.insert(listed.end(), acc.begin(), acc.end());
    }
    std::sort(listed.begin(), listed.end());
  }

  if (cfg.output() == OutputFormat::kJson) {
    ordered_json list = ordered_json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) list.push_back({{"n", i + 1}, {"classes", counts[i]}});
    ordered_json out = {{"counts", list}};
    if (a.graphs) out["graphs"] = listed;
    print(out);
    return kExitOk;
  }
  if (a.graphs && cfg.output() == OutputFormat::kTable) {
    for (const auto& s : listed) std::cout << s << '\n';
    return kExitOk;
  }
  Table t{{"n", "classes"}, {}};
  for (std::size_t i = 0; i < counts.size(); ++i) t.rows.push_back({std::to_string(i + 1), std::to_string(counts[i])});
  std::cout << t.render(cfg.output());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal graph toolkit: constructions, freeness checks, shifting, formulas, exhaustive search"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table", "csv"}));
  app.add_option("--threads", cfg.threads, "thread budget (0 = OpenMP default)")
      ->envname("TURAN_THREADS")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--cap", cfg.cap, "exhaustive order cap")->check(CLI::Range(1, kExhaustiveCap));
  app.add_flag("--serial", cfg.serial, "use the serial reference kernels");

  FormulaArgs formula;
  auto* formula_cmd = app.add_subcommand("formula", "evaluate a closed-form extremal value");
  formula_cmd->add_option("name", formula.name, "turan | turan-cliques | thm1.1 .. thm1.5")->required();
  formula_cmd->add_option("--n", formula.n);
  formula_cmd->add_option("--r", formula.r);
  formula_cmd->add_option("--s", formula.s);
  formula_cmd->add_option("--k", formula.k);
  formula_cmd->add_option("--t", formula.t);
  formula_cmd->add_flag("--unchecked", formula.unchecked, "evaluate outside the validity window");

  ConstructArgs construct;
  auto* construct_cmd = app.add_subcommand("construct", "print constructed graphs as graph6");
  construct_cmd->add_option("name", construct.name, "thm1.5 | turan | multipartite | empty | complete | path | cycle | star")
      ->required();
  construct_cmd->add_option("--n", construct.n);
  construct_cmd->add_option("--r", construct.r);
  construct_cmd->add_option("--s", construct.s);
  construct_cmd->add_option("--parts", construct.parts, "comma-separated part sizes");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "freeness tests and invariants");
  check.input.attach(check_cmd);
  check_cmd->add_option("--clique-free", check.clique_free, "no K_q");
  check_cmd->add_option("--linear-forest-free", check.linear_forest_free, "no linear forest with s edges");
  check_cmd->add_option("--matching-free", check.matching_free, "no k independent edges");

  TransformArgs transform;
  auto* transform_cmd = app.add_subcommand("transform", "shifting and closure operations");
  transform_cmd->add_option("op", transform.op, "shift | strong-shift | full-shift | closure | strong-closure")
      ->required()
      ->check(CLI::IsMember({"shift", "strong-shift", "full-shift", "closure", "strong-closure"}));
  transform.input.attach(transform_cmd);
  transform_cmd->add_option("--i", transform.i);
  transform_cmd->add_option("--j", transform.j);
  transform_cmd->add_option("--k", transform.k, "closure threshold");
  transform_cmd->add_option("--s", transform.s, "strong-closure threshold");
  transform_cmd->add_option("--coloring", transform.coloring, "'greedy' or comma-separated colors");
  transform_cmd->add_option("--order", transform.order, "full-shift sweep order: asc | desc");
  transform_cmd->add_flag("--strong", transform.strong, "full-shift with strong shifting");
  transform_cmd->add_flag("--order-check", transform.order_check, "compare both sweep orders");

  SearchArgs search;
  auto* search_cmd = app.add_subcommand("search", "exhaustive extremal search");
  search_cmd->add_option("--n", search.n)->required();
  search_cmd->add_option("--objective", search.objective, "edges | cliques(r)");
  search_cmd->add_option("--clique-bound", search.clique_bound, "forbid K_q");
  search_cmd->add_option("--matching-bound", search.matching_bound, "matching number <= s");
  search_cmd->add_option("--linforest-bound", search.linforest_bound, "forbid linear forests with s edges");
  search_cmd->add_flag("--all-orders", search.all_orders, "report every order 1..n");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "compare a closed form with exhaustive search");
  verify_cmd->add_option("theorem", verify.theorem, "thm1.1 .. thm1.5")->required();
  verify_cmd->add_option("--s", verify.s, "range a..b (default 1..3)");
  verify_cmd->add_option("--r", verify.r, "range a..b (default 2..3)");
  verify_cmd->add_option("--k", verify.k, "range a..b (default 3..4)");
  verify_cmd->add_option("--n", verify.n, "'auto' or range a..b");
  verify_cmd->add_flag("--probe-low-n", verify.probe_low_n, "add non-failing rows below the window");
  verify_cmd->add_option("--report", verify.report_file, "write the JSON report here");

  FuzzArgs fuzz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized property checks");
  fuzz_cmd->add_option("property", fuzz.property, "property id or 'all'")->required();
  fuzz_cmd->add_option("--trials", fuzz.trials);
  fuzz_cmd->add_option("--n-max", fuzz.n_max);
  fuzz_cmd->add_option("--max-listed", fuzz.max_listed, "violations listed per property");

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorphism classes of graphs");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_flag("--graphs", enumerate.graphs, "list canonical graph6 of order n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*formula_cmd) return cmd_formula(formula, cfg);
    if (*construct_cmd) return cmd_construct(construct, cfg);
    if (*check_cmd) return cmd_check(check, cfg);
    if (*transform_cmd) return cmd_transform(transform, cfg);
    if (*search_cmd) return cmd_search(search, cfg);
    if (*verify_cmd) return cmd_verify(verify, cfg);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, cfg);
    if (*enumerate_cmd) return cmd_enumerate(enumerate, cfg);
  } catch (const Graph6Error& e) {
    std::cerr << "error: malformed graph6: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
