#include "turan/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "turan/graph6.hpp"

namespace turan {
namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string params_text(const std::map<std::string, int>& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ' ';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string join_witnesses(const std::vector<std::string>& w) {
  std::string out;
  for (const auto& s : w) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

std::string Table::aligned() const {
  std::vector<std::size_t> width(header.size(), 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  measure(header);
  for (const auto& row : rows) measure(row);
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      out << row[i];
      if (i + 1 < row.size()) out << std::string(width[i] - row[i].size(), ' ');
    }
    out << '\n';
  };
  line(header);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  out << std::string(total + 2 * (width.empty() ? 0 : width.size() - 1), '-') << '\n';
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string Table::csv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
  return out.str();
}

std::string Table::render(OutputFormat format) const {
  switch (format) {
    case OutputFormat::kTable: return aligned();
    case OutputFormat::kCsv: return csv();
    case OutputFormat::kJson: break;
  }
  throw std::invalid_argument("tables render as text or csv only");
}

nlohmann::ordered_json graph_json(const Graph& g) {
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"graph6", encode_graph6(g)}, {"n", g.order()}, {"edge_count", g.edge_count()}, {"edges", edges}};
}

nlohmann::ordered_json constraints_json(const ConstraintSpec& c) {
  nlohmann::ordered_json out;
  out["clique_bound"] = c.clique_bound ? nlohmann::ordered_json(*c.clique_bound) : nullptr;
  out["matching_bound"] = c.matching_bound ? nlohmann::ordered_json(*c.matching_bound) : nullptr;
  out["linforest_bound"] = c.linforest_bound ? nlohmann::ordered_json(*c.linforest_bound) : nullptr;
  return out;
}

nlohmann::ordered_json record_json(const ExtremalRecord& rec) {
  return {{"n", rec.params.n},
          {"objective", rec.objective.name()},
          {"constraints", constraints_json(rec.constraints)},
          {"value", rec.value},
          {"method", std::string(method_name(rec.method))},
          {"witnesses", rec.witnesses}};
}

nlohmann::ordered_json verification_json(const VerificationReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    nlohmann::ordered_json j = {{"n", row.params.n}, {"r", row.params.r}, {"s", row.params.s}};
    if (theorem_uses_k(report.theorem)) j["k"] = row.params.k;
    j["probe"] = row.probe;
    j["formula"] = row.formula;
    j["exhaustive"] = row.exhaustive;
    j["agree"] = row.agree();
    j["witnesses"] = row.witnesses;
    rows.push_back(std::move(j));
  }
  return {{"theorem", std::string(theorem_key(report.theorem))}, {"passed", report.passed()}, {"rows", rows}};
}

nlohmann::ordered_json fuzz_json(const FuzzReport& report, std::size_t max_listed) {
  nlohmann::ordered_json violations = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.violations.size() && i < max_listed; ++i) {
    const auto& v = report.violations[i];
    violations.push_back({{"graph6", v.graph6}, {"params", v.params}, {"detail", v.detail}});
  }
  return {{"property", std::string(property_key(report.property))},
          {"proved", property_is_proved(report.property)},
          {"seed", report.seed},
          {"trials", report.trials},
          {"n_max", report.n_max},
          {"checks", report.checks},
          {"violation_count", report.violations.size()},
          {"violations", violations}};
}

Table record_table(const ExtremalRecord& rec) {
  Table t{{"n", "objective", "constraints", "value", "method", "witnesses"}, {}};
  t.rows.push_back({std::to_string(rec.params.n), rec.objective.name(), rec.constraints.describe(),
                    std::to_string(rec.value), std::string(method_name(rec.method)),
                    join_witnesses(rec.witnesses)});
  return t;
}

Table verification_table(const VerificationReport& report) {
  const bool with_k = theorem_uses_k(report.theorem);
  Table t;
  t.header = {"theorem", "n", "r", "s"};
  if (with_k) t.header.push_back("k");
  for (const char* h : {"formula", "exhaustive", "status", "witnesses"}) t.header.emplace_back(h);
  for (const auto& row : report.rows) {
    std::vector<std::string> cells = {std::string(theorem_key(report.theorem)), std::to_string(row.params.n),
                                      std::to_string(row.params.r), std::to_string(row.params.s)};
    if (with_k) cells.push_back(std::to_string(row.params.k));
    cells.push_back(std::to_string(row.formula));
    cells.push_back(std::to_string(row.exhaustive));
    std::string status = row.agree() ? "agree" : "DIFFER";
    if (row.probe) status = row.agree() ? "probe-agree" : "probe-differ";
    cells.push_back(status);
    cells.push_back(row.agree() ? "" : join_witnesses(row.witnesses));
    t.rows.push_back(std::move(cells));
  }
  return t;
}

Table fuzz_table(const FuzzReport& report, std::size_t max_listed) {
  Table t{{"property", "trials", "checks", "violations", "graph6", "params", "detail"}, {}};
  const std::vector<std::string> summary = {std::string(property_key(report.property)), std::to_string(report.trials),
                                            std::to_string(report.checks), std::to_string(report.violations.size())};
  if (report.violations.empty()) {
    auto row = summary;
    row.insert(row.end(), {"", "", ""});
    t.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < report.violations.size() && i < max_listed; ++i) {
    const auto& v = report.violations[i];
    auto row = summary;
    row.insert(row.end(), {v.graph6, params_text(v.params), v.detail});
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace turan
