#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "turan/fuzz.hpp"
#include "turan/graph.hpp"
#include "turan/search.hpp"

namespace turan {

enum class OutputFormat { kJson, kTable, kCsv };

// Rows of strings rendered as an aligned text table or as CSV.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string aligned() const;
  std::string csv() const;
  std::string render(OutputFormat format) const;  // kJson not accepted
};

nlohmann::ordered_json graph_json(const Graph& g);
nlohmann::ordered_json constraints_json(const ConstraintSpec& c);
nlohmann::ordered_json record_json(const ExtremalRecord& rec);
nlohmann::ordered_json verification_json(const VerificationReport& report);
nlohmann::ordered_json fuzz_json(const FuzzReport& report, std::size_t max_listed);

Table record_table(const ExtremalRecord& rec);
Table verification_table(const VerificationReport& report);
Table fuzz_table(const FuzzReport& report, std::size_t max_listed);

}  // namespace turan
