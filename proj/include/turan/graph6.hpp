#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// graph6 text encoding (no trailing newline).
std::string encode_graph6(const Graph& g);

// Strict decoder: rejects a malformed size header, bytes outside 63..126,
// wrong body length, and non-zero padding bits. An optional ">>graph6<<"
// prefix and one trailing newline are accepted.
Graph decode_graph6(std::string_view text);

struct Graph6Line {
  int line_number = 0;  // 1-based
  Graph graph;
};

// Decodes one graph per non-empty line. On failure the thrown Graph6Error
// message carries the offending line number.
std::vector<Graph6Line> read_graph6_stream(std::istream& in);

}  // namespace turan
