#include "turan/graph6.hpp"

#include <string>

#include "turan/errors.hpp"

namespace turan {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  out.push_back(static_cast<char>(126));
  for (int shift = 12; shift >= 0; shift -= 6) {
    out.push_back(static_cast<char>(((n >> shift) & 0x3f) + kBias));
  }
}

int sextet(std::string_view text, std::size_t pos) {
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > 126) {
    throw Graph6Error("byte " + std::to_string(c) + " outside graph6 range at offset " +
                          std::to_string(pos),
                      pos);
  }
  return c - kBias;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, n);
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string", 0);

  std::size_t pos = 0;
  int n = sextet(text, pos++);
  if (n == 63) {
    if (text.size() < 4) throw Graph6Error("truncated graph6 size header", text.size());
    if (sextet(text, 1) == 63) {
      throw Graph6Error("graph6 orders above 258047 are not supported", 1);
    }
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | sextet(text, pos++);
    if (n <= 62) throw Graph6Error("non-canonical graph6 size header", 0);
  }
  if (n > kMaxVertices) {
    throw Graph6Error("graph6 order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(kMaxVertices),
                      0);
  }

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos < body) {
    throw Graph6Error("graph6 body too short for n=" + std::to_string(n), text.size());
  }
  if (text.size() - pos > body) {
    throw Graph6Error("trailing data after graph6 body", pos + body);
  }

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = sextet(text, pos + k / 6);
      if ((word >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const std::size_t last = pos + k / 6;
    const int word = sextet(text, last);
    if (word & ((1 << (6 - k % 6)) - 1)) {
      throw Graph6Error("non-zero graph6 padding bits", last);
    }
  }
  return g;
}

std::vector<Graph6Line> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Line> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line == "\r") continue;
    try {
      out.push_back({number, decode_graph6(line)});
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(number) + ": " + e.what(), e.position());
    }
  }
  return out;
}

}  // namespace turan
