#include "apexis/graph6.hpp"

namespace apexis {

std::string to_graph6(const Graph& g) {
  std::string out;
  out.push_back(static_cast<char>(g.order() + 63));
  int acc = 0;
  int nbits = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(1, 1, "empty graph6 string");
  for (std::size_t i = 0; i < text.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) {
      throw ParseError(1, static_cast<int>(i) + 1, "byte " + std::to_string(c) + " outside graph6 range 63..126");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > 62) throw ParseError(1, 1, "graph6 orders above 62 are not supported");
  if (n > kMaxVertices) throw SizeError("graph6 order " + std::to_string(n) + " exceeds 32 vertices");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() != bytes + 1) {
    throw ParseError(1, static_cast<int>(text.size()),
                     "expected " + std::to_string(bytes + 1) + " bytes for order " + std::to_string(n) + ", got " +
                         std::to_string(text.size()));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < bytes * 6; ++k) {
    const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError(1, static_cast<int>(2 + k / 6), "nonzero graph6 padding bit");
  }
  return g;
}

}  // namespace apexis
