#include "knotsieve/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace knotsieve {

std::string encode_graph6(const Graph& g) {
  if (!g.is_simple()) {
    throw std::invalid_argument("graph6 cannot carry parallel edges");
  }
  const int n = g.vertex_count();
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) {
    acc <<= (6 - nbits);
    out.push_back(static_cast<char>(63 + acc));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (text.substr(0, kPrefix.size()) == kPrefix) text.remove_prefix(kPrefix.size());
  if (text.empty()) throw std::runtime_error("graph6: empty input");
  int header = static_cast<unsigned char>(text[0]) - 63;
  if (header == 63) {
    throw std::runtime_error("graph6: graphs with 63 or more vertices are not supported");
  }
  if (header < 0 || header > kMaxVertices) {
    throw std::runtime_error("graph6: malformed header byte");
  }
  const int n = header;
  const int bits = n * (n - 1) / 2;
  const size_t body = static_cast<size_t>((bits + 5) / 6);
  if (text.size() != 1 + body) {
    throw std::runtime_error(text.size() < 1 + body
                                 ? "graph6: input truncated"
                                 : "graph6: trailing garbage");
  }
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      int c = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
      if (c < 0 || c > 63) throw std::runtime_error("graph6: byte out of range");
      if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits must be zero.
  for (int b = bits; b < static_cast<int>(body) * 6; ++b) {
    int c = static_cast<unsigned char>(text[1 + b / 6]) - 63;
    if (c < 0 || c > 63) throw std::runtime_error("graph6: byte out of range");
    if ((c >> (5 - b % 6)) & 1) throw std::runtime_error("graph6: nonzero padding");
  }
  return Graph(n, edges);
}

}  // namespace knotsieve
