#pragma once

#include <string>
#include <string_view>

#include "knotsieve/graph.hpp"

namespace knotsieve {

// graph6 text form of a simple graph: byte n+63, then the upper triangle of
// the adjacency matrix in column-major order packed six bits per byte (offset
// 63). Only graphs with at most kMaxVertices vertices are handled.
// Throws std::invalid_argument on parallel edges.
std::string encode_graph6(const Graph& g);

// Strict decoder; accepts an optional ">>graph6<<" prefix. Throws
// std::runtime_error on malformed input (bad header byte, wrong length,
// trailing garbage, padding bits set).
Graph decode_graph6(std::string_view text);

}  // namespace knotsieve
