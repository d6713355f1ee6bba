#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>

#include "knotsieve/graph.hpp"

namespace knotsieve {

// Order-invariant fingerprint of a multigraph. Equal codes hold exactly for
// isomorphic graphs (multiplicities included). Layout: one byte for the
// vertex count, then the upper triangle of the canonically relabeled
// multiplicity matrix in column-major order (the graph6 bit order, one byte
// per pair).
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
};

// Canonical form by partition refinement plus backtracking over the ordered
// color classes, taking the lexicographically least adjacency encoding.
// Deterministic and invariant under any relabeling of the input.
CanonicalCode canonical_code(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace knotsieve

template <>
struct std::hash<knotsieve::CanonicalCode> {
  size_t operator()(const knotsieve::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes);
  }
};
