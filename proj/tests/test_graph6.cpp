#include <doctest.h>

#include <random>

#include "knotsieve/families.hpp"
#include "knotsieve/graph6.hpp"
#include "oracles.hpp"

using namespace knotsieve;

TEST_CASE("published byte layout") {
  CHECK(encode_graph6(make_graph(2, {{0, 1}})) == "A_");
  CHECK(encode_graph6(make_graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
  CHECK(encode_graph6(make_graph(0, {})) == "?");
  CHECK(decode_graph6("A_") == make_graph(2, {{0, 1}}));
  CHECK(decode_graph6("Bw") == make_graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(decode_graph6(">>graph6<<A_") == make_graph(2, {{0, 1}}));
}

TEST_CASE("round trip is byte-identical on the catalog") {
  for (const char* name :
       {"K7", "K5", "K33", "K55", "K3311", "HEAWOOD", "COUSIN110"}) {
    const Graph& g = catalog(name);
    std::string text = encode_graph6(g);
    Graph back = decode_graph6(text);
    CHECK(back == g);  // same vertex order, not merely isomorphic
    CHECK(encode_graph6(back) == text);
  }
}

TEST_CASE("round trip on random simple graphs") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    Graph g = oracles::random_graph(rng, 12, 0.4);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(encode_graph6(make_graph(2, {{0, 1}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(decode_graph6(""), std::runtime_error);
  CHECK_THROWS_AS(decode_graph6("\x01"), std::runtime_error);   // header < 63
  CHECK_THROWS_AS(decode_graph6("A_x"), std::runtime_error);    // trailing garbage
  CHECK_THROWS_AS(decode_graph6("A"), std::runtime_error);      // truncated
  CHECK_THROWS_AS(decode_graph6("ĀĀ"), std::runtime_error);     // out of range bytes
  CHECK_THROWS_AS(decode_graph6("~~~"), std::runtime_error);    // big-graph form
}
