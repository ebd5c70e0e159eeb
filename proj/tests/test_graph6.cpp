#include <optional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/graph6.hpp"

using namespace turanlab;

namespace {
template <typename F>
std::optional<Errc> thrown_code(F&& f) {
  try {
    f();
  } catch (const TuranError& e) {
    return e.code();
  }
  return std::nullopt;
}
}  // namespace

TEST_SUITE_BEGIN("graph6");

TEST_CASE("known encodings") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(complete(1)) == "@");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(complete(4)) == "C~");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(from_graph6("Bw") == complete(3));
  CHECK(from_graph6("C~") == complete(4));
}

TEST_CASE("round trip is the identity on labelled graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = static_cast<int>(rng() % 15);
    Graph g = oracle::random_graph(rng, n, 0.5);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("long form handles orders 63 and 64") {
  std::mt19937_64 rng(13);
  for (int n : {63, 64}) {
    Graph g = oracle::random_graph(rng, n, 0.15);
    std::string code = to_graph6(g);
    CHECK(code[0] == '~');
    CHECK(from_graph6(code) == g);
  }
}

TEST_CASE("strict parse errors") {
  CHECK(thrown_code([] { from_graph6(""); }) == Errc::parse_error);
  CHECK(thrown_code([] { from_graph6("B"); }) == Errc::parse_error);    // missing bits
  CHECK(thrown_code([] { from_graph6("Bw?"); }) == Errc::parse_error);  // trailing byte
  CHECK(thrown_code([] { from_graph6("B!"); }) == Errc::parse_error);   // byte below range
  CHECK(thrown_code([] { from_graph6("AC"); }) == Errc::parse_error);   // nonzero padding
  CHECK(thrown_code([] { from_graph6("~~??B"); }) == Errc::parse_error);  // unsupported longer form
  CHECK(thrown_code([] { from_graph6("~??~"); }) == Errc::parse_error);   // order 63, no adjacency bits
  CHECK(thrown_code([] { from_graph6("~?@@"); }) == Errc::oversize_graph);  // order 65
}

TEST_CASE("strict parse accepts exactly the emitted records") {
  // a couple of hand-checked spot decodes
  Graph p4 = from_graph6("Ch");
  CHECK(p4.order() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(oracle::naive_isomorphic(p4, path_graph(4)));
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    from_graph6("Bw?");
    CHECK(false);
  } catch (const TuranError& e) {
    CHECK(e.code() == Errc::parse_error);
    CHECK(e.offset() == 2);
  }
}

TEST_SUITE_END();
