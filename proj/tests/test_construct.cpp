#include <optional>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/graph.hpp"

using namespace turanlab;

namespace {
Graph built(const std::string& text) { return build(parse_construction(text)); }

std::optional<std::size_t> parse_offset(const std::string& text) {
  try {
    parse_construction(text);
  } catch (const TuranError& e) {
    if (e.code() == Errc::bad_spec) return e.offset();
    throw;
  }
  return std::nullopt;
}
}  // namespace

TEST_SUITE_BEGIN("construct");

TEST_CASE("atoms build the advertised graphs") {
  CHECK(built("K4") == complete(4));
  CHECK(built("I6") == edgeless(6));
  CHECK(built("P5") == path_graph(5));
  CHECK(built("C4") == cycle_graph(4));
  CHECK(isomorphic(built("S3"), star_graph(3)));
  CHECK(isomorphic(built("M3"), matching_graph(3)));
  CHECK(isomorphic(built("F2"), friendship_graph(2)));
  CHECK(isomorphic(built("T(5,2)"), turan_graph(5, 2)));
  CHECK(isomorphic(built("KP(2,2,2)"), complete_multipartite({2, 2, 2})));
}

TEST_CASE("operators compose") {
  Graph k27 = built("join(I2,I7)");
  CHECK(isomorphic(k27, complete_multipartite({2, 7})));
  Graph two_triangles = built("union(K3,K3)");
  CHECK(two_triangles.order() == 6);
  CHECK(two_triangles.edge_count() == 6);
  CHECK_FALSE(is_connected(two_triangles));
  Graph witness = built("join(K2,union(I5,K2))");
  CHECK(witness.order() == 9);
  CHECK(witness.edge_count() == 16);
  CHECK(is_connected(witness));
  // whitespace is ignored
  CHECK(built(" join( K2 , union( I5 , K2 ) ) ") == witness);
}

TEST_CASE("text round trip") {
  for (const char* text :
       {"K4", "I6", "P5", "C4", "S3", "M3", "F2", "T(5,2)", "KP(2,2,2)",
        "join(K2,union(I5,K2))", "union(K3,K3)", "join(I2,I7)"}) {
    Construction c = parse_construction(text);
    CHECK(to_text(parse_construction(to_text(c))) == to_text(c));
    CHECK(build(parse_construction(to_text(c))) == build(c));
  }
}

TEST_CASE("parse failures name the offending position") {
  CHECK(parse_offset("") .has_value());
  CHECK(parse_offset("K").has_value());
  CHECK(parse_offset("Q5").has_value());
  CHECK(parse_offset("T(2)").has_value());
  CHECK(parse_offset("join(K2)").has_value());
  CHECK(parse_offset("join(K2,K3") .has_value());
  CHECK(parse_offset("K3 garbage").has_value());
  CHECK(parse_offset("KP()").has_value());
  CHECK_FALSE(parse_offset("KP(3)").has_value());  // one part is legal: K_... complete multipartite with a single part is edgeless
}

TEST_CASE("oversize constructions are refused") {
  CHECK_THROWS_AS(built("K65"), TuranError);
  CHECK_THROWS_AS(built("join(I40,I40)"), TuranError);
}

TEST_CASE("recognition produces an equivalent expression") {
  for (const char* text :
       {"K1", "K4", "I6", "P5", "C4", "S3", "M3", "F2", "T(5,2)", "KP(2,2,2)",
        "join(K2,union(I5,K2))", "union(K3,K3)", "join(I2,I7)", "union(M1,I2)"}) {
    Graph g = built(text);
    auto rec = recognize_construction(g);
    REQUIRE(rec.has_value());
    CHECK(isomorphic(build(parse_construction(*rec)), g));
  }
}

TEST_CASE("recognition declines graphs outside the grammar") {
  // the 5-cycle plus one chord: connected, not complete multipartite, not a
  // join (its complement is connected), and no atom matches
  Graph g = cycle_graph(5);
  g.add_edge(0, 2);
  auto rec = recognize_construction(g);
  if (rec.has_value()) {
    // if the recognizer does find a description it must at least be correct
    CHECK(isomorphic(build(parse_construction(*rec)), g));
  } else {
    CHECK_FALSE(rec.has_value());
  }
}

TEST_SUITE_END();
