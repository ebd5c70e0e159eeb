#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"

using namespace turanlab;

TEST_SUITE_BEGIN("family");

TEST_CASE("parsing splits on top-level commas only") {
  GraphFamily f = parse_family("P6,K3");
  CHECK(f.size() == 2);
  GraphFamily g = parse_family("join(K2,union(I5,K2)),C4");
  CHECK(g.size() == 2);
  CHECK(isomorphic(g.members[0], cycle_graph(4)) ||
        isomorphic(g.members[1], cycle_graph(4)));
}

TEST_CASE("members are canonical, sorted, and deduplicated") {
  GraphFamily f = parse_family("K3,K3,C3");
  CHECK(f.size() == 1);
  CHECK(isomorphic(f.members[0], complete(3)));
  GraphFamily a = parse_family("P6,K3");
  GraphFamily b = parse_family("K3,P6");
  CHECK(a.same_members(b));
  CHECK(a.member_key() == b.member_key());
}

TEST_CASE("member keys separate different families") {
  CHECK(parse_family("P6,K3").member_key() != parse_family("P6,K4").member_key());
  CHECK(parse_family("P5").member_key() != parse_family("P6").member_key());
}

TEST_CASE("from_graphs keeps one representative per class") {
  std::mt19937_64 rng(41);
  Graph g = oracle::random_graph(rng, 7, 0.4);
  Graph h = oracle::apply_permutation(g, oracle::random_permutation(rng, 7));
  GraphFamily fam = GraphFamily::from_graphs("pair", {g, h});
  CHECK(fam.size() == 1);
}

TEST_CASE("bad expressions are rejected with positions") {
  CHECK_THROWS_AS(parse_family("P6,,K3"), TuranError);
  CHECK_THROWS_AS(parse_family(""), TuranError);
  CHECK_THROWS_AS(parse_family("P6,Q3"), TuranError);
}

TEST_SUITE_END();
