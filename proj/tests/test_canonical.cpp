#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

using namespace turanlab;

TEST_SUITE_BEGIN("canonical");

TEST_CASE("matches the all-permutations oracle on every graph up to order 5") {
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if ((mask >> i) & 1ULL) g.add_edge(slots[i].first, slots[i].second);
      CHECK(canonical_form(g).code == oracle::naive_canonical_code(g));
    }
  }
}

TEST_CASE("matches the oracle on random graphs of order 6 and 7") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 2);
    Graph g = oracle::random_graph(rng, n, 0.2 + 0.1 * static_cast<double>(rng() % 6));
    CHECK(canonical_form(g).code == oracle::naive_canonical_code(g));
  }
}

TEST_CASE("invariant under relabelling") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 1 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(rng, n, 0.4);
    Graph h = oracle::apply_permutation(g, oracle::random_permutation(rng, n));
    CHECK(canonical_form(g) == canonical_form(h));
  }
}

TEST_CASE("canonical_graph realises its own form and is idempotent") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.5);
    Graph c = canonical_graph(g);
    CHECK(oracle::naive_isomorphic(g, c));
    CHECK(canonical_form(c) == canonical_form(g));
    CHECK(canonical_graph(c) == c);
  }
}

TEST_CASE("labelling overload agrees with the single-argument version") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.5);
    CanonicalLabeling lab = canonical_labeling(g);
    CHECK(canonical_graph(g, lab) == canonical_graph(g));
    CHECK(lab.form == canonical_form(g));
  }
}

TEST_CASE("isomorphic agrees with the permutation oracle") {
  std::mt19937_64 rng(31);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph a = oracle::random_graph(rng, n, 0.5);
    Graph b;
    if (rng() % 2 == 0) {
      b = oracle::apply_permutation(a, oracle::random_permutation(rng, n));
    } else {
      b = oracle::random_graph(rng, n, 0.5);
    }
    bool expected = oracle::naive_isomorphic(a, b);
    CHECK(isomorphic(a, b) == expected);
    (expected ? positives : negatives)++;
  }
  CHECK(positives > 0);
  CHECK(negatives > 0);
}

TEST_CASE("distinct classes get distinct codes") {
  // all 11 classes on 4 vertices, as edge lists
  std::vector<Graph> reps;
  auto make = [](std::initializer_list<std::pair<int, int>> edges) {
    Graph g(4);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  };
  reps.push_back(make({}));
  reps.push_back(make({{0, 1}}));
  reps.push_back(make({{0, 1}, {2, 3}}));
  reps.push_back(make({{0, 1}, {1, 2}}));
  reps.push_back(make({{0, 1}, {1, 2}, {2, 3}}));
  reps.push_back(make({{0, 1}, {1, 2}, {0, 2}}));
  reps.push_back(make({{0, 1}, {0, 2}, {0, 3}}));
  reps.push_back(make({{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  reps.push_back(make({{0, 1}, {1, 2}, {0, 2}, {0, 3}}));
  reps.push_back(make({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}}));
  reps.push_back(make({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {2, 3}}));
  std::set<std::string> codes;
  for (const Graph& g : reps) codes.insert(canonical_form(g).code);
  CHECK(codes.size() == 11);
}

TEST_CASE("refinement colours are a relabelling invariant multiset") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = oracle::random_graph(rng, n, 0.4);
    std::vector<int> perm = oracle::random_permutation(rng, n);
    Graph h = oracle::apply_permutation(g, perm);
    std::vector<int> cg = refinement_colors(g);
    std::vector<int> ch = refinement_colors(h);
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    CHECK(cg == ch);
  }
}

TEST_SUITE_END();
