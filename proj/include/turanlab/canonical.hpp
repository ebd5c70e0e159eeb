#pragma once

#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

// Canonical code of a graph: byte 0 is the order, the rest is the
// lexicographically minimal upper-triangle bit string over all vertex
// relabellings, read column by column (the graph6 bit order) and packed
// MSB-first.  Two graphs get the same code exactly when they are isomorphic.
struct CanonicalForm {
  std::string code;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const {
    return std::hash<std::string>{}(f.code);
  }
};

struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> order;  // order[position] = original vertex
};

// The search backtracks over vertex orderings, keeping only orderings whose
// next column is minimal, pruning against the best string found so far, and
// skipping candidates equivalent under twin swaps or under automorphisms
// discovered from exact ties.  Degree/partition-refinement colours drive the
// candidate order.  Exact but geared to small graphs, not asymptotics.
CanonicalLabeling canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

// The graph relabelled into its canonical order.
Graph canonical_graph(const Graph& g);
Graph canonical_graph(const Graph& g, const CanonicalLabeling& lab);

bool isomorphic(const Graph& a, const Graph& b);

// Iterated neighbourhood-colour refinement starting from degrees; returns a
// colour id per vertex, stable under relabelling.  Used as a search heuristic.
std::vector<int> refinement_colors(const Graph& g);

}  // namespace turanlab
