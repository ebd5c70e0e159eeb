#pragma once

#include <cstdint>
#include <vector>

#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// Not-necessarily-induced subgraph containment: is there an injection of
// pattern vertices into host vertices carrying every pattern edge to a host
// edge?  Isolated pattern vertices only claim a spare host vertex, so I1 is
// contained in every nonempty host.
bool contains_subgraph(const Graph& host, const Graph& pattern);

// Same, but the image must include host vertex `pinned`.
bool contains_subgraph_using(const Graph& host, const Graph& pattern, int pinned);

bool contains_any(const Graph& host, const GraphFamily& family);

struct PathSearch {
  int order = 0;            // vertices on a longest path
  std::vector<int> witness; // one longest path, consecutive entries adjacent
};

// Exact longest path.  Memoised bitmask DP up to 24 vertices, depth-first
// branch and bound with a reachability bound above that.
PathSearch longest_path(const Graph& g);

// Does g contain a path on k vertices?  Early-exit search, cheaper than
// longest_path when the answer is yes or the graph is path-poor.
bool has_path(const Graph& g, int k);

// Longest path starting at a fixed vertex (vertex count of the best such
// path).  Plain DFS; meant for small leftover pieces.
int longest_path_from(const Graph& g, int start);

// A family compiled for repeated freeness tests.  Members are classified
// once: paths and complete graphs and stars get direct checks, everything
// else runs through the generic matcher.
class FreenessChecker {
 public:
  explicit FreenessChecker(const GraphFamily& family);

  bool violates(const Graph& host) const;

  // Would parent + one new vertex adjacent to `mask` contain a member?
  // Assumes the parent itself is member-free, so only embeddings through the
  // new vertex are possible and checked.
  bool violates_with_new_vertex(const Graph& parent, std::uint64_t mask) const;

 private:
  enum class PatKind { path, clique, star, generic };
  struct Pat {
    PatKind kind;
    int param = 0;  // path order / clique order / star leaves
    Graph graph;
  };
  std::vector<Pat> pats_;
};

}  // namespace turanlab
