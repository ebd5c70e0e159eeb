#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"

namespace turanlab {

// Off-path vertices of a connected host without P_k, relative to one witness
// path on k-1 vertices, grouped two ways: a[i] holds the vertices with
// exactly i neighbours on the path, b[i] holds the vertices of the off-path
// components whose largest such count is i.
struct PathDecomposition {
  std::vector<int> path;
  std::vector<std::vector<int>> a;
  std::vector<std::vector<int>> b;
};

// Finds a witness path itself (the host's longest path, which must have
// exactly k-1 vertices).  Errors: disconnected host, no path on k-1
// vertices, or a path on k vertices present.
PathDecomposition decompose(const Graph& g, int k);

// Same, relative to a caller-chosen witness path.
PathDecomposition decompose_on_path(const Graph& g, int k, const std::vector<int>& path);

// For an off-path vertex u with s >= 1 neighbours on the path and a longest
// off-path path of j vertices starting at u: s + j <= floor(k/2).
struct Lemma1Report {
  int s = 0;
  int j = 0;
  int bound = 0;
  bool applies = false;  // the statement assumes s >= 1
  bool holds = true;
};
Lemma1Report check_lemma1(const Graph& g, const std::vector<int>& path, int u);

// Host on exactly k vertices with no spanning path: the off-path vertex has
// at most floor(k/2)-1 path neighbours, and four edge patterns around those
// neighbours cannot occur.  Any pattern found is reported as an edge.
struct Lemma2Report {
  int s = 0;
  int s_bound = 0;
  bool degree_ok = true;
  std::vector<std::pair<int, int>> forbidden_edges;
  bool clean() const { return degree_ok && forbidden_edges.empty(); }
};
Lemma2Report check_lemma2(const Graph& g, const std::vector<int>& path, int u);

// Off-path edge bound: e(G) - e(G[path]) is at most
// (floor(k/2)-1)|a_top| + (floor(k/2)-3/2) * sum of the lower |a_i|.
struct Lemma3Report {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  PathDecomposition dec;
};
Lemma3Report check_lemma3(const Graph& g, int k);
Lemma3Report check_lemma3_on_path(const Graph& g, int k, const std::vector<int>& path);

// All simple paths on exactly m vertices, one orientation per path, stopping
// at `cap` results.
std::vector<std::vector<int>> paths_of_order(const Graph& g, int m, std::size_t cap = 100);

// Exhaustive desk-scale audit: every connected host without P_k whose
// longest path has exactly k-1 vertices, for k-1 <= n <= n_max, checked
// against every witness path (up to the per-graph cap).
struct AuditReport {
  int k = 0;
  int n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t paths_checked = 0;
  std::uint64_t lemma1_checks = 0;
  std::uint64_t lemma2_checks = 0;
  std::uint64_t lemma3_checks = 0;
  std::vector<std::string> violations;
  bool clean() const { return violations.empty(); }
};
AuditReport audit_lemmas(int k, int n_max, int threads = 0);

}  // namespace turanlab
