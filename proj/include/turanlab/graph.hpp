#pragma once

#include <cstdint>
#include <vector>

#include "turanlab/errors.hpp"

namespace turanlab {

// Simple undirected graph on at most 64 vertices.  Adjacency is stored as one
// 64-bit mask per vertex, so neighbourhood intersections, degree counts and
// connectivity all reduce to a few word operations.  Rows stay symmetric,
// loop-free, and clear above order().
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int n) {
    if (n < 0 || n > kMaxOrder)
      fail(Errc::oversize_graph,
           "graph order " + std::to_string(n) + " outside [0, 64]");
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
  }

  int order() const { return n_; }

  std::uint64_t row(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return __builtin_popcountll(row(v)); }

  bool has_edge(int u, int v) const {
    return (row(u) >> v) & 1ULL;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(Errc::invalid_argument, "loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= 1ULL << v;
    adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)] &= ~(1ULL << v);
    adj_[static_cast<std::size_t>(v)] &= ~(1ULL << u);
  }

  int edge_count() const {
    int twice = 0;
    for (std::uint64_t r : adj_) twice += __builtin_popcountll(r);
    return twice / 2;
  }

  // All vertices as a mask: bits 0..n-1.
  std::uint64_t full_mask() const {
    return n_ == 64 ? ~0ULL : (1ULL << n_) - 1;
  }

  // Copy with one extra vertex whose neighbourhood is `mask` (bits over the
  // existing vertices).
  Graph extended(std::uint64_t mask) const {
    if (n_ + 1 > kMaxOrder) fail(Errc::oversize_graph, "extension past 64 vertices");
    Graph h(n_ + 1);
    for (int v = 0; v < n_; ++v) h.adj_[static_cast<std::size_t>(v)] = adj_[static_cast<std::size_t>(v)];
    for (int v = 0; v < n_; ++v)
      if ((mask >> v) & 1ULL) {
        h.adj_[static_cast<std::size_t>(v)] |= 1ULL << n_;
        h.adj_[static_cast<std::size_t>(n_)] |= 1ULL << v;
      }
    return h;
  }

  // Induced subgraph on the vertices of `keep`, relabelled to 0..k-1 in
  // ascending original order.
  Graph induced(std::uint64_t keep) const {
    keep &= full_mask();
    std::vector<int> map(static_cast<std::size_t>(n_), -1);
    int k = 0;
    for (int v = 0; v < n_; ++v)
      if ((keep >> v) & 1ULL) map[static_cast<std::size_t>(v)] = k++;
    Graph h(k);
    for (int u = 0; u < n_; ++u) {
      if (map[static_cast<std::size_t>(u)] < 0) continue;
      std::uint64_t r = row(u) & keep;
      while (r) {
        int v = __builtin_ctzll(r);
        r &= r - 1;
        if (v > u) h.add_edge(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)]);
      }
    }
    return h;
  }

  Graph without_vertices(std::uint64_t drop) const {
    return induced(full_mask() & ~drop);
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      fail(Errc::invalid_argument, "vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Basic builders.  Parameters follow the usual conventions: star_graph(t) has
// t leaves, matching_graph(t) has t edges, friendship_graph(t) is t triangles
// sharing one vertex.
Graph edgeless(int n);
Graph complete(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int t);
Graph matching_graph(int t);
Graph friendship_graph(int t);
Graph complete_multipartite(const std::vector<int>& parts);
// Balanced complete r-partite graph on n vertices (part sizes differ by at
// most one).
Graph turan_graph(int n, int r);

// Join: disjoint union plus every cross edge.  Union: plain disjoint union.
Graph join(const Graph& a, const Graph& b);
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);  // errors on the empty graph

std::vector<int> sorted_degrees(const Graph& g);  // descending

}  // namespace turanlab
