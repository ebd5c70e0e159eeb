#include "turanlab/graph.hpp"

#include <algorithm>
#include <numeric>

namespace turanlab {

Graph edgeless(int n) {
  if (n < 1) fail(Errc::bad_spec, "I needs a positive order");
  return Graph(n);
}

Graph complete(int n) {
  if (n < 1) fail(Errc::bad_spec, "K needs a positive order");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) fail(Errc::bad_spec, "P needs a positive order");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) fail(Errc::bad_spec, "C needs order at least 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star_graph(int t) {
  if (t < 1) fail(Errc::bad_spec, "S needs at least one leaf");
  Graph g(t + 1);
  for (int v = 1; v <= t; ++v) g.add_edge(0, v);
  return g;
}

Graph matching_graph(int t) {
  if (t < 1) fail(Errc::bad_spec, "M needs at least one edge");
  Graph g(2 * t);
  for (int i = 0; i < t; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

Graph friendship_graph(int t) {
  if (t < 1) fail(Errc::bad_spec, "F needs at least one triangle");
  Graph g(2 * t + 1);
  for (int i = 0; i < t; ++i) {
    g.add_edge(0, 2 * i + 1);
    g.add_edge(0, 2 * i + 2);
    g.add_edge(2 * i + 1, 2 * i + 2);
  }
  return g;
}

Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) fail(Errc::bad_spec, "KP needs at least one part");
  long long total = 0;
  for (int p : parts) {
    if (p < 1) fail(Errc::bad_spec, "KP part sizes must be positive");
    total += p;
  }
  if (total > Graph::kMaxOrder)
    fail(Errc::oversize_graph, "KP order exceeds 64 vertices");
  Graph g(static_cast<int>(total));
  int offset_a = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int offset_b = offset_a + parts[i];
    for (int u = offset_a; u < offset_a + parts[i]; ++u)
      for (int v = offset_b; v < static_cast<int>(total); ++v) g.add_edge(u, v);
    offset_a = offset_b;
  }
  return g;
}

Graph turan_graph(int n, int r) {
  if (n < 1 || r < 1) fail(Errc::bad_spec, "T needs positive order and part count");
  // n mod r parts of size ceil(n/r), the rest of size floor(n/r); empty parts
  // (when r > n) contribute nothing.
  std::vector<int> parts;
  int q = n / r, rem = n % r;
  for (int i = 0; i < r; ++i) {
    int size = q + (i < rem ? 1 : 0);
    if (size > 0) parts.push_back(size);
  }
  return complete_multipartite(parts);
}

Graph join(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > Graph::kMaxOrder)
    fail(Errc::oversize_graph, "join order exceeds 64 vertices");
  Graph g = disjoint_union(a, b);
  for (int u = 0; u < a.order(); ++u)
    for (int v = a.order(); v < g.order(); ++v) g.add_edge(u, v);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > Graph::kMaxOrder)
    fail(Errc::oversize_graph, "union order exceeds 64 vertices");
  Graph g(a.order() + b.order());
  for (int u = 0; u < a.order(); ++u) {
    std::uint64_t r = a.row(u);
    while (r) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      if (v > u) g.add_edge(u, v);
    }
  }
  for (int u = 0; u < b.order(); ++u) {
    std::uint64_t r = b.row(u);
    while (r) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      if (v > u) g.add_edge(a.order() + u, a.order() + v);
    }
  }
  return g;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) fail(Errc::empty_graph, "connectivity of the empty graph");
  std::uint64_t reach = 1ULL, prev = 0;
  while (reach != prev) {
    prev = reach;
    std::uint64_t r = reach;
    while (r) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      reach |= g.row(v);
    }
  }
  return reach == g.full_mask();
}

std::vector<int> sorted_degrees(const Graph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<std::size_t>(v)] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

}  // namespace turanlab
