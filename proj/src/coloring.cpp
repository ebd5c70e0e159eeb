#include "turanlab/coloring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace turanlab {

namespace {

// Can g be properly coloured with at most k colours?  Vertices are tried in
// descending degree order; a vertex may only open one colour beyond those
// already in use, which kills colour-permutation symmetry.
bool colorable(const Graph& g, int k, const std::vector<int>& order) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> place = [&](int idx, int used) {
    if (idx == n) return true;
    int v = order[static_cast<std::size_t>(idx)];
    int limit = std::min(used + 1, k);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      std::uint64_t nbrs = g.row(v);
      while (nbrs) {
        int u = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      if (place(idx + 1, std::max(used, c + 1))) return true;
      color[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return place(0, 0);
}

}  // namespace

int chromatic_number(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::empty_graph, "chromatic number of the empty graph");
  if (g.edge_count() == 0) return 1;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.degree(a) > g.degree(b); });
  for (int k = 2; k < n; ++k)
    if (colorable(g, k, order)) return k;
  return n;
}

GraphFamily color_class_deletions(const Graph& g) {
  const int n = g.order();
  const int chi = chromatic_number(g);
  if (chi < 2)
    fail(Errc::family_undefined,
         "colour-class deletion needs a graph with at least one edge");
  // Enumerate proper colourings with exactly chi classes, one representative
  // per colour permutation (class labels appear in first-vertex order).
  std::vector<Graph> out;
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::function<void(int, int)> walk = [&](int v, int used) {
    if (v == n) {
      if (used != chi) return;
      for (int c = 0; c < chi; ++c) {
        std::uint64_t drop = 0;
        for (int u = 0; u < n; ++u)
          if (color[static_cast<std::size_t>(u)] == c) drop |= 1ULL << u;
        out.push_back(g.without_vertices(drop));
      }
      return;
    }
    int limit = std::min(used + 1, chi);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      std::uint64_t nbrs = g.row(v);
      while (nbrs) {
        int u = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (u < v && color[static_cast<std::size_t>(u)] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      color[static_cast<std::size_t>(v)] = c;
      walk(v + 1, std::max(used, c + 1));
      color[static_cast<std::size_t>(v)] = -1;
    }
  };
  walk(0, 0);
  return GraphFamily::from_graphs("color-class deletions", std::move(out));
}

GraphFamily adjacent_pair_deletions(const Graph& g) {
  const int n = g.order();
  if (g.edge_count() == 0)
    fail(Errc::no_edges, "adjacent-pair deletion needs a graph with an edge");
  std::vector<Graph> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.has_edge(u, v)) out.push_back(g.without_vertices((1ULL << u) | (1ULL << v)));
  return GraphFamily::from_graphs("adjacent-pair deletions", std::move(out));
}

}  // namespace turanlab
