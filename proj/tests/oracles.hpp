#pragma once

// Independent reference implementations used only by the tests.  Everything
// here is written the slowest, most obvious way: permutations are enumerated
// with next_permutation, containment tries every injection, chromatic numbers
// try every colour assignment.  The point is that none of this shares code or
// ideas with the library's optimised search paths.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab::oracle {

// Canonical code under a fixed relabelling, byte-compatible with
// CanonicalForm: order byte, then upper-triangle bits column by column,
// packed MSB-first.  perm[position] = original vertex.
inline std::string code_for_order(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::string code;
  code.push_back(static_cast<char>(n));
  int acc = 0, width = 0;
  for (int pos = 1; pos < n; ++pos)
    for (int i = 0; i < pos; ++i) {
      int bit = g.has_edge(perm[static_cast<std::size_t>(i)],
                           perm[static_cast<std::size_t>(pos)])
                    ? 1
                    : 0;
      acc = (acc << 1) | bit;
      if (++width == 8) {
        code.push_back(static_cast<char>(acc));
        acc = 0;
        width = 0;
      }
    }
  if (width > 0) code.push_back(static_cast<char>(acc << (8 - width)));
  return code;
}

// Minimum over all n! relabellings.
inline std::string naive_canonical_code(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::string best = code_for_order(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::string cand = code_for_order(g, perm);
    if (cand < best) best = cand;
  }
  return best;
}

inline bool naive_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v)
        if (a.has_edge(u, v) !=
            b.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
          ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace detail {
inline bool contains_rec(const Graph& host, const Graph& pat, std::vector<int>& img,
                         std::uint64_t used, int t) {
  if (t == pat.order()) return true;
  for (int h = 0; h < host.order(); ++h) {
    if ((used >> h) & 1ULL) continue;
    bool ok = true;
    for (int j = 0; j < t && ok; ++j)
      if (pat.has_edge(j, t) && !host.has_edge(img[static_cast<std::size_t>(j)], h))
        ok = false;
    if (!ok) continue;
    img[static_cast<std::size_t>(t)] = h;
    if (contains_rec(host, pat, img, used | (1ULL << h), t + 1)) return true;
  }
  return false;
}
}  // namespace detail

// Every injection, no pruning beyond edge feasibility.
inline bool naive_contains(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order()) return false;
  if (pattern.order() == 0) return true;
  std::vector<int> img(static_cast<std::size_t>(pattern.order()), -1);
  return detail::contains_rec(host, pattern, img, 0, 0);
}

namespace detail {
inline void longest_rec(const Graph& g, int v, std::uint64_t used, int len, int& best) {
  best = std::max(best, len);
  for (int w = 0; w < g.order(); ++w)
    if (g.has_edge(v, w) && !((used >> w) & 1ULL))
      longest_rec(g, w, used | (1ULL << w), len + 1, best);
}
}  // namespace detail

// All simple paths from every start vertex.
inline int naive_longest_path_order(const Graph& g) {
  int best = g.order() > 0 ? 1 : 0;
  for (int v = 0; v < g.order(); ++v)
    detail::longest_rec(g, v, 1ULL << v, 1, best);
  return best;
}

// Smallest c for which some assignment of c colours is proper; tries all c^n
// assignments.  Order 0 is not asked about.
inline int naive_chromatic(const Graph& g) {
  const int n = g.order();
  for (int c = 1; c <= n; ++c) {
    std::vector<int> colour(static_cast<std::size_t>(n), 0);
    while (true) {
      bool proper = true;
      for (int u = 0; u < n && proper; ++u)
        for (int v = u + 1; v < n && proper; ++v)
          if (g.has_edge(u, v) &&
              colour[static_cast<std::size_t>(u)] == colour[static_cast<std::size_t>(v)])
            proper = false;
      if (proper) return c;
      int i = 0;
      while (i < n && colour[static_cast<std::size_t>(i)] == c - 1)
        colour[static_cast<std::size_t>(i++)] = 0;
      if (i == n) break;
      ++colour[static_cast<std::size_t>(i)];
    }
  }
  return n;
}

inline bool naive_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  std::vector<int> stack{0};
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (g.has_edge(v, w) && !seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

// Filter-and-dedupe enumeration over all 2^(n choose 2) labelled graphs.
// Returns the isomorphism-class count; meant for n <= 6.
inline std::uint64_t naive_enumerate_count(int n, const std::vector<Graph>& forbidden,
                                           bool connected_only) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::set<std::string> classes;
  for (std::uint64_t mask = 0; mask < (1ULL << slots.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i)
      if ((mask >> i) & 1ULL) g.add_edge(slots[i].first, slots[i].second);
    bool free = true;
    for (const Graph& f : forbidden)
      if (naive_contains(g, f)) {
        free = false;
        break;
      }
    if (!free) continue;
    if (connected_only && !naive_connected(g)) continue;
    classes.insert(naive_canonical_code(g));
  }
  return classes.size();
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v))
        out.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace turanlab::oracle
