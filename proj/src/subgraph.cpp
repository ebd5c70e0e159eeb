#include "turanlab/subgraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace turanlab {

namespace {

// Backtracking injection search, pattern vertices placed most-constrained
// first.  `pinned` < 0 means unconstrained; otherwise the first ordered
// pattern vertex is forced onto that host vertex.
struct Matcher {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> porder;
  std::vector<std::uint64_t> prefix_nbrs;  // pattern adjacency into earlier positions
  int suffix_start = 0;                    // from here on every pattern vertex is isolated
  std::vector<int> img;
  std::uint64_t used = 0;
  int pinned = -1;

  Matcher(const Graph& h, const Graph& p) : host(h), pattern(p) {}

  void plan(int first) {
    const int pn = pattern.order();
    porder.clear();
    std::uint64_t left = pattern.full_mask();
    if (first >= 0) {
      porder.push_back(first);
      left &= ~(1ULL << first);
    }
    while (left) {
      int best = -1, best_pref = -1, best_deg = -1;
      std::uint64_t ordered = 0;
      for (int q : porder) ordered |= 1ULL << q;
      for (std::uint64_t r = left; r;) {
        int q = __builtin_ctzll(r);
        r &= r - 1;
        int pref = __builtin_popcountll(pattern.row(q) & ordered);
        int deg = pattern.degree(q);
        if (pref > best_pref || (pref == best_pref && deg > best_deg)) {
          best = q;
          best_pref = pref;
          best_deg = deg;
        }
      }
      porder.push_back(best);
      left &= ~(1ULL << best);
    }
    prefix_nbrs.assign(porder.size(), 0);
    for (std::size_t t = 0; t < porder.size(); ++t)
      for (std::size_t s = 0; s < t; ++s)
        if (pattern.has_edge(porder[t], porder[s])) prefix_nbrs[t] |= 1ULL << s;
    suffix_start = pn;
    while (suffix_start > 0 && pattern.degree(porder[static_cast<std::size_t>(suffix_start - 1)]) == 0)
      --suffix_start;
    img.assign(porder.size(), -1);
  }

  bool rec(int t) {
    const int pn = pattern.order();
    if (t >= suffix_start)  // isolated tail just needs spare host vertices
      return host.order() - __builtin_popcountll(used) >= pn - t;
    std::uint64_t cands;
    if (t == 0 && pinned >= 0) {
      cands = 1ULL << pinned;
    } else {
      cands = host.full_mask();
      std::uint64_t pn_mask = prefix_nbrs[static_cast<std::size_t>(t)];
      while (pn_mask) {
        int s = __builtin_ctzll(pn_mask);
        pn_mask &= pn_mask - 1;
        cands &= host.row(img[static_cast<std::size_t>(s)]);
      }
    }
    cands &= ~used;
    int need = pattern.degree(porder[static_cast<std::size_t>(t)]);
    while (cands) {
      int v = __builtin_ctzll(cands);
      cands &= cands - 1;
      if (host.degree(v) < need) continue;
      img[static_cast<std::size_t>(t)] = v;
      used |= 1ULL << v;
      if (rec(t + 1)) return true;
      used &= ~(1ULL << v);
    }
    return false;
  }
};

bool degrees_dominate(const Graph& host, const Graph& pattern) {
  std::vector<int> hd = sorted_degrees(host);
  std::vector<int> pd = sorted_degrees(pattern);
  for (std::size_t i = 0; i < pd.size(); ++i)
    if (pd[i] > hd[i]) return false;
  return true;
}

}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() == 0) return true;
  if (pattern.order() > host.order()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  if (!degrees_dominate(host, pattern)) return false;
  Matcher m(host, pattern);
  m.plan(-1);
  return m.rec(0);
}

bool contains_subgraph_using(const Graph& host, const Graph& pattern, int pinned) {
  if (pinned < 0 || pinned >= host.order())
    fail(Errc::invalid_argument, "pinned host vertex out of range");
  if (pattern.order() == 0) return false;  // empty image cannot cover the pin
  if (pattern.order() > host.order()) return false;
  if (pattern.edge_count() > host.edge_count()) return false;
  if (!degrees_dominate(host, pattern)) return false;
  for (int q = 0; q < pattern.order(); ++q) {
    if (host.degree(pinned) < pattern.degree(q)) continue;
    Matcher m(host, pattern);
    m.pinned = pinned;
    m.plan(q);
    if (m.rec(0)) return true;
  }
  return false;
}

bool contains_any(const Graph& host, const GraphFamily& family) {
  for (const Graph& f : family.members)
    if (contains_subgraph(host, f)) return true;
  return false;
}

namespace {

std::uint64_t reachable_within(const Graph& g, std::uint64_t seed, std::uint64_t allowed) {
  std::uint64_t reach = seed & allowed, prev = 0;
  while (reach != prev) {
    prev = reach;
    std::uint64_t r = reach;
    while (r) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      reach |= g.row(v) & allowed;
    }
  }
  return reach;
}

// Exact suffix lengths memoised on (visited set, endpoint).
struct PathMemo {
  const Graph& g;
  std::unordered_map<std::uint64_t, int> f;

  int suffix(std::uint64_t mask, int last) {
    std::uint64_t key = mask * 64 + static_cast<std::uint64_t>(last);
    auto it = f.find(key);
    if (it != f.end()) return it->second;
    int best = 0;
    std::uint64_t nbrs = g.row(last) & ~mask;
    while (nbrs) {
      int v = __builtin_ctzll(nbrs);
      nbrs &= nbrs - 1;
      best = std::max(best, 1 + suffix(mask | (1ULL << v), v));
    }
    f.emplace(key, best);
    return best;
  }
};

struct PathBB {
  const Graph& g;
  std::vector<int> cur, best;

  void dfs(int last, std::uint64_t mask) {
    if (cur.size() > best.size()) best = cur;
    std::uint64_t reach = reachable_within(g, g.row(last), ~mask);
    if (cur.size() + static_cast<std::size_t>(__builtin_popcountll(reach)) <= best.size())
      return;
    std::uint64_t nbrs = g.row(last) & ~mask;
    while (nbrs) {
      int v = __builtin_ctzll(nbrs);
      nbrs &= nbrs - 1;
      cur.push_back(v);
      dfs(v, mask | (1ULL << v));
      cur.pop_back();
    }
  }
};

}  // namespace

PathSearch longest_path(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::empty_graph, "longest path of the empty graph");
  PathSearch out;
  if (n <= 24) {
    PathMemo memo{g, {}};
    int best = 0, best_start = 0;
    for (int v = 0; v < n; ++v) {
      int len = 1 + memo.suffix(1ULL << v, v);
      if (len > best) {
        best = len;
        best_start = v;
      }
    }
    out.order = best;
    int last = best_start;
    std::uint64_t mask = 1ULL << last;
    out.witness.push_back(last);
    int remaining = best - 1;
    while (remaining > 0) {
      std::uint64_t nbrs = g.row(last) & ~mask;
      while (nbrs) {
        int v = __builtin_ctzll(nbrs);
        nbrs &= nbrs - 1;
        if (1 + memo.suffix(mask | (1ULL << v), v) == remaining) {
          out.witness.push_back(v);
          mask |= 1ULL << v;
          last = v;
          --remaining;
          break;
        }
      }
    }
    return out;
  }
  PathBB bb{g, {}, {}};
  for (int v = 0; v < n; ++v) {
    bb.cur = {v};
    bb.dfs(v, 1ULL << v);
  }
  out.order = static_cast<int>(bb.best.size());
  out.witness = bb.best;
  return out;
}

namespace {

bool has_path_dfs(const Graph& g, int last, std::uint64_t mask, int have, int want) {
  if (have >= want) return true;
  std::uint64_t reach = reachable_within(g, g.row(last), ~mask);
  if (have + __builtin_popcountll(reach) < want) return false;
  std::uint64_t nbrs = g.row(last) & ~mask;
  while (nbrs) {
    int v = __builtin_ctzll(nbrs);
    nbrs &= nbrs - 1;
    if (has_path_dfs(g, v, mask | (1ULL << v), have + 1, want)) return true;
  }
  return false;
}

}  // namespace

bool has_path(const Graph& g, int k) {
  if (k < 1) fail(Errc::invalid_argument, "path order must be positive");
  if (k > g.order()) return false;
  if (k == 1) return g.order() >= 1;
  for (int v = 0; v < g.order(); ++v)
    if (has_path_dfs(g, v, 1ULL << v, 1, k)) return true;
  return false;
}

namespace {

int longest_from_dfs(const Graph& g, int last, std::uint64_t mask) {
  int best = 0;
  std::uint64_t nbrs = g.row(last) & ~mask;
  while (nbrs) {
    int v = __builtin_ctzll(nbrs);
    nbrs &= nbrs - 1;
    best = std::max(best, 1 + longest_from_dfs(g, v, mask | (1ULL << v)));
  }
  return best;
}

}  // namespace

int longest_path_from(const Graph& g, int start) {
  if (start < 0 || start >= g.order())
    fail(Errc::invalid_argument, "start vertex out of range");
  return 1 + longest_from_dfs(g, start, 1ULL << start);
}

namespace {

bool clique_in_mask(const Graph& g, std::uint64_t mask, int size) {
  if (size == 0) return true;
  if (__builtin_popcountll(mask) < size) return false;
  while (mask) {
    int v = __builtin_ctzll(mask);
    mask &= mask - 1;
    // v is the smallest clique member; the rest must be its neighbours
    // further up, so each clique is generated exactly once.
    if (clique_in_mask(g, g.row(v) & mask, size - 1)) return true;
  }
  return false;
}

}  // namespace

FreenessChecker::FreenessChecker(const GraphFamily& family) {
  for (const Graph& g : family.members) {
    Pat p{PatKind::generic, 0, g};
    const int n = g.order();
    const int e = g.edge_count();
    std::vector<int> deg = sorted_degrees(g);
    bool connected = n > 0 && is_connected(g);
    if (n >= 1 && connected && e == n - 1 && deg[0] <= 2) {
      p.kind = PatKind::path;
      p.param = n;
    } else if (e == n * (n - 1) / 2) {
      p.kind = PatKind::clique;
      p.param = n;
    } else if (connected && e == n - 1 && deg[0] == n - 1) {
      p.kind = PatKind::star;
      p.param = n - 1;
    }
    pats_.push_back(std::move(p));
  }
}

bool FreenessChecker::violates(const Graph& host) const {
  for (const Pat& p : pats_) {
    switch (p.kind) {
      case PatKind::path:
        if (has_path(host, p.param)) return true;
        break;
      case PatKind::clique:
        if (clique_in_mask(host, host.full_mask(), p.param)) return true;
        break;
      case PatKind::star:
        for (int v = 0; v < host.order(); ++v)
          if (host.degree(v) >= p.param) return true;
        break;
      case PatKind::generic:
        if (contains_subgraph(host, p.graph)) return true;
        break;
    }
  }
  return false;
}

bool FreenessChecker::violates_with_new_vertex(const Graph& parent, std::uint64_t mask) const {
  Graph child;  // built lazily, only when some member needs the full graph
  bool have_child = false;
  auto the_child = [&]() -> const Graph& {
    if (!have_child) {
      child = parent.extended(mask);
      have_child = true;
    }
    return child;
  };
  for (const Pat& p : pats_) {
    switch (p.kind) {
      case PatKind::path:
        if (p.param == 1) return true;  // K1 touches the new vertex
        if (has_path(the_child(), p.param)) return true;
        break;
      case PatKind::clique:
        // A new clique must contain the new vertex, so its remainder is a
        // clique inside the neighbourhood mask.
        if (p.param == 1) return true;
        if (clique_in_mask(parent, mask, p.param - 1)) return true;
        break;
      case PatKind::star: {
        if (__builtin_popcountll(mask) >= p.param) return true;
        std::uint64_t m = mask;
        while (m) {
          int v = __builtin_ctzll(m);
          m &= m - 1;
          if (parent.degree(v) + 1 >= p.param) return true;
        }
        break;
      }
      case PatKind::generic:
        if (contains_subgraph_using(the_child(), p.graph, parent.order())) return true;
        break;
    }
  }
  return false;
}

}  // namespace turanlab
