#include "turanlab/structure.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "turanlab/enumerate.hpp"
#include "turanlab/family.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/subgraph.hpp"

namespace turanlab {

namespace {

std::uint64_t path_mask(const Graph& g, const std::vector<int>& path) {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (v < 0 || v >= g.order() || (mask >> v) & 1ULL)
      fail(Errc::invalid_argument, "witness path repeats or leaves the graph");
    if (i > 0 && !g.has_edge(path[i - 1], v))
      fail(Errc::invalid_argument, "witness path uses a missing edge");
    mask |= 1ULL << v;
  }
  return mask;
}

std::vector<std::uint64_t> component_masks_within(const Graph& g, std::uint64_t allowed) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = allowed;
  while (left) {
    std::uint64_t comp = 1ULL << __builtin_ctzll(left), prev = 0;
    while (comp != prev) {
      prev = comp;
      std::uint64_t r = comp;
      while (r) {
        int v = __builtin_ctzll(r);
        r &= r - 1;
        comp |= g.row(v) & allowed;
      }
    }
    comps.push_back(comp);
    left &= ~comp;
  }
  return comps;
}

}  // namespace

PathDecomposition decompose_on_path(const Graph& g, int k,
                                    const std::vector<int>& path) {
  if (k < 2) fail(Errc::bad_k, "path parameter must be at least 2");
  if (g.order() == 0) fail(Errc::empty_graph, "cannot decompose the empty graph");
  if (!is_connected(g)) fail(Errc::disconnected, "host must be connected");
  if (static_cast<int>(path.size()) != k - 1)
    fail(Errc::invalid_argument, "witness path must have exactly k-1 vertices");
  std::uint64_t pmask = path_mask(g, path);
  if (has_path(g, k)) fail(Errc::has_pk, "host contains a path on k vertices");

  PathDecomposition dec;
  dec.path = path;
  const int top = k / 2 - 1;
  dec.a.assign(static_cast<std::size_t>(top) + 1, {});
  dec.b.assign(static_cast<std::size_t>(top) + 1, {});
  std::vector<int> a_index(static_cast<std::size_t>(g.order()), -1);
  for (int u = 0; u < g.order(); ++u) {
    if ((pmask >> u) & 1ULL) continue;
    int s = __builtin_popcountll(g.row(u) & pmask);
    if (s > top)
      fail(Errc::invalid_argument,
           "off-path vertex has more path neighbours than the premises allow");
    a_index[static_cast<std::size_t>(u)] = s;
    dec.a[static_cast<std::size_t>(s)].push_back(u);
  }
  for (std::uint64_t comp : component_masks_within(g, g.full_mask() & ~pmask)) {
    int top_index = 0;
    for (std::uint64_t r = comp; r;) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      top_index = std::max(top_index, a_index[static_cast<std::size_t>(v)]);
    }
    for (std::uint64_t r = comp; r;) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      dec.b[static_cast<std::size_t>(top_index)].push_back(v);
    }
  }
  for (auto& group : dec.b) std::sort(group.begin(), group.end());
  return dec;
}

PathDecomposition decompose(const Graph& g, int k) {
  if (k < 2) fail(Errc::bad_k, "path parameter must be at least 2");
  if (g.order() == 0) fail(Errc::empty_graph, "cannot decompose the empty graph");
  if (!is_connected(g)) fail(Errc::disconnected, "host must be connected");
  PathSearch longest = longest_path(g);
  if (longest.order >= k) fail(Errc::has_pk, "host contains a path on k vertices");
  if (longest.order < k - 1)
    fail(Errc::no_witness_path, "host has no path on k-1 vertices");
  return decompose_on_path(g, k, longest.witness);
}

Lemma1Report check_lemma1(const Graph& g, const std::vector<int>& path, int u) {
  const int k = static_cast<int>(path.size()) + 1;
  if (!is_connected(g)) fail(Errc::disconnected, "host must be connected");
  std::uint64_t pmask = path_mask(g, path);
  if (has_path(g, k)) fail(Errc::has_pk, "host contains a path on k vertices");
  if (u < 0 || u >= g.order() || ((pmask >> u) & 1ULL))
    fail(Errc::invalid_argument, "vertex must lie off the witness path");

  Lemma1Report rep;
  rep.bound = k / 2;
  rep.s = __builtin_popcountll(g.row(u) & pmask);
  std::uint64_t off = g.full_mask() & ~pmask;
  Graph rest = g.induced(off);
  int mapped = __builtin_popcountll(off & ((1ULL << u) - 1));
  rep.j = longest_path_from(rest, mapped);
  rep.applies = rep.s >= 1;
  rep.holds = !rep.applies || rep.s + rep.j <= rep.bound;
  return rep;
}

Lemma2Report check_lemma2(const Graph& g, const std::vector<int>& path, int u) {
  const int k = g.order();
  if (static_cast<int>(path.size()) != k - 1)
    fail(Errc::invalid_argument, "host must have exactly one off-path vertex");
  if (!is_connected(g)) fail(Errc::disconnected, "host must be connected");
  std::uint64_t pmask = path_mask(g, path);
  if (u < 0 || u >= k || ((pmask >> u) & 1ULL))
    fail(Errc::invalid_argument, "vertex must be the off-path vertex");
  if (has_path(g, k))
    fail(Errc::hamiltonian_path, "host has a spanning path, the premises exclude it");

  Lemma2Report rep;
  rep.s_bound = k / 2 - 1;
  std::vector<int> pos;  // positions of u's neighbours along the path
  for (int i = 0; i < k - 1; ++i)
    if (g.has_edge(u, path[static_cast<std::size_t>(i)])) pos.push_back(i);
  rep.s = static_cast<int>(pos.size());
  rep.degree_ok = rep.s <= rep.s_bound;

  // A neighbour at either end, or two consecutive neighbours, would extend
  // the path to a spanning one, which the premise check above rules out.
  for (std::size_t idx = 0; idx < pos.size(); ++idx) {
    assert(pos[idx] >= 1 && pos[idx] <= k - 3);
    assert(idx == 0 || pos[idx] >= pos[idx - 1] + 2);
  }
  auto at = [&](int i) { return path[static_cast<std::size_t>(i)]; };
  auto flag = [&](int x, int y) {
    if (g.has_edge(x, y)) rep.forbidden_edges.emplace_back(std::min(x, y), std::max(x, y));
  };
  for (std::size_t a = 0; a < pos.size(); ++a) {
    for (std::size_t b = a + 1; b < pos.size(); ++b) {
      flag(at(pos[a] + 1), at(pos[b] + 1));
      flag(at(pos[a] - 1), at(pos[b] - 1));
    }
    flag(at(0), at(pos[a] + 1));
    flag(at(pos[a] - 1), at(k - 2));
  }
  std::sort(rep.forbidden_edges.begin(), rep.forbidden_edges.end());
  rep.forbidden_edges.erase(
      std::unique(rep.forbidden_edges.begin(), rep.forbidden_edges.end()),
      rep.forbidden_edges.end());
  return rep;
}

Lemma3Report check_lemma3_on_path(const Graph& g, int k, const std::vector<int>& path) {
  Lemma3Report rep;
  rep.dec = decompose_on_path(g, k, path);
  std::uint64_t pmask = 0;
  for (int v : path) pmask |= 1ULL << v;
  rep.lhs = Rational(g.edge_count() - g.induced(pmask).edge_count());
  const int top = k / 2 - 1;
  Rational rhs(0);
  rhs = rhs + Rational(top) * Rational(static_cast<std::int64_t>(rep.dec.a[static_cast<std::size_t>(top)].size()));
  for (int l = 0; l < top; ++l)
    rhs = rhs + Rational(2 * (k / 2) - 3, 2) *
                    Rational(static_cast<std::int64_t>(rep.dec.a[static_cast<std::size_t>(l)].size()));
  rep.rhs = rhs;
  rep.holds = !(rep.rhs < rep.lhs);
  return rep;
}

Lemma3Report check_lemma3(const Graph& g, int k) {
  PathDecomposition dec = decompose(g, k);
  return check_lemma3_on_path(g, k, dec.path);
}

std::vector<std::vector<int>> paths_of_order(const Graph& g, int m, std::size_t cap) {
  std::vector<std::vector<int>> out;
  if (m < 1 || m > g.order() || cap == 0) return out;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int last, std::uint64_t mask) -> bool {
    if (static_cast<int>(cur.size()) == m) {
      if (m == 1 || cur.front() < cur.back()) {  // one orientation per path
        out.push_back(cur);
        if (out.size() >= cap) return true;
      }
      return false;
    }
    std::uint64_t nbrs = g.row(last) & ~mask;
    while (nbrs) {
      int v = __builtin_ctzll(nbrs);
      nbrs &= nbrs - 1;
      cur.push_back(v);
      if (self(self, v, mask | (1ULL << v))) return true;
      cur.pop_back();
    }
    return false;
  };
  for (int v = 0; v < g.order(); ++v) {
    cur = {v};
    if (dfs(dfs, v, 1ULL << v)) break;
  }
  return out;
}

namespace {

void check_decomposition_shape(const Graph& g, const PathDecomposition& dec,
                               std::vector<std::string>& problems) {
  std::uint64_t pmask = 0;
  for (int v : dec.path) pmask |= 1ULL << v;
  std::uint64_t off = g.full_mask() & ~pmask;
  std::uint64_t seen_a = 0, seen_b = 0;
  for (const auto& group : dec.a)
    for (int v : group) {
      if ((seen_a >> v) & 1ULL) problems.push_back("a-groups overlap");
      seen_a |= 1ULL << v;
    }
  for (const auto& group : dec.b)
    for (int v : group) {
      if ((seen_b >> v) & 1ULL) problems.push_back("b-groups overlap");
      seen_b |= 1ULL << v;
    }
  if (seen_a != off) problems.push_back("a-groups do not cover the off-path vertices");
  if (seen_b != off) problems.push_back("b-groups do not cover the off-path vertices");
  if (!dec.b.empty() && !dec.b[0].empty() && is_connected(g))
    problems.push_back("b_0 nonempty in a connected host");
  for (std::size_t i = 0; i < dec.b.size(); ++i)
    for (std::size_t j = i + 1; j < dec.b.size(); ++j)
      for (int x : dec.b[i])
        for (int y : dec.b[j])
          if (g.has_edge(x, y)) problems.push_back("edge between distinct b-groups");
}

}  // namespace

AuditReport audit_lemmas(int k, int n_max, int threads) {
  if (k < 4) fail(Errc::bad_k, "audit needs a path parameter of at least 4");
  if (n_max < k - 1) fail(Errc::bad_range, "audit range ends before the witness order");
  AuditReport report;
  report.k = k;
  report.n_max = n_max;
  GraphFamily forbidden = GraphFamily::from_graphs("no-long-path", {path_graph(k)});
  EnumerateOptions opts;
  opts.connected_only = true;
  opts.threads = threads;
  for (int n = k - 1; n <= n_max; ++n) {
    enumerate_free(n, forbidden, opts, [&](const Graph& g) {
      if (longest_path(g).order != k - 1) return;  // witness path premise
      ++report.graphs_checked;
      std::string tag;  // built lazily, only when something goes wrong
      auto record = [&](const std::string& what) {
        if (tag.empty()) tag = "n=" + std::to_string(n) + " graph=" + to_graph6(g);
        report.violations.push_back(tag + " " + what);
      };
      for (const std::vector<int>& path : paths_of_order(g, k - 1)) {
        ++report.paths_checked;
        try {
          PathDecomposition dec = decompose_on_path(g, k, path);
          std::vector<std::string> shape;
          check_decomposition_shape(g, dec, shape);
          for (const std::string& s : shape) record(s);
          std::uint64_t pmask = 0;
          for (int v : path) pmask |= 1ULL << v;
          for (int u = 0; u < g.order(); ++u) {
            if ((pmask >> u) & 1ULL) continue;
            Lemma1Report r1 = check_lemma1(g, path, u);
            ++report.lemma1_checks;
            if (!r1.holds)
              record("lemma1 fails at u=" + std::to_string(u) + " with s=" +
                     std::to_string(r1.s) + " j=" + std::to_string(r1.j));
            if (n == k) {
              Lemma2Report r2 = check_lemma2(g, path, u);
              ++report.lemma2_checks;
              if (!r2.clean()) record("lemma2 fails at u=" + std::to_string(u));
            }
          }
          Lemma3Report r3 = check_lemma3_on_path(g, k, path);
          ++report.lemma3_checks;
          if (!r3.holds)
            record("lemma3 fails: lhs=" + r3.lhs.str() + " rhs=" + r3.rhs.str());
        } catch (const TuranError& err) {
          record(std::string("premise breakdown: ") + err.what());
        }
      }
    });
  }
  return report;
}

}  // namespace turanlab
