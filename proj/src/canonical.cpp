#include "turanlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>

namespace turanlab {

std::vector<int> refinement_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  // A few rounds of (colour, sorted neighbour colours) re-ranking; colour ids
  // are ranks of the signatures, so they do not depend on vertex labels.
  for (int round = 0; round < 3; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> rank;
    std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      std::vector<int> nbr;
      std::uint64_t r = g.row(v);
      while (r) {
        int u = __builtin_ctzll(r);
        r &= r - 1;
        nbr.push_back(color[static_cast<std::size_t>(u)]);
      }
      std::sort(nbr.begin(), nbr.end());
      sig[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(nbr)};
      rank[sig[static_cast<std::size_t>(v)]] = 0;
    }
    int next = 0;
    for (auto& kv : rank) kv.second = next++;
    bool changed = false;
    for (int v = 0; v < n; ++v) {
      int c = rank[sig[static_cast<std::size_t>(v)]];
      if (c != color[static_cast<std::size_t>(v)]) changed = true;
      color[static_cast<std::size_t>(v)] = c;
    }
    if (!changed) break;
  }
  return color;
}

namespace {

enum class Rel { no_best, below, equal };

struct CanonSearch {
  int n = 0;
  std::array<std::uint64_t, 64> adj{};
  std::array<int, 64> heur_rank{};   // lower rank tried first
  std::array<int, 64> twin_class{};  // swap-equivalent vertices share a class

  std::array<int, 64> order{};
  std::array<std::uint64_t, 64> curcol{};
  std::uint64_t placed = 0;

  bool have_best = false;
  std::uint64_t best_gen = 0;
  std::array<std::uint64_t, 64> bestcol{};
  std::array<int, 64> bestorder{};

  // Automorphisms discovered from exact ties; capped, pruning only weakens
  // when the cap trims the list.
  std::vector<std::array<std::uint8_t, 64>> gens;
  static constexpr std::size_t kMaxGens = 64;

  void record_tie() {
    if (gens.size() >= kMaxGens) return;
    std::array<std::uint8_t, 64> perm{};
    for (int i = 0; i < n; ++i)
      perm[static_cast<std::size_t>(bestorder[static_cast<std::size_t>(i)])] =
          static_cast<std::uint8_t>(order[static_cast<std::size_t>(i)]);
#ifndef NDEBUG
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        assert((((adj[static_cast<std::size_t>(u)] >> v) & 1ULL) ==
                ((adj[perm[static_cast<std::size_t>(u)]] >> perm[static_cast<std::size_t>(v)]) & 1ULL)));
#endif
    gens.push_back(perm);
  }

  void dfs(int pos, Rel rel) {
    if (pos == n) {
      if (rel == Rel::equal) {
        record_tie();
        return;
      }
      for (int i = 0; i < n; ++i) {
        bestcol[static_cast<std::size_t>(i)] = curcol[static_cast<std::size_t>(i)];
        bestorder[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)];
      }
      have_best = true;
      ++best_gen;
      return;
    }

    // Column bits of each unplaced vertex against the placed prefix.  Only
    // candidates attaining the minimal column can start the minimal
    // completion, so the rest are dropped outright.
    std::uint64_t col[64];
    std::uint64_t mincol = ~0ULL;
    std::uint64_t avail = ((n == 64 ? ~0ULL : (1ULL << n) - 1) & ~placed);
    for (std::uint64_t r = avail; r;) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      std::uint64_t c = 0;
      for (int i = 0; i < pos; ++i)
        c = (c << 1) | ((adj[static_cast<std::size_t>(v)] >> order[static_cast<std::size_t>(i)]) & 1ULL);
      col[v] = c;
      mincol = std::min(mincol, c);
    }

    std::vector<int> cands;
    for (std::uint64_t r = avail; r;) {
      int v = __builtin_ctzll(r);
      r &= r - 1;
      if (col[v] == mincol) cands.push_back(v);
    }
    std::sort(cands.begin(), cands.end(), [&](int a, int b) {
      return heur_rank[static_cast<std::size_t>(a)] < heur_rank[static_cast<std::size_t>(b)];
    });

    // Automorphisms that fix the placed prefix pointwise permute the
    // candidates; trying one representative per orbit is enough.
    std::vector<const std::array<std::uint8_t, 64>*> usable;
    for (const auto& perm : gens) {
      bool fixes = true;
      for (int i = 0; i < pos && fixes; ++i)
        fixes = perm[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] ==
                order[static_cast<std::size_t>(i)];
      if (fixes) usable.push_back(&perm);
    }

    std::array<int, 64> uf{};
    for (int v : cands) uf[static_cast<std::size_t>(v)] = v;
    auto find = [&](int v) {
      while (uf[static_cast<std::size_t>(v)] != v) {
        uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
        v = uf[static_cast<std::size_t>(v)];
      }
      return v;
    };
    if (!usable.empty()) {
      std::uint64_t in_cands = 0;
      for (int v : cands) in_cands |= 1ULL << v;
      for (const auto* perm : usable)
        for (int v : cands) {
          int w = (*perm)[static_cast<std::size_t>(v)];
          if ((in_cands >> w) & 1ULL) {
            int a = find(v), b = find(w);
            if (a != b) uf[static_cast<std::size_t>(a)] = b;
          }
        }
    }

    Rel crel;
    bool seen_twin[64] = {false};
    bool seen_orbit[64] = {false};
    for (int v : cands) {
      int tc = twin_class[static_cast<std::size_t>(v)];
      if (seen_twin[tc]) continue;
      int orb = find(v);
      if (seen_orbit[orb]) continue;

      if (rel == Rel::equal) {
        if (mincol > bestcol[static_cast<std::size_t>(pos)]) return;
        crel = mincol < bestcol[static_cast<std::size_t>(pos)] ? Rel::below : Rel::equal;
      } else {
        crel = rel;
      }

      seen_twin[tc] = true;
      seen_orbit[orb] = true;
      order[static_cast<std::size_t>(pos)] = v;
      curcol[static_cast<std::size_t>(pos)] = mincol;
      placed |= 1ULL << v;
      std::uint64_t gen_before = best_gen;
      dfs(pos + 1, crel);
      placed &= ~(1ULL << v);
      if (best_gen != gen_before) {
        // The new best string runs through this node, so from here on the
        // prefix ties it exactly.
        rel = Rel::equal;
      }
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  const int n = g.order();
  CanonicalLabeling out;
  out.order.resize(static_cast<std::size_t>(n));
  if (n == 0) {
    out.form.code.push_back('\0');
    return out;
  }

  CanonSearch s;
  s.n = n;
  for (int v = 0; v < n; ++v) s.adj[static_cast<std::size_t>(v)] = g.row(v);

  std::vector<int> color = refinement_colors(g);
  std::vector<int> by_heur(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_heur[static_cast<std::size_t>(v)] = v;
  std::sort(by_heur.begin(), by_heur.end(), [&](int a, int b) {
    auto ka = std::pair(g.degree(a), color[static_cast<std::size_t>(a)]);
    auto kb = std::pair(g.degree(b), color[static_cast<std::size_t>(b)]);
    if (ka != kb) return ka < kb;
    return a < b;
  });
  for (int i = 0; i < n; ++i) s.heur_rank[static_cast<std::size_t>(by_heur[static_cast<std::size_t>(i)])] = i;

  // Twins: swapping u and w is an automorphism iff their rows agree outside
  // the pair.  Any one twin stands in for the whole class at a search node.
  for (int v = 0; v < n; ++v) s.twin_class[static_cast<std::size_t>(v)] = v;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) {
      if (s.twin_class[static_cast<std::size_t>(w)] != w) continue;
      std::uint64_t off = ~((1ULL << u) | (1ULL << w));
      if ((g.row(u) & off) == (g.row(w) & off))
        s.twin_class[static_cast<std::size_t>(w)] = s.twin_class[static_cast<std::size_t>(u)];
    }

  s.dfs(0, Rel::no_best);

  std::string code;
  code.push_back(static_cast<char>(n));
  int acc = 0, width = 0;
  for (int pos = 1; pos < n; ++pos)
    for (int i = 0; i < pos; ++i) {
      int bit = static_cast<int>((s.bestcol[static_cast<std::size_t>(pos)] >> (pos - 1 - i)) & 1ULL);
      acc = (acc << 1) | bit;
      if (++width == 8) {
        code.push_back(static_cast<char>(acc));
        acc = 0;
        width = 0;
      }
    }
  if (width > 0) code.push_back(static_cast<char>(acc << (8 - width)));

  out.form.code = std::move(code);
  for (int i = 0; i < n; ++i) out.order[static_cast<std::size_t>(i)] = s.bestorder[static_cast<std::size_t>(i)];
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph canonical_graph(const Graph& g, const CanonicalLabeling& lab) {
  const int n = g.order();
  Graph h(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.has_edge(lab.order[static_cast<std::size_t>(i)], lab.order[static_cast<std::size_t>(j)]))
        h.add_edge(i, j);
  return h;
}

Graph canonical_graph(const Graph& g) { return canonical_graph(g, canonical_labeling(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (sorted_degrees(a) != sorted_degrees(b)) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace turanlab
