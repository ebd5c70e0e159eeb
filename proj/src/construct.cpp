#include "turanlab/construct.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

#include "turanlab/canonical.hpp"

namespace turanlab {

std::shared_ptr<ConstructionSpec> ConstructionSpec::atom(Kind k, std::vector<int> params) {
  auto s = std::make_shared<ConstructionSpec>();
  s->kind = k;
  s->params = std::move(params);
  return s;
}

std::shared_ptr<ConstructionSpec> ConstructionSpec::op(Kind k,
                                                       std::shared_ptr<ConstructionSpec> a,
                                                       std::shared_ptr<ConstructionSpec> b) {
  auto s = std::make_shared<ConstructionSpec>();
  s->kind = k;
  s->args = {std::move(a), std::move(b)};
  return s;
}

namespace {

using Kind = ConstructionSpec::Kind;

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  [[noreturn]] void bail(const std::string& what) {
    fail(Errc::bad_spec,
         "construction parse error at position " + std::to_string(pos) + ": " + what, pos);
  }

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) bail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip_space();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      bail("expected an integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000000) bail("integer too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  std::string word() {
    skip_space();
    std::string w;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      w.push_back(text[pos++]);
    if (w.empty()) bail("expected an atom or operator name");
    return w;
  }

  Construction expr() {
    std::size_t at = pos;
    std::string w = word();
    if (w == "join" || w == "union") {
      expect('(');
      Construction a = expr();
      expect(',');
      Construction b = expr();
      expect(')');
      return ConstructionSpec::op(w == "join" ? Kind::join : Kind::disjoint_union,
                                  std::move(a), std::move(b));
    }
    if (w == "T") {
      expect('(');
      int n = integer();
      expect(',');
      int r = integer();
      expect(')');
      return ConstructionSpec::atom(Kind::atom_t, {n, r});
    }
    if (w == "KP") {
      expect('(');
      std::vector<int> parts{integer()};
      while (eat(',')) parts.push_back(integer());
      expect(')');
      return ConstructionSpec::atom(Kind::atom_kp, std::move(parts));
    }
    if (w.size() == 1) {
      Kind k;
      switch (w[0]) {
        case 'K': k = Kind::atom_k; break;
        case 'I': k = Kind::atom_i; break;
        case 'P': k = Kind::atom_p; break;
        case 'C': k = Kind::atom_c; break;
        case 'S': k = Kind::atom_s; break;
        case 'M': k = Kind::atom_m; break;
        case 'F': k = Kind::atom_f; break;
        default: pos = at; bail("unknown atom '" + w + "'");
      }
      return ConstructionSpec::atom(k, {integer()});
    }
    pos = at;
    bail("unknown atom or operator '" + w + "'");
  }
};

}  // namespace

Construction parse_construction(const std::string& text) {
  Parser p{text};
  Construction c = p.expr();
  p.skip_space();
  if (p.pos != text.size()) p.bail("trailing input");
  return c;
}

Graph build(const Construction& spec) {
  if (!spec) fail(Errc::bad_spec, "empty construction");
  switch (spec->kind) {
    case Kind::atom_k: return complete(spec->params[0]);
    case Kind::atom_i: return edgeless(spec->params[0]);
    case Kind::atom_p: return path_graph(spec->params[0]);
    case Kind::atom_c: return cycle_graph(spec->params[0]);
    case Kind::atom_s: return star_graph(spec->params[0]);
    case Kind::atom_m: return matching_graph(spec->params[0]);
    case Kind::atom_f: return friendship_graph(spec->params[0]);
    case Kind::atom_t: return turan_graph(spec->params[0], spec->params[1]);
    case Kind::atom_kp: return complete_multipartite(spec->params);
    case Kind::join: return join(build(spec->args[0]), build(spec->args[1]));
    case Kind::disjoint_union:
      return disjoint_union(build(spec->args[0]), build(spec->args[1]));
  }
  fail(Errc::bad_spec, "corrupt construction tree");
}

std::string to_text(const Construction& spec) {
  if (!spec) fail(Errc::bad_spec, "empty construction");
  auto intlist = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s;
  };
  switch (spec->kind) {
    case Kind::atom_k: return "K" + std::to_string(spec->params[0]);
    case Kind::atom_i: return "I" + std::to_string(spec->params[0]);
    case Kind::atom_p: return "P" + std::to_string(spec->params[0]);
    case Kind::atom_c: return "C" + std::to_string(spec->params[0]);
    case Kind::atom_s: return "S" + std::to_string(spec->params[0]);
    case Kind::atom_m: return "M" + std::to_string(spec->params[0]);
    case Kind::atom_f: return "F" + std::to_string(spec->params[0]);
    case Kind::atom_t:
      return "T(" + intlist(spec->params) + ")";
    case Kind::atom_kp:
      return "KP(" + intlist(spec->params) + ")";
    case Kind::join:
      return "join(" + to_text(spec->args[0]) + "," + to_text(spec->args[1]) + ")";
    case Kind::disjoint_union:
      return "union(" + to_text(spec->args[0]) + "," + to_text(spec->args[1]) + ")";
  }
  fail(Errc::bad_spec, "corrupt construction tree");
}

namespace {

std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> comps;
  std::uint64_t left = g.full_mask();
  while (left) {
    int start = __builtin_ctzll(left);
    std::uint64_t reach = 1ULL << start, prev = 0;
    while (reach != prev) {
      prev = reach;
      std::uint64_t r = reach;
      while (r) {
        int v = __builtin_ctzll(r);
        r &= r - 1;
        reach |= g.row(v) & left;
      }
    }
    comps.push_back(reach);
    left &= ~reach;
  }
  return comps;
}

Graph complement_of(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) h.add_edge(u, v);
  return h;
}

std::optional<std::string> recognize(const Graph& g, int depth);

std::optional<std::string> recognize_connected(const Graph& g, int depth) {
  const int n = g.order();
  const int e = g.edge_count();
  if (n == 1) return "K1";
  if (e == n * (n - 1) / 2) return "K" + std::to_string(n);

  std::vector<int> deg = sorted_degrees(g);
  bool deg_le2 = deg[0] <= 2;
  if (deg_le2 && e == n - 1) return "P" + std::to_string(n);
  if (deg_le2 && e == n && deg[static_cast<std::size_t>(n - 1)] == 2)
    return "C" + std::to_string(n);
  if (e == n - 1 && deg[0] == n - 1) return "S" + std::to_string(n - 1);

  // Friendship: one vertex on every edge pair, the rest a perfect matching.
  if (n % 2 == 1 && n >= 3) {
    for (int c = 0; c < n; ++c)
      if (g.degree(c) == n - 1) {
        Graph rest = g.without_vertices(1ULL << c);
        bool pm = rest.edge_count() * 2 == rest.order();
        for (int v = 0; pm && v < rest.order(); ++v) pm = rest.degree(v) == 1;
        if (pm && e == 3 * (n - 1) / 2) return "F" + std::to_string((n - 1) / 2);
      }
  }

  // Complete multipartite iff the complement is a union of cliques.
  {
    Graph co = complement_of(g);
    std::vector<std::uint64_t> comps = component_masks(co);
    bool all_cliques = true;
    std::vector<int> parts;
    for (std::uint64_t m : comps) {
      int size = __builtin_popcountll(m);
      Graph part = co.induced(m);
      if (part.edge_count() != size * (size - 1) / 2) {
        all_cliques = false;
        break;
      }
      parts.push_back(size);
    }
    if (all_cliques && parts.size() >= 2) {
      std::sort(parts.rbegin(), parts.rend());
      std::string s = "KP(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
      }
      return s + ")";
    }
  }

  // Join split: complement disconnected means the graph is the join of the
  // complement components, each taken back in the original graph.
  {
    Graph co = complement_of(g);
    std::vector<std::uint64_t> comps = component_masks(co);
    if (comps.size() >= 2 && depth < 8) {
      std::optional<std::string> acc;
      for (std::uint64_t m : comps) {
        auto piece = recognize(g.induced(m), depth + 1);
        if (!piece) return std::nullopt;
        acc = acc ? "join(" + *acc + "," + *piece + ")" : *piece;
      }
      return acc;
    }
  }
  return std::nullopt;
}

std::optional<std::string> recognize(const Graph& g, int depth) {
  const int n = g.order();
  if (n == 0 || depth >= 8) return std::nullopt;
  if (g.edge_count() == 0) return n == 1 ? "K1" : "I" + std::to_string(n);

  // Perfect matchings get the dedicated atom before the union fallback.
  if (n % 2 == 0 && g.edge_count() * 2 == n) {
    bool pm = true;
    for (int v = 0; pm && v < n; ++v) pm = g.degree(v) == 1;
    if (pm) return "M" + std::to_string(n / 2);
  }

  std::vector<std::uint64_t> comps = component_masks(g);
  if (comps.size() == 1) return recognize_connected(g, depth);
  std::optional<std::string> acc;
  for (std::uint64_t m : comps) {
    auto piece = recognize(g.induced(m), depth + 1);
    if (!piece) return std::nullopt;
    acc = acc ? "union(" + *acc + "," + *piece + ")" : *piece;
  }
  return acc;
}

}  // namespace

std::optional<std::string> recognize_construction(const Graph& g) {
  auto text = recognize(g, 0);
#ifndef NDEBUG
  if (text) assert(isomorphic(build(parse_construction(*text)), g));
#endif
  return text;
}

}  // namespace turanlab
