#include "turanlab/formulas.hpp"

#include <algorithm>

#include "turanlab/canonical.hpp"
#include "turanlab/coloring.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/subgraph.hpp"

namespace turanlab {

namespace {

constexpr const char* kAsymptoticNote =
    "equality for sufficiently large n; attached constructions are lower bounds at every n";

std::int64_t binom2(std::int64_t a) { return a < 2 ? 0 : a * (a - 1) / 2; }

FormulaPrediction base_pred(TheoremId id, int n, int k) {
  FormulaPrediction p;
  p.theorem = id;
  p.n = n;
  p.k = k;
  return p;
}

// Validate a predicted extremal graph before attaching it: it must avoid
// every forbidden member, meet the connectivity claim, and achieve the
// predicted edge count.  A failure here is an internal inconsistency, so it
// throws rather than attaching a bogus witness.
void attach_checked(FormulaPrediction& pred, const Graph& g,
                    const GraphFamily& forbidden, bool require_connected) {
  if (!pred.value.is_integer())
    fail(Errc::invalid_argument, "construction attached to a fractional prediction");
  if (contains_any(g, forbidden))
    fail(Errc::invalid_argument, "predicted construction contains a forbidden graph");
  if (require_connected && !is_connected(g))
    fail(Errc::invalid_argument, "predicted construction is not connected");
  if (g.edge_count() != pred.value.num)
    fail(Errc::invalid_argument, "predicted construction misses the predicted edge count");
  for (const PredictedConstruction& c : pred.constructions)
    if (isomorphic(c.graph, g)) return;
  PredictedConstruction pc;
  pc.graph = g;
  if (auto expr = recognize_construction(g)) pc.expression = *expr;
  pred.constructions.push_back(std::move(pc));
}

void require_chi_at_least_3(const Graph& h) {
  if (chromatic_number(h) <= 2)
    fail(Errc::chi_too_small, "forbidden graph must need at least three colours");
}

int odd_side(int k) {
  if (k % 2 == 0) fail(Errc::even_k, "formula applies to odd path orders only");
  if (k < 5) fail(Errc::bad_k, "odd path order must be at least 5");
  return (k - 3) / 2;
}

int even_side(int k) {
  if (k % 2 != 0) fail(Errc::odd_k, "formula applies to even path orders only");
  if (k < 4) fail(Errc::bad_k, "even path order must be at least 4");
  return k / 2 - 1;
}

std::int64_t engine_value(const TuranResult& r) {
  if (!r.value) fail(Errc::invalid_argument, "edge maximum undefined where a value was needed");
  return *r.value;
}

}  // namespace

std::string theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::erdos_gallai: return "erdos_gallai";
    case TheoremId::balister_conn: return "balister_conn";
    case TheoremId::katona_xiao_conn: return "katona_xiao_conn";
    case TheoremId::katona_xiao_all: return "katona_xiao_all";
    case TheoremId::even_main: return "even_main";
    case TheoremId::odd_main: return "odd_main";
    case TheoremId::odd_c0: return "odd_c0";
    case TheoremId::asymptotic: return "asymptotic";
    case TheoremId::cor_km_odd: return "cor_km_odd";
    case TheoremId::cor_ft: return "cor_ft";
    case TheoremId::remark_k222: return "remark_k222";
    case TheoremId::ahs: return "ahs";
    case TheoremId::chvatal_hanson: return "chvatal_hanson";
  }
  fail(Errc::invalid_argument, "unknown theorem id");
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
  for (TheoremId id :
       {TheoremId::erdos_gallai, TheoremId::balister_conn, TheoremId::katona_xiao_conn,
        TheoremId::katona_xiao_all, TheoremId::even_main, TheoremId::odd_main,
        TheoremId::odd_c0, TheoremId::asymptotic, TheoremId::cor_km_odd, TheoremId::cor_ft,
        TheoremId::remark_k222, TheoremId::ahs, TheoremId::chvatal_hanson})
    if (theorem_name(id) == name) return id;
  return std::nullopt;
}

Rational erdos_gallai_bound(int n, int k) {
  if (k < 2) fail(Errc::bad_k, "path order must be at least 2");
  if (n < 0) fail(Errc::bad_range, "negative order");
  return Rational(static_cast<std::int64_t>(k - 2) * n, 2);
}

FormulaPrediction balister_conn_bound(int n, int k) {
  if (k < 4) fail(Errc::bad_range, "path order must be at least 4");
  if (n <= k) fail(Errc::bad_range, "host order must exceed the path order");
  const int half_up = (k + 1) / 2;   // ceil(k/2)
  const int half_down = k / 2;       // floor(k/2)
  std::int64_t branch1 = binom2(k - 2) + (n - k + 2);
  std::int64_t branch2 = binom2(half_up) + static_cast<std::int64_t>((k - 2) / 2) * (n - half_up);
  FormulaPrediction pred = base_pred(TheoremId::balister_conn, n, k);
  pred.value = Rational(std::max(branch1, branch2));
  pred.validity = "exact for connected hosts whenever n > k";
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden = GraphFamily::from_graphs("forbidden", {path_graph(k)});
    if (branch1 == std::max(branch1, branch2))
      attach_checked(pred,
                     join(disjoint_union(complete(k - 3), edgeless(n - k + 2)), complete(1)),
                     forbidden, true);
    if (branch2 == std::max(branch1, branch2))
      attach_checked(pred,
                     join(disjoint_union(complete(k - 2 * half_down + 1), edgeless(n - half_up)),
                          complete(half_down - 1)),
                     forbidden, true);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

namespace {

FormulaPrediction katona_xiao_common(TheoremId id, int n, int k, int m,
                                     bool require_connected) {
  if (m < 3) fail(Errc::bad_range, "clique order must be at least 3");
  if (m >= k) fail(Errc::bad_range, "clique order must be below the path order");
  if (k < 4) fail(Errc::bad_range, "path order must be at least 4");
  const int f = k / 2;
  if (n < f) fail(Errc::bad_range, "host order too small for the construction");
  Graph core = turan_graph(f - 1, m - 2);
  FormulaPrediction pred = base_pred(id, n, k);
  pred.value =
      Rational(static_cast<std::int64_t>(f - 1) * (n - f + 1) + core.edge_count());
  pred.validity = kAsymptoticNote;
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden =
        GraphFamily::from_graphs("forbidden", {path_graph(k), complete(m)});
    attach_checked(pred, join(core, edgeless(n - f + 1)), forbidden, require_connected);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

}  // namespace

FormulaPrediction katona_xiao_conn(int n, int k, int m) {
  return katona_xiao_common(TheoremId::katona_xiao_conn, n, k, m, true);
}

FormulaPrediction katona_xiao_all(int n, int k, int m) {
  if (2 * m - 1 >= k)
    fail(Errc::bad_range, "unrestricted variant needs 2m-1 below the path order");
  return katona_xiao_common(TheoremId::katona_xiao_all, n, k, m, false);
}

FormulaPrediction even_main(int n, int k, const Graph& h, TuranEngine& engine) {
  const int r = even_side(k);
  require_chi_at_least_3(h);
  if (n <= r) fail(Errc::bad_range, "host order too small for the construction");
  GraphFamily deletions = color_class_deletions(h);
  TuranResult ex = engine.compute(r, deletions, Mode::all);
  FormulaPrediction pred = base_pred(TheoremId::even_main, n, k);
  pred.value = Rational(engine_value(ex) + static_cast<std::int64_t>(r) * (n - r));
  pred.validity = kAsymptoticNote;
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden = GraphFamily::from_graphs("forbidden", {path_graph(k), h});
    for (const Graph& t : ex.extremal)
      attach_checked(pred, join(t, edgeless(n - r)), forbidden, true);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

FormulaPrediction odd_main(int n, int k, const Graph& h, TuranEngine& engine) {
  const int s = odd_side(k);
  require_chi_at_least_3(h);
  if (n <= s) fail(Errc::bad_range, "host order too small for the construction");
  GraphFamily deletions = color_class_deletions(h);
  TuranResult ex = engine.compute(s, deletions, Mode::all);
  std::int64_t base = engine_value(ex) + static_cast<std::int64_t>(s) * (n - s);
  FormulaPrediction pred = base_pred(TheoremId::odd_main, n, k);
  pred.value = Rational(base);
  pred.value_alt = Rational(base + 1);
  pred.validity =
      "value is base or base+1 for sufficiently large n; constructions achieve the base";
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden = GraphFamily::from_graphs("forbidden", {path_graph(k), h});
    for (const Graph& t : ex.extremal)
      attach_checked(pred, join(t, edgeless(n - s)), forbidden, true);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

bool odd_c0_condition(int k, const Graph& h, TuranEngine& engine) {
  const int s = odd_side(k);
  require_chi_at_least_3(h);
  GraphFamily deletions = color_class_deletions(h);
  GraphFamily pair_deletions = adjacent_pair_deletions(h);
  TuranResult ex = engine.compute(s, deletions, Mode::all);
  for (const Graph& t : ex.extremal)
    if (!contains_any(t, pair_deletions)) return false;
  return true;
}

FormulaPrediction odd_c0(int n, int k, const Graph& h, TuranEngine& engine) {
  if (!odd_c0_condition(k, h, engine))
    fail(Errc::invalid_argument,
         "the c=0 sufficient condition does not hold for this forbidden graph");
  FormulaPrediction pred = odd_main(n, k, h, engine);
  pred.theorem = TheoremId::odd_c0;
  pred.value_alt.reset();
  pred.validity = kAsymptoticNote;
  return pred;
}

CResolution resolve_c(int k, const Graph& h, int n_probe, TuranEngine& engine) {
  const int s = odd_side(k);
  require_chi_at_least_3(h);
  if (n_probe <= k)
    fail(Errc::probe_too_small, "probe order must exceed the path order");
  CResolution res;
  if (odd_c0_condition(k, h, engine)) {
    res.c = 0;
    res.method = "condition";
    res.note =
        "every extremal graph for the colour-class-deletion family contains an "
        "adjacent-pair deletion of the forbidden graph";
    return res;
  }
  GraphFamily deletions = color_class_deletions(h);
  TuranResult ex = engine.compute(s, deletions, Mode::all);
  if (n_probe <= Graph::kMaxOrder) {
    const int ipart = n_probe - (k + 1) / 2;
    for (const Graph& t : ex.extremal) {
      Graph witness = join(t, disjoint_union(edgeless(ipart), complete(2)));
      if (!has_path(witness, k) && !contains_subgraph(witness, h)) {
        auto expr = recognize_construction(witness);
        res.c = 1;
        res.method = "witness";
        res.note = "graph " + (expr ? *expr : to_graph6(witness)) + " on " +
                   std::to_string(n_probe) +
                   " vertices is free and exceeds the base value by one";
        return res;
      }
    }
  }
  try {
    GraphFamily fam = GraphFamily::from_graphs("probe", {path_graph(k), h});
    TuranResult brute = engine.compute(n_probe, fam, Mode::connected);
    std::int64_t base = engine_value(ex) + static_cast<std::int64_t>(s) * (n_probe - s);
    if (brute.value && *brute.value == base) {
      res.c = 0;
      res.method = "probe";
      res.note = "exhaustive search at the probe order matches the base value";
      return res;
    }
    if (brute.value && *brute.value == base + 1) {
      res.c = 1;
      res.method = "probe";
      res.note = "exhaustive search at the probe order exceeds the base value by one";
      return res;
    }
    res.method = "unresolved";
    res.note = "probe value does not match base or base+1";
    return res;
  } catch (const TuranError& err) {
    if (err.code() == Errc::bad_range) {
      res.method = "unresolved";
      res.note = "probe order is beyond the exhaustive search limit";
      return res;
    }
    throw;
  }
}

FormulaPrediction asymptotic_slope(int k, const Graph& h, TuranEngine& engine) {
  if (k < 4) fail(Errc::bad_k, "path order must be at least 4");
  require_chi_at_least_3(h);
  GraphFamily fam = GraphFamily::from_graphs("forbidden", {h});
  TuranResult ex = engine.compute(k - 1, fam, Mode::all);
  FormulaPrediction pred = base_pred(TheoremId::asymptotic, 0, k);
  pred.value = std::max(Rational(k / 2 - 1), Rational(engine_value(ex), k - 1));
  pred.validity = "per-vertex slope; the additive constant is not determined";
  return pred;
}

FormulaPrediction cor_km_odd(int n, int k, int m) {
  const int s = odd_side(k);
  if (m < 3) fail(Errc::bad_range, "clique order must be at least 3");
  if (m >= k) fail(Errc::bad_range, "clique order must be below the path order");
  FormulaPrediction pred = base_pred(TheoremId::cor_km_odd, n, k);
  pred.validity = kAsymptoticNote;
  GraphFamily forbidden =
      n <= Graph::kMaxOrder
          ? GraphFamily::from_graphs("forbidden", {path_graph(k), complete(m)})
          : GraphFamily{};
  if (k >= 2 * m - 1) {
    if (n <= s) fail(Errc::bad_range, "host order too small for the construction");
    Graph core = turan_graph(s, m - 2);
    pred.value = Rational(core.edge_count() + static_cast<std::int64_t>(s) * (n - s));
    if (n <= Graph::kMaxOrder)
      attach_checked(pred, join(core, edgeless(n - s)), forbidden, true);
    else
      pred.validity += "; constructions omitted beyond 64 vertices";
  } else {
    if (n < s + 3) fail(Errc::bad_range, "host order too small for the construction");
    pred.value = Rational(binom2(s) + static_cast<std::int64_t>(s) * (n - s) + 1);
    if (n <= Graph::kMaxOrder)
      attach_checked(pred,
                     join(complete(s), disjoint_union(edgeless(n - s - 2), complete(2))),
                     forbidden, true);
    else
      pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

FormulaPrediction cor_ft(int n, int k, int t, TuranEngine& engine) {
  if (k < 4) fail(Errc::bad_range, "path order must be at least 4");
  if (t < 1) fail(Errc::bad_range, "triangle count must be positive");
  const int f = k / 2;
  if (n < f) fail(Errc::bad_range, "host order too small for the construction");
  GraphFamily deletions =
      GraphFamily::from_graphs("matching-star", {matching_graph(t), star_graph(t)});
  TuranResult ex = engine.compute(f - 1, deletions, Mode::all);
  FormulaPrediction pred = base_pred(TheoremId::cor_ft, n, k);
  pred.value =
      Rational(engine_value(ex) + static_cast<std::int64_t>(f - 1) * (n - f + 1));
  pred.validity = kAsymptoticNote;
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden =
        GraphFamily::from_graphs("forbidden", {path_graph(k), friendship_graph(t)});
    for (const Graph& core : ex.extremal)
      attach_checked(pred, join(core, edgeless(n - f + 1)), forbidden, true);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

FormulaPrediction remark_k222(int n, int k, TuranEngine& engine) {
  const int s = odd_side(k);
  if (n < s + 3) fail(Errc::bad_range, "host order too small for the construction");
  GraphFamily deletions = GraphFamily::from_graphs("deletions", {cycle_graph(4)});
  TuranResult ex = engine.compute(s, deletions, Mode::all);
  FormulaPrediction pred = base_pred(TheoremId::remark_k222, n, k);
  pred.value =
      Rational(engine_value(ex) + static_cast<std::int64_t>(s) * (n - s) + 1);
  pred.validity = kAsymptoticNote;
  if (n <= Graph::kMaxOrder) {
    GraphFamily forbidden = GraphFamily::from_graphs(
        "forbidden", {path_graph(k), complete_multipartite({2, 2, 2})});
    for (const Graph& core : ex.extremal)
      attach_checked(pred,
                     join(core, disjoint_union(edgeless(n - s - 2), complete(2))),
                     forbidden, true);
  } else {
    pred.validity += "; constructions omitted beyond 64 vertices";
  }
  return pred;
}

FormulaPrediction ahs_value(int n, int t) {
  if (t < 1) fail(Errc::bad_range, "matching and star parameter must be positive");
  FormulaPrediction pred = base_pred(TheoremId::ahs, n, 0);
  GraphFamily forbidden =
      GraphFamily::from_graphs("matching-star", {matching_graph(t), star_graph(t)});
  if (t % 2 == 1) {
    if (n < 2 * t) fail(Errc::bad_range, "needs n >= 2t for odd t");
    pred.value = Rational(static_cast<std::int64_t>(t) * t - t);
    pred.validity = "exact for n >= 2t (isolated vertices padded)";
    if (n <= Graph::kMaxOrder) {
      Graph g = disjoint_union(complete(t), complete(t));
      if (n > 2 * t) g = disjoint_union(g, edgeless(n - 2 * t));
      attach_checked(pred, g, forbidden, false);
    }
  } else {
    if (n < 2 * t - 1) fail(Errc::bad_range, "needs n >= 2t-1 for even t");
    pred.value = Rational(static_cast<std::int64_t>(2) * t * t - 3 * t, 2);
    pred.validity =
        "exact for n >= 2t-1; extremal graphs are those on 2t-1 vertices with this "
        "size and maximum degree t-1 (isolated vertices padded)";
    if (t == 2 && n <= Graph::kMaxOrder) {
      Graph g = disjoint_union(matching_graph(1), edgeless(n - 2));
      attach_checked(pred, g, forbidden, false);
    }
  }
  return pred;
}

FormulaPrediction chvatal_hanson(int kk, int t) {
  if (kk < 1 || t < 1) fail(Errc::bad_range, "both parameters must be positive");
  FormulaPrediction pred = base_pred(TheoremId::chvatal_hanson, 0, 0);
  std::int64_t half_up = (t + 1) / 2;
  pred.value = Rational(static_cast<std::int64_t>(kk) * t + (t / 2) * (kk / half_up));
  pred.validity = "independent of n once n is large enough";
  return pred;
}

}  // namespace turanlab
