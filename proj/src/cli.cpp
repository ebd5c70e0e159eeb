#include "turanlab/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "turanlab/canonical.hpp"
#include "turanlab/coloring.hpp"
#include "turanlab/construct.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/errors.hpp"
#include "turanlab/family.hpp"
#include "turanlab/formulas.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/rational.hpp"
#include "turanlab/structure.hpp"
#include "turanlab/subgraph.hpp"
#include "turanlab/turan.hpp"

namespace turanlab {
namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  bool json = false;
  int threads = 0;
  int max_order = 14;
  std::string cache;
};

ordered_json rational_json(const Rational& r) {
  if (r.is_integer()) return ordered_json(r.num);
  return ordered_json(r.str());
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["graph6"] = to_graph6(g);
  if (auto expr = recognize_construction(g))
    j["expression"] = *expr;
  else
    j["expression"] = nullptr;
  j["order"] = g.order();
  j["edges"] = static_cast<std::int64_t>(g.edge_count());
  return j;
}

std::string graph_line(const Graph& g) {
  std::string line = to_graph6(g);
  if (auto expr = recognize_construction(g)) line += "\t" + *expr;
  return line;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto parse_int = [&](const std::string& piece) {
    try {
      std::size_t used = 0;
      int v = std::stoi(piece, &used);
      if (used != piece.size()) fail(Errc::bad_spec, "bad number in range: " + piece);
      return v;
    } catch (const std::invalid_argument&) {
      fail(Errc::bad_spec, "bad number in range: " + piece);
    } catch (const std::out_of_range&) {
      fail(Errc::bad_spec, "number out of range: " + piece);
    }
  };
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    int v = parse_int(text);
    return {v, v};
  }
  int lo = parse_int(text.substr(0, pos));
  int hi = parse_int(text.substr(pos + 2));
  if (lo > hi) fail(Errc::bad_spec, "empty range " + text);
  return {lo, hi};
}

// One forbidden graph from either an expression or a literal graph6 code.
Graph resolve_h(const std::string& expr, const std::string& g6, std::string* label) {
  if (!expr.empty() && !g6.empty())
    fail(Errc::bad_spec, "give --h or --h-g6, not both");
  if (!expr.empty()) {
    Construction c = parse_construction(expr);
    if (label) *label = to_text(c);
    return build(c);
  }
  if (!g6.empty()) {
    if (label) *label = "g6:" + g6;
    return from_graph6(g6);
  }
  fail(Errc::bad_spec, "a forbidden graph is required: --h <expression> or --h-g6 <code>");
}

EngineOptions engine_options(const GlobalOpts& g) {
  EngineOptions e;
  e.threads = g.threads;
  e.cache_path = g.cache;
  e.max_order = g.max_order;
  return e;
}

// ---------------------------------------------------------------------------
// construct

int cmd_construct(const std::string& expr, const GlobalOpts& g, std::ostream& out) {
  Construction c = parse_construction(expr);
  Graph built = build(c);
  if (!g.json) {
    out << to_graph6(built) << "\n";
    return 0;
  }
  ordered_json j;
  j["command"] = "construct";
  j["expression"] = to_text(c);
  j["graph6"] = to_graph6(built);
  j["order"] = built.order();
  j["edges"] = built.edge_count();
  j["connected"] = built.order() > 0 && is_connected(built);
  if (auto rec = recognize_construction(built))
    j["recognized"] = *rec;
  else
    j["recognized"] = nullptr;
  out << j.dump(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate

int cmd_enumerate(int n, const std::string& forbid, bool connected,
                  const std::string& out_path, const GlobalOpts& g,
                  std::ostream& out, std::ostream& err) {
  GraphFamily family;
  if (!forbid.empty()) family = parse_family(forbid);
  EnumerateOptions opts;
  opts.connected_only = connected;
  opts.threads = g.threads;
  opts.max_order = g.max_order;

  std::vector<std::string> codes;
  std::uint64_t count = enumerate_free(
      n, family, opts, [&](const Graph& gr) { codes.push_back(to_graph6(gr)); });

  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) fail(Errc::invalid_argument, "cannot open output file " + out_path);
    for (const std::string& code : codes) file << code << "\n";
  }
  if (g.json) {
    ordered_json j;
    j["command"] = "enumerate";
    j["n"] = n;
    j["forbid"] = forbid;
    j["connected"] = connected;
    j["count"] = count;
    j["graphs"] = codes;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (out_path.empty()) {
    for (const std::string& code : codes) out << code << "\n";
    err << "count " << count << "\n";
  } else {
    out << "wrote " << count << " graphs to " << out_path << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// turan

int cmd_turan(int n, const std::string& forbid, const std::string& mode_text,
              const GlobalOpts& g, std::ostream& out) {
  GraphFamily family = parse_family(forbid);
  Mode mode = mode_text == "all" ? Mode::all : Mode::connected;
  TuranEngine engine(engine_options(g));
  TuranResult r = engine.compute(n, family, mode);

  if (g.json) {
    ordered_json j;
    j["command"] = "turan";
    j["n"] = n;
    j["mode"] = mode_name(mode);
    j["forbid"] = forbid;
    ordered_json fam = ordered_json::array();
    for (const Graph& m : family.members) fam.push_back(to_graph6(m));
    j["family_graph6"] = fam;
    j["value"] = r.value ? ordered_json(*r.value) : ordered_json(nullptr);
    ordered_json ext = ordered_json::array();
    for (const Graph& e : r.extremal) ext.push_back(graph_json(e));
    j["extremal"] = ext;
    j["exhaustive"] = r.exhaustive;
    j["engine_version"] = r.engine_version;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "turan n=" << n << " mode=" << mode_name(mode) << " forbid=" << forbid << "\n";
  if (r.value)
    out << "value " << *r.value << "\n";
  else
    out << "value none (no qualifying host)\n";
  out << "extremal " << r.extremal.size() << "\n";
  for (const Graph& e : r.extremal) out << graph_line(e) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// derive-family

int cmd_derive_family(const std::string& h_expr, const std::string& h_g6,
                      const std::string& kind, const GlobalOpts& g, std::ostream& out) {
  std::string label;
  Graph h = resolve_h(h_expr, h_g6, &label);
  GraphFamily fam =
      kind == "class" ? color_class_deletions(h) : adjacent_pair_deletions(h);
  if (g.json) {
    ordered_json j;
    j["command"] = "derive-family";
    j["h"] = label;
    j["kind"] = kind;
    ordered_json members = ordered_json::array();
    for (const Graph& m : fam.members) members.push_back(graph_json(m));
    j["members"] = members;
    out << j.dump(2) << "\n";
    return 0;
  }
  for (const Graph& m : fam.members) out << to_graph6(m) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// predict / verify share a theorem dispatch

struct TheoremFlags {
  std::string theorem;
  int n = 0, k = 0, m = 0, t = 0, kk = 0;
  bool has_n = false, has_k = false, has_m = false, has_t = false, has_kk = false;
  std::string h_expr, h_g6;
  std::string n_range;
  bool require_equal = false;
};

struct Dispatch {
  TheoremId id{};
  Mode mode = Mode::all;
  GraphFamily forbidden;                          // family behind the statement
  std::function<FormulaPrediction(int)> predict;  // n -> prediction
  bool upper_bound_only = false;                  // bound for every host, not exact
  bool exact_when_defined = false;                // equality demanded wherever defined
  std::string quantity = "edges";                 // "slope": rows compare differences
  Rational slope{0};
  int k = 0;  // window length k-1 for fractional slopes
  ordered_json params = ordered_json::object();
  bool needs_n = true;
};

void need(bool present, const std::string& flag, const std::string& theorem) {
  if (!present) fail(Errc::bad_spec, "theorem " + theorem + " needs " + flag);
}

std::string pk_label(int k) { return "P" + std::to_string(k); }

Dispatch make_dispatch(const TheoremFlags& f, TuranEngine& engine) {
  std::optional<TheoremId> id = theorem_from_name(f.theorem);
  if (!id)
    fail(Errc::bad_spec, "unknown theorem " + f.theorem +
                             " (run 'predict --help' for the list)");
  Dispatch d;
  d.id = *id;
  d.k = f.k;
  switch (*id) {
    case TheoremId::erdos_gallai: {
      need(f.has_k, "--k", f.theorem);
      int k = f.k;
      d.mode = Mode::all;
      d.forbidden = GraphFamily::from_graphs(pk_label(k), {path_graph(k)});
      d.upper_bound_only = true;
      d.params["k"] = k;
      d.predict = [k](int n) {
        FormulaPrediction p;
        p.theorem = TheoremId::erdos_gallai;
        p.n = n;
        p.k = k;
        p.value = erdos_gallai_bound(n, k);
        p.validity = "upper bound for every host; tight exactly when the host "
                     "splits into cliques of order k-1";
        return p;
      };
      break;
    }
    case TheoremId::balister_conn: {
      need(f.has_k, "--k", f.theorem);
      int k = f.k;
      d.mode = Mode::connected;
      d.forbidden = GraphFamily::from_graphs(pk_label(k), {path_graph(k)});
      d.exact_when_defined = true;
      d.params["k"] = k;
      d.predict = [k](int n) { return balister_conn_bound(n, k); };
      break;
    }
    case TheoremId::katona_xiao_conn:
    case TheoremId::katona_xiao_all: {
      need(f.has_k, "--k", f.theorem);
      need(f.has_m, "--m", f.theorem);
      int k = f.k, m = f.m;
      bool conn = *id == TheoremId::katona_xiao_conn;
      d.mode = conn ? Mode::connected : Mode::all;
      d.forbidden = GraphFamily::from_graphs(
          pk_label(k) + ",K" + std::to_string(m), {path_graph(k), complete(m)});
      d.params["k"] = k;
      d.params["m"] = m;
      if (conn)
        d.predict = [k, m](int n) { return katona_xiao_conn(n, k, m); };
      else
        d.predict = [k, m](int n) { return katona_xiao_all(n, k, m); };
      break;
    }
    case TheoremId::even_main:
    case TheoremId::odd_main:
    case TheoremId::odd_c0: {
      need(f.has_k, "--k", f.theorem);
      std::string h_label;
      Graph h = resolve_h(f.h_expr, f.h_g6, &h_label);
      int k = f.k;
      d.mode = Mode::connected;
      d.forbidden = GraphFamily::from_graphs(pk_label(k) + "," + h_label,
                                             {path_graph(k), h});
      d.params["k"] = k;
      d.params["h"] = h_label;
      TheoremId which = *id;
      d.predict = [k, h, which, &engine](int n) {
        switch (which) {
          case TheoremId::even_main: return even_main(n, k, h, engine);
          case TheoremId::odd_main: return odd_main(n, k, h, engine);
          default: return odd_c0(n, k, h, engine);
        }
      };
      break;
    }
    case TheoremId::asymptotic: {
      need(f.has_k, "--k", f.theorem);
      std::string h_label;
      Graph h = resolve_h(f.h_expr, f.h_g6, &h_label);
      int k = f.k;
      d.mode = Mode::all;
      d.forbidden = GraphFamily::from_graphs(pk_label(k) + "," + h_label,
                                             {path_graph(k), h});
      d.params["k"] = k;
      d.params["h"] = h_label;
      FormulaPrediction base = asymptotic_slope(k, h, engine);
      d.quantity = "slope";
      d.slope = base.value;
      d.needs_n = false;
      d.predict = [base](int n) {
        FormulaPrediction p = base;
        p.n = n;
        return p;
      };
      break;
    }
    case TheoremId::cor_km_odd: {
      need(f.has_k, "--k", f.theorem);
      need(f.has_m, "--m", f.theorem);
      int k = f.k, m = f.m;
      d.mode = Mode::connected;
      d.forbidden = GraphFamily::from_graphs(
          pk_label(k) + ",K" + std::to_string(m), {path_graph(k), complete(m)});
      d.params["k"] = k;
      d.params["m"] = m;
      d.predict = [k, m](int n) { return cor_km_odd(n, k, m); };
      break;
    }
    case TheoremId::cor_ft: {
      need(f.has_k, "--k", f.theorem);
      need(f.has_t, "--t", f.theorem);
      int k = f.k, t = f.t;
      d.mode = Mode::connected;
      d.forbidden = GraphFamily::from_graphs(
          pk_label(k) + ",F" + std::to_string(t), {path_graph(k), friendship_graph(t)});
      d.params["k"] = k;
      d.params["t"] = t;
      d.predict = [k, t, &engine](int n) { return cor_ft(n, k, t, engine); };
      break;
    }
    case TheoremId::remark_k222: {
      need(f.has_k, "--k", f.theorem);
      int k = f.k;
      d.mode = Mode::connected;
      d.forbidden = GraphFamily::from_graphs(
          pk_label(k) + ",KP(2,2,2)", {path_graph(k), complete_multipartite({2, 2, 2})});
      d.params["k"] = k;
      d.predict = [k, &engine](int n) { return remark_k222(n, k, engine); };
      break;
    }
    case TheoremId::ahs: {
      need(f.has_t, "--t", f.theorem);
      int t = f.t;
      d.mode = Mode::all;
      d.forbidden = GraphFamily::from_graphs(
          "M" + std::to_string(t) + ",S" + std::to_string(t),
          {matching_graph(t), star_graph(t)});
      d.params["t"] = t;
      d.predict = [t](int n) { return ahs_value(n, t); };
      break;
    }
    case TheoremId::chvatal_hanson: {
      need(f.has_kk, "--kk", f.theorem);
      need(f.has_t, "--t", f.theorem);
      int kk = f.kk, t = f.t;
      d.mode = Mode::all;
      d.forbidden = GraphFamily::from_graphs(
          "M" + std::to_string(kk + 1) + ",S" + std::to_string(t + 1),
          {matching_graph(kk + 1), star_graph(t + 1)});
      d.params["kk"] = kk;
      d.params["t"] = t;
      d.needs_n = false;
      d.predict = [kk, t](int n) {
        FormulaPrediction p = chvatal_hanson(kk, t);
        p.n = n;
        return p;
      };
      break;
    }
  }
  return d;
}

ordered_json forbidden_json(const GraphFamily& fam) {
  ordered_json arr = ordered_json::array();
  for (const Graph& m : fam.members) arr.push_back(to_graph6(m));
  return arr;
}

int cmd_predict(const TheoremFlags& f, const GlobalOpts& g, std::ostream& out) {
  TuranEngine engine(engine_options(g));
  Dispatch d = make_dispatch(f, engine);
  if (d.needs_n) need(f.has_n, "--n", f.theorem);
  FormulaPrediction p = d.predict(f.has_n ? f.n : 0);

  ordered_json j;
  j["command"] = "predict";
  j["theorem"] = theorem_name(d.id);
  ordered_json params = ordered_json::object();
  if (f.has_n) params["n"] = f.n;
  params.update(d.params);
  j["params"] = params;
  j["mode"] = mode_name(d.mode);
  j["forbidden_graph6"] = forbidden_json(d.forbidden);
  j["value"] = rational_json(p.value);
  j["value_alt"] = p.value_alt ? rational_json(*p.value_alt) : ordered_json(nullptr);
  j["validity"] = p.validity;
  ordered_json cs = ordered_json::array();
  for (const PredictedConstruction& c : p.constructions) {
    ordered_json cj;
    cj["expression"] =
        c.expression.empty() ? ordered_json(nullptr) : ordered_json(c.expression);
    cj["graph6"] = to_graph6(c.graph);
    cj["order"] = c.graph.order();
    cj["edges"] = static_cast<std::int64_t>(c.graph.edge_count());
    cs.push_back(cj);
  }
  j["constructions"] = cs;
  out << j.dump(2) << "\n";
  return 0;
}

struct VerifyRow {
  int n = 0;
  std::optional<Rational> predicted;
  std::optional<Rational> predicted_alt;
  std::optional<std::int64_t> brute;
  std::string match;
  std::string note;
  bool affirmative = false;
  bool evaluated = false;
  bool hard_failure = false;
};

std::string predicted_text(const VerifyRow& row) {
  if (!row.predicted) return "-";
  std::string s = row.predicted->str();
  if (row.predicted_alt) s += " or " + row.predicted_alt->str();
  return s;
}

int cmd_verify(const TheoremFlags& f, const GlobalOpts& g, std::ostream& out) {
  if (f.n_range.empty()) fail(Errc::bad_spec, "verify needs --n-range a..b");
  auto [lo, hi] = parse_range(f.n_range);
  TuranEngine engine(engine_options(g));
  Dispatch d = make_dispatch(f, engine);

  std::vector<VerifyRow> rows;
  if (d.quantity == "slope") {
    if (lo < 1) fail(Errc::bad_spec, "slope verification needs --n-range starting at 1");
    // Edge-count differences against the predicted per-vertex slope.  For a
    // fractional slope the per-n difference alternates, so the row instead
    // checks the trailing window of k-1 differences against slope*(k-1).
    std::map<int, std::optional<std::int64_t>> value_at;
    for (int n = lo - 1; n <= hi; ++n) {
      TuranResult r = engine.compute(n, d.forbidden, d.mode);
      value_at[n] = r.value ? std::optional<std::int64_t>(*r.value) : std::nullopt;
    }
    int window = d.k - 1;
    for (int n = lo; n <= hi; ++n) {
      VerifyRow row;
      row.n = n;
      row.predicted = d.slope;
      if (!value_at[n - 1] || !value_at[n]) {
        row.match = "no qualifying host";
        rows.push_back(row);
        continue;
      }
      row.brute = *value_at[n] - *value_at[n - 1];
      row.evaluated = true;
      if (d.slope.is_integer()) {
        row.affirmative = Rational(*row.brute) == d.slope;
        row.match = row.affirmative ? "yes" : "no";
      } else {
        bool have_window = n - window >= lo - 1;
        std::int64_t sum = 0;
        for (int i = 0; have_window && i < window; ++i) {
          if (!value_at[n - i] || !value_at[n - i - 1]) have_window = false;
          else sum += *value_at[n - i] - *value_at[n - i - 1];
        }
        if (!have_window) {
          row.match = "window pending";
          row.evaluated = false;
        } else {
          row.affirmative = Rational(sum) == d.slope * Rational(window);
          row.match = row.affirmative ? "yes" : "no";
          row.note = "window sum " + std::to_string(sum) + " over " +
                     std::to_string(window) + " steps";
        }
      }
      rows.push_back(row);
    }
  } else {
    for (int n = lo; n <= hi; ++n) {
      VerifyRow row;
      row.n = n;
      std::optional<FormulaPrediction> p;
      try {
        p = d.predict(n);
      } catch (const TuranError& e) {
        if (e.code() == Errc::bad_range) {
          row.match = "pre-threshold";
          row.note = e.what();
          rows.push_back(row);
          continue;
        }
        throw;
      }
      row.predicted = p->value;
      row.predicted_alt = p->value_alt;
      TuranResult r = engine.compute(n, d.forbidden, d.mode);
      if (!r.value) {
        row.match = "no qualifying host";
        rows.push_back(row);
        continue;
      }
      row.brute = *r.value;
      row.evaluated = true;
      Rational bv(*r.value);
      if (d.upper_bound_only) {
        if (p->value < bv) {
          row.match = "BOUND VIOLATED";
          row.hard_failure = true;
        } else if (bv == p->value) {
          row.match = "tight";
          row.affirmative = true;
        } else {
          row.match = "bound holds";
        }
      } else {
        bool eq = bv == p->value || (p->value_alt && bv == *p->value_alt);
        row.affirmative = eq;
        if (eq)
          row.match = "yes";
        else if (d.exact_when_defined) {
          row.match = "MISMATCH";
          row.hard_failure = true;
        } else
          row.match = "no";
      }
      rows.push_back(row);
    }
  }

  std::optional<int> first_stable;
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->affirmative)
      first_stable = it->n;
    else
      break;
  }
  bool hard = std::any_of(rows.begin(), rows.end(),
                          [](const VerifyRow& r) { return r.hard_failure; });
  bool all_affirmative = std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) {
    return !r.evaluated || r.affirmative;
  });
  int rc = hard ? 1 : (f.require_equal && !all_affirmative ? 1 : 0);

  if (g.json) {
    ordered_json j;
    j["command"] = "verify";
    j["theorem"] = theorem_name(d.id);
    ordered_json params = ordered_json::object();
    params["n_range"] = f.n_range;
    params.update(d.params);
    j["params"] = params;
    j["mode"] = mode_name(d.mode);
    j["forbidden_graph6"] = forbidden_json(d.forbidden);
    j["quantity"] = d.quantity;
    ordered_json jrows = ordered_json::array();
    for (const VerifyRow& row : rows) {
      ordered_json rj;
      rj["n"] = row.n;
      rj["predicted"] = row.predicted ? rational_json(*row.predicted) : ordered_json(nullptr);
      rj["predicted_alt"] =
          row.predicted_alt ? rational_json(*row.predicted_alt) : ordered_json(nullptr);
      rj["brute"] = row.brute ? ordered_json(*row.brute) : ordered_json(nullptr);
      rj["match"] = row.match;
      rj["note"] = row.note;
      jrows.push_back(rj);
    }
    j["rows"] = jrows;
    j["first_stable_n"] = first_stable ? ordered_json(*first_stable) : ordered_json(nullptr);
    j["ok"] = rc == 0;
    out << j.dump(2) << "\n";
    return rc;
  }

  out << "verify theorem=" << theorem_name(d.id);
  for (auto& [key, val] : d.params.items()) {
    out << " " << key << "=";
    if (val.is_string())
      out << val.get<std::string>();
    else
      out << val.dump();
  }
  out << " mode=" << mode_name(d.mode) << " quantity=" << d.quantity << "\n";
  out << std::left << std::setw(5) << "n" << std::setw(14) << "predicted"
      << std::setw(8) << "brute" << std::setw(18) << "match" << "note" << "\n";
  for (const VerifyRow& row : rows) {
    out << std::left << std::setw(5) << row.n << std::setw(14) << predicted_text(row)
        << std::setw(8) << (row.brute ? std::to_string(*row.brute) : "-")
        << std::setw(18) << row.match << row.note << "\n";
  }
  if (first_stable)
    out << "first stable n: " << *first_stable << "\n";
  else
    out << "first stable n: none in tested range\n";
  return rc;
}

// ---------------------------------------------------------------------------
// audit-lemmas

int cmd_audit(int k, int n_max, const GlobalOpts& g, std::ostream& out) {
  AuditReport rep = audit_lemmas(k, n_max, g.threads);
  int rc = rep.clean() ? 0 : 1;
  if (g.json) {
    ordered_json j;
    j["command"] = "audit-lemmas";
    j["k"] = rep.k;
    j["n_max"] = rep.n_max;
    j["graphs_checked"] = rep.graphs_checked;
    j["paths_checked"] = rep.paths_checked;
    j["lemma1_checks"] = rep.lemma1_checks;
    j["lemma2_checks"] = rep.lemma2_checks;
    j["lemma3_checks"] = rep.lemma3_checks;
    j["violations"] = rep.violations;
    j["clean"] = rep.clean();
    out << j.dump(2) << "\n";
    return rc;
  }
  out << "audit k=" << rep.k << " n<=" << rep.n_max << "\n";
  out << "graphs checked  " << rep.graphs_checked << "\n";
  out << "paths checked   " << rep.paths_checked << "\n";
  out << "lemma1 checks   " << rep.lemma1_checks << "\n";
  out << "lemma2 checks   " << rep.lemma2_checks << "\n";
  out << "lemma3 checks   " << rep.lemma3_checks << "\n";
  if (rep.violations.empty()) {
    out << "no violations\n";
  } else {
    out << rep.violations.size() << " violations\n";
    for (const std::string& v : rep.violations) out << "violation: " << v << "\n";
  }
  return rc;
}

// ---------------------------------------------------------------------------
// selfcheck

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.has_edge(u, v)) out.add_edge(perm[u], perm[v]);
  return out;
}

double random_density(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(0.1, 0.9);
  return d(rng);
}

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string note;
};

CheckResult check_relabel_invariance(std::mt19937_64& rng, int trials) {
  CheckResult res{"canonical relabel invariance"};
  std::uniform_int_distribution<int> order(1, 10);
  for (int i = 0; i < trials; ++i) {
    int n = order(rng);
    Graph g = random_graph(rng, n, random_density(rng));
    Graph h = apply_permutation(g, random_permutation(rng, n));
    if (canonical_form(g).code != canonical_form(h).code) {
      res.pass = false;
      res.note = "codes differ for " + to_graph6(g);
      return res;
    }
  }
  return res;
}

CheckResult check_graph6_roundtrip(std::mt19937_64& rng, int trials) {
  CheckResult res{"graph6 round trip"};
  std::uniform_int_distribution<int> order(0, 12);
  auto try_one = [&](const Graph& g) {
    if (!(from_graph6(to_graph6(g)) == g)) {
      res.pass = false;
      res.note = "round trip broke for an order-" + std::to_string(g.order()) + " graph";
      return false;
    }
    return true;
  };
  for (int i = 0; i < trials; ++i)
    if (!try_one(random_graph(rng, order(rng), random_density(rng)))) return res;
  // long-form headers
  if (!try_one(random_graph(rng, 63, 0.2))) return res;
  if (!try_one(random_graph(rng, 64, 0.2))) return res;
  return res;
}

CheckResult check_join_union_arithmetic(std::mt19937_64& rng, int trials) {
  CheckResult res{"join and union edge arithmetic"};
  std::uniform_int_distribution<int> order(1, 6);
  for (int i = 0; i < trials; ++i) {
    Graph a = random_graph(rng, order(rng), random_density(rng));
    Graph b = random_graph(rng, order(rng), random_density(rng));
    Graph j = join(a, b);
    Graph u = disjoint_union(a, b);
    int want_join = a.edge_count() + b.edge_count() + a.order() * b.order();
    if (j.edge_count() != want_join || !is_connected(j)) {
      res.pass = false;
      res.note = "join identity failed";
      return res;
    }
    if (u.edge_count() != a.edge_count() + b.edge_count()) {
      res.pass = false;
      res.note = "union identity failed";
      return res;
    }
  }
  return res;
}

CheckResult check_turan_graph_edges() {
  CheckResult res{"balanced multipartite edge counts"};
  for (int n = 0; n <= 10; ++n) {
    for (int r = 1; r <= 6; ++r) {
      Graph t = turan_graph(n, r);
      // direct pairwise product over the balanced part sizes
      std::vector<int> sizes(static_cast<std::size_t>(std::min(n, r)), 0);
      for (int i = 0; i < n; ++i) sizes[static_cast<std::size_t>(i % std::max(1, std::min(n, r)))]++;
      int want = 0;
      for (std::size_t i = 0; i < sizes.size(); ++i)
        for (std::size_t j = i + 1; j < sizes.size(); ++j)
          want += sizes[i] * sizes[j];
      if (t.edge_count() != want) {
        res.pass = false;
        res.note = "T(" + std::to_string(n) + "," + std::to_string(r) + ") edge count";
        return res;
      }
      if (r >= n && !(isomorphic(t, complete(n)))) {
        res.pass = false;
        res.note = "T(n,r) with r>=n is not complete";
        return res;
      }
    }
  }
  return res;
}

CheckResult check_containment(std::mt19937_64& rng, int trials) {
  CheckResult res{"subgraph containment on derived patterns"};
  std::uniform_int_distribution<int> order(1, 7);
  for (int i = 0; i < trials; ++i) {
    int n = order(rng);
    Graph host = random_graph(rng, n, random_density(rng));
    // pattern: random induced subgraph with random edge deletions
    std::uniform_int_distribution<int> pick(1, n);
    int pn = pick(rng);
    std::vector<int> perm = random_permutation(rng, n);
    std::uint64_t keep = 0;
    for (int j = 0; j < pn; ++j) keep |= 1ULL << perm[static_cast<std::size_t>(j)];
    Graph pattern = host.induced(keep);
    std::bernoulli_distribution drop(0.3);
    for (int u = 0; u < pattern.order(); ++u)
      for (int v = u + 1; v < pattern.order(); ++v)
        if (pattern.has_edge(u, v) && drop(rng)) pattern.remove_edge(u, v);
    if (!contains_subgraph(host, pattern)) {
      res.pass = false;
      res.note = "derived pattern not found in its own host " + to_graph6(host);
      return res;
    }
    if (contains_subgraph(pattern, complete(n + 1))) {
      res.pass = false;
      res.note = "found a clique larger than the host";
      return res;
    }
  }
  return res;
}

CheckResult check_path_consistency(std::mt19937_64& rng, int trials) {
  CheckResult res{"longest path consistency"};
  std::uniform_int_distribution<int> order(1, 10);
  for (int i = 0; i < trials; ++i) {
    Graph g = random_graph(rng, order(rng), random_density(rng));
    PathSearch p = longest_path(g);
    if (p.order < 1 || p.order > g.order() ||
        static_cast<int>(p.witness.size()) != p.order) {
      res.pass = false;
      res.note = "witness size mismatch on " + to_graph6(g);
      return res;
    }
    std::uint64_t seen = 0;
    bool ok = true;
    for (std::size_t j = 0; j < p.witness.size(); ++j) {
      int v = p.witness[j];
      if (v < 0 || v >= g.order() || ((seen >> v) & 1ULL)) ok = false;
      seen |= 1ULL << v;
      if (j > 0 && !g.has_edge(p.witness[j - 1], v)) ok = false;
    }
    if (!ok) {
      res.pass = false;
      res.note = "witness is not a path on " + to_graph6(g);
      return res;
    }
    if (!has_path(g, p.order) || has_path(g, p.order + 1)) {
      res.pass = false;
      res.note = "has_path disagrees with longest_path on " + to_graph6(g);
      return res;
    }
  }
  return res;
}

CheckResult check_thread_independence() {
  CheckResult res{"thread count independence"};
  GraphFamily fam = parse_family("P4");
  auto collect = [&](int threads) {
    EnumerateOptions opts;
    opts.threads = threads;
    std::vector<std::string> codes;
    enumerate_free(6, fam, opts, [&](const Graph& g) { codes.push_back(to_graph6(g)); });
    return codes;
  };
  if (collect(1) != collect(3)) {
    res.pass = false;
    res.note = "enumeration order or content depends on thread count";
    return res;
  }
  GraphFamily fam2 = parse_family("P5");
  auto answer = [&](int threads) {
    EngineOptions opts;
    opts.threads = threads;
    TuranEngine engine(opts);
    TuranResult r = engine.compute(6, fam2, Mode::connected);
    std::vector<std::string> codes;
    for (const Graph& g : r.extremal) codes.push_back(to_graph6(g));
    return std::make_pair(r.value, codes);
  };
  if (answer(1) != answer(3)) {
    res.pass = false;
    res.note = "engine answer depends on thread count";
  }
  return res;
}

CheckResult check_expression_recognition() {
  CheckResult res{"construction recognition round trip"};
  const char* exprs[] = {"K4",          "I6",    "P5",          "C4",
                         "S3",          "M3",    "F2",          "T(5,2)",
                         "KP(2,2,2)",   "K1",    "union(K3,K3)", "join(I2,I7)",
                         "join(K2,union(I5,K2))"};
  for (const char* e : exprs) {
    Graph g = build(parse_construction(e));
    auto rec = recognize_construction(g);
    if (!rec) {
      res.pass = false;
      res.note = std::string("no expression found for ") + e;
      return res;
    }
    if (!isomorphic(build(parse_construction(*rec)), g)) {
      res.pass = false;
      res.note = std::string("recognized expression disagrees for ") + e;
      return res;
    }
  }
  return res;
}

CheckResult check_degree_sum(std::mt19937_64& rng, int trials) {
  CheckResult res{"degree sum equals twice the edges"};
  std::uniform_int_distribution<int> order(0, 12);
  for (int i = 0; i < trials; ++i) {
    Graph g = random_graph(rng, order(rng), random_density(rng));
    int sum = 0;
    for (int v = 0; v < g.order(); ++v) sum += g.degree(v);
    if (sum != 2 * g.edge_count()) {
      res.pass = false;
      res.note = "handshake identity failed on " + to_graph6(g);
      return res;
    }
  }
  return res;
}

int cmd_selfcheck(std::uint64_t seed, int trials, const GlobalOpts& g,
                  std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::vector<CheckResult> results;
  results.push_back(check_relabel_invariance(rng, trials));
  results.push_back(check_graph6_roundtrip(rng, trials));
  results.push_back(check_join_union_arithmetic(rng, trials));
  results.push_back(check_turan_graph_edges());
  results.push_back(check_containment(rng, trials));
  results.push_back(check_path_consistency(rng, trials));
  results.push_back(check_expression_recognition());
  results.push_back(check_degree_sum(rng, trials));
  results.push_back(check_thread_independence());

  int failed = 0;
  for (const CheckResult& r : results)
    if (!r.pass) ++failed;

  if (g.json) {
    ordered_json j;
    j["command"] = "selfcheck";
    j["seed"] = seed;
    j["trials"] = trials;
    ordered_json checks = ordered_json::array();
    for (const CheckResult& r : results) {
      ordered_json cj;
      cj["name"] = r.name;
      cj["pass"] = r.pass;
      cj["note"] = r.note;
      checks.push_back(cj);
    }
    j["checks"] = checks;
    j["passed"] = failed == 0;
    out << j.dump(2) << "\n";
    return failed == 0 ? 0 : 1;
  }
  for (const CheckResult& r : results) {
    out << "[selfcheck] " << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.note.empty()) out << ": " << r.note;
    out << "\n";
  }
  out << "selfcheck " << (results.size() - static_cast<std::size_t>(failed)) << "/"
      << results.size() << " passed, seed " << seed << "\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact edge-maximisation laboratory for small forbidden-subgraph families"};
  app.name("turanlab");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kEngineVersion));

  GlobalOpts gopts;
  if (const char* env_cache = std::getenv("TURANLAB_CACHE")) gopts.cache = env_cache;
  app.add_flag("--json", gopts.json, "machine-readable JSON output");
  app.add_option("--threads", gopts.threads,
                 "worker threads for searches (0 = hardware default)");
  app.add_option("--max-order", gopts.max_order,
                 "largest host order the exhaustive search will attempt")
      ->capture_default_str();
  app.add_option("--cache", gopts.cache,
                 "result cache file (default: $TURANLAB_CACHE; empty disables)");

  int exit_code = 0;

  // construct
  std::string construct_expr;
  CLI::App* c_construct =
      app.add_subcommand("construct", "build a graph from a construction expression "
                                      "and print its graph6 code");
  c_construct->fallthrough();
  c_construct->add_option("--expr", construct_expr,
                          "expression, e.g. \"join(K2,union(I5,K2))\"")
      ->required();
  c_construct->callback(
      [&]() { exit_code = cmd_construct(construct_expr, gopts, out); });

  // enumerate
  int enum_n = 0;
  std::string enum_forbid, enum_out;
  bool enum_connected = false;
  CLI::App* c_enum = app.add_subcommand(
      "enumerate", "list all graphs of a given order avoiding a forbidden family, "
                   "one per isomorphism class, as graph6 lines");
  c_enum->fallthrough();
  c_enum->add_option("--n", enum_n, "host order")->required();
  c_enum->add_option("--forbid", enum_forbid,
                     "comma-separated forbidden constructions, e.g. \"P6,K4\"");
  c_enum->add_flag("--connected", enum_connected, "keep connected graphs only");
  c_enum->add_option("--out", enum_out, "write graph6 lines to this file");
  c_enum->callback([&]() {
    exit_code = cmd_enumerate(enum_n, enum_forbid, enum_connected, enum_out, gopts,
                              out, err);
  });

  // turan
  int turan_n = 0;
  std::string turan_forbid, turan_mode = "all";
  CLI::App* c_turan = app.add_subcommand(
      "turan", "maximum edge count over hosts avoiding a forbidden family, "
               "with the extremal catalog");
  c_turan->fallthrough();
  c_turan->add_option("--n", turan_n, "host order")->required();
  c_turan->add_option("--forbid", turan_forbid, "forbidden constructions")->required();
  c_turan->add_option("--mode", turan_mode, "host class: all or connected")
      ->check(CLI::IsMember({"all", "connected"}))
      ->capture_default_str();
  c_turan->callback(
      [&]() { exit_code = cmd_turan(turan_n, turan_forbid, turan_mode, gopts, out); });

  // derive-family
  std::string derive_h, derive_h_g6, derive_kind;
  CLI::App* c_derive = app.add_subcommand(
      "derive-family", "families derived from one forbidden graph: colour-class "
                       "deletions or adjacent-pair deletions, as graph6 lines");
  c_derive->fallthrough();
  c_derive->add_option("--h", derive_h, "construction expression for the graph");
  c_derive->add_option("--h-g6", derive_h_g6, "graph6 code for the graph");
  c_derive->add_option("--kind", derive_kind, "class or pair")
      ->check(CLI::IsMember({"class", "pair"}))
      ->required();
  c_derive->callback([&]() {
    exit_code = cmd_derive_family(derive_h, derive_h_g6, derive_kind, gopts, out);
  });

  // predict / verify
  TheoremFlags pf, vf;
  CLI::App* c_predict = app.add_subcommand(
      "predict", "evaluate a closed-form edge-count prediction with its "
                 "extremal constructions (JSON)");
  c_predict->fallthrough();
  CLI::Option* p_n = c_predict->add_option("--n", pf.n, "host order");
  c_predict->add_option("--theorem", pf.theorem,
                        "one of: erdos_gallai balister_conn katona_xiao_conn "
                        "katona_xiao_all even_main odd_main odd_c0 asymptotic "
                        "cor_km_odd cor_ft remark_k222 ahs chvatal_hanson")
      ->required();
  CLI::Option* p_k = c_predict->add_option("--k", pf.k, "forbidden path order");
  CLI::Option* p_m = c_predict->add_option("--m", pf.m, "forbidden clique order");
  CLI::Option* p_t = c_predict->add_option("--t", pf.t, "parameter t (friendship, matching, star)");
  CLI::Option* p_kk = c_predict->add_option("--kk", pf.kk, "matching bound parameter");
  c_predict->add_option("--h", pf.h_expr, "second forbidden graph as an expression");
  c_predict->add_option("--h-g6", pf.h_g6, "second forbidden graph as graph6");
  c_predict->callback([&]() {
    pf.has_n = p_n->count() > 0;
    pf.has_k = p_k->count() > 0;
    pf.has_m = p_m->count() > 0;
    pf.has_t = p_t->count() > 0;
    pf.has_kk = p_kk->count() > 0;
    exit_code = cmd_predict(pf, gopts, out);
  });

  CLI::App* c_verify = app.add_subcommand(
      "verify", "compare a prediction against the exhaustive engine over a range "
                "of host orders");
  c_verify->fallthrough();
  c_verify->add_option("--theorem", vf.theorem, "theorem id (see predict --help)")
      ->required();
  c_verify->add_option("--n-range", vf.n_range, "host orders, e.g. 6..10")->required();
  CLI::Option* v_k = c_verify->add_option("--k", vf.k, "forbidden path order");
  CLI::Option* v_m = c_verify->add_option("--m", vf.m, "forbidden clique order");
  CLI::Option* v_t = c_verify->add_option("--t", vf.t, "parameter t (friendship, matching, star)");
  CLI::Option* v_kk = c_verify->add_option("--kk", vf.kk, "matching bound parameter");
  c_verify->add_option("--h", vf.h_expr, "second forbidden graph as an expression");
  c_verify->add_option("--h-g6", vf.h_g6, "second forbidden graph as graph6");
  c_verify->add_flag("--require-equal", vf.require_equal,
                     "exit 1 unless every evaluated row matches");
  c_verify->callback([&]() {
    vf.has_k = v_k->count() > 0;
    vf.has_m = v_m->count() > 0;
    vf.has_t = v_t->count() > 0;
    vf.has_kk = v_kk->count() > 0;
    exit_code = cmd_verify(vf, gopts, out);
  });

  // audit-lemmas
  int audit_k = 0, audit_n_max = 0;
  CLI::App* c_audit = app.add_subcommand(
      "audit-lemmas", "exhaustively check the path decomposition bounds on all "
                      "connected hosts without a k-path");
  c_audit->fallthrough();
  c_audit->add_option("--k", audit_k, "forbidden path order")->required();
  c_audit->add_option("--n-max", audit_n_max, "largest host order")->required();
  c_audit->callback([&]() { exit_code = cmd_audit(audit_k, audit_n_max, gopts, out); });

  // selfcheck
  std::uint64_t seed = 0;
  int trials = 200;
  CLI::App* c_self = app.add_subcommand(
      "selfcheck", "randomized consistency audit across the library");
  c_self->fallthrough();
  c_self->add_option("--seed", seed, "random seed")->capture_default_str();
  c_self->add_option("--trials", trials, "trials per randomized check")
      ->capture_default_str();
  c_self->callback([&]() { exit_code = cmd_selfcheck(seed, trials, gopts, out); });

  auto active_help = [&]() -> std::string {
    const CLI::App* a = &app;
    while (!a->get_subcommands().empty()) a = a->get_subcommands().front();
    return a->help();
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << active_help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << active_help();
    return 2;
  } catch (const TuranError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  return exit_code;
}

}  // namespace turanlab
