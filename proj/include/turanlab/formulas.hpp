#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/rational.hpp"
#include "turanlab/turan.hpp"

namespace turanlab {

enum class TheoremId {
  erdos_gallai,
  balister_conn,
  katona_xiao_conn,
  katona_xiao_all,
  even_main,
  odd_main,
  odd_c0,
  asymptotic,
  cor_km_odd,
  cor_ft,
  remark_k222,
  ahs,
  chvatal_hanson,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

struct PredictedConstruction {
  std::string expression;  // construction-grammar text, empty if unrecognised
  Graph graph;
};

// A closed-form prediction.  `value` is the predicted extremal edge count
// (for odd_main the answer is the pair {value, value_alt}).  Constructions
// are attached only when they fit in 64 vertices; each one is built,
// checked free of the relevant forbidden graphs, and achieves `value`.
struct FormulaPrediction {
  TheoremId theorem = TheoremId::erdos_gallai;
  int n = 0;
  int k = 0;
  Rational value;
  std::optional<Rational> value_alt;
  std::string validity;  // when the equality claim applies
  std::vector<PredictedConstruction> constructions;
};

// Edge threshold (k-2)n/2: any n-vertex graph with more edges has a path on
// k vertices.
Rational erdos_gallai_bound(int n, int k);

// Connected-host edge maximum for hosts without a k-vertex path:
// max{C(k-2,2)+(n-k+2), C(ceil(k/2),2)+floor((k-2)/2)(n-ceil(k/2))}, with
// the construction(s) attaining the larger branch.
FormulaPrediction balister_conn_bound(int n, int k);

// Connected hosts without P_k and without K_m:
// (floor(k/2)-1)(n-floor(k/2)+1) + e(T(floor(k/2)-1, m-2)).
FormulaPrediction katona_xiao_conn(int n, int k, int m);

// Same value without the connectivity restriction; valid when 2m-1 < k.
FormulaPrediction katona_xiao_all(int n, int k, int m);

// Even k: connected hosts without P_k and without H (chi(H) > 2) maximise at
// ex(k/2-1, D) + (k/2-1)(n-k/2+1), where D is the colour-class-deletion
// family of H; extremal graphs are T joined to an independent set for every
// T in the (k/2-1)-vertex extremal catalog of D.
FormulaPrediction even_main(int n, int k, const Graph& h, TuranEngine& engine);

// Odd k: the same quantity is ex((k-3)/2, D) + ((k-3)/2)(n-(k-3)/2) + c
// with c either 0 or 1; returns the pair {base, base+1}.
FormulaPrediction odd_main(int n, int k, const Graph& h, TuranEngine& engine);

// Sufficient condition for c = 0 at odd k: every extremal graph for D on
// (k-3)/2 vertices contains a member of the adjacent-pair-deletion family
// of H.
bool odd_c0_condition(int k, const Graph& h, TuranEngine& engine);

// Exact odd-k prediction when the c = 0 condition holds (errors otherwise).
FormulaPrediction odd_c0(int n, int k, const Graph& h, TuranEngine& engine);

struct CResolution {
  std::optional<int> c;  // empty when unresolved
  std::string method;    // "condition", "witness", "probe" or "unresolved"
  std::string note;      // human-readable evidence trail
};

// Decide the odd-k additive constant c for {P_k, H}: the sufficient
// condition first, then the join-plus-one-edge witness at order n_probe,
// then an exhaustive probe at n_probe.  Keeps the evidence used.
CResolution resolve_c(int k, const Graph& h, int n_probe, TuranEngine& engine);

// Per-vertex asymptotic slope of the unrestricted maximum:
// max{floor(k/2)-1, ex(k-1, {H})/(k-1)} as an exact rational.
FormulaPrediction asymptotic_slope(int k, const Graph& h, TuranEngine& engine);

// Specialisation H = K_m at odd k, split on k >= 2m-1 versus m < k < 2m-1.
FormulaPrediction cor_km_odd(int n, int k, int m);

// Specialisation H = F_t (t triangles sharing one vertex), any parity of k.
FormulaPrediction cor_ft(int n, int k, int t, TuranEngine& engine);

// Specialisation H = K_{2,2,2} at odd k, where c = 1.
FormulaPrediction remark_k222(int n, int k, TuranEngine& engine);

// Edge maximum of hosts with no t-edge matching and no t-leaf star:
// t^2 - t for odd t (n >= 2t), t^2 - 3t/2 for even t (n >= 2t-1).
FormulaPrediction ahs_value(int n, int t);

// Edge maximum of hosts with no (kk+1)-edge matching and no (t+1)-leaf
// star: kk*t + floor(t/2)*floor(kk/ceil(t/2)), independent of n.
FormulaPrediction chvatal_hanson(int kk, int t);

}  // namespace turanlab
