#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "turanlab/graph.hpp"

namespace turanlab {

// Expression tree for the construction grammar:
//
//   expr := atom | join(expr,expr) | union(expr,expr)
//   atom := K<n> | I<n> | P<n> | C<n> | S<t> | M<t> | F<t>
//         | T(<n>,<r>) | KP(<n1>,...,<nk>)
//
// K complete, I edgeless, P path, C cycle, S star with t leaves, M matching
// with t edges, F friendship (t triangles on a shared vertex), T balanced
// complete multipartite, KP complete multipartite with explicit part sizes.
struct ConstructionSpec {
  enum class Kind { atom_k, atom_i, atom_p, atom_c, atom_s, atom_m, atom_f, atom_t, atom_kp, join, disjoint_union };

  Kind kind;
  std::vector<int> params;                          // atom parameters
  std::vector<std::shared_ptr<ConstructionSpec>> args;  // operator operands

  static std::shared_ptr<ConstructionSpec> atom(Kind k, std::vector<int> params);
  static std::shared_ptr<ConstructionSpec> op(Kind k,
                                              std::shared_ptr<ConstructionSpec> a,
                                              std::shared_ptr<ConstructionSpec> b);
};

using Construction = std::shared_ptr<ConstructionSpec>;

// Whitespace is ignored; anything else malformed reports Errc::bad_spec with
// the character position in the message.
Construction parse_construction(const std::string& text);

Graph build(const Construction& spec);

// Canonical text for an expression; parse(to_text(c)) rebuilds the same tree.
std::string to_text(const Construction& spec);

// Tries to write a graph as a grammar expression: atoms first, then a join
// decomposition via complement components, then a union over components.
// Returns nothing when the graph has no such description.
std::optional<std::string> recognize_construction(const Graph& g);

}  // namespace turanlab
