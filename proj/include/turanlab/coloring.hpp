#pragma once

#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// Exact chromatic number by incremental k-colourability search with
// colour-introduction symmetry breaking.  Errors on the order-0 graph.
int chromatic_number(const Graph& g);

// All graphs obtainable by deleting one colour class from a proper
// colouring of `g` that uses exactly chromatic_number(g) classes, collected
// up to isomorphism.  Errors when `g` is edgeless (removing the only class
// would leave nothing).
GraphFamily color_class_deletions(const Graph& g);

// All graphs obtainable by deleting both endpoints of one edge of `g`,
// collected up to isomorphism.  Errors when `g` has no edges.
GraphFamily adjacent_pair_deletions(const Graph& g);

}  // namespace turanlab
