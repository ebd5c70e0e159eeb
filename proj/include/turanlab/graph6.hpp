#pragma once

#include <string>

#include "turanlab/graph.hpp"

namespace turanlab {

// Header-free graph6 encoding, bit-exact with the published format: the order
// (one byte n+63 for n <= 62, otherwise '~' plus three sextet bytes), then the
// upper triangle of the adjacency matrix column by column, packed into sextets
// offset by 63.  Padding bits must be zero.
std::string to_graph6(const Graph& g);

// Rejects malformed records with Errc::parse_error carrying the byte offset
// of the offending character, and orders above 64 with Errc::oversize_graph.
Graph from_graph6(const std::string& s);

}  // namespace turanlab
