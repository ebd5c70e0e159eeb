#pragma once

#include <string>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

// A finite set of forbidden (or derived) graphs, held as canonical
// representatives sorted by canonical code, pairwise non-isomorphic.
struct GraphFamily {
  std::string label;
  std::vector<Graph> members;

  static GraphFamily from_graphs(std::string label, std::vector<Graph> graphs);

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }

  bool same_members(const GraphFamily& other) const;

  // Stable identity of the member multiset (concatenated canonical codes);
  // the result-store key derives from this.
  std::string member_key() const;
};

// Comma-separated construction expressions, e.g. "P6,K3".
GraphFamily parse_family(const std::string& text);

}  // namespace turanlab
