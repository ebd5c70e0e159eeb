#include "turanlab/family.hpp"

#include <algorithm>

#include "turanlab/construct.hpp"

namespace turanlab {

GraphFamily GraphFamily::from_graphs(std::string label, std::vector<Graph> graphs) {
  std::vector<std::pair<CanonicalForm, Graph>> keyed;
  keyed.reserve(graphs.size());
  for (const Graph& g : graphs) keyed.emplace_back(canonical_form(g), canonical_graph(g));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first.code < b.first.code; });
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  GraphFamily f;
  f.label = std::move(label);
  for (auto& kv : keyed) f.members.push_back(std::move(kv.second));
  return f;
}

bool GraphFamily::same_members(const GraphFamily& other) const {
  return member_key() == other.member_key();
}

std::string GraphFamily::member_key() const {
  std::string key;
  for (const Graph& g : members) {
    // Members are already canonical, so their code is a direct function of
    // the stored adjacency.
    key += canonical_form(g).code;
    key.push_back('\x1f');
  }
  return key;
}

GraphFamily parse_family(const std::string& text) {
  std::vector<Graph> graphs;
  std::size_t start = 0;
  // Split on commas at nesting depth zero; commas inside T(...)/KP(...)/join
  // arguments belong to the expression.
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      std::string piece = text.substr(start, i - start);
      if (piece.find_first_not_of(" \t") == std::string::npos)
        fail(Errc::bad_spec, "empty member in family list '" + text + "'");
      graphs.push_back(build(parse_construction(piece)));
      start = i + 1;
    }
  }
  return GraphFamily::from_graphs(text, std::move(graphs));
}

}  // namespace turanlab
