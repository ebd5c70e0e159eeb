#include "turanlab/enumerate.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "turanlab/canonical.hpp"
#include "turanlab/subgraph.hpp"

namespace turanlab {

namespace detail {

namespace {

using ClassMap = std::unordered_map<std::string, Graph>;

int pick_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Expand one chunk of parents by a single vertex, collecting canonical
// representatives of the surviving children into `local`.
void expand_chunk(const std::vector<Graph>& parents, std::size_t lo, std::size_t hi,
                  const FreenessChecker& checker, bool last_level,
                  const std::function<bool(const Graph&, std::uint64_t)>& admit,
                  ClassMap& local) {
  for (std::size_t p = lo; p < hi; ++p) {
    const Graph& parent = parents[p];
    const std::uint64_t limit = 1ULL << parent.order();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      if (checker.violates_with_new_vertex(parent, mask)) continue;
      assert(!checker.violates(parent.extended(mask)));
      if (last_level && admit && !admit(parent, mask)) continue;
      Graph child = parent.extended(mask);
      CanonicalLabeling lab = canonical_labeling(child);
      if (local.find(lab.form.code) == local.end())
        local.emplace(std::move(lab.form.code), canonical_graph(child, lab));
    }
  }
}

std::vector<Graph> sorted_level(ClassMap&& classes) {
  std::vector<std::pair<std::string, Graph>> rows;
  rows.reserve(classes.size());
  for (auto& kv : classes) rows.emplace_back(kv.first, std::move(kv.second));
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> level;
  level.reserve(rows.size());
  for (auto& r : rows) level.push_back(std::move(r.second));
  return level;
}

}  // namespace

void grow_free(int n, const GraphFamily& family, int threads,
               const std::function<bool(const Graph&, std::uint64_t)>& admit,
               const std::function<void(const Graph&)>& visit) {
  FreenessChecker checker(family);
  if (n == 0) {
    visit(Graph(0));
    return;
  }
  if (checker.violates(Graph(1))) return;  // some member fits in a single vertex
  if (n == 1) {
    visit(Graph(1));
    return;
  }
  const int nthreads = pick_threads(threads);
  std::vector<Graph> level = {Graph(1)};
  for (int m = 1; m < n; ++m) {
    const bool last = m == n - 1;
    ClassMap merged;
    std::size_t nworkers =
        std::min<std::size_t>(static_cast<std::size_t>(nthreads), level.size());
    if (nworkers <= 1) {
      expand_chunk(level, 0, level.size(), checker, last, admit, merged);
    } else {
      std::vector<ClassMap> locals(nworkers);
      std::vector<std::thread> pool;
      std::size_t chunk = (level.size() + nworkers - 1) / nworkers;
      for (std::size_t w = 0; w < nworkers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(level.size(), lo + chunk);
        pool.emplace_back([&, lo, hi, w] {
          expand_chunk(level, lo, hi, checker, last, admit, locals[w]);
        });
      }
      for (auto& t : pool) t.join();
      for (auto& local : locals)
        for (auto& kv : local)
          if (merged.find(kv.first) == merged.end())
            merged.emplace(kv.first, std::move(kv.second));
    }
    level = sorted_level(std::move(merged));
  }
  for (const Graph& g : level) visit(g);
}

}  // namespace detail

std::uint64_t enumerate_free(int n, const GraphFamily& family,
                             const EnumerateOptions& opts,
                             const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > opts.max_order)
    fail(Errc::bad_range, "order " + std::to_string(n) +
                              " outside the enumeration limit of " +
                              std::to_string(opts.max_order));
  std::uint64_t count = 0;
  detail::grow_free(n, family, opts.threads, nullptr, [&](const Graph& g) {
    if (opts.connected_only && (g.order() == 0 || !is_connected(g))) return;
    ++count;
    if (visit) visit(g);
  });
  return count;
}

}  // namespace turanlab
