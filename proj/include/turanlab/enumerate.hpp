#pragma once

#include <cstdint>
#include <functional>

#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

struct EnumerateOptions {
  bool connected_only = false;
  int threads = 0;      // 0 means use the hardware thread count
  int max_order = 14;   // refuse larger requests instead of running for days
};

// Visits every `family`-free graph on n vertices exactly once up to
// isomorphism, in canonical-code order, and returns how many were visited.
// Graphs are grown one vertex at a time; a level keeps one canonical
// representative per isomorphism class, so the output is independent of the
// thread count.  Disconnected intermediates are always kept (they may gain
// connecting vertices later); the connected_only filter applies to the
// visited level only.
std::uint64_t enumerate_free(int n, const GraphFamily& family,
                             const EnumerateOptions& opts,
                             const std::function<void(const Graph&)>& visit);

namespace detail {

// Shared level-growing core.  Levels 1..n-1 keep every family-free class.
// At the last expansion each freeness-surviving child (parent plus one
// vertex whose neighbourhood is `mask`) is first offered to `admit`; a
// false return drops it before the canonical form is computed, which lets a
// caller prune by edge count.  Survivors are deduplicated and handed to
// `visit` in canonical-code order.  `admit` may be empty and is never
// invoked for n <= 1.  Thread safety: `admit` may be called concurrently,
// `visit` is always sequential.
void grow_free(int n, const GraphFamily& family, int threads,
               const std::function<bool(const Graph&, std::uint64_t)>& admit,
               const std::function<void(const Graph&)>& visit);

}  // namespace detail

}  // namespace turanlab
