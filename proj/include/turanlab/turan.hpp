#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "turanlab/family.hpp"
#include "turanlab/graph.hpp"

namespace turanlab {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class Mode { all, connected };

std::string mode_name(Mode mode);

struct TuranResult {
  int n = 0;
  Mode mode = Mode::all;
  // Largest edge count of a qualifying family-free graph on n vertices, or
  // empty when nothing qualifies (e.g. connected mode where every connected
  // graph of that order contains a member).
  std::optional<int> value;
  // Every extremal graph up to isomorphism, canonical representatives in
  // canonical-code order.  Empty exactly when `value` is.
  std::vector<Graph> extremal;
  bool exhaustive = true;  // always true for this engine: full search, no heuristics
  std::string engine_version = kEngineVersion;
};

// Append-only JSONL store of finished computations.  Every row carries a
// fingerprint of its own content; a mismatch, or two rows that answer the
// same query differently, raises corrupt_cache instead of returning bad
// data.  Rows written by other engine versions are ignored.
class TuranCache {
 public:
  TuranCache() = default;
  explicit TuranCache(std::string path);

  bool enabled() const { return !path_.empty(); }
  std::optional<TuranResult> lookup(int n, Mode mode, const GraphFamily& family) const;
  void put(int n, Mode mode, const GraphFamily& family, const TuranResult& result);

 private:
  std::string path_;
  std::unordered_map<std::string, TuranResult> rows_;
};

struct EngineOptions {
  int threads = 0;         // 0 means hardware thread count
  std::string cache_path;  // empty disables the file cache
  int max_order = 14;
};

// Exact maximiser: one exhaustive isomorph-free search per (n, family)
// answers both modes at once, so asking for the other mode afterwards is
// free.  Results are memoised in memory and optionally in a JSONL cache.
// Not safe for concurrent use from multiple threads.
class TuranEngine {
 public:
  explicit TuranEngine(EngineOptions opts = {});

  TuranResult compute(int n, const GraphFamily& family, Mode mode);

 private:
  EngineOptions opts_;
  TuranCache cache_;
  std::unordered_map<std::string, TuranResult> memo_;
};

}  // namespace turanlab
