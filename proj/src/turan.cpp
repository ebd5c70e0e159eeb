#include "turanlab/turan.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "turanlab/enumerate.hpp"
#include "turanlab/graph6.hpp"

namespace turanlab {

namespace {

using nlohmann::ordered_json;

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

std::vector<std::string> family_codes(const GraphFamily& family) {
  std::vector<std::string> out;
  out.reserve(family.members.size());
  for (const Graph& g : family.members) out.push_back(to_graph6(g));
  return out;
}

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

std::string query_key(int n, Mode mode, const std::vector<std::string>& fam_codes) {
  return mode_name(mode) + "|" + std::to_string(n) + "|" + join(fam_codes, ',');
}

std::string row_fingerprint(const std::string& key, const TuranResult& r,
                            const std::vector<std::string>& extremal_codes) {
  std::string content = std::string(kEngineVersion) + "\n" + key + "\n" +
                        (r.value ? std::to_string(*r.value) : std::string("none")) + "\n" +
                        join(extremal_codes, ',') + "\n" + (r.exhaustive ? "1" : "0");
  return fnv1a_hex(content);
}

bool same_answer(const TuranResult& a, const TuranResult& b) {
  if (a.value != b.value || a.exhaustive != b.exhaustive) return false;
  if (a.extremal.size() != b.extremal.size()) return false;
  for (std::size_t i = 0; i < a.extremal.size(); ++i)
    if (!(a.extremal[i] == b.extremal[i])) return false;
  return true;
}

}  // namespace

std::string mode_name(Mode mode) { return mode == Mode::all ? "all" : "connected"; }

TuranCache::TuranCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;  // nothing cached yet, the first put will create the file
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json row = ordered_json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object())
      fail(Errc::corrupt_cache, "cache line is not a JSON object", lineno);
    for (const char* field : {"engine_version", "n", "mode", "family", "value",
                              "extremal", "exhaustive", "fingerprint"})
      if (!row.contains(field))
        fail(Errc::corrupt_cache, std::string("cache row lacks field ") + field, lineno);
    if (row["engine_version"].get<std::string>() != kEngineVersion) continue;
    TuranResult r;
    r.n = row["n"].get<int>();
    std::string mode_text = row["mode"].get<std::string>();
    if (mode_text != "all" && mode_text != "connected")
      fail(Errc::corrupt_cache, "cache row has unknown mode " + mode_text, lineno);
    r.mode = mode_text == "all" ? Mode::all : Mode::connected;
    if (!row["value"].is_null()) r.value = row["value"].get<int>();
    std::vector<std::string> fam = row["family"].get<std::vector<std::string>>();
    std::vector<std::string> ext = row["extremal"].get<std::vector<std::string>>();
    for (const std::string& code : ext) r.extremal.push_back(from_graph6(code));
    r.exhaustive = row["exhaustive"].get<bool>();
    std::string key = query_key(r.n, r.mode, fam);
    if (row_fingerprint(key, r, ext) != row["fingerprint"].get<std::string>())
      fail(Errc::corrupt_cache, "cache row fingerprint mismatch", lineno);
    auto it = rows_.find(key);
    if (it != rows_.end()) {
      if (!same_answer(it->second, r))
        fail(Errc::corrupt_cache, "cache rows disagree for key " + key, lineno);
      continue;
    }
    rows_.emplace(std::move(key), std::move(r));
  }
}

std::optional<TuranResult> TuranCache::lookup(int n, Mode mode,
                                              const GraphFamily& family) const {
  if (!enabled()) return std::nullopt;
  auto it = rows_.find(query_key(n, mode, family_codes(family)));
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

void TuranCache::put(int n, Mode mode, const GraphFamily& family,
                     const TuranResult& result) {
  if (!enabled()) return;
  std::vector<std::string> fam = family_codes(family);
  std::string key = query_key(n, mode, fam);
  auto it = rows_.find(key);
  if (it != rows_.end()) {
    if (!same_answer(it->second, result))
      fail(Errc::corrupt_cache, "refusing to overwrite cached answer for " + key);
    return;  // already stored, keep the file append-only and idempotent
  }
  std::vector<std::string> ext;
  ext.reserve(result.extremal.size());
  for (const Graph& g : result.extremal) ext.push_back(to_graph6(g));
  ordered_json row;
  row["engine_version"] = kEngineVersion;
  row["n"] = n;
  row["mode"] = mode_name(mode);
  row["family"] = fam;
  row["value"] = result.value ? ordered_json(*result.value) : ordered_json(nullptr);
  row["extremal"] = ext;
  row["exhaustive"] = result.exhaustive;
  row["fingerprint"] = row_fingerprint(key, result, ext);
  std::ofstream out(path_, std::ios::app);
  if (!out) fail(Errc::invalid_argument, "cannot open cache file " + path_);
  out << row.dump() << "\n";
  rows_.emplace(std::move(key), result);
}

TuranEngine::TuranEngine(EngineOptions opts)
    : opts_(std::move(opts)), cache_(opts_.cache_path.empty()
                                         ? TuranCache()
                                         : TuranCache(opts_.cache_path)) {}

TuranResult TuranEngine::compute(int n, const GraphFamily& family, Mode mode) {
  if (n < 0 || n > opts_.max_order)
    fail(Errc::bad_range, "order " + std::to_string(n) +
                              " outside the search limit of " +
                              std::to_string(opts_.max_order));
  std::string fam_key = family.member_key();
  auto memo_key = [&](Mode m) {
    return mode_name(m) + "|" + std::to_string(n) + "|" + fam_key;
  };
  if (auto it = memo_.find(memo_key(mode)); it != memo_.end()) return it->second;
  if (auto hit = cache_.lookup(n, mode, family)) {
    memo_.emplace(memo_key(mode), *hit);
    return *hit;
  }

  // One exhaustive pass answers both modes.  The incumbent tracks the best
  // connected edge count seen so far; since every final answer is at least
  // as large, any child strictly below it can be dropped before the
  // expensive canonical form is computed.
  std::atomic<int> incumbent{-1};
  auto admit = [&](const Graph& parent, std::uint64_t mask) {
    int e = parent.edge_count() + __builtin_popcountll(mask);
    int cur = incumbent.load(std::memory_order_relaxed);
    if (e < cur) return false;
    if (e > cur) {
      Graph child = parent.extended(mask);
      if (is_connected(child)) {
        while (cur < e &&
               !incumbent.compare_exchange_weak(cur, e, std::memory_order_relaxed)) {
        }
      }
    }
    return true;
  };
  struct Candidate {
    Graph g;
    int edges;
    bool connected;
  };
  std::vector<Candidate> cands;
  detail::grow_free(n, family, opts_.threads, admit, [&](const Graph& g) {
    cands.push_back({g, g.edge_count(), g.order() > 0 && is_connected(g)});
  });

  TuranResult res_all, res_conn;
  res_all.n = res_conn.n = n;
  res_all.mode = Mode::all;
  res_conn.mode = Mode::connected;
  for (const Candidate& c : cands) {
    if (!res_all.value || c.edges > *res_all.value) res_all.value = c.edges;
    if (c.connected && (!res_conn.value || c.edges > *res_conn.value))
      res_conn.value = c.edges;
  }
  for (const Candidate& c : cands) {
    if (res_all.value && c.edges == *res_all.value) res_all.extremal.push_back(c.g);
    if (c.connected && res_conn.value && c.edges == *res_conn.value)
      res_conn.extremal.push_back(c.g);
  }

  cache_.put(n, Mode::all, family, res_all);
  cache_.put(n, Mode::connected, family, res_conn);
  memo_.emplace(memo_key(Mode::all), res_all);
  memo_.emplace(memo_key(Mode::connected), res_conn);
  return mode == Mode::all ? res_all : res_conn;
}

}  // namespace turanlab
