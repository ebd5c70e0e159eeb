#include "turanlab/graph6.hpp"

namespace turanlab {

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    // 63 <= n <= 64 here; the format's medium form is '~' plus 18 bits.
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, width = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++width == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        width = 0;
      }
    }
  if (width > 0) out.push_back(static_cast<char>((acc << (6 - width)) + 63));
  return out;
}

Graph from_graph6(const std::string& s) {
  std::size_t pos = 0;
  auto sextet = [&](const char* what) -> int {
    if (pos >= s.size())
      fail(Errc::parse_error, std::string("graph6 truncated while reading ") + what, pos);
    unsigned char c = static_cast<unsigned char>(s[pos]);
    if (c < 63 || c > 126)
      fail(Errc::parse_error, "graph6 byte out of range", pos);
    ++pos;
    return c - 63;
  };

  long long n;
  if (s.empty()) fail(Errc::parse_error, "empty graph6 record", 0);
  if (s[0] == '~') {
    ++pos;
    if (pos < s.size() && s[pos] == '~')
      fail(Errc::parse_error, "graph6 long form unsupported", pos);
    long long a = sextet("order");
    long long b = sextet("order");
    long long c = sextet("order");
    n = (a << 12) | (b << 6) | c;
  } else {
    n = sextet("order");
  }
  if (n > Graph::kMaxOrder)
    fail(Errc::oversize_graph, "graph6 order " + std::to_string(n) + " exceeds 64");

  Graph g(static_cast<int>(n));
  int acc = 0, width = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      if (width == 0) {
        acc = sextet("adjacency bits");
        width = 6;
      }
      if ((acc >> (width - 1)) & 1) g.add_edge(u, v);
      --width;
    }
  if (width > 0 && (acc & ((1 << width) - 1)) != 0)
    fail(Errc::parse_error, "graph6 padding bits must be zero", pos - 1);
  if (pos != s.size())
    fail(Errc::parse_error, "trailing bytes after graph6 record", pos);
  return g;
}

}  // namespace turanlab
