#include "burn/graph6.hpp"

#include <sstream>
#include <stdexcept>

namespace burn {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("graph6: " + what);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) bad("empty input");
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c < 63 || c > 126)
      bad("byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
          " at position " + std::to_string(i) + " outside printable range 63..126");
  }

  size_t pos = 0;
  long n;
  if (text[0] == 126) {  // '~': long size form
    if (text.size() >= 2 && text[1] == 126) bad("order above 64 is unsupported");
    if (text.size() < 4) bad("truncated long size field");
    n = (static_cast<long>(text[1] - 63) << 12) | (static_cast<long>(text[2] - 63) << 6) |
        static_cast<long>(text[3] - 63);
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > 64) bad("order " + std::to_string(n) + " outside supported range 1..64");

  long pairs = n * (n - 1) / 2;
  size_t groups = static_cast<size_t>((pairs + 5) / 6);
  if (text.size() - pos != groups)
    bad("expected " + std::to_string(groups) + " data bytes for order " + std::to_string(n) +
        ", got " + std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  long bit = 0;
  for (size_t gi = 0; gi < groups; ++gi) {
    int val = text[pos + gi] - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      int b = (val >> k) & 1;
      if (bit >= pairs) {
        if (b) bad("nonzero padding bits");
        continue;
      }
      if (b) {
        // column-major upper triangle: bit index runs over columns j = 1..n-1,
        // rows i = 0..j-1
        long rem = bit;
        int j = 1;
        while (rem >= j) rem -= j, ++j;
        edges.emplace_back(static_cast<int>(rem), j);
      }
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int val = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      val = (val << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(val + 63));
        val = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((val << (6 - nbits)) + 63));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
  if (n < 1 || n > 64)
    throw std::invalid_argument("edge list: order " + std::to_string(n) +
                                " outside supported range 1..64");
  if (m < 0) throw std::invalid_argument("edge list: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long i = 0; i < m; ++i) {
    long u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, failed reading edge " + std::to_string(i + 1));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  long extra;
  if (in >> extra) throw std::invalid_argument("edge list: trailing data after last edge");
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace burn
