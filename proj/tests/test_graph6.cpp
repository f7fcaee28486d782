#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/graph6.hpp"

using namespace burn;

namespace {

// Reference encoder written directly from the format description: size as
// offset-63 bytes ('~' prefix + three 6-bit groups for n >= 63), then the
// upper triangle in column order, 6 bits per character, zero padded.
std::string reference_graph6(const Graph& g) {
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
  std::vector<int> bits;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) bits.push_back(g.adjacent(u, v) ? 1 : 0);
  for (size_t i = 0; i < bits.size(); i += 6) {
    int group = 0;
    for (size_t j = 0; j < 6; ++j)
      group = group * 2 + (i + j < bits.size() ? bits[i + j] : 0);
    out.push_back(static_cast<char>(group + 63));
  }
  return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() & 1) edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("known strings") {
  CHECK(emit_graph6(make_graph(1, {})) == "@");
  CHECK(parse_graph6("@") == make_graph(1, {}));
  CHECK(emit_graph6(family({FamilyKind::Complete, 3})) == "Bw");
  CHECK(parse_graph6("Bw") == family({FamilyKind::Complete, 3}));
  CHECK(parse_graph6(">>graph6<<Bw") == family({FamilyKind::Complete, 3}));
}

TEST_CASE("round trip exhaustive n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    int m = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if ((mask >> bit) & 1) edges.emplace_back(u, v);
      Graph g(n, edges);
      std::string text = emit_graph6(g);
      CHECK(text == reference_graph6(g));
      CHECK(parse_graph6(text) == g);
    }
  }
}

TEST_CASE("round trip random graphs up to 64 vertices") {
  std::mt19937_64 rng(20240831);
  for (int i = 0; i < 1000; ++i) {
    int n = 1 + static_cast<int>(rng() % 64);
    Graph g = random_graph(n, rng);
    std::string text = emit_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("size boundary 62 / 63 / 64") {
  std::mt19937_64 rng(7);
  for (int n : {62, 63, 64}) {
    Graph g = random_graph(n, rng);
    std::string text = emit_graph6(g);
    CHECK(text == reference_graph6(g));
    CHECK((text[0] == 126) == (n >= 63));  // '~' long-size marker
    CHECK(parse_graph6(text) == g);
  }
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);       // body truncated
  CHECK_THROWS_AS(parse_graph6("Bw?"), std::invalid_argument);     // body too long
  CHECK_THROWS_AS(parse_graph6("B w"), std::invalid_argument);     // illegal character
  CHECK_THROWS_AS(parse_graph6("B\x7f"), std::invalid_argument);   // above the 6-bit range
  CHECK_THROWS_AS(parse_graph6("~~????"), std::invalid_argument);  // n far above 64

  // n = 2: one adjacency bit, five padding bits that must be zero
  CHECK(parse_graph6("A_").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph6("A`"), std::invalid_argument);
}

TEST_CASE("edge list format") {
  Graph p3 = parse_edge_list("3 2\n0 1\n1 2\n");
  CHECK(p3 == family({FamilyKind::Path, 3}));
  CHECK(parse_edge_list("1 0\n") == make_graph(1, {}));
  CHECK(parse_edge_list(emit_edge_list(p3)) == p3);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_graph(1 + static_cast<int>(rng() % 20), rng);
    CHECK(parse_edge_list(emit_edge_list(g)) == g);
  }

  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("2 1\n"), std::invalid_argument);       // missing edge line
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), std::invalid_argument);  // endpoint range
  CHECK_THROWS_AS(parse_edge_list("x y\n"), std::invalid_argument);
}
