#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "burn/corpus.hpp"
#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/products.hpp"
#include "burn/spanning.hpp"

using namespace burn;

namespace {

std::uint64_t edge_mask(const Graph& g) {
  std::uint64_t w = 0;
  int bit = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v, ++bit)
      if (g.adjacent(u, v)) w |= std::uint64_t{1} << bit;
  return w;
}

std::uint64_t pow_u64(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("known counts") {
  CHECK(spanning_tree_count(family({FamilyKind::Cycle, 4})) == 4);
  CHECK(spanning_tree_count(family({FamilyKind::Complete, 4})) == 16);
  // Cayley: K_n has n^(n-2) spanning trees
  for (int n = 2; n <= 7; ++n)
    CHECK(spanning_tree_count(family({FamilyKind::Complete, n})) ==
          pow_u64(static_cast<std::uint64_t>(n), n - 2));
  CHECK(spanning_tree_count(family({FamilyKind::Path, 5})) == 1);
  CHECK(spanning_tree_count(disjoint_union(family({FamilyKind::Path, 2}),
                                           family({FamilyKind::Path, 2}))) == 0);
}

TEST_CASE("a tree's only spanning tree is itself") {
  Graph star = family({FamilyKind::Star, 4});
  auto trees = spanning_trees(star, 10);
  REQUIRE(trees.size() == 1);
  CHECK(trees[0] == star);
}

TEST_CASE("enumeration yields distinct spanning subgraph trees") {
  Graph k4 = family({FamilyKind::Complete, 4});
  std::set<std::uint64_t> seen;
  for_each_spanning_tree(k4, 100, [&](const Graph& t) {
    CHECK(t.order() == 4);
    CHECK(t.edge_count() == 3);
    CHECK(is_connected(t));
    for (auto [u, v] : t.edges()) CHECK(k4.adjacent(u, v));
    CHECK(seen.insert(edge_mask(t)).second);
  });
  CHECK(seen.size() == 16);
}

TEST_CASE("enumeration count equals the matrix-tree determinant, all connected classes n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CorpusSpec spec;
    spec.n = n;
    spec.connected_only = true;
    spec.dedup = true;
    for (const Graph& g : corpus_vector(spec)) {
      std::uint64_t count = spanning_tree_count(g);
      std::uint64_t seen = 0;
      for_each_spanning_tree(g, count, [&](const Graph&) { ++seen; });
      CHECK(seen == count);
    }
  }
}

TEST_CASE("cap refuses before visiting") {
  Graph k5 = family({FamilyKind::Complete, 5});  // 125 trees
  int visited = 0;
  CHECK_THROWS_AS(for_each_spanning_tree(k5, 100, [&](const Graph&) { ++visited; }),
                  std::invalid_argument);
  CHECK(visited == 0);
  CHECK_NOTHROW(for_each_spanning_tree(k5, 125, [](const Graph&) {}));
}

TEST_CASE("disconnected input refused") {
  Graph split = disjoint_union(family({FamilyKind::Path, 3}), family({FamilyKind::Path, 2}));
  CHECK_THROWS_AS(for_each_spanning_tree(split, 100, [](const Graph&) {}),
                  std::invalid_argument);
}
