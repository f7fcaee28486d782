#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "burn/canonical.hpp"
#include "burn/classical.hpp"
#include "burn/corpus.hpp"
#include "burn/distance.hpp"
#include "burn/families.hpp"
#include "burn/graph.hpp"
#include "burn/products.hpp"

using namespace burn;

namespace {

Graph fam(FamilyKind k, int s) { return family({k, s}); }

std::vector<Graph> classes(int n, bool connected) {
  CorpusSpec spec;
  spec.n = n;
  spec.connected_only = connected;
  spec.dedup = true;
  return corpus_vector(spec);
}

// oracle: try every ordered k-tuple of sources for growing k
int brute_burning_number(const Graph& g) {
  int n = g.order();
  for (int k = 1;; ++k) {
    std::vector<int> tuple(static_cast<size_t>(k), 0);
    for (;;) {
      if (covers(g, BurningSequence{tuple})) return k;
      int i = k - 1;
      while (i >= 0 && tuple[static_cast<size_t>(i)] == n - 1) tuple[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++tuple[static_cast<size_t>(i)];
    }
  }
}

// oracle: smallest subset whose distance-k balls cover the graph
int brute_gamma(const Graph& g, int k) {
  int n = g.order();
  DistanceMatrix dm(g);
  for (int size = 1; size <= n; ++size) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s = VertexSet::from_bits(mask);
      if (s.count() != size) continue;
      VertexSet covered;
      for (int v : s) covered |= dm.ball(v, k);
      if (covered == g.vertices()) return size;
    }
  }
  return n;
}

int isqrt_ceil(int x) { return static_cast<int>(std::ceil(std::sqrt(double(x)) - 1e-9)); }

}  // namespace

TEST_CASE("cover certificates") {
  Graph p3 = fam(FamilyKind::Path, 3);
  CHECK(!covers(p3, BurningSequence{{1}}));
  CHECK(covers(p3, BurningSequence{{1, 0}}));   // N_1[1] + N_0[0]
  CHECK(covers(p3, BurningSequence{{0, 2}}));   // N_1[0] + N_0[2]
  CHECK(!covers(p3, BurningSequence{{0, 1}}));  // vertex 2 stays uncovered
}

TEST_CASE("burning number on named graphs") {
  CHECK(burning_number(fam(FamilyKind::Path, 9)).value == 3);
  CHECK(burning_number(make_graph(1, {})).value == 1);
  CHECK(burning_number(fam(FamilyKind::Path, 4)).value == 2);
  // b(P_n) = ceil(sqrt(n))
  for (int n = 1; n <= 22; ++n)
    CHECK(burning_number(fam(FamilyKind::Path, n)).value == isqrt_ceil(n));
  CHECK(burning_number(fam(FamilyKind::Empty, 5)).value == 5);
}

TEST_CASE("burning number matches the tuple oracle and certifies itself") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : classes(n, false)) {
      BurningResult r = burning_number(g);
      CHECK(r.value == brute_burning_number(g));
      CHECK(static_cast<int>(r.sequence.sources.size()) == r.value);
      CHECK(covers(g, r.sequence));
    }
  for (const Graph& g : classes(6, true)) {
    BurningResult r = burning_number(g);
    CHECK(r.value == brute_burning_number(g));
    CHECK(covers(g, r.sequence));
  }
}

TEST_CASE("square never burns slower") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : classes(n, true))
      CHECK(burning_number(square(g)).value <= burning_number(g).value);
}

TEST_CASE("distance domination") {
  CHECK(gamma_k(fam(FamilyKind::Path, 3), 1) == 1);
  CHECK(gamma_k(fam(FamilyKind::Path, 5), 2) == 1);
  CHECK(gamma_k(fam(FamilyKind::Cycle, 6), 1) == 2);
  CHECK_THROWS_AS(gamma_k(fam(FamilyKind::Path, 3), 0), std::invalid_argument);

  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : classes(n, false))
      for (int k = 1; k <= 3; ++k) CHECK(gamma_k(g, k) == brute_gamma(g, k));

  // non-increasing in k; one center suffices at the diameter
  for (const Graph& g : classes(6, true)) {
    int prev = gamma_k(g, 1);
    for (int k = 2; k <= 6; ++k) {
      int cur = gamma_k(g, k);
      CHECK(cur <= prev);
      prev = cur;
    }
    CHECK(gamma_k(g, *diameter(g) == 0 ? 1 : *diameter(g)) == 1);
  }

  // disconnected graphs sum per-component optima
  Graph split = disjoint_union(fam(FamilyKind::Path, 3), make_graph(1, {}));
  CHECK(gamma_k(split, 1) == 2);
  CHECK(gamma_k(split, 5) == 2);
}

TEST_CASE("bipartite square pair shapes") {
  // P_4 classes tie at size 2; vertex 0's class {0,2} wins and spans a K_2 in the square
  BipartiteSquarePair p = bipartite_square_pair(fam(FamilyKind::Path, 4));
  CHECK(p.x == VertexSet::of({0, 2}));
  CHECK(p.h == make_graph(2, {{0, 1}}));
  CHECK(p.index_map == std::vector<int>{0, 2});

  // the star's smaller class is the center alone
  BipartiteSquarePair s = bipartite_square_pair(fam(FamilyKind::Star, 3));
  CHECK(s.x == VertexSet::single(0));
  CHECK(s.h.order() == 1);

  CHECK_THROWS_AS(bipartite_square_pair(fam(FamilyKind::Cycle, 4)), std::invalid_argument);
  CHECK_THROWS_AS(bipartite_square_pair(disjoint_union(fam(FamilyKind::Path, 2),
                                                       fam(FamilyKind::Path, 2))),
                  std::invalid_argument);
}

TEST_CASE("bipartite square pair stays connected, all trees 2 <= n <= 9") {
  // K_1's smaller partite class is empty, so the construction starts at n = 2
  CHECK_THROWS_AS(bipartite_square_pair(make_graph(1, {})), std::invalid_argument);
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) {
      BipartiteSquarePair p = bipartite_square_pair(t);
      CHECK(2 * p.x.count() <= n + 1);  // a smaller class, up to the tie rule
      CHECK(is_connected(p.h));
    }
}

TEST_CASE("square of a tree burns within one round of its half") {
  for (int n = 2; n <= 9; ++n)
    for (const Graph& t : all_trees(n)) {
      BipartiteSquarePair p = bipartite_square_pair(t);
      CHECK(burning_number(square(t)).value <= burning_number(p.h).value + 1);
    }
}
