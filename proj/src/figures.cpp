#include "burn/figures.hpp"

namespace burn {

Figure1 figure1_graph() {
  const int u = 0, v = 25, w = 29, x = 40, y = 51;
  std::vector<Edge> es;
  for (int j = 0; j < 6; ++j) {  // six length-4 arms on u, vertices 1..24
    es.emplace_back(u, 1 + 4 * j);
    for (int i = 0; i < 3; ++i) es.emplace_back(1 + 4 * j + i, 2 + 4 * j + i);
  }
  es.emplace_back(u, v);
  es.emplace_back(v, w);  // the edge removed in the gap example
  es.emplace_back(v, 26);  // detour v1 v2 v3
  es.emplace_back(26, 27);
  es.emplace_back(27, 28);
  es.emplace_back(28, w);
  for (int j = 0; j < 4; ++j) {  // four length-2 arms on w, vertices 30..37
    es.emplace_back(w, 30 + 2 * j);
    es.emplace_back(30 + 2 * j, 31 + 2 * j);
  }
  es.emplace_back(w, 38);  // w to x, length 3
  es.emplace_back(38, 39);
  es.emplace_back(39, x);
  for (int j = 0; j < 4; ++j) {  // four length-2 arms on x, vertices 41..48
    es.emplace_back(x, 41 + 2 * j);
    es.emplace_back(41 + 2 * j, 42 + 2 * j);
  }
  es.emplace_back(x, 49);  // x to y, length 3
  es.emplace_back(49, 50);
  es.emplace_back(50, y);
  return Figure1{Graph(52, es), u, v, w, x, y};
}

Figure2 figure2_graph() {
  // v = 0; pendant u1 u2 u3 = 1 2 3; two v-z paths v w1 x1 y1 z and
  // v w2 x2 y2 z with w = 4 5, x = 6 7, y = 8 9, z = 10; rungs x1-y2,
  // y1-y2, y1-x2.
  std::vector<Edge> es = {{0, 1}, {0, 2}, {0, 3},  {0, 4},  {0, 5},
                          {4, 6}, {6, 8}, {8, 10}, {5, 7},  {7, 9},
                          {9, 10}, {6, 9}, {8, 9}, {7, 8}};
  return Figure2{Graph(11, es), 0};
}

}  // namespace burn
