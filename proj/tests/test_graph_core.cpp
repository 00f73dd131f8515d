#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "chemenum/graph_io.hpp"
#include "test_util.hpp"

using namespace chemenum;
using namespace chemenum::test;

TEST_CASE("residual degree") {
  auto t = table_onc();
  ChemicalGraph single = build(t, {"C"}, {}, 2);
  CHECK(residual_degree(single, 0) == 4);

  ChemicalGraph co = build(t, {"C", "O"}, {{0, 1, 2}}, 2);
  CHECK(residual_degree(co, 0) == 2);
  CHECK(residual_degree(co, 1) == 0);

  ChemicalGraph g0 = fixture_g0();
  CHECK(residual_degree(g0, 0) == 1);
  CHECK_THROWS_AS(residual_degree(g0, 17), std::out_of_range);
}

TEST_CASE("add_edges") {
  auto t = table_onc();
  ChemicalGraph two = build(t, {"C", "C"}, {}, 3);
  ChemicalGraph joined = add_edges(two, 0, 1, 1);
  CHECK(joined.mult(0, 1) == 1);
  CHECK(two.mult(0, 1) == 0);  // value semantics

  ChemicalGraph g0 = fixture_g0();
  ChemicalGraph h0 = add_edges(g0, 0, 4, 1);
  CHECK(classify(h0) == ShapeClass::BiBlock2Aug);
  CHECK_THROWS_AS(add_edges(g0, 0, 4, 2), std::invalid_argument);  // res(v0) = 1
  CHECK_THROWS_AS(add_edges(g0, 0, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(add_edges(g0, 0, 1, 1), std::invalid_argument);  // already adjacent
}

TEST_CASE("remove_pair_edges") {
  auto t = table_onc();
  ChemicalGraph g0 = fixture_g0();
  ChemicalGraph h0 = fixture_h0();
  ChemicalGraph back = remove_pair_edges(h0, 0, 4);
  CHECK(back.pairs() == g0.pairs());

  ChemicalGraph dbl = build(t, {"C", "C"}, {{0, 1, 2}}, 2);
  ChemicalGraph split = remove_pair_edges(dbl, 0, 1);
  CHECK(split.pair_count() == 0);
  CHECK_FALSE(split.connected());

  ChemicalGraph tri = build(t, {"C", "C", "C"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, 1);
  ChemicalGraph path = remove_pair_edges(tri, 0, 2);
  CHECK(classify(path) == ShapeClass::MultiTree);
  CHECK_THROWS_AS(remove_pair_edges(path, 0, 2), std::invalid_argument);
}

TEST_CASE("classify") {
  auto t = table_onc();
  // multi-edges are not cycles
  ChemicalGraph p3 = build(t, {"C", "C", "C"}, {{0, 1, 2}, {1, 2, 1}}, 2);
  CHECK(classify(p3) == ShapeClass::MultiTree);

  CHECK(classify(fixture_g0()) == ShapeClass::Monocyclic);
  CHECK(classify(fixture_h0()) == ShapeClass::BiBlock2Aug);

  // theta graph: two vertices joined by three paths -> cycles share edges
  ChemicalGraph theta =
      build(t, {"C", "C", "C", "C"}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {0, 3, 1}, {1, 3, 1}}, 1);
  CHECK(classify(theta) == ShapeClass::Shared2Aug);

  ChemicalGraph disc = build(t, {"C", "C", "C"}, {{0, 1, 1}}, 1);
  CHECK_THROWS_AS(classify(disc), std::invalid_argument);

  // two triangles sharing one vertex: still bi-block
  ChemicalGraph shared_v = fixture_h0();
  CHECK(classify(shared_v) == ShapeClass::BiBlock2Aug);

  // two disjoint triangles joined by a path
  ChemicalGraph twocyc = build(t, {"C", "C", "C", "C", "C", "C", "C"},
                               {{0, 1, 1},
                                {1, 2, 1},
                                {0, 2, 1},
                                {2, 3, 1},
                                {3, 4, 1},
                                {4, 5, 1},
                                {5, 6, 1},
                                {4, 6, 1}},
                               1);
  CHECK(classify(twocyc) == ShapeClass::BiBlock2Aug);
}

TEST_CASE("cycle_of") {
  auto t = table_onc();
  CHECK(cycle_of(fixture_g0()) == std::vector<int>{0, 1, 2});

  ChemicalGraph tri = build(t, {"C", "C", "C"}, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}}, 1);
  CHECK(cycle_of(tri) == std::vector<int>{0, 1, 2});

  ChemicalGraph six = build(
      t, {"C", "C", "C", "C", "C", "C"},
      {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {0, 5, 1}}, 1);
  CHECK(cycle_of(six) == std::vector<int>{0, 1, 2, 3, 4, 5});

  ChemicalGraph tree = build(t, {"C", "C"}, {{0, 1, 1}}, 1);
  CHECK_THROWS_AS(cycle_of(tree), std::invalid_argument);
}

TEST_CASE("edit invariants on random graphs") {
  auto t = table_onc();
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    ChemicalGraph g = random_connected(rng, t, 6, 2, it % 3);
    for (int v = 0; v < g.n(); ++v) CHECK(residual_degree(g, v) >= 0);
    CHECK(g.connected());
    // add then remove restores the multiplicity map
    std::vector<std::pair<int, int>> free;
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (!g.adjacent(u, v) && residual_degree(g, u) > 0 && residual_degree(g, v) > 0)
          free.emplace_back(u, v);
    if (free.empty()) continue;
    auto [u, v] = free[it % free.size()];
    ChemicalGraph h = remove_pair_edges(add_edges(g, u, v, 1), u, v);
    CHECK(h.pairs() == g.pairs());
  }
}

TEST_CASE("tree plus edge is monocyclic; monocyclic plus edge is 2-augmented") {
  auto t = table_onc();
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    ChemicalGraph tree = random_tree(rng, t, 7, 2);
    std::vector<std::pair<int, int>> free;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (!tree.adjacent(u, v) && residual_degree(tree, u) > 0 &&
            residual_degree(tree, v) > 0)
          free.emplace_back(u, v);
    if (free.empty()) continue;
    auto [u, v] = free[it % free.size()];
    ChemicalGraph mono = add_edges(tree, u, v, 1);
    CHECK(classify(mono) == ShapeClass::Monocyclic);

    std::vector<std::pair<int, int>> free2;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        if (!mono.adjacent(a, b) && residual_degree(mono, a) > 0 &&
            residual_degree(mono, b) > 0)
          free2.emplace_back(a, b);
    if (free2.empty()) continue;
    auto [a, b] = free2[it % free2.size()];
    ShapeClass s = classify(add_edges(mono, a, b, 1));
    CHECK((s == ShapeClass::BiBlock2Aug || s == ShapeClass::Shared2Aug));
  }
}

TEST_CASE("graph text format round trip and rejection") {
  auto t = table_onc();
  ChemicalGraph g0 = fixture_g0();
  std::ostringstream os;
  write_graph(os, g0, "g0");
  std::istringstream is(os.str());
  auto blocks = read_graphs(is, t, 3);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].id == "g0");
  CHECK(blocks[0].graph.pairs() == g0.pairs());

  auto reject = [&](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_graphs(in, t, 3), std::runtime_error);
  };
  reject("graph x\nn 2\nv 1 C\nv 2 C\ne 1 1 1\nend\n");          // self-loop
  reject("graph x\nn 2\nv 1 C\nv 2 C\ne 1 2 1\ne 1 2 1\nend\n");  // duplicate pair
  reject("graph x\nn 1\nv 1 Xx\nend\n");                          // unknown color
  reject("graph x\nn 2\nv 1 O\nv 2 O\ne 1 2 3\nend\n");           // valence overflow
  reject("graph x\nn 2\nv 1 C\nv 2 C\ne 1 2 1\n");                // missing end
}
