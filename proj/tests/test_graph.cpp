#include <doctest.h>

#include "caykit/cayley.hpp"
#include "caykit/multigraph.hpp"
#include "helpers.hpp"

using namespace caykit;

TEST_CASE("cayley ball graphs") {
  SUBCASE("Z at radius 3 is the path on 7 vertices") {
    Group g(GroupSpec::free_abelian(1));
    Multigraph w = cayley_ball_graph(g, g.default_generators(), 3, 0);
    CHECK(w.n == 7);
    CHECK(w.edge_count() == 6);
    int leaves = 0;
    for (int v = 0; v < w.n; ++v)
      if (w.degree(v) == 1) ++leaves;
    CHECK(leaves == 2);
  }
  SUBCASE("Z*Z_3 windows are triangles joined in a tree pattern") {
    Group g(GroupSpec::free_product_z_z3());
    Ball ball;
    Multigraph w = cayley_ball_graph(g, g.default_generators(), 2, 0, &ball);
    // Triangle through the identity: e - u - u^2 - e.
    int e = ball.index_of(g.identity());
    int u = ball.index_of(g.parse("u"));
    int uu = ball.index_of(g.parse("u u"));
    CHECK(w.edges.count({std::min(e, u), std::max(e, u)}));
    CHECK(w.edges.count({std::min(u, uu), std::max(u, uu)}));
    CHECK(w.edges.count({std::min(e, uu), std::max(e, uu)}));
    // Triangle count equals the number of complete u-cosets: window radius 2
    // holds the identity triangle and its two t-translates.
    long long triangles = 0;
    auto adj = w.simple_adj();
    for (int a = 0; a < w.n; ++a)
      for (int b : adj[a])
        for (int c : adj[b])
          if (a < b && b < c &&
              std::binary_search(adj[a].begin(), adj[a].end(), c))
            ++triangles;
    CHECK(triangles == 3);
  }
  SUBCASE("Z^2 radius 2 has 13 vertices with degree 4 at the center") {
    Group g(GroupSpec::free_abelian(2));
    Ball ball;
    Multigraph w = cayley_ball_graph(g, g.default_generators(), 2, 1, &ball);
    CHECK(w.n == 13);
    CHECK(w.degree(ball.index_of(g.identity())) == 4);
    CHECK(w.interior_vertices().size() == 5);
  }
}

TEST_CASE("edge doubling") {
  Multigraph single = Multigraph::with_vertices(2);
  single.add_edge(0, 1);
  Multigraph d = double_edges(single);
  CHECK(d.degree(0) == 2);
  CHECK(d.degree(1) == 2);
  CHECK(d.edge_count() == 2);

  Multigraph tri = make_cycle(3);
  Multigraph dt = double_edges(tri);
  for (int v = 0; v < 3; ++v) CHECK(dt.degree(v) == 4);

  // doubling makes every degree even, multiplicities included
  Multigraph m = Multigraph::with_vertices(4);
  m.add_edge(0, 1, 3);
  m.add_edge(1, 2);
  m.add_edge(2, 2);  // loop
  m.add_edge(2, 3);
  Multigraph dm = double_edges(m);
  for (int v = 0; v < dm.n; ++v) CHECK(dm.degree(v) % 2 == 0);
  CHECK(dm.edge_count() == 2 * m.edge_count());
  CHECK(dm.connected() == m.connected());
}

TEST_CASE("power graphs") {
  SUBCASE("k = 1 is the simple support") {
    Multigraph m = Multigraph::with_vertices(3);
    m.add_edge(0, 1, 2);
    m.add_edge(1, 1);
    Multigraph p = power_graph(m, 1);
    CHECK(p.edge_count() == 1);
    CHECK(p.edges.count({0, 1}) == 1);
  }
  SUBCASE("P4 squared adds exactly the distance-2 chords") {
    Multigraph p4 = make_path(4);
    Multigraph sq = power_graph(p4, 2);
    auto dist = testing::floyd_distances(p4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        CHECK(sq.edges.count({i, j}) == (dist[i][j] <= 2 ? 1u : 0u));
  }
  SUBCASE("C6 cubed is complete") {
    Multigraph k = power_graph(make_cycle(6), 3);
    CHECK(k.edge_count() == 15);
  }
  SUBCASE("bilipschitz sandwich between the metrics") {
    Multigraph g = make_grid(3, 3);
    for (int k : {2, 3}) {
      Multigraph p = power_graph(g, k);
      auto dg = testing::floyd_distances(g);
      auto dp = testing::floyd_distances(p);
      for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) {
          CHECK(dp[i][j] <= dg[i][j]);
          CHECK(dg[i][j] <= k * dp[i][j]);
        }
    }
  }
}

TEST_CASE("neighborhoods") {
  Multigraph g = make_grid(3, 3);
  std::vector<int> center{4};
  CHECK(neighborhood(g, center, 0) == center);
  CHECK(neighborhood(g, center, 1).size() == 5);
  // monotone in k and in A
  auto n1 = neighborhood(g, center, 1);
  auto n2 = neighborhood(g, center, 2);
  CHECK(std::includes(n2.begin(), n2.end(), n1.begin(), n1.end()));
  auto bigger = neighborhood(g, {0, 4}, 1);
  CHECK(std::includes(bigger.begin(), bigger.end(), n1.begin(), n1.end()));
}

TEST_CASE("handshake identity") {
  Multigraph m = Multigraph::with_vertices(5);
  m.add_edge(0, 1, 2);
  m.add_edge(1, 2);
  m.add_edge(3, 3, 2);  // loops
  m.add_edge(2, 4);
  long long total = 0;
  for (int v = 0; v < m.n; ++v) total += m.degree(v);
  CHECK(total == 2 * m.edge_count());
}

TEST_CASE("path validators") {
  Multigraph tri = make_cycle(3);
  PathSeq walk;
  walk.verts = {0, 1, 2, 0};
  CHECK(is_walk(tri, walk));
  CHECK(is_eulerian_circuit(tri, walk));
  PathSeq ham;
  ham.verts = {1, 0, 2};
  CHECK(is_hamiltonian_path(tri, ham));
  ham.verts = {1, 0, 1};
  CHECK_FALSE(is_hamiltonian_path(tri, ham));
  walk.verts = {0, 2};
  CHECK_FALSE(is_eulerian_circuit(tri, walk));
}

TEST_CASE("dot and builders") {
  Multigraph m = make_star(3);
  std::string dot = to_dot(m);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(make_complete(4).edge_count() == 6);
  CHECK(make_grid(4, 4).edge_count() == 24);
}
