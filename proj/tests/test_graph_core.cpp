#include <doctest.h>

#include <set>

#include "folkman/circulant.hpp"
#include "folkman/graph.hpp"
#include "folkman/registry.hpp"
#include "folkman/triangles.hpp"
#include "support.hpp"

using namespace folkman;
using folkman::testing::naive_has_k4;
using folkman::testing::naive_triangles;
using folkman::testing::random_graph;

TEST_CASE("graph canonicalizes edges and indexes them") {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  REQUIRE(g.num_edges() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 3});
  CHECK(g.edge(2) == Edge{1, 2});
  CHECK(g.edge_index(3, 0) == 1);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.degree(1) == 2);
  CHECK(g.has_edge(2, 1));
}

TEST_CASE("graph rejects malformed edge lists") {
  CHECK_THROWS_AS(Graph(2, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST_CASE("edge_index agrees with a linear scan on random graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(25, 0.3, seed);
    for (Vertex u = 0; u < 25; ++u) {
      for (Vertex v = 0; v < 25; ++v) {
        EdgeId expect = -1;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
          if (g.edge(e) == Edge{std::min(u, v), std::max(u, v)}) expect = e;
        }
        CHECK(g.edge_index(u, v) == (u == v ? -1 : expect));
      }
    }
  }
}

TEST_CASE("power residues and cyclic subgroups") {
  CHECK(power_residues(13, 2) == std::vector<std::int64_t>{1, 3, 4, 9, 10, 12});
  CHECK(cyclic_subgroup(17, 2) == std::vector<std::int64_t>{1, 2, 4, 8, 9, 13, 15, 16});
  CHECK(multiplicative_order(2, 17) == 8);
  CHECK(multiplicative_order(53, 785) == static_cast<std::int64_t>(cyclic_subgroup(785, 53).size()));
}

TEST_CASE("connection sets must be symmetric and avoid zero") {
  CHECK_NOTHROW(ConnectionSet(7, {1, 6}));
  CHECK_THROWS_AS(ConnectionSet(7, {1, 2}), GraphError);
  CHECK_THROWS_AS(ConnectionSet(7, {0, 1, 6}), GraphError);
}

TEST_CASE("residue and power circulants") {
  // The squares and the subgroup <2> coincide mod 17: both give Paley(17).
  const Graph paley = make_residue_circulant(17, 2);
  CHECK(paley == make_power_circulant(17, 2));
  CHECK(paley.num_edges() == 68);
  CHECK(naive_triangles(paley) == 68);
  CHECK(is_k4_free(paley));
  // -1 is not a square mod 7.
  CHECK_THROWS_AS(make_residue_circulant(7, 2), GraphError);
  CHECK_THROWS_AS(make_power_circulant(10, 2), GraphError);
}

TEST_CASE("progression deletion and cone vertex") {
  const RelabeledGraph r = delete_progression(cycle_graph(10), 3, 4);
  CHECK(r.graph.num_vertices() == 6);
  CHECK(r.original_label == std::vector<Vertex>{1, 2, 4, 5, 7, 8});
  CHECK(r.graph.num_edges() == 3);  // 1-2, 4-5, 7-8

  const Graph k4 = add_cone_vertex(complete_graph(3), {0, 1, 2});
  CHECK(k4 == complete_graph(4));
  CHECK_THROWS_AS(add_cone_vertex(complete_graph(3), {0, 0}), GraphError);
  CHECK_THROWS_AS(add_cone_vertex(complete_graph(3), {3}), GraphError);
}

TEST_CASE("triangle enumeration matches the triple-loop oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Vertex n = 10 + static_cast<Vertex>(seed % 50);
    const Graph g = random_graph(n, 0.25, seed);
    const auto tris = enumerate_triangles(g);
    CHECK(static_cast<std::int64_t>(tris.size()) == naive_triangles(g));
    CHECK(count_triangles(g) == naive_triangles(g));
    for (const Triangle& t : tris) {
      CHECK(t.a < t.b);
      CHECK(t.b < t.c);
      CHECK(t.e1 == g.edge_index(t.a, t.b));
      CHECK(t.e2 == g.edge_index(t.a, t.c));
      CHECK(t.e3 == g.edge_index(t.b, t.c));
    }
    CHECK(is_k4_free(g) == !naive_has_k4(g));
  }
}

TEST_CASE("k4 witness is a clique") {
  const Graph g = random_graph(30, 0.6, 5);
  const auto w = find_k4(g);
  REQUIRE(w.has_value());
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(g.has_edge((*w)[i], (*w)[j]));
}

TEST_CASE("triangle graph of K3 and K5") {
  const TriangleGraph k3 = build_triangle_graph(complete_graph(3));
  CHECK(k3.h.num_vertices() == 3);
  CHECK(k3.h.num_edges() == 3);
  CHECK(k3.two_t() == 2);

  CHECK_THROWS_AS(build_triangle_graph(complete_graph(5)), K4FoundError);
  const TriangleGraph k5 = build_triangle_graph(complete_graph(5), K4Policy::kAllow);
  CHECK(k5.h.num_vertices() == 10);
  CHECK(k5.h.num_edges() == 30);  // the line graph of K5
  CHECK(k5.two_t() == 20);
}

TEST_CASE("triangle graph edges are the pairs sharing a triangle") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(18, 0.35, 100 + seed);
    const TriangleGraph tg = build_triangle_graph(g, K4Policy::kAllow);
    CHECK(tg.h.num_edges() == 3 * tg.num_triangles());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (EdgeId f = e + 1; f < g.num_edges(); ++f) {
        const Edge a = g.edge(e), b = g.edge(f);
        std::set<Vertex> s{a.u, a.v, b.u, b.v};
        bool common = false;
        if (s.size() == 3) {
          std::vector<Vertex> x(s.begin(), s.end());
          common = g.has_edge(x[0], x[1]) && g.has_edge(x[0], x[2]) && g.has_edge(x[1], x[2]);
        }
        CHECK(tg.h.has_edge(e, f) == common);
      }
    }
  }
}

TEST_CASE("coloring and cut convert both ways") {
  const TriangleGraph tg = build_triangle_graph(complete_graph(3));
  const std::vector<std::int8_t> x{1, -1, 1};
  const EdgeColoring c = coloring_from_cut(tg, x);
  CHECK(c.color == std::vector<std::uint8_t>{0, 1, 0});
  CHECK(cut_from_coloring(c) == x);
  CHECK_THROWS(coloring_from_cut(tg, std::vector<std::int8_t>{1, 0, 1}));
  CHECK_THROWS(coloring_from_cut(tg, std::vector<std::int8_t>{1, 1}));
  CHECK(count_monochromatic_triangles(tg.host, c) == 0);
  CHECK(count_monochromatic_triangles(tg.host, EdgeColoring{{1, 1, 1}}) == 1);
}

TEST_CASE("registry builds small constructions with their counts") {
  const Graph l17 = lookup_named("l17_2");
  CHECK(l17.num_vertices() == 17);
  CHECK(count_triangles(l17) == 68);
  const Graph l127 = lookup_named("l127_5");
  CHECK(2 * count_triangles(l127) == 19558);
  CHECK(is_k4_free(l127));
  CHECK_THROWS_AS(lookup_named("nope"), UnknownNameError);
}

TEST_CASE("recipes") {
  CHECK(build_from_recipe("K6").value() == complete_graph(6));
  CHECK(build_from_recipe("C5").value() == cycle_graph(5));
  CHECK(build_from_recipe("L(17,2)").value() == make_power_circulant(17, 2));
  CHECK(build_from_recipe("G(13,2)").value() == make_residue_circulant(13, 2));
  CHECK_FALSE(build_from_recipe("banana").has_value());
}

TEST_CASE("cone list is the published one") {
  CHECK(kG786ConeTargets.size() == 60);
  CHECK(kG786ConeTargets.front() == 0);
  CHECK(kG786ConeTargets.back() == 645);
  CHECK(std::is_sorted(kG786ConeTargets.begin(), kG786ConeTargets.end()));
}
