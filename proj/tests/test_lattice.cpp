#include <doctest.h>

#include "perc/lattice.hpp"

using namespace perc;

TEST_CASE("dual_of maps through the shared midpoint") {
  // primal H(0,0) <-> dual V(0,-1), embedded (1/2,-1/2)-(1/2,1/2)
  Edge h = primal_h(0, 0);
  Edge d = dual_of(h);
  CHECK(d.lat == Lattice::dual);
  CHECK(d.o == Orientation::vertical);
  CHECK(d.base == Vertex{0, -1});
  // primal V(0,0) <-> dual H(-1,0)
  Edge v = primal_v(0, 0);
  Edge dv = dual_of(v);
  CHECK(dv.o == Orientation::horizontal);
  CHECK(dv.base == Vertex{-1, 0});
}

TEST_CASE("dual_of is an involution on B(5)") {
  for (const Edge& e : box_edges({{0, 0}, 5})) {
    CHECK(dual_of(dual_of(e)) == e);
    CHECK(dual_of(e).lat == Lattice::dual);
  }
}

TEST_CASE("shift_source examples and inverse pair") {
  CHECK(shift_source(primal_h(0, 0)) == primal_v(0, -1));
  CHECK(shift_source(primal_v(1, 0)) == primal_h(0, 0));
  for (const Edge& e : box_edges({{0, 0}, 5})) {
    CHECK(shift_target(shift_source(e)) == e);
    CHECK(shift_source(shift_target(e)) == e);
  }
  CHECK_THROWS_AS(shift_source(dual_of(primal_h(0, 0))), std::invalid_argument);
}

TEST_CASE("double shift_source of a horizontal edge moves base by (-1,-1)") {
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      Edge twice = shift_source(shift_source(primal_h(x, y)));
      CHECK(twice == primal_h(x - 1, y - 1));
    }
}

TEST_CASE("boundary_edges cardinality 8n") {
  CHECK(boundary_edges({0, 0}, 1).size() == 8);
  CHECK(boundary_edges({0, 0}, 2).size() == 16);
  for (int n = 1; n <= 64; n += 7)
    CHECK(boundary_edges({3, -2}, n).size() == (std::size_t)8 * n);
  for (const Edge& e : boundary_edges({0, 0}, 2)) {
    CHECK(in_box({{0, 0}, 2}, e));
    CHECK(linf(edge_from(e), {0, 0}) == 2);
    CHECK(linf(edge_to(e), {0, 0}) == 2);
  }
  CHECK_THROWS_AS(boundary_edges({0, 0}, 0), std::invalid_argument);
}

TEST_CASE("n0") {
  CHECK(n0(3) == 1);
  CHECK(n0(8) == 1);
  CHECK(n0(9) == 2);
  CHECK_THROWS_AS(n0(0), std::invalid_argument);
}

TEST_CASE("set_distance") {
  std::vector<Edge> a{primal_h(0, 0)};
  std::vector<Edge> b{primal_h(3, 0)};
  CHECK(set_distance(a, a) == 0.0);
  CHECK(set_distance(a, b) == 2.0);
  CHECK(set_distance(a, b) == set_distance(b, a));
  CHECK_THROWS_AS(set_distance({}, b), std::invalid_argument);
}

TEST_CASE("annulus edge set is box difference") {
  Annulus a{{0, 0}, 2, 5};
  auto ann = annulus_edges(a);
  auto outer = box_edges({{0, 0}, 5});
  auto inner = box_edges({{0, 0}, 2});
  CHECK(ann.size() + inner.size() == outer.size());
  for (const Edge& e : ann) {
    CHECK(in_annulus(a, e));
    CHECK(in_box({{0, 0}, 5}, e));
    CHECK(!in_box({{0, 0}, 2}, e));
  }
}

TEST_CASE("ring_vertices ccw from the east axis") {
  auto ring = ring_vertices({0, 0}, 2);
  CHECK(ring.size() == 16);
  CHECK(ring.front() == Vertex{2, 0});
  CHECK(ring[2] == Vertex{2, 2});   // after walking up the east side
  CHECK(ring[6] == Vertex{-2, 2});  // along the top
  for (Vertex v : ring) CHECK(linf(v, {0, 0}) == 2);
}

TEST_CASE("EdgeIndexer round trip and EdgeSet membership") {
  EdgeIndexer idx({1, -1}, 4);
  for (const Edge& e : box_edges({{1, -1}, 4})) {
    int i = idx.index(e);
    REQUIRE(i >= 0);
    CHECK(idx.edge(i) == e);
    CHECK(idx.valid(i));
  }
  EdgeSet set(idx);
  Edge e = primal_v(1, 0);
  CHECK(!set.contains(e));
  set.insert(e);
  CHECK(set.contains(e));
  set.erase(e);
  CHECK(!set.contains(e));
}
