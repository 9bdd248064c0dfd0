#include <doctest.h>

#include <set>

#include "powerph/error.hpp"
#include "powerph/generators.hpp"

using namespace powerph;

TEST_SUITE("generators") {

TEST_CASE("basic families") {
  CHECK(cycle_graph(6).num_edges() == 6);
  CHECK(path_graph(6).num_edges() == 5);
  CHECK(complete_graph(5).num_edges() == 10);
  CHECK(octahedron_graph().num_edges() == 12);
  CHECK_FALSE(octahedron_graph().has_edge(0, 3));
  CHECK(hypercube_skeleton(3).num_edges() == 12);
  CHECK(hypercube_skeleton(4).num_vertices() == 16);
  CHECK(cube_with_diagonals().num_vertices() == 8);
  CHECK(cube_with_diagonals().num_edges() == 18);
  CHECK_THROWS_AS(cycle_graph(2), InputError);
}

TEST_CASE("thin box") {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto g = thin_box(m);
    CHECK(g.num_vertices() == 4 * (m + 1));
    auto tris = thin_box_surface(m);
    CHECK(tris.size() == 8 * m + 4);
    for (const auto& t : tris) {
      CHECK(g.has_edge(t[0], t[1]));
      CHECK(g.has_edge(t[1], t[2]));
      CHECK(g.has_edge(t[0], t[2]));
    }
    // Euler characteristic of a sphere
    CHECK(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + static_cast<long>(tris.size()) == 2);
  }
}

TEST_CASE("tetrahedron surface") {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto g = tetrahedron_surface(m);
    CHECK(g.num_vertices() == 2 * m * m + 2);
    CHECK(tetrahedron_surface_triangles(m).size() == 4 * m * m);
    CHECK(tetrahedron_surface_coordinates(m).size() == g.num_vertices());
    for (const auto& c : tetrahedron_surface_coordinates(m)) CHECK(c[0] + c[1] + c[2] + c[3] == m);
    CHECK(static_cast<long>(g.num_vertices()) - static_cast<long>(g.num_edges()) + 4 * static_cast<long>(m * m) == 2);
  }
}

TEST_CASE("random graphs are connected and deterministic") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto g = gnp_random(12, 0.3, seed);
    CHECK(g.is_connected());
    CHECK(g == gnp_random(12, 0.3, seed));
  }
  std::set<std::size_t> sizes;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) sizes.insert(gnp_random(12, 0.3, seed).num_edges());
  CHECK(sizes.size() > 1);
  CHECK_THROWS_AS(gnp_random(10, 0.0, 1), InputError);
  CHECK_THROWS_AS(gnp_random(30, 0.01, 1, 5), InputError);
}

TEST_CASE("family specs") {
  auto s = FamilySpec::parse("gnp:12,0.3");
  CHECK(s.name == "gnp");
  CHECK(s.params == std::vector<double>{12, 0.3});
  CHECK(FamilySpec::parse("cube_with_diagonals").params.empty());
  CHECK(FamilySpec::parse(s.to_string()).params == s.params);
  CHECK(generate(FamilySpec::parse("cycle:7")) == cycle_graph(7));
  CHECK(generate(FamilySpec::parse("thin_box:3")) == thin_box(3));
  CHECK(generate(FamilySpec::parse("gnp:12,0.3"), 5) == gnp_random(12, 0.3, 5));
  CHECK_THROWS_AS(generate(FamilySpec::parse("nosuch:3")), InputError);
  CHECK_THROWS_AS(generate(FamilySpec::parse("cycle")), InputError);
  CHECK_THROWS_AS(FamilySpec::parse("cycle:x"), InputError);
}

}
