#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "powerph/error.hpp"
#include "powerph/filtration.hpp"
#include "powerph/generators.hpp"

using namespace powerph;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("filtration") {

TEST_CASE("C6 at scale 2 is the octahedron") {
  auto fc = build_filtration(shortest_paths(cycle_graph(6)), 3, 3);
  CHECK(fc.count(0, 2) == 6);
  CHECK(fc.count(1, 2) == 12);
  CHECK(fc.count(2, 2) == 8);
  CHECK(fc.count(3, 2) == 0);
  CHECK(snapshot(fc, 2).size() == 26);
  CHECK(fc.prefix_end(2) == 26);
  CHECK(fc.count(3) == 15);  // C(6,4) at scale 3
}

TEST_CASE("values are max pairwise distances") {
  auto fc = build_filtration(shortest_paths(path_graph(3)), 2, 2);
  std::vector<Vertex> e01{0, 1}, e02{0, 2}, t{0, 1, 2};
  CHECK(fc.value(fc.id_of(e01)) == 1);
  CHECK(fc.value(fc.id_of(e02)) == 2);
  CHECK(fc.value(fc.id_of(t)) == 2);
  std::vector<Vertex> bad{0, 3};
  CHECK_FALSE(fc.find(bad).has_value());
  CHECK_THROWS_AS(fc.id_of(bad), InputError);
}

TEST_CASE("snapshot at 0 holds only vertices") {
  auto fc = build_filtration(shortest_paths(cycle_graph(5)), 2, 2);
  auto s = snapshot(fc, 0);
  CHECK(s.size() == 5);
  for (auto id : s) CHECK(fc.dim(id) == 0);
}

TEST_CASE("order is (value, dim, lex) and faces precede cofaces") {
  auto fc = build_filtration(shortest_paths(gnp_random(14, 0.25, 5)), 3, 4);
  for (SimplexId id = 1; id < fc.size(); ++id) {
    auto a = std::make_tuple(fc.value(id - 1), fc.dim(id - 1));
    auto b = std::make_tuple(fc.value(id), fc.dim(id));
    REQUIRE(a <= b);
    if (a == b) {
      auto va = fc.vertices(id - 1), vb = fc.vertices(id);
      CHECK(std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end()));
    }
  }
  for (SimplexId id = 0; id < fc.size(); ++id)
    for (auto f : fc.boundary(id)) {
      CHECK(f < id);
      CHECK(fc.value(f) <= fc.value(id));
      CHECK(fc.dim(f) == fc.dim(id) - 1);
    }
}

TEST_CASE("simplices match brute-force clique enumeration") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto dm = shortest_paths(gnp_random(11, 0.3, seed));
    for (int scale = 1; scale <= dm.diameter(); ++scale) {
      auto fc = build_filtration(dm, 3, scale);
      auto brute = oracle::all_cliques(dm, 3, scale);
      REQUIRE(fc.size() == brute.size());
      for (const auto& s : brute) {
        auto id = fc.find(s.vertices);
        REQUIRE(id.has_value());
        CHECK(fc.value(*id) == s.value);
      }
    }
  }
}

TEST_CASE("at the diameter every subset is present") {
  auto dm = shortest_paths(gnp_random(10, 0.3, 2));
  auto fc = build_filtration(dm, 4, dm.diameter());
  for (int k = 0; k <= 4; ++k) CHECK(fc.count(k) == binom(10, k + 1));
}

TEST_CASE("deterministic and thread independent") {
  auto dm = shortest_paths(gnp_random(16, 0.2, 9));
  auto a = build_filtration(dm, 4, dm.diameter());
  auto b = build_filtration(dm, 4, dm.diameter());
  auto c = build_filtration_serial(dm, 4, dm.diameter());
  CHECK(a == b);
  CHECK(a == c);
  std::ostringstream sa, sc;
  dump_filtration(a, sa);
  dump_filtration(c, sc);
  CHECK(sa.str() == sc.str());
}

TEST_CASE("dump format") {
  auto fc = build_filtration(shortest_paths(path_graph(2)), 1, 1);
  std::ostringstream out;
  dump_filtration(fc, out);
  CHECK(out.str() == "0 0 0\n0 0 1\n1 1 0 1\n");
}

TEST_CASE("simplex budget") {
  auto dm = shortest_paths(cycle_graph(14));
  FiltrationOptions opts;
  opts.simplex_budget = 100;
  CHECK_THROWS_AS(build_filtration(dm, 5, dm.diameter(), opts), ResourceError);
  CHECK_THROWS_AS(build_filtration_serial(dm, 5, dm.diameter(), opts), ResourceError);
}

TEST_CASE("bad arguments") {
  auto dm = shortest_paths(cycle_graph(5));
  CHECK_THROWS_AS(build_filtration(dm, -1, 2), InputError);
  CHECK_THROWS_AS(build_filtration(dm, 2, -1), InputError);
}

}
