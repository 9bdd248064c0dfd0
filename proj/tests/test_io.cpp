#include <doctest.h>

#include <sstream>

#include "powerph/io.hpp"

using namespace powerph;

namespace {

PersistenceDiagram c6_diagram() {
  auto dm = shortest_paths(cycle_graph(6));
  return compute_pd(build_filtration(dm, 3, 3));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("diagram JSON") {
  auto j = to_json(c6_diagram());
  CHECK(j["infinite_death"].is_null());
  REQUIRE(j["dims"].size() == 3);
  CHECK(j["dims"]["2"] == json::parse("[[2,3]]"));
  CHECK(j["dims"]["1"] == json::parse("[[1,2]]"));
  auto d0 = j["dims"]["0"];
  CHECK(d0.size() == 6);
  CHECK(d0.back()[1].is_null());
  // stable across runs
  CHECK(to_json(c6_diagram()).dump() == j.dump());
}

TEST_CASE("diagram CSV") {
  std::ostringstream out;
  write_pd_csv(c6_diagram(), out);
  auto s = out.str();
  CHECK(s.rfind("dim,birth,death\n", 0) == 0);
  CHECK(s.find("0,0,inf\n") != std::string::npos);
  CHECK(s.find("2,2,3\n") != std::string::npos);
}

TEST_CASE("diagram SVG") {
  std::ostringstream out;
  write_pd_svg(c6_diagram(), out);
  auto s = out.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("stroke-dasharray") != std::string::npos);
  std::size_t circles = 0;
  for (auto p = s.find("<circle"); p != std::string::npos; p = s.find("<circle", p + 1)) ++circles;
  CHECK(circles == 8);
}

TEST_CASE("report JSON") {
  auto r = verify_bounds(cycle_graph(6), 3);
  auto j = to_json(r);
  CHECK(j["violations"] == 0);
  CHECK(j["rows"][0]["status"] == "ok");
  CHECK(j["rows"][0]["area_bound_rhs"] == 4);
  auto p = to_json(verify_pd1(cycle_graph(6)));
  CHECK(p["ok"] == true);
  CHECK(p["formula_pd"] == json::parse("[[1,2]]"));
  CHECK(p["diff"]["missing"].empty());
  auto b = to_json(shortest_h1_basis(hypercube_skeleton(3)));
  CHECK(b.size() == 5);
  CHECK(b[0]["length"] == 4);
}

TEST_CASE("metadata") {
  auto m = metadata({{"max_dim", 3}}, 0.5);
  CHECK(m["version"] == kVersion);
  CHECK(m["config"]["max_dim"] == 3);
  CHECK(m["wall_time_s"] == 0.5);
}

}
