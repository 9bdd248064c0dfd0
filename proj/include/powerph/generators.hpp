#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "powerph/graph.hpp"

namespace powerph {

using Triangle = std::array<Vertex, 3>;

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Octahedron boundary skeleton K_{2,2,2}; antipodes are (0,3), (1,4), (2,5).
Graph octahedron_graph();
/// Skeleton of the d-cube; vertex ids are the coordinate bit patterns.
Graph hypercube_skeleton(std::size_t d);
/// Cube skeleton plus one diagonal per face (8 vertices, 18 edges) whose
/// clique complex is a triangulated 2-sphere.
Graph cube_with_diagonals();

/// 1 x 1 x m box: rings i = 0..m of four vertices (id 4i + j); ring vertex j
/// joins ring i+1 at j and j+1 (mod 4); both end squares use diagonal (0, 2).
Graph thin_box(std::size_t m);
/// The 8m + 4 triangles of the box surface.
std::vector<Triangle> thin_box_surface(std::size_t m);

/// Degree-m edgewise subdivision of the tetrahedron boundary: lattice points
/// (a, b, c, d), a + b + c + d = m, with at least one zero coordinate.
Graph tetrahedron_surface(std::size_t m);
/// The 4m^2 triangles of the subdivided surface.
std::vector<Triangle> tetrahedron_surface_triangles(std::size_t m);
/// Barycentric lattice coordinates of every vertex of tetrahedron_surface(m).
std::vector<std::array<std::size_t, 4>> tetrahedron_surface_coordinates(std::size_t m);

/// Erdos-Renyi G(n, p) resampled until connected. Deterministic in seed.
Graph gnp_random(std::size_t n, double p, std::uint64_t seed, std::size_t max_retries = 10'000);

/// Named family with numeric parameters, e.g. "cycle:6", "gnp:12,0.3",
/// "thin_box:8", "cube_with_diagonals".
struct FamilySpec {
  std::string name;
  std::vector<double> params;

  static FamilySpec parse(const std::string& text);
  std::string to_string() const;
};

Graph generate(const FamilySpec& spec, std::uint64_t seed = 0);

}  // namespace powerph
