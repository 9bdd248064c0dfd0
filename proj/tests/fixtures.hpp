// Small hand-built complexes shared by the geometry tests.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "powerph/generators.hpp"
#include "powerph/geometry.hpp"
#include "powerph/graph.hpp"

namespace fixture {

using powerph::Vertex;
using Facets = std::vector<std::vector<Vertex>>;

inline Facets tetra_boundary(Vertex a, Vertex b, Vertex c, Vertex d) {
  return {{a, b, c}, {a, b, d}, {a, c, d}, {b, c, d}};
}

// antipodes (0,3), (1,4), (2,5)
inline Facets octahedron() {
  Facets out;
  for (Vertex a : {0u, 3u})
    for (Vertex b : {1u, 4u})
      for (Vertex c : {2u, 5u}) {
        std::vector<Vertex> t{a, b, c};
        std::sort(t.begin(), t.end());
        out.push_back(t);
      }
  return out;
}

inline Facets concat(Facets a, const Facets& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Graph whose edges are exactly the skeleton edges of the facets.
inline powerph::Graph skeleton_graph(const Facets& facets) {
  Vertex n = 0;
  std::vector<powerph::Edge> edges;
  for (const auto& f : facets)
    for (std::size_t i = 0; i < f.size(); ++i) {
      n = std::max(n, f[i] + 1);
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace_back(std::min(f[i], f[j]), std::max(f[i], f[j]));
    }
  return powerph::Graph::from_edges(n, edges);
}

// Cylinder of `rings` rings of `circ` vertices (id circ*i + j), each band
// split into triangles, closed by a cone vertex at either end.
inline Facets capped_cylinder(Vertex circ, Vertex rings) {
  Facets out;
  auto id = [&](Vertex i, Vertex j) { return circ * i + j % circ; };
  auto add = [&](std::vector<Vertex> t) {
    std::sort(t.begin(), t.end());
    out.push_back(t);
  };
  for (Vertex i = 0; i + 1 < rings; ++i)
    for (Vertex j = 0; j < circ; ++j) {
      add({id(i, j), id(i, j + 1), id(i + 1, j)});
      add({id(i, j + 1), id(i + 1, j), id(i + 1, j + 1)});
    }
  Vertex top = circ * rings, bottom = top + 1;
  for (Vertex j = 0; j < circ; ++j) {
    add({top, id(0, j), id(0, j + 1)});
    add({bottom, id(rings - 1, j), id(rings - 1, j + 1)});
  }
  return out;
}

inline Facets triangles(const std::vector<powerph::Triangle>& ts) {
  Facets out;
  for (const auto& t : ts) out.push_back({t[0], t[1], t[2]});
  return out;
}

// Relabels vertices by a random permutation; returns the relabeled facets and
// graph.
inline std::pair<Facets, powerph::Graph> relabel(const Facets& facets, const powerph::Graph& g, unsigned seed) {
  std::vector<Vertex> perm(g.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  Facets f2;
  for (auto f : facets) {
    for (auto& v : f) v = perm[v];
    std::sort(f.begin(), f.end());
    f2.push_back(f);
  }
  std::vector<powerph::Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return {f2, powerph::Graph::from_edges(g.num_vertices(), edges)};
}

}  // namespace fixture
