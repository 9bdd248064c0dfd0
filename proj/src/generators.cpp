#include "powerph/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "powerph/error.hpp"

namespace powerph {

namespace {

Graph make(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }

// Triangles of g, as sorted triples.
std::vector<Triangle> triangles_of(const Graph& g) {
  std::vector<Triangle> out;
  for (auto [u, v] : g.edges())
    for (Vertex w : g.neighbors(v))
      if (w > v && g.has_edge(u, w)) out.push_back({u, v, w});
  return out;
}

}  // namespace

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle graph needs n >= 3");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return make(n, e);
}

Graph path_graph(std::size_t n) {
  if (n < 1) throw InputError("path graph needs n >= 1");
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return make(n, e);
}

Graph complete_graph(std::size_t n) {
  if (n < 1) throw InputError("complete graph needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

Graph octahedron_graph() {
  std::vector<Edge> e;
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  return make(6, e);
}

Graph hypercube_skeleton(std::size_t d) {
  if (d < 1 || d > 15) throw InputError("hypercube dimension must be in 1..15");
  const std::size_t n = std::size_t{1} << d;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t b = 0; b < d; ++b) {
      Vertex v = u ^ (Vertex{1} << b);
      if (u < v) e.emplace_back(u, v);
    }
  return make(n, e);
}

Graph cube_with_diagonals() {
  Graph cube = hypercube_skeleton(3);
  std::vector<Edge> e = cube.edges();
  // Each face's diagonal runs through 000 or 111 (bits zyx), so 000 and 111
  // are the two degree-6 poles and no four vertices are pairwise adjacent.
  const std::vector<Edge> diagonals = {{0b000, 0b110}, {0b000, 0b101}, {0b000, 0b011},
                                       {0b001, 0b111}, {0b010, 0b111}, {0b100, 0b111}};
  e.insert(e.end(), diagonals.begin(), diagonals.end());
  Graph g = make(8, e);

  // The clique complex must be a 2-sphere: 12 triangles, each edge in two of
  // them, and no tetrahedra.
  auto tris = triangles_of(g);
  std::map<Edge, int> incidence;
  for (auto& t : tris) {
    ++incidence[{t[0], t[1]}];
    ++incidence[{t[0], t[2]}];
    ++incidence[{t[1], t[2]}];
    for (Vertex w = t[2] + 1; w < 8; ++w)
      if (g.has_edge(t[0], w) && g.has_edge(t[1], w) && g.has_edge(t[2], w))
        throw Error("cube_with_diagonals: unexpected tetrahedron");
  }
  bool sphere = g.num_edges() == 18 && tris.size() == 12 && incidence.size() == 18;
  for (auto& [edge, count] : incidence) sphere = sphere && count == 2;
  if (!sphere) throw Error("cube_with_diagonals: clique complex is not a 2-sphere");
  return g;
}

Graph thin_box(std::size_t m) {
  if (m < 1) throw InputError("thin box needs m >= 1");
  const std::size_t n = 4 * (m + 1);
  auto id = [](std::size_t ring, std::size_t j) { return static_cast<Vertex>(4 * ring + j % 4); };
  std::vector<Edge> e;
  for (std::size_t i = 0; i <= m; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      e.emplace_back(id(i, j), id(i, j + 1));
      if (i < m) {
        e.emplace_back(id(i, j), id(i + 1, j));
        e.emplace_back(id(i, j), id(i + 1, j + 1));
      }
    }
  e.emplace_back(id(0, 0), id(0, 2));
  e.emplace_back(id(m, 0), id(m, 2));
  return make(n, e);
}

std::vector<Triangle> thin_box_surface(std::size_t m) {
  if (m < 1) throw InputError("thin box needs m >= 1");
  auto id = [](std::size_t ring, std::size_t j) { return static_cast<Vertex>(4 * ring + j % 4); };
  std::vector<Triangle> out;
  auto add = [&](Vertex a, Vertex b, Vertex c) {
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    out.push_back(t);
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      add(id(i, j), id(i, j + 1), id(i + 1, j + 1));
      add(id(i, j), id(i + 1, j), id(i + 1, j + 1));
    }
  for (std::size_t ring : {std::size_t{0}, m}) {
    add(id(ring, 0), id(ring, 1), id(ring, 2));
    add(id(ring, 0), id(ring, 2), id(ring, 3));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<std::size_t, 4>> tetrahedron_surface_coordinates(std::size_t m) {
  if (m < 1) throw InputError("tetrahedron surface needs m >= 1");
  std::vector<std::array<std::size_t, 4>> pts;
  for (std::size_t a = 0; a <= m; ++a)
    for (std::size_t b = 0; a + b <= m; ++b)
      for (std::size_t c = 0; a + b + c <= m; ++c) {
        std::size_t d = m - a - b - c;
        if (a == 0 || b == 0 || c == 0 || d == 0) pts.push_back({a, b, c, d});
      }
  return pts;
}

namespace {

bool lattice_adjacent(const std::array<std::size_t, 4>& x, const std::array<std::size_t, 4>& y) {
  int plus = -1, minus = -1;
  for (int i = 0; i < 4; ++i) {
    auto xi = static_cast<long>(x[static_cast<std::size_t>(i)]);
    auto yi = static_cast<long>(y[static_cast<std::size_t>(i)]);
    if (yi == xi + 1 && plus < 0) plus = i;
    else if (yi == xi - 1 && minus < 0) minus = i;
    else if (yi != xi) return false;
  }
  if (plus < 0 || minus < 0) return false;
  // both points must lie in a common face: a shared zero coordinate elsewhere
  for (int r = 0; r < 4; ++r)
    if (r != plus && r != minus && x[static_cast<std::size_t>(r)] == 0) return true;
  return false;
}

}  // namespace

Graph tetrahedron_surface(std::size_t m) {
  auto pts = tetrahedron_surface_coordinates(m);
  std::vector<Edge> e;
  for (Vertex u = 0; u < pts.size(); ++u)
    for (Vertex v = u + 1; v < pts.size(); ++v)
      if (lattice_adjacent(pts[u], pts[v])) e.emplace_back(u, v);
  return make(pts.size(), e);
}

std::vector<Triangle> tetrahedron_surface_triangles(std::size_t m) {
  auto pts = tetrahedron_surface_coordinates(m);
  Graph g = tetrahedron_surface(m);
  std::vector<Triangle> out;
  for (const auto& t : triangles_of(g))
    for (std::size_t r = 0; r < 4; ++r)
      if (pts[t[0]][r] == 0 && pts[t[1]][r] == 0 && pts[t[2]][r] == 0) {
        out.push_back(t);
        break;
      }
  return out;
}

Graph gnp_random(std::size_t n, double p, std::uint64_t seed, std::size_t max_retries) {
  if (n < 1) throw InputError("gnp needs n >= 1");
  if (!(p > 0.0 && p <= 1.0)) throw InputError("gnp needs 0 < p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (std::size_t attempt = 0; attempt < max_retries; ++attempt) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    Graph g = make(n, e);
    if (g.is_connected()) return g;
  }
  throw InputError("gnp: no connected sample within the retry limit");
}

FamilySpec FamilySpec::parse(const std::string& text) {
  FamilySpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::stringstream ss(text.substr(colon + 1));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        std::size_t used = 0;
        spec.params.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw InputError("bad generator parameter '" + tok + "' in '" + text + "'");
      }
    }
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::ostringstream out;
  out << name;
  for (std::size_t i = 0; i < params.size(); ++i) out << (i ? "," : ":") << params[i];
  return out.str();
}

namespace {

std::size_t count_param(const FamilySpec& s, std::size_t i) {
  if (i >= s.params.size()) throw InputError(s.name + ": missing parameter " + std::to_string(i + 1));
  double v = s.params[i];
  if (v < 0 || v != std::floor(v)) throw InputError(s.name + ": parameter must be a nonnegative integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

Graph generate(const FamilySpec& s, std::uint64_t seed) {
  if (s.name == "cycle") return cycle_graph(count_param(s, 0));
  if (s.name == "path") return path_graph(count_param(s, 0));
  if (s.name == "complete") return complete_graph(count_param(s, 0));
  if (s.name == "octahedron") return octahedron_graph();
  if (s.name == "hypercube") return hypercube_skeleton(count_param(s, 0));
  if (s.name == "cube_with_diagonals") return cube_with_diagonals();
  if (s.name == "thin_box") return thin_box(count_param(s, 0));
  if (s.name == "tetrahedron_surface" || s.name == "tetrahedron") return tetrahedron_surface(count_param(s, 0));
  if (s.name == "gnp" || s.name == "gnp_random") {
    if (s.params.size() < 2) throw InputError("gnp needs n,p");
    return gnp_random(count_param(s, 0), s.params[1], seed);
  }
  throw InputError("unknown generator family '" + s.name + "'");
}

}  // namespace powerph
