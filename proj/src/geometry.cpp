#include "powerph/geometry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "powerph/detail/echelon.hpp"
#include "powerph/error.hpp"

namespace powerph {

namespace {

using Local = std::uint32_t;

std::string face_text(const std::vector<Vertex>& f) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  out << '}';
  return out.str();
}

void require_surface(const SupportComplex& s) {
  if (s.dim() != 2) throw InputError("operation needs a 2-dimensional support");
}

}  // namespace

SupportComplex::SupportComplex(int dim, std::vector<std::vector<Vertex>> facets, const DistanceMatrix& ambient,
                               Scale scale)
    : dim_(dim), scale_(scale), ambient_(&ambient) {
  if (dim < 1) throw InputError("support needs dimension >= 1");
  if (scale < 1) throw InputError("support needs scale >= 1");
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.size() != static_cast<std::size_t>(dim) + 1 || std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InputError("facet " + face_text(f) + " is not a " + std::to_string(dim) + "-simplex");
    if (f.back() >= ambient.size()) throw InputError("facet " + face_text(f) + " leaves the ambient graph");
  }
  std::sort(facets.begin(), facets.end());
  if (auto dup = std::adjacent_find(facets.begin(), facets.end()); dup != facets.end())
    throw InputError("facet " + face_text(*dup) + " listed twice");

  for (const auto& f : facets) global_.insert(global_.end(), f.begin(), f.end());
  std::sort(global_.begin(), global_.end());
  global_.erase(std::unique(global_.begin(), global_.end()), global_.end());

  const std::size_t n = global_.size();
  adj_.resize(n);
  vertex_facets_.resize(n);
  std::map<std::vector<Local>, std::uint32_t> face_index;
  for (const auto& gf : facets) {
    std::vector<Local> f;
    for (Vertex v : gf) f.push_back(static_cast<Local>(local(v)));
    auto fi = static_cast<std::uint32_t>(facets_.size());
    for (std::size_t a = 0; a < f.size(); ++a) {
      vertex_facets_[f[a]].push_back(fi);
      for (std::size_t b = a + 1; b < f.size(); ++b) {
        adj_[f[a]].push_back(f[b]);
        adj_[f[b]].push_back(f[a]);
      }
      std::vector<Local> face;
      for (std::size_t b = 0; b < f.size(); ++b)
        if (b != a) face.push_back(f[b]);
      auto [it, fresh] = face_index.emplace(face, static_cast<std::uint32_t>(faces_.size()));
      if (fresh) {
        faces_.push_back(face);
        face_cofacets_.emplace_back();
      }
      face_cofacets_[it->second].push_back(fi);
    }
    facets_.push_back(std::move(f));
  }
  for (auto& a : adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  std::vector<std::string> odd;
  for (const auto& [face, idx] : face_index)
    if (face_cofacets_[idx].size() % 2) {
      std::vector<Vertex> g;
      for (Local l : face) g.push_back(global_[l]);
      odd.push_back(face_text(g));
    }
  if (!odd.empty()) {
    std::string msg = "support has nonzero boundary (" + std::to_string(odd.size()) + " faces):";
    for (std::size_t i = 0; i < odd.size() && i < 20; ++i) msg += " " + odd[i];
    if (odd.size() > 20) msg += " ...";
    throw InputError(msg);
  }
}

SupportComplex SupportComplex::from_chain(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient,
                                          Scale scale) {
  if (ambient.size() != fc.num_vertices()) throw InputError("ambient metric does not match the filtration");
  if (chain_value(fc, c) > scale) throw InputError("chain is not supported at the given scale");
  std::vector<std::vector<Vertex>> facets;
  for (SimplexId id : c.support) {
    if (fc.dim(id) != c.dim) throw InputError("chain mixes dimensions");
    auto vs = fc.vertices(id);
    facets.emplace_back(vs.begin(), vs.end());
  }
  return SupportComplex(c.dim, std::move(facets), ambient, scale);
}

bool SupportComplex::contains(Vertex v) const { return std::binary_search(global_.begin(), global_.end(), v); }

std::size_t SupportComplex::local(Vertex v) const {
  auto it = std::lower_bound(global_.begin(), global_.end(), v);
  if (it == global_.end() || *it != v) throw InputError("vertex " + std::to_string(v) + " is not in the support");
  return static_cast<std::size_t>(it - global_.begin());
}

std::vector<std::vector<Vertex>> SupportComplex::facets() const {
  std::vector<std::vector<Vertex>> out;
  for (const auto& f : facets_) {
    std::vector<Vertex> g;
    for (Local l : f) g.push_back(global_[l]);
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<std::vector<Vertex>, std::size_t>> SupportComplex::face_incidence() const {
  std::vector<std::pair<std::vector<Vertex>, std::size_t>> out;
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    std::vector<Vertex> g;
    for (Local l : faces_[i]) g.push_back(global_[l]);
    out.emplace_back(std::move(g), face_cofacets_[i].size());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> SupportComplex::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Local l : adj_[local(v)]) out.push_back(global_[l]);
  return out;
}

std::vector<int> SupportComplex::local_distances(std::size_t source) const {
  std::vector<int> dist(global_.size(), -1);
  std::vector<std::size_t> queue{source};
  dist[source] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Local w : adj_[queue[h]])
      if (dist[w] < 0) {
        dist[w] = dist[queue[h]] + 1;
        queue.push_back(w);
      }
  return dist;
}

std::vector<int> SupportComplex::distances_from(Vertex v) const { return local_distances(local(v)); }

std::vector<std::vector<Vertex>> SupportComplex::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(global_.size(), 0);
  for (std::size_t s = 0; s < global_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    auto dist = local_distances(s);
    for (std::size_t i = 0; i < dist.size(); ++i)
      if (dist[i] >= 0) {
        seen[i] = 1;
        comp.push_back(global_[i]);
      }
    out.push_back(std::move(comp));
  }
  return out;
}

int SupportComplex::metric_distance(Vertex a, Vertex b, SliceMetric metric) const {
  int d = (*ambient_)(a, b);
  if (metric == SliceMetric::skeleton) d = (d + scale_ - 1) / scale_;
  return d;
}

SupportSurface support_surface(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient,
                               Scale scale) {
  if (c.dim != 2) throw InputError("support_surface needs a 2-chain");
  return SupportComplex::from_chain(fc, c, ambient, scale);
}

// ---------------------------------------------------------------------------
// pinch points and injectivity radius

namespace {

bool link_is_cycle(const SupportSurface& s, std::size_t v) {
  std::map<Local, std::vector<Local>> link;
  for (auto fi : s.facets_of_vertex()[v]) {
    Local other[2];
    int k = 0;
    for (Local w : s.local_facets()[fi])
      if (w != v) other[k++] = w;
    link[other[0]].push_back(other[1]);
    link[other[1]].push_back(other[0]);
  }
  if (link.size() < 3) return false;
  for (const auto& [w, nb] : link)
    if (nb.size() != 2) return false;
  // connected: walk around from the first vertex
  Local start = link.begin()->first, prev = start, cur = link.begin()->second[0];
  std::size_t steps = 1;
  while (cur != start) {
    const auto& nb = link[cur];
    Local next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    ++steps;
  }
  return steps == link.size();
}

std::vector<char> pinch_flags(const SupportSurface& s, bool parallel) {
  const auto n = static_cast<std::int64_t>(s.num_vertices());
  std::vector<char> pinch(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t i = 0; i < n; ++i)
    pinch[static_cast<std::size_t>(i)] = !link_is_cycle(s, static_cast<std::size_t>(i));
  return pinch;
}

// B'_i(v) deformation retracts onto the full subcomplex B_{i-1}(v), and it is
// an open surface iff every vertex of B_{i-1} has a cycle link. A connected
// compact surface with boundary is a disk iff chi = 1 (and it has boundary,
// which holds while C_i is nonempty).
int rho_local(const SupportSurface& s, std::size_t v, const std::vector<char>& pinch) {
  if (pinch[v]) return 0;
  auto dist = s.local_distances(v);
  int e = *std::max_element(dist.begin(), dist.end());
  std::vector<long> chi(static_cast<std::size_t>(e) + 1, 0);  // contribution by level
  std::vector<char> level_ok(static_cast<std::size_t>(e) + 1, 1);
  for (std::size_t w = 0; w < dist.size(); ++w) {
    if (dist[w] < 0) continue;
    auto lvl = static_cast<std::size_t>(dist[w]);
    chi[lvl] += 1;
    if (pinch[w]) level_ok[lvl] = 0;
    for (Local u : s.local_adjacency()[w])
      if (u > w) chi[static_cast<std::size_t>(std::max(dist[w], dist[u]))] -= 1;
  }
  for (const auto& f : s.local_facets()) {
    int lvl = 0;
    for (Local w : f) lvl = std::max(lvl, dist[w]);
    if (dist[f[0]] >= 0) chi[static_cast<std::size_t>(lvl)] += 1;
  }
  int rho = 0;
  long running = 0;
  for (int i = 1; i <= e; ++i) {
    auto j = static_cast<std::size_t>(i - 1);
    running += chi[j];
    if (!level_ok[j] || running != 1) break;
    rho = i;
  }
  return rho;
}

std::vector<int> radii_impl(const SupportSurface& s, bool parallel) {
  require_surface(s);
  auto pinch = pinch_flags(s, parallel);
  const auto n = static_cast<std::int64_t>(s.num_vertices());
  std::vector<int> rho(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
  for (std::int64_t i = 0; i < n; ++i)
    rho[static_cast<std::size_t>(i)] = rho_local(s, static_cast<std::size_t>(i), pinch);
  return rho;
}

}  // namespace

bool is_pinch_point(const SupportSurface& s, Vertex v) {
  require_surface(s);
  return !link_is_cycle(s, s.local(v));
}

int injectivity_radius(const SupportSurface& s, Vertex v) {
  require_surface(s);
  std::size_t lv = s.local(v);
  return rho_local(s, lv, pinch_flags(s, true));
}

std::vector<int> injectivity_radii(const SupportSurface& s) { return radii_impl(s, true); }
std::vector<int> injectivity_radii_serial(const SupportSurface& s) { return radii_impl(s, false); }

ThickThin thick_thin(const SupportSurface& s, int m) {
  if (m < 1) throw InputError("thick-thin decomposition needs m >= 1");
  ThickThin out;
  out.m = m;
  out.rho = injectivity_radii(s);
  std::vector<char> thin(s.num_vertices()), thick(s.num_vertices());
  for (std::size_t i = 0; i < thin.size(); ++i)
    if (out.rho[i] <= m) {
      thin[i] = 1;
      out.thin_vertices.push_back(s.global(i));
    }
  for (const auto& f : s.local_facets()) {
    std::vector<Vertex> g;
    bool all_thin = true;
    for (Local l : f) {
      g.push_back(s.global(l));
      all_thin = all_thin && thin[l];
    }
    if (all_thin) {
      out.thin_triangles.push_back(std::move(g));
    } else {
      for (Local l : f) thick[l] = 1;
      out.thick_triangles.push_back(std::move(g));
    }
  }
  // a vertex outside the thin set always lies on some thick triangle
  for (std::size_t i = 0; i < thick.size(); ++i)
    if (thick[i]) out.thick_vertices.push_back(s.global(i));
  return out;
}

// ---------------------------------------------------------------------------
// bracelets

Bracelet find_bracelet(const SupportSurface& s, Vertex v, std::size_t step_limit) {
  require_surface(s);
  const std::size_t lv = s.local(v);
  auto pinch = pinch_flags(s, true);
  Bracelet out;
  out.m = rho_local(s, lv, pinch);
  const int m = out.m;
  if (m < 1) {
    out.reason = "lemma hypotheses not met: v is a pinch point";
    return out;
  }
  auto dist = s.local_distances(lv);
  for (std::size_t w = 0; w < dist.size(); ++w)
    if (dist[w] == m && pinch[w]) {
      out.reason = "lemma hypotheses not met: pinch point " + std::to_string(s.global(w)) + " at distance " +
                   std::to_string(m);
      return out;
    }

  // edges and triangles of the full subcomplex B_m(v)
  auto in_ball = [&](Local w) { return dist[w] >= 0 && dist[w] <= m; };
  std::map<std::pair<Local, Local>, std::size_t> edge_id;
  for (std::size_t w = 0; w < dist.size(); ++w)
    if (in_ball(static_cast<Local>(w)))
      for (Local u : s.local_adjacency()[w])
        if (u > w && in_ball(u)) edge_id.emplace(std::pair{static_cast<Local>(w), u}, edge_id.size());
  auto eid = [&](Local a, Local b) { return edge_id.at({std::min(a, b), std::max(a, b)}); };
  detail::Echelon triangles;
  for (const auto& f : s.local_facets())
    if (in_ball(f[0]) && in_ball(f[1]) && in_ball(f[2])) {
      BitVector b(edge_id.size());
      b.flip(eid(f[0], f[1]));
      b.flip(eid(f[1], f[2]));
      b.flip(eid(f[0], f[2]));
      triangles.insert(b);
    }

  std::vector<Local> path{static_cast<Local>(lv)};
  std::vector<char> used(dist.size(), 0);
  used[lv] = 1;
  std::size_t steps = 0;
  bool found = false;
  const auto& adj = s.local_adjacency();
  auto closes = [&](Local x) { return std::binary_search(adj[x].begin(), adj[x].end(), static_cast<Local>(lv)); };

  auto essential = [&]() {
    BitVector b(edge_id.size());
    for (std::size_t i = 0; i < path.size(); ++i) b.flip(eid(path[i], path[(i + 1) % path.size()]));
    return !triangles.contains(b);
  };

  // simple loops v, x1, ..., x_{L-1}, v with x1 < x_{L-1}, in DFS order
  auto dfs = [&](auto&& self, int L) -> void {
    if (++steps > step_limit) throw ResourceError("bracelet search exceeded its step limit", steps);
    Local x = path.back();
    const int depth = static_cast<int>(path.size()) - 1;
    if (depth == L - 1) {
      if (closes(x) && path[1] < x && essential()) found = true;
      return;
    }
    for (Local y : adj[x]) {
      if (used[y] || !in_ball(y) || dist[y] > L - depth - 1) continue;
      used[y] = 1;
      path.push_back(y);
      self(self, L);
      if (found) return;
      path.pop_back();
      used[y] = 0;
    }
  };
  for (int L = 3; L <= 2 * m + 1 && !found; ++L) dfs(dfs, L);
  if (!found) {
    out.reason = "lemma hypotheses not met: no essential loop through v in its ball of radius " + std::to_string(m);
    return out;
  }
  out.status = Bracelet::Status::found;
  for (Local x : path) out.loop.vertices.push_back(s.global(x));
  const auto L = static_cast<int>(path.size());
  out.length_ok = L == 2 * m || L == 2 * m + 1;
  out.distances_ok = true;
  for (int j = 0; j < L; ++j) out.distances_ok = out.distances_ok && dist[path[static_cast<std::size_t>(j)]] == std::min(j, L - j);
  return out;
}

// ---------------------------------------------------------------------------
// isoperimetric check

namespace {

// Facet levels: max distance of a facet's vertices from the base (-1 when the
// facet is in another component).
std::vector<int> facet_levels(const SupportComplex& s, const std::vector<int>& dist) {
  std::vector<int> out;
  out.reserve(s.num_facets());
  for (const auto& f : s.local_facets()) {
    int lvl = 0;
    for (Local w : f) lvl = dist[w] < 0 ? -1 : std::max(lvl, dist[w]);
    out.push_back(lvl);
  }
  return out;
}

// Indices of codimension-one faces of odd incidence in B_i.
std::vector<std::size_t> ball_boundary(const SupportComplex& s, const std::vector<int>& levels, int i) {
  std::vector<std::size_t> out;
  const auto& cof = s.face_cofacets();
  for (std::size_t f = 0; f < cof.size(); ++f) {
    std::size_t count = 0;
    for (auto fi : cof[f])
      if (levels[fi] >= 0 && levels[fi] <= i) ++count;
    if (count % 2) out.push_back(f);
  }
  return out;
}

}  // namespace

IsoperimetricReport isoperimetric_check(const SupportSurface& s, Vertex v, int r, int m, std::span<const int> rho) {
  require_surface(s);
  if (r < 1) throw InputError("isoperimetric check needs r >= 1");
  if (rho.size() != s.num_vertices()) throw InputError("radius table does not match the surface");
  auto dist = s.distances_from(v);
  IsoperimetricReport out;
  out.applicable = r <= m;
  for (std::size_t w = 0; w < dist.size(); ++w)
    if (dist[w] >= 0 && dist[w] <= r && rho[w] <= m) out.applicable = false;
  auto levels = facet_levels(s, dist);
  for (int lvl : levels)
    if (lvl >= 0 && lvl <= r) ++out.ball_area;
  out.holds = out.ball_area >= static_cast<std::size_t>(2 * r * r);
  for (int i = 1; i <= r; ++i) {
    out.boundary_lengths.push_back(ball_boundary(s, levels, i).size());
    out.holds = out.holds && out.boundary_lengths.back() >= static_cast<std::size_t>(2 * i);
  }
  return out;
}

IsoperimetricReport isoperimetric_check(const SupportSurface& s, Vertex v, int r, int m) {
  auto rho = injectivity_radii(s);
  return isoperimetric_check(s, v, r, m, rho);
}

// ---------------------------------------------------------------------------
// sweepouts and width

namespace {

struct SweepCore {
  int eccentricity = 0;
  std::vector<std::vector<std::size_t>> faces;  // per slice
  std::vector<std::vector<Local>> vertices;     // per slice
};

SweepCore sweep_core(const SupportComplex& s, std::size_t base) {
  SweepCore out;
  auto dist = s.local_distances(base);
  out.eccentricity = *std::max_element(dist.begin(), dist.end());
  auto levels = facet_levels(s, dist);
  for (int i = 1; i <= out.eccentricity; ++i) {
    auto faces = ball_boundary(s, levels, i);
    std::vector<Local> verts;
    for (auto f : faces) verts.insert(verts.end(), s.local_faces()[f].begin(), s.local_faces()[f].end());
    if (i == out.eccentricity)
      for (std::size_t w = 0; w < dist.size(); ++w)
        if (dist[w] == i) verts.push_back(static_cast<Local>(w));
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.faces.push_back(std::move(faces));
    out.vertices.push_back(std::move(verts));
  }
  return out;
}

int diameter_of(const SupportComplex& s, const std::vector<Local>& verts, SliceMetric metric) {
  int d = 0;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      d = std::max(d, s.metric_distance(s.global(verts[a]), s.global(verts[b]), metric));
  return d;
}

std::vector<int> slice_diameters(const SupportComplex& s, std::size_t base, SliceMetric metric) {
  auto core = sweep_core(s, base);
  std::vector<int> out;
  for (const auto& verts : core.vertices) out.push_back(diameter_of(s, verts, metric));
  return out;
}

WidthReport width_impl(const SupportComplex& s, SliceMetric metric, bool parallel) {
  WidthReport out;
  if (s.empty()) return out;
  const auto n = static_cast<std::int64_t>(s.num_vertices());
  std::vector<int> sweep_max(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    auto d = slice_diameters(s, static_cast<std::size_t>(i), metric);
    sweep_max[static_cast<std::size_t>(i)] = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  }
  // per component: the smallest-id vertex attaining the minimum; overall: the
  // first component attaining the maximum
  bool first = true;
  for (const auto& comp : s.components()) {
    std::size_t best = s.local(comp.front());
    for (Vertex g : comp) {
      std::size_t l = s.local(g);
      if (sweep_max[l] < sweep_max[best]) best = l;
    }
    if (first || sweep_max[best] > out.width) {
      out.width = sweep_max[best];
      out.base_vertex = s.global(best);
      first = false;
    }
  }
  out.slice_diameters = slice_diameters(s, s.local(out.base_vertex), metric);
  auto it = std::max_element(out.slice_diameters.begin(), out.slice_diameters.end());
  out.argmax_slice = it == out.slice_diameters.end() ? 0 : static_cast<std::size_t>(it - out.slice_diameters.begin()) + 1;
  return out;
}

}  // namespace

Sweepout sweepout(const SupportComplex& s, Vertex v, SliceMetric metric) {
  Sweepout out;
  out.base = v;
  auto core = sweep_core(s, s.local(v));
  out.eccentricity = core.eccentricity;
  const int k = s.dim();
  for (std::size_t i = 0; i < core.faces.size(); ++i) {
    Slice slice;
    slice.degenerate = i + 1 == core.faces.size();
    std::map<std::vector<Local>, int> ridges;
    for (auto f : core.faces[i]) {
      const auto& face = s.local_faces()[f];
      std::vector<Vertex> g;
      for (Local l : face) g.push_back(s.global(l));
      slice.faces.push_back(std::move(g));
      if (k >= 2)
        for (std::size_t a = 0; a < face.size(); ++a) {
          std::vector<Local> ridge;
          for (std::size_t b = 0; b < face.size(); ++b)
            if (b != a) ridge.push_back(face[b]);
          ++ridges[ridge];
        }
    }
    for (const auto& [r, c] : ridges) slice.regular = slice.regular && c == 2;
    std::sort(slice.faces.begin(), slice.faces.end());
    for (Local l : core.vertices[i]) slice.vertices.push_back(s.global(l));
    slice.diameter = diameter_of(s, core.vertices[i], metric);
    out.slices.push_back(std::move(slice));
  }
  return out;
}

WidthReport width_of_surface(const SupportComplex& s, SliceMetric metric) { return width_impl(s, metric, true); }
WidthReport width_of_surface_serial(const SupportComplex& s, SliceMetric metric) {
  return width_impl(s, metric, false);
}

ClassWidth width_of_class(const FilteredComplex& fc, const Chain& c, Scale scale, const DistanceMatrix& ambient,
                          std::size_t budget, SliceMetric metric) {
  BoundaryCoset coset(fc, c, scale);
  ClassWidth out;
  out.boundary_rank = coset.rank();
  out.witness.dim = c.dim;
  if (coset.contains_zero()) {
    out.exact = true;
    return out;
  }
  if (coset.rank() > budget || coset.rank() >= 63) {
    out.witness = c;
    out.width = width_impl(SupportComplex::from_chain(fc, c, ambient, scale), metric, true).width;
    return out;
  }
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << coset.rank());
  std::vector<int> widths(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t x = 0; x < total; ++x) {
    Chain member = coset.to_chain(coset.member(static_cast<std::uint64_t>(x)));
    widths[static_cast<std::size_t>(x)] =
        width_impl(SupportComplex::from_chain(fc, member, ambient, scale), metric, false).width;
  }
  auto best = static_cast<std::uint64_t>(std::min_element(widths.begin(), widths.end()) - widths.begin());
  out.width = widths[best];
  out.witness = coset.to_chain(coset.member(best));
  out.exact = true;
  return out;
}

int width_of_k_cycle(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient, Scale scale,
                     SliceMetric metric) {
  if (c.dim < 2) throw InputError("width_of_k_cycle needs k >= 2");
  return width_of_surface(SupportComplex::from_chain(fc, c, ambient, scale), metric).width;
}

}  // namespace powerph
