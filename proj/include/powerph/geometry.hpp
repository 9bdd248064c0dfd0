#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powerph/cycles.hpp"
#include "powerph/filtration.hpp"
#include "powerph/graph.hpp"
#include "powerph/persistence.hpp"

namespace powerph {

/// How slice diameters are measured.
///   ambient:  hop distance d_G in the input graph.
///   skeleton: hop distance in G^scale, i.e. ceil(d_G / scale).
enum class SliceMetric { ambient, skeleton };

/// Support of a Z/2 k-cycle: its top simplices, their 1-skeleton, and the
/// ambient metric. Balls and sweepouts use the intrinsic skeleton distance.
/// Vertices are addressed by their global (graph) ids in the public API.
class SupportComplex {
 public:
  /// Throws InputError listing codimension-one faces of odd incidence when the
  /// facets do not form a cycle.
  SupportComplex(int dim, std::vector<std::vector<Vertex>> facets, const DistanceMatrix& ambient, Scale scale);

  static SupportComplex from_chain(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient,
                                   Scale scale);

  int dim() const noexcept { return dim_; }
  Scale scale() const noexcept { return scale_; }
  const DistanceMatrix& ambient() const noexcept { return *ambient_; }

  std::size_t num_vertices() const noexcept { return global_.size(); }
  std::size_t num_facets() const noexcept { return facets_.size(); }
  bool empty() const noexcept { return facets_.empty(); }

  /// Global ids, ascending.
  const std::vector<Vertex>& vertices() const noexcept { return global_; }
  bool contains(Vertex v) const;
  /// Facets as sorted global vertex lists.
  std::vector<std::vector<Vertex>> facets() const;

  /// Number of facets containing each codimension-one face, keyed by the
  /// face's sorted global vertices.
  std::vector<std::pair<std::vector<Vertex>, std::size_t>> face_incidence() const;

  /// Skeleton neighbours of v (global ids).
  std::vector<Vertex> neighbors(Vertex v) const;

  /// Intrinsic distance from v to every vertex (indexed like vertices()); -1
  /// outside v's component.
  std::vector<int> distances_from(Vertex v) const;

  /// Connected components of the skeleton, as sorted global id lists.
  std::vector<std::vector<Vertex>> components() const;

  int metric_distance(Vertex a, Vertex b, SliceMetric metric) const;

  // Local-index interface used by the algorithms.
  std::size_t local(Vertex v) const;
  Vertex global(std::size_t i) const { return global_[i]; }
  const std::vector<std::vector<std::uint32_t>>& local_facets() const noexcept { return facets_; }
  const std::vector<std::vector<std::uint32_t>>& local_adjacency() const noexcept { return adj_; }
  const std::vector<std::vector<std::uint32_t>>& facets_of_vertex() const noexcept { return vertex_facets_; }
  /// Codimension-one faces (local ids) and, per face, the facets containing it.
  const std::vector<std::vector<std::uint32_t>>& local_faces() const noexcept { return faces_; }
  const std::vector<std::vector<std::uint32_t>>& face_cofacets() const noexcept { return face_cofacets_; }
  std::vector<int> local_distances(std::size_t source) const;

 private:
  int dim_ = 0;
  Scale scale_ = 1;
  const DistanceMatrix* ambient_ = nullptr;
  std::vector<Vertex> global_;
  std::vector<std::vector<std::uint32_t>> facets_;
  std::vector<std::vector<std::uint32_t>> adj_;
  std::vector<std::vector<std::uint32_t>> vertex_facets_;
  std::vector<std::vector<std::uint32_t>> faces_;
  std::vector<std::vector<std::uint32_t>> face_cofacets_;
};

/// A 2-dimensional support.
using SupportSurface = SupportComplex;

/// Validated 2-dimensional support of a 2-cycle.
SupportSurface support_surface(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient,
                               Scale scale);

/// True iff the link of v is not a single simple cycle.
bool is_pinch_point(const SupportSurface& s, Vertex v);

/// Largest m such that the open balls B'_i(v), 1 <= i <= m, are open disks;
/// 0 at pinch points.
int injectivity_radius(const SupportSurface& s, Vertex v);
/// Injectivity radius of every vertex (indexed like s.vertices()); parallel.
std::vector<int> injectivity_radii(const SupportSurface& s);
std::vector<int> injectivity_radii_serial(const SupportSurface& s);

struct ThickThin {
  int m = 0;
  std::vector<Vertex> thin_vertices;   // rho <= m
  std::vector<Vertex> thick_vertices;  // vertices of the closure of S - thin
  std::vector<std::vector<Vertex>> thin_triangles;
  std::vector<std::vector<Vertex>> thick_triangles;
  std::vector<int> rho;  // indexed like the surface's vertices()
};

ThickThin thick_thin(const SupportSurface& s, int m);

struct Bracelet {
  enum class Status { found, hypotheses_not_met };
  Status status = Status::hypotheses_not_met;
  int m = 0;  // injectivity radius at v
  Loop loop;  // starts at v
  std::string reason;
  /// Length is 2m or 2m+1.
  bool length_ok = false;
  /// Intrinsic distance from v of the j-th loop vertex is min(j, length - j).
  bool distances_ok = false;
};

/// Shortest simple loop through v in B_m(v) that is nontrivial in
/// H_1(B_m(v); Z/2), where m = rho(v).
Bracelet find_bracelet(const SupportSurface& s, Vertex v, std::size_t step_limit = 50'000'000);

struct IsoperimetricReport {
  bool applicable = false;
  std::size_t ball_area = 0;
  std::vector<std::size_t> boundary_lengths;  // |dB_i(v)| for i = 1..r
  bool holds = false;
};

/// Area and boundary-length check for B_r(v). Applicable when r <= m and every
/// vertex of B_r(v) has rho > m (the ball lies in the m-thick interior).
IsoperimetricReport isoperimetric_check(const SupportSurface& s, Vertex v, int r, int m);
IsoperimetricReport isoperimetric_check(const SupportSurface& s, Vertex v, int r, int m, std::span<const int> rho);

struct Slice {
  std::vector<std::vector<Vertex>> faces;  // codimension-one faces of dB_i
  std::vector<Vertex> vertices;
  int diameter = 0;
  bool degenerate = false;  // the farthest slice
  /// Every slice vertex lies on exactly two slice faces (k = 2) or every
  /// ridge of the slice lies on exactly two slice faces (k > 2).
  bool regular = true;
};

struct Sweepout {
  Vertex base = 0;
  int eccentricity = 0;
  std::vector<Slice> slices;  // C_1 .. C_e
};

Sweepout sweepout(const SupportComplex& s, Vertex v, SliceMetric metric = SliceMetric::ambient);

struct WidthReport {
  int width = 0;
  Vertex base_vertex = 0;
  std::size_t argmax_slice = 0;  // 1-based slice index
  std::vector<int> slice_diameters;
};

/// min over base vertices of the max slice diameter (max over components).
/// Parallel over base vertices.
WidthReport width_of_surface(const SupportComplex& s, SliceMetric metric = SliceMetric::ambient);
WidthReport width_of_surface_serial(const SupportComplex& s, SliceMetric metric = SliceMetric::ambient);

struct ClassWidth {
  int width = 0;
  bool exact = false;
  Chain witness;
  std::size_t boundary_rank = 0;
};

inline constexpr std::size_t kDefaultWidthBudget = 12;

/// min of width_of_surface over c + B at `scale` when rank(B) <= budget;
/// otherwise the representative's own width with exact = false (an upper
/// bound on the class width).
ClassWidth width_of_class(const FilteredComplex& fc, const Chain& c, Scale scale, const DistanceMatrix& ambient,
                          std::size_t budget = kDefaultWidthBudget, SliceMetric metric = SliceMetric::ambient);

/// Width of the support of a k-cycle, k >= 2.
int width_of_k_cycle(const FilteredComplex& fc, const Chain& c, const DistanceMatrix& ambient, Scale scale,
                     SliceMetric metric = SliceMetric::ambient);

}  // namespace powerph
