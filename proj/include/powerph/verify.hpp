#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "powerph/cycles.hpp"
#include "powerph/filtration.hpp"
#include "powerph/generators.hpp"
#include "powerph/geometry.hpp"
#include "powerph/graph.hpp"
#include "powerph/persistence.hpp"

namespace powerph {

struct Pd1Check {
  bool ok = false;
  std::vector<DiagramPoint> formula;
  std::vector<DiagramPoint> computed;
  /// Multiset differences: formula - computed and computed - formula.
  std::vector<DiagramPoint> missing;
  std::vector<DiagramPoint> extra;
};

/// Compares the shortest-basis formula with the reduction's PD_1.
Pd1Check verify_pd1(const Graph& g);

enum class RowStatus { ok, violation, unverified };

/// One finite pair of dimension >= 2.
///
/// Soundness: rep_norm / rep_width are exact class minima when their flags
/// are set; otherwise they are upper bounds taken from a representative. A
/// violated bound computed from an upper bound is a genuine violation (the
/// true value is smaller still); a satisfied one is then only the weaker
/// statement about that representative, and `exact_check` is false.
struct BoundRow {
  int dim = 0;
  Scale birth = 0;
  Scale death = 0;
  Scale lifespan = 0;
  std::size_t rep_volume = 0;
  std::size_t rep_norm = 0;
  bool norm_exact = false;
  int rep_width = 0;
  bool width_exact = false;
  std::optional<Scale> area_bound_rhs;  // dim 2 only: ceil(sqrt(norm)) + 1
  Scale width_bound_rhs = 0;            // width + 1
  std::optional<bool> area_ok;
  bool width_ok = false;
  bool exact_check = false;
  RowStatus status = RowStatus::ok;
  std::string note;
};

struct BoundReport {
  std::vector<BoundRow> rows;

  std::size_t violations() const;
  std::size_t unverified() const;
  std::size_t inexact() const;
  bool ok() const { return violations() == 0 && unverified() == 0; }
};

struct BoundOptions {
  std::size_t norm_budget = kDefaultNormBudget;
  std::size_t width_budget = kDefaultWidthBudget;
  /// Budget for the exact re-run of a row that fails with inexact values.
  std::size_t retry_budget = 26;
  SliceMetric metric = SliceMetric::ambient;
};

/// ceil(sqrt(x)) for x >= 0, in integers.
Scale ceil_sqrt(std::size_t x);

/// Bound rows for every finite pair in dims 2..max_dim-1 of the power
/// filtration up to max_scale (0: the diameter).
BoundReport verify_bounds(const Graph& g, int max_dim, Scale max_scale = 0, const BoundOptions& options = {});
BoundReport verify_bounds(const FilteredComplex& fc, const PersistenceDiagram& pd, const DistanceMatrix& dm,
                          const BoundOptions& options = {});

/// Exploration row; never asserted.
struct ConjectureRow {
  std::string family;
  std::string param;
  int dim = 0;
  Scale birth = 0;
  Scale death = 0;
  std::size_t volume = 0;
  bool volume_exact = false;
  int width = 0;
  bool width_exact = false;
  double width_ratio = 0;  // lifespan / (width + 1)
  double volume_root = 0;  // volume^(1/dim)
};

struct ExploreOptions {
  int max_dim = 4;
  Scale max_scale = 0;
  BoundOptions bounds;
  std::uint64_t seed = 0;
};

std::vector<ConjectureRow> explore_conjectures(const std::vector<FamilySpec>& family,
                                               const ExploreOptions& options = {});
void write_conjecture_csv(const std::vector<ConjectureRow>& rows, std::ostream& out);

/// Named graphs of the worked examples and the acceptance corpus.
struct NamedGraph {
  std::string name;
  Graph graph;
  int max_dim = 3;
};

/// C_4..C_15, G_1 (cube with diagonals), G_2 (cube), thin_box(1..10),
/// tetrahedron_surface(1..4); optional G(12, 0.3) samples for seeds in
/// [seed_lo, seed_hi].
std::vector<NamedGraph> example_corpus(std::uint64_t seed_lo = 1, std::uint64_t seed_hi = 0);

struct FactCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Exact diagram facts of the worked examples: C_6, G_1, G_2, the late births
/// in C_9, C_12, C_14, thin boxes m = 2..10 and tetrahedra m = 2..max_tetrahedron.
std::vector<FactCheck> worked_example_facts(std::size_t max_tetrahedron = 4);

}  // namespace powerph
