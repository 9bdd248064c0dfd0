#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "powerph/filtration.hpp"
#include "powerph/types.hpp"

namespace powerph {

/// Z/2 chain: a sorted set of simplex ids of one dimension.
struct Chain {
  int dim = 0;
  std::vector<SimplexId> support;

  bool empty() const noexcept { return support.empty(); }
  std::size_t size() const noexcept { return support.size(); }

  /// Symmetric difference. Both chains must have the same dimension.
  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Boundary of a chain (dimension dim-1; empty for 0-chains).
Chain boundary(const FilteredComplex& fc, const Chain& c);
bool is_cycle(const FilteredComplex& fc, const Chain& c);
/// Largest filtration value on the support (0 for the empty chain).
Scale chain_value(const FilteredComplex& fc, const Chain& c);

/// A diagram point; death is empty for classes that never die.
struct DiagramPoint {
  Scale birth = 0;
  std::optional<Scale> death;

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
  friend bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    // finite deaths sort before the infinite one
    Scale da = a.death.value_or(kInfiniteScale), db = b.death.value_or(kInfiniteScale);
    return da < db;
  }
};

struct PersistencePair {
  int dim = 0;
  Scale birth = 0;
  std::optional<Scale> death;
  SimplexId birth_simplex = 0;
  std::optional<SimplexId> death_simplex;
  /// A dim-cycle with every simplex value <= birth whose class is born here.
  Chain representative;

  bool infinite() const noexcept { return !death.has_value(); }
  Scale lifespan() const noexcept { return death ? *death - birth : kInfiniteScale; }
  DiagramPoint point() const { return {birth, death}; }
};

class PersistenceDiagram {
 public:
  PersistenceDiagram() = default;
  explicit PersistenceDiagram(int num_dims) : pairs_(static_cast<std::size_t>(num_dims)) {}

  int num_dims() const noexcept { return static_cast<int>(pairs_.size()); }

  /// Pairs with birth < death in dimension d, sorted by (birth, death, birth simplex).
  std::span<const PersistencePair> pairs(int d) const;
  /// Sorted multiset of (birth, death) in dimension d.
  std::vector<DiagramPoint> points(int d) const;

  /// Number of intervals in dimension d alive at scale n (birth <= n < death).
  std::size_t alive(int d, Scale n) const;

  /// Pairs with birth == death, kept for auditing only.
  std::span<const PersistencePair> zero_length() const { return audit_; }

  std::vector<PersistencePair>& mutable_pairs(int d) { return pairs_[static_cast<std::size_t>(d)]; }
  std::vector<PersistencePair>& mutable_zero_length() { return audit_; }

 private:
  std::vector<std::vector<PersistencePair>> pairs_;
  std::vector<PersistencePair> audit_;
};

struct ReductionOptions {
  /// Skip columns of simplices already known to create a class killed one
  /// dimension up.
  bool clearing = true;
  /// A working column switches to a dense bit vector once its fill exceeds
  /// this fraction of the rows.
  double dense_fill = 1.0 / 64.0;
  /// Compute cycle representatives.
  bool representatives = true;
};

/// Z/2 persistence by column reduction, dimensions high to low. Reports
/// dimensions 0..max_dim-1 of the complex.
PersistenceDiagram compute_pd(const FilteredComplex& fc, const ReductionOptions& options = {});

/// Ranks of H_k of the snapshot at n for k < max_dim, by dense Gaussian
/// elimination over freshly built boundary matrices. Shares no code with
/// compute_pd and serves as its oracle.
std::vector<std::size_t> betti_numbers(const FilteredComplex& fc, Scale n);

/// betti_numbers for every scale 0..max_scale; parallel over scales.
std::vector<std::vector<std::size_t>> betti_curve(const FilteredComplex& fc);
std::vector<std::vector<std::size_t>> betti_curve_serial(const FilteredComplex& fc);

/// The stored representative of a pair of `pd`. Throws InputError when the
/// pair does not belong to the diagram.
const Chain& representative_at_birth(const PersistenceDiagram& pd, const PersistencePair& pair);

}  // namespace powerph
