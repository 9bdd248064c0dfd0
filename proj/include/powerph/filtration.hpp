#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "powerph/graph.hpp"
#include "powerph/types.hpp"

namespace powerph {

namespace detail {
struct FiltrationAccess;
}

struct FiltrationOptions {
  /// Upper limit on the number of simplices that may be materialized.
  std::size_t simplex_budget = 60'000'000;
};

/// Flag complex of the power filtration. Simplices are stored in filtration
/// order (value, dimension, lexicographic vertices); a SimplexId is a position
/// in that order, so comparing ids compares filtration positions.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  std::size_t size() const noexcept { return entries_.size(); }
  std::size_t num_vertices() const noexcept { return num_vertices_; }
  int max_dim() const noexcept { return max_dim_; }
  Scale max_scale() const noexcept { return max_scale_; }

  int dim(SimplexId id) const { return static_cast<int>(entries_[id].dim); }
  Scale value(SimplexId id) const { return entries_[id].value; }
  std::span<const Vertex> vertices(SimplexId id) const {
    const auto& e = entries_[id];
    return {pool_.data() + e.offset, e.dim + 1};
  }

  /// Id of the simplex with these (sorted) vertices, if present.
  std::optional<SimplexId> find(std::span<const Vertex> vertices) const;
  /// As find(), but throws InputError when absent.
  SimplexId id_of(std::span<const Vertex> vertices) const;

  /// Ids of the codimension-one faces, ascending.
  std::vector<SimplexId> boundary(SimplexId id) const;

  /// Number of simplices with value <= n; the snapshot at n is the id prefix
  /// [0, prefix_end(n)).
  std::size_t prefix_end(Scale n) const;

  /// Number of simplices of dimension d (optionally only those with value <= n).
  std::size_t count(int d) const;
  std::size_t count(int d, Scale n) const;

  /// Ids of dimension-d simplices in filtration order.
  const std::vector<SimplexId>& ids_of_dim(int d) const { return by_dim_[d]; }

  friend bool operator==(const FilteredComplex& a, const FilteredComplex& b);

 private:
  friend struct detail::FiltrationAccess;

  struct Entry {
    Scale value;
    std::uint32_t dim;
    std::size_t offset;
  };

  std::uint64_t key(std::span<const Vertex> vertices) const;

  std::size_t num_vertices_ = 0;
  int max_dim_ = 0;
  Scale max_scale_ = 0;
  std::vector<Entry> entries_;
  std::vector<Vertex> pool_;
  std::vector<std::vector<SimplexId>> by_dim_;
  std::vector<std::unordered_map<std::uint64_t, SimplexId>> index_;
  std::vector<std::vector<std::uint64_t>> binomial_;
};

/// Simplices of dimension <= max_dim whose value (max pairwise distance) is
/// <= max_scale. Clique expansion runs in parallel over the simplices of the
/// previous dimension; the result is independent of the thread count.
FilteredComplex build_filtration(const DistanceMatrix& dm, int max_dim, Scale max_scale,
                                 const FiltrationOptions& options = {});
FilteredComplex build_filtration_serial(const DistanceMatrix& dm, int max_dim, Scale max_scale,
                                        const FiltrationOptions& options = {});

/// Ids of all simplices with value <= n.
std::vector<SimplexId> snapshot(const FilteredComplex& fc, Scale n);

/// "value dim v0 v1 ..." per simplex in filtration order.
void dump_filtration(const FilteredComplex& fc, std::ostream& out);

}  // namespace powerph
