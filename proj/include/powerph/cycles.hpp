#pragma once

#include <cstddef>
#include <vector>

#include "powerph/bitvector.hpp"
#include "powerph/filtration.hpp"
#include "powerph/graph.hpp"
#include "powerph/persistence.hpp"

namespace powerph {

/// Simple closed walk v0 -> v1 -> ... -> v0; length is the number of edges.
struct Loop {
  std::vector<Vertex> vertices;

  std::size_t length() const noexcept { return vertices.size(); }
  /// Edges (u < v), sorted.
  std::vector<Edge> edges() const;
};

struct ShortestBasis {
  std::vector<Loop> loops;  // lengths nondecreasing
  /// Per loop: its edge vector reduced modulo the triangle boundaries of the
  /// clique complex (columns indexed by `edges`). Two loops are homologous iff
  /// their signatures agree.
  std::vector<BitVector> classes;
  std::vector<Edge> edges;
  std::size_t betti1 = 0;

  std::vector<std::size_t> lengths() const;
};

/// Lexicographically shortest basis of H_1 of the clique complex of g:
/// Horton candidates (BFS-tree path, edge, BFS-tree path) greedily accepted by
/// length while independent modulo triangle boundaries.
ShortestBasis shortest_h1_basis(const Graph& g);

/// {(1, ceil(l/3))} over the shortest basis lengths, sorted.
std::vector<DiagramPoint> pd1_formula(const Graph& g);

/// Volume: number of top simplices in the chain.
inline std::size_t chain_volume(const Chain& c) { return c.size(); }

struct ClassNorm {
  std::size_t value = 0;
  Chain witness;
  /// True when value is the exact coset minimum; false for a heuristic upper bound.
  bool exact = false;
  std::size_t boundary_rank = 0;
};

/// Default cap on the rank of the boundary space for exhaustive coset search.
inline constexpr std::size_t kDefaultNormBudget = 22;

/// Minimum support size over c + B, with B the boundaries of (dim+1)-chains of
/// value <= scale. Exhaustive (Gray-code, parallel over blocks) when
/// rank(B) <= budget, otherwise greedy descent over single cofaces.
ClassNorm class_norm(const FilteredComplex& fc, const Chain& c, Scale scale,
                     std::size_t budget = kDefaultNormBudget);
ClassNorm class_norm_serial(const FilteredComplex& fc, const Chain& c, Scale scale,
                            std::size_t budget = kDefaultNormBudget);

/// Coset c + B at a scale, with B reduced to an echelon basis. Shared by the
/// norm and class-width searches.
class BoundaryCoset {
 public:
  BoundaryCoset(const FilteredComplex& fc, const Chain& c, Scale scale);

  std::size_t rank() const noexcept { return basis_.size(); }
  /// Number of dim-simplices of value <= scale (bit positions).
  std::size_t domain_size() const noexcept { return domain_.size(); }
  bool contains_zero() const noexcept { return trivial_; }

  /// Member for combination vector x (bit i selects basis vector i).
  BitVector member(std::uint64_t x) const;
  const BitVector& start() const noexcept { return start_; }
  const std::vector<BitVector>& basis() const noexcept { return basis_; }
  /// Boundaries of the individual (dim+1)-simplices, for local moves.
  const std::vector<BitVector>& generators() const noexcept { return generators_; }

  Chain to_chain(const BitVector& bits) const;

 private:
  int dim_ = 0;
  std::vector<SimplexId> domain_;
  BitVector start_;
  std::vector<BitVector> basis_;
  std::vector<BitVector> generators_;
  bool trivial_ = false;
};

}  // namespace powerph
