#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerph/types.hpp"

namespace powerph {

using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw InputError.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
};

/// Result of parsing an edge list. `original_ids[i]` is the id that dense
/// vertex i carried in the input text.
struct ParsedGraph {
  Graph graph;
  std::vector<std::uint64_t> original_ids;

  bool remapped() const;
};

/// Parses "u v" lines; `#` starts a comment. Sparse ids are remapped to a
/// dense range in ascending order.
ParsedGraph parse_graph(std::string_view text);
ParsedGraph read_graph_file(const std::string& path);

/// One "u v" line per edge.
std::string to_edge_list(const Graph& g);

/// All-pairs hop distances of a connected graph, stored as 16-bit integers.
class DistanceMatrix {
 public:
  using value_type = std::uint16_t;
  static constexpr value_type kUnreachable = 0xFFFF;

  DistanceMatrix() = default;
  DistanceMatrix(std::size_t n, std::vector<value_type> dist);

  std::size_t size() const noexcept { return n_; }
  value_type operator()(Vertex u, Vertex v) const { return dist_[std::size_t{u} * n_ + v]; }
  std::span<const value_type> row(Vertex u) const { return {dist_.data() + std::size_t{u} * n_, n_}; }
  int diameter() const noexcept { return diameter_; }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<value_type> dist_;
  int diameter_ = 0;
};

/// BFS from every source, parallel over sources. Throws InputError naming an
/// unreachable pair when the graph is disconnected.
DistanceMatrix shortest_paths(const Graph& g);
DistanceMatrix shortest_paths_serial(const Graph& g);

/// Edge (u, v) iff 1 <= dist(u, v) <= n.
Graph graph_power(const DistanceMatrix& dm, int n);
Graph graph_power(const Graph& g, int n);

int eccentricity(const DistanceMatrix& dm, Vertex v);

}  // namespace powerph
