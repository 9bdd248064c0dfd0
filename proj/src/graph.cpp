#include "powerph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>

#include "powerph/error.hpp"

namespace powerph {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u >= n || v >= n)
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::size_t Graph::num_edges() const noexcept {
  std::size_t deg = 0;
  for (const auto& nbrs : adj_) deg += nbrs.size();
  return deg / 2;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == adj_.size();
}

bool ParsedGraph::remapped() const {
  for (std::size_t i = 0; i < original_ids.size(); ++i)
    if (original_ids[i] != i) return true;
  return false;
}

namespace {

bool parse_id(std::string_view tok, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

ParsedGraph parse_graph(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw ParseError(line_no, "expected two vertex ids");
    std::uint64_t u = 0, v = 0;
    if (!parse_id(toks[0], u) || !parse_id(toks[1], v))
      throw ParseError(line_no, "vertex ids must be nonnegative integers");
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    raw.emplace_back(u, v);
  }

  ParsedGraph out;
  std::vector<std::uint64_t> ids;
  ids.reserve(raw.size() * 2);
  for (auto [u, v] : raw) {
    ids.push_back(u);
    ids.push_back(v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > 0xFFFE) throw InputError("too many vertices for 16-bit distances");

  auto dense = [&](std::uint64_t id) {
    return static_cast<Vertex>(std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(dense(u), dense(v));
  out.graph = Graph::from_edges(ids.size(), edges);
  out.original_ids = std::move(ids);
  return out;
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<value_type> dist) : n_(n), dist_(std::move(dist)) {
  for (auto d : dist_) diameter_ = std::max<int>(diameter_, d);
}

namespace {

void bfs_row(const Graph& g, Vertex src, DistanceMatrix::value_type* row, std::vector<Vertex>& queue) {
  const std::size_t n = g.num_vertices();
  std::fill(row, row + n, DistanceMatrix::kUnreachable);
  queue.clear();
  queue.push_back(src);
  row[src] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u))
      if (row[w] == DistanceMatrix::kUnreachable) {
        row[w] = static_cast<DistanceMatrix::value_type>(row[u] + 1);
        queue.push_back(w);
      }
  }
}

[[noreturn]] void throw_disconnected(const std::vector<DistanceMatrix::value_type>& dist, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i)
    if (dist[i] == DistanceMatrix::kUnreachable)
      throw InputError("graph is disconnected: vertices " + std::to_string(i / n) + " and " +
                       std::to_string(i % n) + " are unreachable");
  throw InputError("graph is disconnected");
}

}  // namespace

DistanceMatrix shortest_paths(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<DistanceMatrix::value_type> dist(n * n);
  bool unreachable = false;
#pragma omp parallel reduction(|| : unreachable)
  {
    std::vector<Vertex> queue;
    queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      auto* row = dist.data() + static_cast<std::size_t>(s) * n;
      bfs_row(g, static_cast<Vertex>(s), row, queue);
      if (queue.size() != n) unreachable = true;
    }
  }
  if (unreachable) throw_disconnected(dist, n);
  return DistanceMatrix(n, std::move(dist));
}

DistanceMatrix shortest_paths_serial(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<DistanceMatrix::value_type> dist(n * n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    bfs_row(g, s, dist.data() + std::size_t{s} * n, queue);
    if (queue.size() != n) throw_disconnected(dist, n);
  }
  return DistanceMatrix(n, std::move(dist));
}

Graph graph_power(const DistanceMatrix& dm, int n) {
  if (n < 1) throw InputError("graph power requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < dm.size(); ++u)
    for (Vertex v = u + 1; v < dm.size(); ++v)
      if (dm(u, v) <= n) edges.emplace_back(u, v);
  return Graph::from_edges(dm.size(), edges);
}

Graph graph_power(const Graph& g, int n) {
  if (n < 1) throw InputError("graph power requires n >= 1");
  return graph_power(shortest_paths(g), n);
}

int eccentricity(const DistanceMatrix& dm, Vertex v) {
  int e = 0;
  for (auto d : dm.row(v)) e = std::max<int>(e, d);
  return e;
}

}  // namespace powerph
