#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

namespace {

using Row = std::vector<std::uint64_t>;

Row make_row(std::size_t bits) { return Row((bits + 63) / 64, 0); }
void flip(Row& r, std::size_t i) { r[i / 64] ^= std::uint64_t{1} << (i % 64); }

// Incremental Gaussian elimination with explicit pivot search.
class Span {
 public:
  explicit Span(std::size_t bits) : bits_(bits) {}
  bool add(Row r) {
    for (const auto& [pivot, row] : rows_)
      if ((r[pivot / 64] >> (pivot % 64)) & 1u)
        for (std::size_t w = 0; w < r.size(); ++w) r[w] ^= row[w];
    for (std::size_t i = 0; i < bits_; ++i)
      if ((r[i / 64] >> (i % 64)) & 1u) {
        // keep the stored rows fully reduced on the new pivot
        for (auto& [p, row] : rows_)
          if ((row[i / 64] >> (i % 64)) & 1u)
            for (std::size_t w = 0; w < r.size(); ++w) row[w] ^= r[w];
        rows_.emplace_back(i, std::move(r));
        return true;
      }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t bits_;
  std::vector<std::pair<std::size_t, Row>> rows_;
};

}  // namespace

std::vector<Simplex> all_cliques(const DistanceMatrix& dm, int max_dim, int max_scale) {
  std::vector<Simplex> out;
  std::vector<Vertex> cur;
  const auto n = static_cast<Vertex>(dm.size());
  std::function<void(Vertex, int)> rec = [&](Vertex next, int value) {
    if (!cur.empty()) out.push_back({cur, value});
    if (static_cast<int>(cur.size()) == max_dim + 1) return;
    for (Vertex v = next; v < n; ++v) {
      int val = value;
      for (Vertex u : cur) val = std::max<int>(val, dm(u, v));
      if (val > max_scale) continue;
      cur.push_back(v);
      rec(v + 1, val);
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

std::size_t rank_z2(std::vector<std::vector<std::uint64_t>> rows) {
  if (rows.empty()) return 0;
  Span span(rows[0].size() * 64);
  for (auto& r : rows) span.add(std::move(r));
  return span.rank();
}

std::vector<std::size_t> betti(const DistanceMatrix& dm, int max_dim, int n) {
  auto cliques = all_cliques(dm, max_dim, n);
  std::vector<std::map<std::vector<Vertex>, std::size_t>> index(static_cast<std::size_t>(max_dim) + 1);
  for (const auto& s : cliques) {
    auto& m = index[s.vertices.size() - 1];
    m.emplace(s.vertices, m.size());
  }
  // rank of the boundary map from dim d to dim d-1
  std::vector<std::size_t> rank(static_cast<std::size_t>(max_dim) + 2, 0);
  for (int d = 1; d <= max_dim; ++d) {
    std::vector<Row> rows;
    for (const auto& [verts, i] : index[static_cast<std::size_t>(d)]) {
      Row r = make_row(index[static_cast<std::size_t>(d) - 1].size());
      for (std::size_t drop = 0; drop < verts.size(); ++drop) {
        auto face = verts;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        flip(r, index[static_cast<std::size_t>(d) - 1].at(face));
      }
      rows.push_back(std::move(r));
    }
    rank[static_cast<std::size_t>(d)] = rank_z2(std::move(rows));
  }
  std::vector<std::size_t> out;
  for (int k = 0; k < max_dim; ++k) {
    auto count = index[static_cast<std::size_t>(k)].size();
    out.push_back(count - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1]);
  }
  return out;
}

std::vector<std::size_t> brute_basis_lengths(const Graph& g) {
  const auto n = static_cast<Vertex>(g.num_vertices());
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) edge.emplace(std::pair{u, v}, edge.size());
  auto eid = [&](Vertex a, Vertex b) { return edge.at({std::min(a, b), std::max(a, b)}); };

  // every simple cycle once: start at its smallest vertex, second < last
  std::vector<std::pair<std::size_t, Row>> cycles;
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  std::function<void(Vertex)> dfs = [&](Vertex start) {
    Vertex x = path.back();
    for (Vertex y : g.neighbors(x)) {
      if (y == start && path.size() >= 3 && path[1] < path.back()) {
        Row r = make_row(edge.size());
        for (std::size_t i = 0; i < path.size(); ++i) flip(r, eid(path[i], path[(i + 1) % path.size()]));
        cycles.emplace_back(path.size(), std::move(r));
      }
      if (y <= start || used[y]) continue;
      used[y] = 1;
      path.push_back(y);
      dfs(start);
      path.pop_back();
      used[y] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    used[s] = 1;
    dfs(s);
    used[s] = 0;
  }
  std::stable_sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  Span span(edge.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
          Row r = make_row(edge.size());
          flip(r, eid(a, b));
          flip(r, eid(b, c));
          flip(r, eid(a, c));
          span.add(std::move(r));
        }
  std::vector<std::size_t> out;
  for (auto& [len, row] : cycles)
    if (span.add(row)) out.push_back(len);
  return out;
}

bool loop_bounds(const DistanceMatrix& dm, int k, const std::vector<Vertex>& loop) {
  const auto n = static_cast<Vertex>(dm.size());
  std::map<std::pair<Vertex, Vertex>, std::size_t> edge;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (dm(u, v) <= k) edge.emplace(std::pair{u, v}, edge.size());
  auto eid = [&](Vertex a, Vertex b) { return edge.at({std::min(a, b), std::max(a, b)}); };
  Span span(edge.size());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        if (dm(a, b) <= k && dm(b, c) <= k && dm(a, c) <= k) {
          Row r = make_row(edge.size());
          flip(r, eid(a, b));
          flip(r, eid(b, c));
          flip(r, eid(a, c));
          span.add(std::move(r));
        }
  Row r = make_row(edge.size());
  for (std::size_t i = 0; i < loop.size(); ++i) flip(r, eid(loop[i], loop[(i + 1) % loop.size()]));
  std::size_t before = span.rank();
  return !span.add(std::move(r)) && span.rank() == before;
}

}  // namespace oracle
