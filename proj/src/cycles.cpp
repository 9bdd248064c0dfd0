#include "powerph/cycles.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "powerph/detail/echelon.hpp"
#include "powerph/error.hpp"

namespace powerph {

std::vector<Edge> Loop::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex a = vertices[i], b = vertices[(i + 1) % vertices.size()];
    out.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> ShortestBasis::lengths() const {
  std::vector<std::size_t> out;
  for (const auto& l : loops) out.push_back(l.length());
  return out;
}

namespace {

using detail::Echelon;

struct Candidate {
  std::size_t length;
  Vertex root;
  std::size_t edge;
  Loop loop;
};

}  // namespace

ShortestBasis shortest_h1_basis(const Graph& g) {
  if (!g.is_connected()) throw InputError("shortest basis requires a connected graph");
  const std::size_t n = g.num_vertices();
  ShortestBasis out;
  out.edges = g.edges();
  const auto& edges = out.edges;
  std::unordered_map<std::uint64_t, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i)
    edge_index.emplace(std::uint64_t{edges[i].first} * n + edges[i].second, i);
  auto eid = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return edge_index.at(std::uint64_t{a} * n + b);
  };

  Echelon triangles;
  for (auto [u, v] : edges)
    for (Vertex w : g.neighbors(v))
      if (w > v && g.has_edge(u, w)) {
        BitVector b(edges.size());
        b.flip(eid(u, v));
        b.flip(eid(v, w));
        b.flip(eid(u, w));
        triangles.insert(b);
      }
  out.betti1 = edges.size() + 1 - n - triangles.rank();
  if (out.betti1 == 0) return out;

  std::vector<Candidate> candidates;
  std::vector<std::int64_t> parent(n), depth(n);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(depth.begin(), depth.end(), -1);
    queue.assign(1, root);
    depth[root] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      Vertex u = queue[h];
      for (Vertex w : g.neighbors(u))
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        }
    }
    auto path = [&](Vertex v) {
      std::vector<Vertex> p;
      for (std::int64_t x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) p.push_back(static_cast<Vertex>(x));
      std::reverse(p.begin(), p.end());  // root ... v
      return p;
    };
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (parent[a] == static_cast<std::int64_t>(b) || parent[b] == static_cast<std::int64_t>(a)) continue;
      auto pa = path(a), pb = path(b);
      // simple iff the two tree paths only share the root
      if (pa.size() > 1 && pb.size() > 1 && pa[1] == pb[1]) continue;
      Loop loop;
      loop.vertices = pa;
      for (std::size_t i = pb.size(); i-- > 1;) loop.vertices.push_back(pb[i]);
      candidates.push_back({loop.length(), root, e, std::move(loop)});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.length < y.length; });

  Echelon span = triangles;
  for (const auto& cand : candidates) {
    BitVector v(edges.size());
    for (auto [a, b] : cand.loop.edges()) v.flip(eid(a, b));
    BitVector signature = v;
    if (!span.insert(v)) continue;
    triangles.reduce_full(signature);
    out.loops.push_back(cand.loop);
    out.classes.push_back(std::move(signature));
    if (out.loops.size() == out.betti1) break;
  }
  if (out.loops.size() != out.betti1)
    throw Error("Horton candidates do not span H_1");  // never expected; surfaced rather than hidden
  return out;
}

std::vector<DiagramPoint> pd1_formula(const Graph& g) {
  std::vector<DiagramPoint> out;
  for (auto l : shortest_h1_basis(g).lengths())
    out.push_back({1, static_cast<Scale>((l + 2) / 3)});
  std::sort(out.begin(), out.end());
  return out;
}

BoundaryCoset::BoundaryCoset(const FilteredComplex& fc, const Chain& c, Scale scale) : dim_(c.dim) {
  if (c.dim < 0 || c.dim >= fc.max_dim())
    throw InputError("chain dimension needs cofaces in the filtration");
  if (!is_cycle(fc, c)) throw InputError("chain is not a cycle");
  if (chain_value(fc, c) > scale) throw InputError("chain is not supported at the given scale");

  const auto& ids = fc.ids_of_dim(c.dim);
  domain_.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(fc.count(c.dim, scale)));
  auto bit = [&](SimplexId id) {
    return static_cast<std::size_t>(std::lower_bound(domain_.begin(), domain_.end(), id) - domain_.begin());
  };
  start_ = BitVector(domain_.size());
  for (SimplexId s : c.support) start_.flip(bit(s));

  const auto& cofaces = fc.ids_of_dim(c.dim + 1);
  const std::size_t num_cofaces = fc.count(c.dim + 1, scale);
  Echelon echelon;
  for (std::size_t i = 0; i < num_cofaces; ++i) {
    BitVector b(domain_.size());
    for (SimplexId f : fc.boundary(cofaces[i])) b.flip(bit(f));
    generators_.push_back(b);
    echelon.insert(b);
  }
  basis_ = echelon.vectors();
  BitVector probe = start_;
  echelon.reduce_leading(probe);
  trivial_ = probe.none();
}

BitVector BoundaryCoset::member(std::uint64_t x) const {
  BitVector v = start_;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if ((x >> i) & 1u) v ^= basis_[i];
  return v;
}

Chain BoundaryCoset::to_chain(const BitVector& bits) const {
  Chain c;
  c.dim = dim_;
  bits.for_each_set([&](std::size_t i) { c.support.push_back(domain_[i]); });
  return c;
}

namespace {

struct Best {
  std::size_t weight = SIZE_MAX;
  std::uint64_t index = 0;  // Gray-code index of the member
};

Best search_block(const BoundaryCoset& coset, std::uint64_t lo, std::uint64_t hi) {
  const auto& basis = coset.basis();
  BitVector cur = coset.member(lo ^ (lo >> 1));
  Best best{cur.count(), lo};
  for (std::uint64_t t = lo + 1; t < hi; ++t) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(t))];
    std::size_t w = cur.count();
    if (w < best.weight) best = {w, t};
  }
  return best;
}

ClassNorm norm_impl(const FilteredComplex& fc, const Chain& c, Scale scale, std::size_t budget, bool parallel) {
  BoundaryCoset coset(fc, c, scale);
  ClassNorm out;
  out.boundary_rank = coset.rank();
  if (coset.contains_zero()) {
    out.value = 0;
    out.witness.dim = c.dim;
    out.exact = true;
    return out;
  }
  if (coset.rank() <= budget && coset.rank() < 63) {
    const std::uint64_t total = std::uint64_t{1} << coset.rank();
    const std::uint64_t block = std::max<std::uint64_t>(total / 256, 1024);
    const auto num_blocks = static_cast<std::int64_t>((total + block - 1) / block);
    std::vector<Best> results(static_cast<std::size_t>(num_blocks));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (std::int64_t b = 0; b < num_blocks; ++b) {
      std::uint64_t lo = static_cast<std::uint64_t>(b) * block;
      results[static_cast<std::size_t>(b)] = search_block(coset, lo, std::min(total, lo + block));
    }
    Best best;
    for (const auto& r : results)
      if (r.weight < best.weight) best = r;  // first block wins ties
    out.value = best.weight;
    out.witness = coset.to_chain(coset.member(best.index ^ (best.index >> 1)));
    out.exact = true;
    return out;
  }
  // greedy descent
  BitVector cur = coset.start();
  std::size_t weight = cur.count();
  for (bool improved = true; improved;) {
    improved = false;
    for (const auto& g : coset.generators()) {
      BitVector next = cur;
      next ^= g;
      std::size_t w = next.count();
      if (w < weight) {
        cur = std::move(next);
        weight = w;
        improved = true;
      }
    }
  }
  out.value = weight;
  out.witness = coset.to_chain(cur);
  out.exact = false;
  return out;
}

}  // namespace

ClassNorm class_norm(const FilteredComplex& fc, const Chain& c, Scale scale, std::size_t budget) {
  return norm_impl(fc, c, scale, budget, true);
}

ClassNorm class_norm_serial(const FilteredComplex& fc, const Chain& c, Scale scale, std::size_t budget) {
  return norm_impl(fc, c, scale, budget, false);
}

}  // namespace powerph
