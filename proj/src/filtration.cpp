#include "powerph/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "powerph/error.hpp"

namespace powerph {

namespace {

// One dimension's worth of simplices, vertices stored flat in lex order.
struct Level {
  int dim = 0;
  std::vector<Vertex> verts;
  std::vector<Scale> values;

  std::size_t size() const { return values.size(); }
  std::span<const Vertex> simplex(std::size_t i) const {
    return {verts.data() + i * static_cast<std::size_t>(dim + 1), static_cast<std::size_t>(dim + 1)};
  }
};

struct Expander {
  const DistanceMatrix& dm;
  Scale max_scale;
  std::vector<std::vector<Vertex>> upper;  // upper[u] = {w > u : dist(u, w) <= max_scale}

  Expander(const DistanceMatrix& d, Scale s) : dm(d), max_scale(s), upper(d.size()) {
    for (Vertex u = 0; u < d.size(); ++u)
      for (Vertex w = u + 1; w < d.size(); ++w)
        if (d(u, w) <= s) upper[u].push_back(w);
  }

  // Calls f(w, value) for every cofacet sigma + {w} with w > max(sigma).
  template <class F>
  void for_each_cofacet(std::span<const Vertex> sigma, Scale value, F&& f) const {
    for (Vertex w : upper[sigma.back()]) {
      Scale v = value;
      bool ok = true;
      for (Vertex u : sigma) {
        Scale d = dm(u, w);
        if (d > max_scale) {
          ok = false;
          break;
        }
        v = std::max(v, d);
      }
      if (ok) f(w, v);
    }
  }
};

std::size_t count_next(const Expander& ex, const Level& level, bool parallel) {
  std::size_t total = 0;
  const auto n = static_cast<std::int64_t>(level.size());
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 256) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    std::size_t local = 0;
    ex.for_each_cofacet(level.simplex(static_cast<std::size_t>(i)), level.values[static_cast<std::size_t>(i)],
                        [&](Vertex, Scale) { ++local; });
    total += local;
  }
  return total;
}

Level expand(const Expander& ex, const Level& level, bool parallel) {
  Level next;
  next.dim = level.dim + 1;
  const std::size_t n = level.size();
  const std::size_t chunk = 1024;
  const std::size_t num_chunks = (n + chunk - 1) / chunk;
  std::vector<Level> parts(num_chunks);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(num_chunks); ++c) {
    Level& part = parts[static_cast<std::size_t>(c)];
    const std::size_t lo = static_cast<std::size_t>(c) * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    for (std::size_t i = lo; i < hi; ++i) {
      auto sigma = level.simplex(i);
      ex.for_each_cofacet(sigma, level.values[i], [&](Vertex w, Scale v) {
        part.verts.insert(part.verts.end(), sigma.begin(), sigma.end());
        part.verts.push_back(w);
        part.values.push_back(v);
      });
    }
  }
  for (auto& part : parts) {
    next.verts.insert(next.verts.end(), part.verts.begin(), part.verts.end());
    next.values.insert(next.values.end(), part.values.begin(), part.values.end());
  }
  return next;
}

}  // namespace

namespace detail {

struct FiltrationAccess {
  static FilteredComplex assemble(std::size_t n, int max_dim, Scale max_scale, std::vector<Level>& levels) {
    FilteredComplex fc;
    fc.num_vertices_ = n;
    fc.max_dim_ = max_dim;
    fc.max_scale_ = max_scale;

    // binomial_[v][k] = C(v, k), overflow-checked.
    fc.binomial_.assign(n + 1, std::vector<std::uint64_t>(static_cast<std::size_t>(max_dim) + 2, 0));
    for (std::size_t v = 0; v <= n; ++v) {
      fc.binomial_[v][0] = 1;
      for (std::size_t k = 1; k < fc.binomial_[v].size(); ++k) {
        if (v == 0) continue;
        std::uint64_t a = fc.binomial_[v - 1][k - 1], b = fc.binomial_[v - 1][k];
        if (a > UINT64_MAX - b) throw ResourceError("simplex key overflow", n);
        fc.binomial_[v][k] = a + b;
      }
    }

    struct Ref {
      Scale value;
      std::uint32_t dim;
      std::uint32_t index;
    };
    std::vector<Ref> order;
    std::size_t total = 0;
    for (auto& level : levels) total += level.size();
    order.reserve(total);
    for (auto& level : levels)
      for (std::size_t i = 0; i < level.size(); ++i)
        order.push_back({level.values[i], static_cast<std::uint32_t>(level.dim), static_cast<std::uint32_t>(i)});
    // Within a level simplices are already lexicographic, so index breaks ties.
    std::sort(order.begin(), order.end(), [](const Ref& a, const Ref& b) {
      if (a.value != b.value) return a.value < b.value;
      if (a.dim != b.dim) return a.dim < b.dim;
      return a.index < b.index;
    });

    fc.entries_.reserve(total);
    std::size_t pool_size = 0;
    for (auto& level : levels) pool_size += level.verts.size();
    fc.pool_.reserve(pool_size);
    fc.by_dim_.assign(static_cast<std::size_t>(max_dim) + 1, {});
    fc.index_.assign(static_cast<std::size_t>(max_dim) + 1, {});
    for (auto& level : levels) fc.index_[static_cast<std::size_t>(level.dim)].reserve(level.size());

    for (const Ref& r : order) {
      auto id = static_cast<SimplexId>(fc.entries_.size());
      auto sigma = levels[r.dim].simplex(r.index);
      fc.entries_.push_back({r.value, r.dim, fc.pool_.size()});
      fc.pool_.insert(fc.pool_.end(), sigma.begin(), sigma.end());
      fc.by_dim_[r.dim].push_back(id);
      fc.index_[r.dim].emplace(fc.key(sigma), id);
    }
    return fc;
  }
};

}  // namespace detail

std::uint64_t FilteredComplex::key(std::span<const Vertex> vertices) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) k += binomial_[vertices[i]][i + 1];
  return k;
}

std::optional<SimplexId> FilteredComplex::find(std::span<const Vertex> vertices) const {
  if (vertices.empty() || vertices.size() > static_cast<std::size_t>(max_dim_) + 1) return std::nullopt;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= num_vertices_) return std::nullopt;
    if (i > 0 && vertices[i] <= vertices[i - 1]) return std::nullopt;
  }
  const auto& idx = index_[vertices.size() - 1];
  auto it = idx.find(key(vertices));
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

SimplexId FilteredComplex::id_of(std::span<const Vertex> vertices) const {
  if (auto id = find(vertices)) return *id;
  throw InputError("simplex not in filtration");
}

std::vector<SimplexId> FilteredComplex::boundary(SimplexId id) const {
  auto sigma = vertices(id);
  std::vector<SimplexId> out;
  if (sigma.size() < 2) return out;
  out.reserve(sigma.size());
  const auto& idx = index_[sigma.size() - 2];
  for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
    std::uint64_t k = 0;
    for (std::size_t i = 0, j = 0; i < sigma.size(); ++i) {
      if (i == skip) continue;
      k += binomial_[sigma[i]][++j];
    }
    out.push_back(idx.at(k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t FilteredComplex::prefix_end(Scale n) const {
  auto it = std::upper_bound(entries_.begin(), entries_.end(), n,
                             [](Scale s, const Entry& e) { return s < e.value; });
  return static_cast<std::size_t>(it - entries_.begin());
}

std::size_t FilteredComplex::count(int d) const {
  if (d < 0 || d > max_dim_) return 0;
  return by_dim_[static_cast<std::size_t>(d)].size();
}

std::size_t FilteredComplex::count(int d, Scale n) const {
  if (d < 0 || d > max_dim_) return 0;
  const auto& ids = by_dim_[static_cast<std::size_t>(d)];
  return static_cast<std::size_t>(
      std::upper_bound(ids.begin(), ids.end(), n, [&](Scale s, SimplexId id) { return s < value(id); }) -
      ids.begin());
}

bool operator==(const FilteredComplex& a, const FilteredComplex& b) {
  if (a.size() != b.size() || a.max_dim_ != b.max_dim_ || a.max_scale_ != b.max_scale_) return false;
  for (SimplexId i = 0; i < a.size(); ++i) {
    if (a.value(i) != b.value(i)) return false;
    auto x = a.vertices(i), y = b.vertices(i);
    if (!std::equal(x.begin(), x.end(), y.begin(), y.end())) return false;
  }
  return true;
}

namespace {

FilteredComplex build(const DistanceMatrix& dm, int max_dim, Scale max_scale, const FiltrationOptions& options,
                      bool parallel) {
  if (max_dim < 0) throw InputError("max_dim must be >= 0");
  if (max_scale < 1) throw InputError("max_scale must be >= 1");
  const std::size_t n = dm.size();
  if (n > options.simplex_budget) throw ResourceError("simplex count exceeds budget", n);

  Expander ex(dm, max_scale);
  std::vector<Level> levels(1);
  levels[0].dim = 0;
  levels[0].verts.resize(n);
  std::iota(levels[0].verts.begin(), levels[0].verts.end(), Vertex{0});
  levels[0].values.assign(n, 0);

  std::size_t total = n;
  for (int d = 1; d <= max_dim; ++d) {
    std::size_t projected = count_next(ex, levels.back(), parallel);
    if (total + projected > options.simplex_budget)
      throw ResourceError("projected simplex count exceeds budget", total + projected);
    total += projected;
    if (projected == 0) break;
    levels.push_back(expand(ex, levels.back(), parallel));
  }
  return detail::FiltrationAccess::assemble(n, max_dim, max_scale, levels);
}

}  // namespace

FilteredComplex build_filtration(const DistanceMatrix& dm, int max_dim, Scale max_scale,
                                 const FiltrationOptions& options) {
  return build(dm, max_dim, max_scale, options, true);
}

FilteredComplex build_filtration_serial(const DistanceMatrix& dm, int max_dim, Scale max_scale,
                                        const FiltrationOptions& options) {
  return build(dm, max_dim, max_scale, options, false);
}

std::vector<SimplexId> snapshot(const FilteredComplex& fc, Scale n) {
  if (n < 0 || n > fc.max_scale()) throw InputError("snapshot scale out of range");
  std::vector<SimplexId> ids(fc.prefix_end(n));
  std::iota(ids.begin(), ids.end(), SimplexId{0});
  return ids;
}

void dump_filtration(const FilteredComplex& fc, std::ostream& out) {
  for (SimplexId id = 0; id < fc.size(); ++id) {
    out << fc.value(id) << ' ' << fc.dim(id);
    for (Vertex v : fc.vertices(id)) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace powerph
