#include "powerph/persistence.hpp"

#include <algorithm>
#include <map>

#include "powerph/bitvector.hpp"
#include "powerph/error.hpp"

namespace powerph {

namespace {

template <class T>
void symmetric_difference_into(const std::vector<T>& a, const std::vector<T>& b, std::vector<T>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

}  // namespace

Chain& Chain::operator+=(const Chain& other) {
  if (other.support.empty()) return *this;
  if (support.empty()) {
    dim = other.dim;
    support = other.support;
    return *this;
  }
  if (dim != other.dim) throw InputError("adding chains of different dimensions");
  std::vector<SimplexId> out;
  symmetric_difference_into(support, other.support, out);
  support = std::move(out);
  return *this;
}

Chain boundary(const FilteredComplex& fc, const Chain& c) {
  Chain out;
  out.dim = std::max(0, c.dim - 1);
  if (c.dim == 0) return out;
  std::vector<SimplexId> faces;
  for (SimplexId s : c.support) {
    auto b = fc.boundary(s);
    faces.insert(faces.end(), b.begin(), b.end());
  }
  std::sort(faces.begin(), faces.end());
  // keep ids that occur an odd number of times
  for (std::size_t i = 0; i < faces.size();) {
    std::size_t j = i;
    while (j < faces.size() && faces[j] == faces[i]) ++j;
    if ((j - i) % 2 == 1) out.support.push_back(faces[i]);
    i = j;
  }
  return out;
}

bool is_cycle(const FilteredComplex& fc, const Chain& c) { return boundary(fc, c).empty(); }

Scale chain_value(const FilteredComplex& fc, const Chain& c) {
  Scale v = 0;
  for (SimplexId s : c.support) v = std::max(v, fc.value(s));
  return v;
}

std::span<const PersistencePair> PersistenceDiagram::pairs(int d) const {
  if (d < 0 || d >= num_dims()) return {};
  return pairs_[static_cast<std::size_t>(d)];
}

std::vector<DiagramPoint> PersistenceDiagram::points(int d) const {
  std::vector<DiagramPoint> out;
  for (const auto& p : pairs(d)) out.push_back(p.point());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t PersistenceDiagram::alive(int d, Scale n) const {
  std::size_t c = 0;
  for (const auto& p : pairs(d))
    if (p.birth <= n && (!p.death || n < *p.death)) ++c;
  return c;
}

const Chain& representative_at_birth(const PersistenceDiagram& pd, const PersistencePair& pair) {
  for (const auto& p : pd.pairs(pair.dim))
    if (p.birth_simplex == pair.birth_simplex && p.death_simplex == pair.death_simplex) return p.representative;
  throw InputError("pair not found in diagram");
}

namespace {

// Reduction of the boundary matrix of one dimension k: columns are the
// k-simplices, rows the (k-1)-simplices, both addressed by position within
// their dimension.
class DimensionReducer {
 public:
  DimensionReducer(const FilteredComplex& fc, int k, const std::vector<std::uint32_t>& position,
                   const ReductionOptions& options, bool track_v)
      : fc_(fc),
        cols_(fc.ids_of_dim(k)),
        rows_(fc.ids_of_dim(k - 1)),
        position_(position),
        track_v_(track_v),
        pivot_col_(rows_.size(), -1),
        reduced_(cols_.size()),
        v_(track_v ? cols_.size() : 0) {
    dense_threshold_ = static_cast<std::size_t>(options.dense_fill * static_cast<double>(rows_.size()));
    if (dense_threshold_ < 8) dense_threshold_ = 8;
  }

  // Reduces every column whose `skip` flag is unset.
  void run(const std::vector<char>& skip) {
    for (std::size_t j = 0; j < cols_.size(); ++j) {
      if (!skip.empty() && skip[j]) continue;
      reduce(j);
    }
  }

  const std::vector<std::int64_t>& pivot_col() const { return pivot_col_; }
  const std::vector<std::uint32_t>& reduced(std::size_t j) const { return reduced_[j]; }
  const std::vector<std::uint32_t>& v(std::size_t j) const { return v_[j]; }
  bool is_zero(std::size_t j) const { return reduced_[j].empty(); }

 private:
  void reduce(std::size_t j) {
    std::vector<std::uint32_t> w;
    for (SimplexId f : fc_.boundary(cols_[j])) w.push_back(position_[f]);
    std::vector<std::uint32_t> vw;
    if (track_v_) vw.push_back(static_cast<std::uint32_t>(j));

    std::vector<std::uint32_t> tmp;
    BitVector dense;
    bool is_dense = false;
    std::ptrdiff_t pivot = w.empty() ? -1 : static_cast<std::ptrdiff_t>(w.back());
    while (pivot >= 0) {
      std::int64_t owner = pivot_col_[static_cast<std::size_t>(pivot)];
      if (owner < 0) break;
      const auto& other = reduced_[static_cast<std::size_t>(owner)];
      if (is_dense) {
        for (auto r : other) dense.flip(r);
        pivot = dense.highest_at_or_below(static_cast<std::size_t>(pivot));
      } else {
        symmetric_difference_into(w, other, tmp);
        std::swap(w, tmp);
        if (w.size() > dense_threshold_) {
          dense = BitVector(rows_.size());
          for (auto r : w) dense.set(r);
          w.clear();
          is_dense = true;
          pivot = dense.highest();
        } else {
          pivot = w.empty() ? -1 : static_cast<std::ptrdiff_t>(w.back());
        }
      }
      if (track_v_) {
        symmetric_difference_into(vw, v_[static_cast<std::size_t>(owner)], tmp);
        std::swap(vw, tmp);
      }
    }
    if (is_dense) {
      w.clear();
      dense.for_each_set([&](std::size_t r) { w.push_back(static_cast<std::uint32_t>(r)); });
    }
    if (pivot >= 0) pivot_col_[static_cast<std::size_t>(pivot)] = static_cast<std::int64_t>(j);
    reduced_[j] = std::move(w);
    if (track_v_) v_[j] = std::move(vw);
  }

  const FilteredComplex& fc_;
  const std::vector<SimplexId>& cols_;
  const std::vector<SimplexId>& rows_;
  const std::vector<std::uint32_t>& position_;
  bool track_v_;
  std::size_t dense_threshold_ = 0;
  std::vector<std::int64_t> pivot_col_;
  std::vector<std::vector<std::uint32_t>> reduced_;
  std::vector<std::vector<std::uint32_t>> v_;
};

void sort_pairs(std::vector<PersistencePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
    if (a.birth != b.birth) return a.birth < b.birth;
    Scale da = a.death.value_or(kInfiniteScale), db = b.death.value_or(kInfiniteScale);
    if (da != db) return da < db;
    return a.birth_simplex < b.birth_simplex;
  });
}

}  // namespace

PersistenceDiagram compute_pd(const FilteredComplex& fc, const ReductionOptions& options) {
  const int top = fc.max_dim();
  const int num_dims = std::max(top, 1);
  PersistenceDiagram pd(num_dims);

  // position of every simplex within its dimension
  std::vector<std::uint32_t> position(fc.size());
  for (int d = 0; d <= top; ++d) {
    const auto& ids = fc.ids_of_dim(d);
    for (std::size_t i = 0; i < ids.size(); ++i) position[ids[i]] = static_cast<std::uint32_t>(i);
  }

  // killed[d][i]: the i-th d-simplex is the pivot of a reduced (d+1)-column
  std::vector<std::vector<char>> killed(static_cast<std::size_t>(top) + 1);
  for (int d = 0; d <= top; ++d) killed[static_cast<std::size_t>(d)].assign(fc.count(d), 0);

  auto record = [&](PersistencePair&& p) {
    if (p.death && *p.death == p.birth)
      pd.mutable_zero_length().push_back(std::move(p));
    else if (p.dim < num_dims)
      pd.mutable_pairs(p.dim).push_back(std::move(p));
  };

  std::vector<std::vector<char>> zero_col(static_cast<std::size_t>(top) + 1);
  for (int k = top; k >= 1; --k) {
    const auto& cols = fc.ids_of_dim(k);
    const auto& rows = fc.ids_of_dim(k - 1);
    DimensionReducer reducer(fc, k, position, options, false);
    std::vector<char> skip;
    if (options.clearing) skip = killed[static_cast<std::size_t>(k)];
    reducer.run(skip);

    auto& zeros = zero_col[static_cast<std::size_t>(k)];
    zeros.assign(cols.size(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (!skip.empty() && skip[j]) continue;
      if (reducer.is_zero(j)) zeros[j] = 1;
    }
    const auto& pivots = reducer.pivot_col();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (pivots[r] < 0) continue;
      auto j = static_cast<std::size_t>(pivots[r]);
      killed[static_cast<std::size_t>(k - 1)][r] = 1;
      PersistencePair p;
      p.dim = k - 1;
      p.birth_simplex = rows[r];
      p.death_simplex = cols[j];
      p.birth = fc.value(rows[r]);
      p.death = fc.value(cols[j]);
      if (options.representatives && *p.death != p.birth) {
        p.representative.dim = k - 1;
        for (auto pos : reducer.reduced(j)) p.representative.support.push_back(rows[pos]);
      }
      record(std::move(p));
    }
  }

  // Essential classes: positive simplices never used as a pivot one dimension up.
  for (int d = 0; d < num_dims && d <= top; ++d) {
    const auto& ids = fc.ids_of_dim(d);
    std::vector<std::size_t> essential;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      bool positive = d == 0 || zero_col[static_cast<std::size_t>(d)][i];
      if (positive && !killed[static_cast<std::size_t>(d)][i]) essential.push_back(i);
    }
    if (essential.empty()) continue;

    std::optional<DimensionReducer> with_v;
    if (options.representatives && d >= 1) {
      with_v.emplace(fc, d, position, options, true);
      with_v->run(options.clearing ? killed[static_cast<std::size_t>(d)] : std::vector<char>{});
    }
    for (auto i : essential) {
      PersistencePair p;
      p.dim = d;
      p.birth_simplex = ids[i];
      p.birth = fc.value(ids[i]);
      if (options.representatives) {
        p.representative.dim = d;
        if (d == 0) {
          p.representative.support = {ids[i]};
        } else {
          for (auto pos : with_v->v(i)) p.representative.support.push_back(ids[pos]);
          std::sort(p.representative.support.begin(), p.representative.support.end());
        }
      }
      record(std::move(p));
    }
  }

  for (int d = 0; d < num_dims; ++d) sort_pairs(pd.mutable_pairs(d));
  return pd;
}

namespace {

// Rank over Z/2 of a set of dense columns.
std::size_t rank_z2(std::vector<BitVector> cols) {
  std::map<std::ptrdiff_t, std::size_t> pivot_of;
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    auto& c = cols[j];
    for (auto top = c.highest(); top >= 0; top = c.highest()) {
      auto it = pivot_of.find(top);
      if (it == pivot_of.end()) {
        pivot_of.emplace(top, j);
        ++rank;
        break;
      }
      c ^= cols[it->second];
    }
  }
  return rank;
}

}  // namespace

std::vector<std::size_t> betti_numbers(const FilteredComplex& fc, Scale n) {
  const int top = fc.max_dim();
  // simplices of the snapshot, grouped by dimension, as vertex tuples
  std::vector<std::vector<std::vector<Vertex>>> cells(static_cast<std::size_t>(top) + 1);
  for (SimplexId id = 0; id < fc.size(); ++id) {
    if (fc.value(id) > n) continue;
    auto vs = fc.vertices(id);
    cells[vs.size() - 1].emplace_back(vs.begin(), vs.end());
  }
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& faces = cells[static_cast<std::size_t>(k - 1)];
    std::map<std::vector<Vertex>, std::size_t> row;
    for (std::size_t i = 0; i < faces.size(); ++i) row.emplace(faces[i], i);
    std::vector<BitVector> cols;
    for (const auto& sigma : cells[static_cast<std::size_t>(k)]) {
      BitVector col(faces.size());
      for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < sigma.size(); ++i)
          if (i != skip) face.push_back(sigma[i]);
        col.flip(row.at(face));
      }
      cols.push_back(std::move(col));
    }
    rank[static_cast<std::size_t>(k)] = rank_z2(std::move(cols));
  }
  std::vector<std::size_t> betti;
  for (int k = 0; k < std::max(top, 1); ++k) {
    std::size_t nk = k <= top ? cells[static_cast<std::size_t>(k)].size() : 0;
    betti.push_back(nk - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1]);
  }
  return betti;
}

std::vector<std::vector<std::size_t>> betti_curve(const FilteredComplex& fc) {
  std::vector<std::vector<std::size_t>> curve(static_cast<std::size_t>(fc.max_scale()) + 1);
#pragma omp parallel for schedule(dynamic, 1)
  for (Scale n = 0; n <= fc.max_scale(); ++n) curve[static_cast<std::size_t>(n)] = betti_numbers(fc, n);
  return curve;
}

std::vector<std::vector<std::size_t>> betti_curve_serial(const FilteredComplex& fc) {
  std::vector<std::vector<std::size_t>> curve;
  for (Scale n = 0; n <= fc.max_scale(); ++n) curve.push_back(betti_numbers(fc, n));
  return curve;
}

}  // namespace powerph
