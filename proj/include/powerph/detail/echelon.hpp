#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "powerph/bitvector.hpp"

namespace powerph::detail {

// Z/2 echelon basis keyed by highest set bit.
class Echelon {
 public:
  // Reduces v in place; returns true when v was independent (and stores it).
  bool insert(BitVector& v) {
    reduce_leading(v);
    if (v.none()) return false;
    pivots_.emplace(v.highest(), v);
    return true;
  }

  // Leading-term reduction: zero iff v lies in the span.
  void reduce_leading(BitVector& v) const {
    for (auto top = v.highest(); top >= 0; top = v.highest()) {
      auto it = pivots_.find(top);
      if (it == pivots_.end()) return;
      v ^= it->second;
    }
  }

  bool contains(BitVector v) const {
    reduce_leading(v);
    return v.none();
  }

  // Canonical representative of v modulo the span.
  void reduce_full(BitVector& v) const {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it)
      if (v.test(static_cast<std::size_t>(it->first))) v ^= it->second;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::vector<BitVector> vectors() const {
    std::vector<BitVector> out;
    for (const auto& [k, v] : pivots_) out.push_back(v);
    return out;
  }

 private:
  std::map<std::ptrdiff_t, BitVector> pivots_;
};

}  // namespace powerph::detail
