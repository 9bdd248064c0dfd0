#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace powerph {

/// Dense Z/2 vector. Addition is XOR.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }
  std::size_t num_words() const noexcept { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  /// Highest set bit, or -1 when empty.
  std::ptrdiff_t highest() const noexcept {
    for (std::size_t w = words_.size(); w-- > 0;)
      if (words_[w]) return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(words_[w]));
    return -1;
  }

  /// Highest set bit at or below `from`, or -1.
  std::ptrdiff_t highest_at_or_below(std::size_t from) const noexcept {
    std::size_t w = from >> 6;
    std::uint64_t mask = (from & 63) == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << ((from & 63) + 1)) - 1);
    std::uint64_t cur = words_[w] & mask;
    while (true) {
      if (cur) return static_cast<std::ptrdiff_t>(w * 64 + 63 - std::countl_zero(cur));
      if (w == 0) return -1;
      cur = words_[--w];
    }
  }

  template <class F>
  void for_each_set(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t x = words_[w];
      while (x) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  std::vector<std::uint64_t>& words() noexcept { return words_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace powerph
