#ifndef FBG_BITVECTOR_HPP
#define FBG_BITVECTOR_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "fbg/errors.hpp"

namespace fbg {

/// Plain bitvector with rank/select support.
///
/// rank(i) counts the ones in positions [0, i); select(j) returns the
/// position of the j-th one, j counted from 1. Cumulative counts are kept
/// per 64-bit word, so rank is O(1) and select is a binary search.
class Bitvector {
 public:
  Bitvector() = default;

  explicit Bitvector(std::uint64_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  Bitvector(std::uint64_t size, std::vector<std::uint64_t> words)
      : size_(size), words_(std::move(words)) {
    words_.resize((size_ + 63) / 64, 0);
    drop_trailing_bits();
    build_rank();
  }

  void set(std::uint64_t i) {
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  /// Builds the rank scaffolding; must be called after the last set().
  void finalize() { build_rank(); }

  bool operator[](std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint64_t size() const { return size_; }
  std::uint64_t ones() const { return ones_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  /// Number of ones in positions [0, i).
  std::uint64_t rank(std::uint64_t i) const {
    if (i > size_) throw OutOfBounds("bitvector rank out of range");
    std::uint64_t word = i >> 6;
    std::uint64_t r = cum_[word];
    if (i & 63) r += std::popcount(words_[word] & ((std::uint64_t{1} << (i & 63)) - 1));
    return r;
  }

  /// Position of the j-th one, 1 <= j <= ones().
  std::uint64_t select(std::uint64_t j) const {
    if (j == 0 || j > ones_) throw OutOfBounds("bitvector select out of range");
    // Last word whose cumulative count is < j.
    std::uint64_t lo = 0, hi = words_.size() - 1;
    while (lo < hi) {
      std::uint64_t mid = (lo + hi + 1) / 2;
      if (cum_[mid] < j) lo = mid; else hi = mid - 1;
    }
    std::uint64_t remaining = j - cum_[lo];
    std::uint64_t w = words_[lo];
    std::uint64_t pos = lo << 6;
    while (true) {
      std::uint64_t bit = static_cast<std::uint64_t>(std::countr_zero(w));
      if (--remaining == 0) return pos + bit;
      w &= w - 1;
    }
  }

 private:
  void drop_trailing_bits() {
    if (size_ & 63 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  }

  void build_rank() {
    cum_.assign(words_.size() + 1, 0);
    for (std::size_t w = 0; w < words_.size(); ++w)
      cum_[w + 1] = cum_[w] + std::popcount(words_[w]);
    ones_ = cum_[words_.size()];
  }

  std::uint64_t size_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> cum_;
};

}  // namespace fbg

#endif  // FBG_BITVECTOR_HPP
