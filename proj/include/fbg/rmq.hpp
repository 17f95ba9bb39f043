#ifndef FBG_RMQ_HPP
#define FBG_RMQ_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace fbg {

/// Sparse-table range extremum queries over a fixed u32 array.
/// O(n log n) space, O(1) per query.
template <bool kMin>
class SparseTable {
 public:
  SparseTable() = default;

  explicit SparseTable(std::span<const std::uint32_t> values) {
    const std::size_t n = values.size();
    if (n == 0) return;
    const int levels = std::bit_width(n);
    table_.resize(levels);
    table_[0].assign(values.begin(), values.end());
    for (int k = 1; k < levels; ++k) {
      const std::size_t len = n - (std::size_t{1} << k) + 1;
      table_[k].resize(len);
      const auto& prev = table_[k - 1];
      const std::size_t half = std::size_t{1} << (k - 1);
      for (std::size_t i = 0; i < len; ++i)
        table_[k][i] = combine(prev[i], prev[i + half]);
    }
  }

  /// Extremum over the inclusive index range [lo, hi]; lo <= hi required.
  std::uint32_t query(std::size_t lo, std::size_t hi) const {
    const int k = std::bit_width(hi - lo + 1) - 1;
    return combine(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
  }

 private:
  static std::uint32_t combine(std::uint32_t a, std::uint32_t b) {
    if constexpr (kMin) return std::min(a, b);
    else return std::max(a, b);
  }

  std::vector<std::vector<std::uint32_t>> table_;
};

using RangeMin = SparseTable<true>;
using RangeMax = SparseTable<false>;

}  // namespace fbg

#endif  // FBG_RMQ_HPP
