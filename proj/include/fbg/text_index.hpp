#ifndef FBG_TEXT_INDEX_HPP
#define FBG_TEXT_INDEX_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/msa.hpp"
#include "fbg/rmq.hpp"

namespace fbg {

/// Inclusive suffix-array index range; empty when lo > hi.
struct SaInterval {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;

  bool empty() const { return lo > hi; }
  std::uint64_t size() const { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const SaInterval&) const = default;
};

/// Suffix array, LCP array and column tables over the concatenation
/// R_1 0 R_2 0 ... R_m 0 of the coded MSA rows. Answers pattern-interval
/// and occurrence-column queries for arbitrary MSA substrings.
///
/// Positions, rows and columns are 0-based. The separator code 0 follows
/// every row, so position p maps to row p / (n+1), column p % (n+1), with
/// column n marking the separator itself.
class TextIndex {
 public:
  static TextIndex build(const Msa& msa);

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  std::uint64_t text_size() const { return text_.size(); }
  std::span<const std::uint8_t> text() const { return text_; }
  const std::vector<std::uint32_t>& sa() const { return sa_; }
  const std::vector<std::uint32_t>& lcp() const { return lcp_; }
  const std::vector<std::uint32_t>& rank_of() const { return rank_of_; }

  bool is_separator(std::uint64_t pos) const { return col_of(pos) == cols_; }
  std::uint32_t row_of(std::uint64_t pos) const {
    return static_cast<std::uint32_t>(pos / (cols_ + 1));
  }
  std::uint32_t col_of(std::uint64_t pos) const {
    return static_cast<std::uint32_t>(pos % (cols_ + 1));
  }

  /// Maximal suffix-array interval whose suffixes share the length-`len`
  /// prefix starting at MSA[row, col]. Located through the rank of the row
  /// suffix and widened with LCP range-minimum binary searches, so the cost
  /// is logarithmic in the text length and independent of `len`.
  SaInterval suffix_interval(std::uint32_t row, std::uint32_t col,
                             std::uint32_t len) const;

  /// True iff every suffix in `iv` starts at column `col`. Constant time
  /// via column range-min/max tables.
  bool occurrences_all_at_column(SaInterval iv, std::uint32_t col) const;

 private:
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  std::vector<std::uint8_t> text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_of_;
  std::vector<std::uint32_t> lcp_;
  RangeMin lcp_rmq_;
  // Column of sa_[i] stored as col+1; separators carry sentinels that can
  // never compare equal to a real column.
  RangeMin col_min_rmq_;
  RangeMax col_max_rmq_;
};

}  // namespace fbg

#endif  // FBG_TEXT_INDEX_HPP
