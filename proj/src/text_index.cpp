#include "fbg/text_index.hpp"

#include <limits>

#include "fbg/suffix_array.hpp"

namespace fbg {

TextIndex TextIndex::build(const Msa& msa) {
  TextIndex idx;
  idx.rows_ = msa.row_count();
  idx.cols_ = msa.col_count();

  idx.text_.reserve(static_cast<std::size_t>(idx.rows_) * (idx.cols_ + 1));
  for (const auto& row : msa.rows) {
    for (char c : row) idx.text_.push_back(msa.alphabet.code_of(c));
    idx.text_.push_back(0);
  }

  idx.sa_ = build_suffix_array(idx.text_);
  idx.rank_of_ = invert_permutation(idx.sa_);
  idx.lcp_ = build_lcp(idx.text_, idx.sa_, idx.rank_of_);
  idx.lcp_rmq_ = RangeMin(idx.lcp_);

  const std::uint64_t n = idx.text_.size();
  std::vector<std::uint32_t> col_lo(n), col_hi(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    if (idx.is_separator(idx.sa_[i])) {
      col_lo[i] = std::numeric_limits<std::uint32_t>::max();
      col_hi[i] = 0;
    } else {
      col_lo[i] = col_hi[i] = idx.col_of(idx.sa_[i]) + 1;
    }
  }
  idx.col_min_rmq_ = RangeMin(col_lo);
  idx.col_max_rmq_ = RangeMax(col_hi);
  return idx;
}

SaInterval TextIndex::suffix_interval(std::uint32_t row, std::uint32_t col,
                                      std::uint32_t len) const {
  if (row >= rows_ || len == 0 || col >= cols_ ||
      static_cast<std::uint64_t>(col) + len > cols_)
    throw OutOfBounds("suffix_interval argument out of range");

  const std::uint64_t pos = static_cast<std::uint64_t>(row) * (cols_ + 1) + col;
  const std::uint64_t r = rank_of_[pos];

  // Smallest lo such that min lcp[lo+1..r] >= len.
  std::uint64_t lo = r;
  {
    std::uint64_t a = 0, b = r;
    while (a < b) {
      const std::uint64_t mid = (a + b) / 2;
      if (lcp_rmq_.query(mid + 1, r) >= len) b = mid; else a = mid + 1;
    }
    lo = a;
  }
  // Largest hi such that min lcp[r+1..hi] >= len.
  std::uint64_t hi = r;
  {
    std::uint64_t a = r, b = text_.size() - 1;
    while (a < b) {
      const std::uint64_t mid = (a + b + 1) / 2;
      if (lcp_rmq_.query(r + 1, mid) >= len) a = mid; else b = mid - 1;
    }
    hi = a;
  }
  return {lo, hi};
}

bool TextIndex::occurrences_all_at_column(SaInterval iv, std::uint32_t col) const {
  if (iv.empty()) throw EmptyInterval("occurrences_all_at_column on empty interval");
  if (iv.hi >= text_.size()) throw OutOfBounds("interval exceeds suffix array");
  const std::uint32_t want = col + 1;
  return col_min_rmq_.query(iv.lo, iv.hi) == want &&
         col_max_rmq_.query(iv.lo, iv.hi) == want;
}

}  // namespace fbg
