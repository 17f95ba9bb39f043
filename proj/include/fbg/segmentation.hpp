#ifndef FBG_SEGMENTATION_HPP
#define FBG_SEGMENTATION_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/msa.hpp"
#include "fbg/text_index.hpp"

namespace fbg {

/// Sentinel for "no valid segmentation of this prefix exists"; strictly
/// larger than any achievable block width.
inline constexpr std::int64_t kInfiniteScore = std::numeric_limits<std::int64_t>::max();

/// Sentinel for undefined v(j) / x(j) entries.
inline constexpr std::int64_t kUndefined = -1;

/// v[j] for prefix length j in 1..n: the largest start column v such that
/// the half-open segment [v, j) is valid, or kUndefined when no valid
/// segment ends at column j-1. v[0] is unused. Defined entries are
/// non-decreasing and never become undefined again.
struct ValidRanges {
  std::vector<std::int64_t> v;

  std::uint32_t cols() const { return static_cast<std::uint32_t>(v.size()) - 1; }
};

/// s[j]: minimum over valid segmentations of the first j columns of the
/// maximum block width (kInfiniteScore when none exists); s[0] = 0.
/// x[j]: the largest start column of an optimal final block, kUndefined
/// where s[j] is infinite. x is non-decreasing over its defined entries.
struct ScoreTable {
  std::vector<std::int64_t> s;
  std::vector<std::int64_t> x;
};

/// Half-open column interval [begin, end).
struct ColumnRange {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  std::uint32_t width() const { return end - begin; }
  bool operator==(const ColumnRange&) const = default;
};

/// Consecutive blocks covering all columns: blocks.front().begin == 0,
/// blocks.back().end == n, and each block starts where the previous ended.
struct Segmentation {
  std::vector<ColumnRange> blocks;

  std::uint32_t max_width() const {
    std::uint32_t w = 0;
    for (const auto& b : blocks) w = std::max(w, b.width());
    return w;
  }
};

/// True iff, for every row t, every occurrence of MSA[t, begin..end) anywhere
/// in the rows starts at column `begin`. Such a segment induces one block of
/// a segment-repeat-free graph.
bool is_valid_segment(const TextIndex& idx, std::uint32_t begin, std::uint32_t end);

/// Computes v via a two-pointer sweep over columns; the candidate start never
/// moves left thanks to the left/right closure of segment validity.
/// O(n * m * log(mn)) total.
ValidRanges compute_valid_ranges(const TextIndex& idx);

/// Direct quadratic evaluation of the score recurrence; the testing
/// reference for compute_scores.
ScoreTable compute_scores_reference(const ValidRanges& vr);

/// Linear-time score computation: a monotone candidate pointer per column,
/// validated against the sliding-window minimum of s over the remaining
/// candidate range. Produces exactly the reference table.
ScoreTable compute_scores(const ValidRanges& vr);

/// Follows x from the last column to recover the optimal blocks.
/// Throws NoValidSegmentation when s[n] is infinite.
Segmentation traceback(const ScoreTable& st);

/// Exhaustive minimum over all 2^(n-1) boundary placements of the maximum
/// block width, restricted to segmentations whose every block is valid;
/// kInfiniteScore if none. Requires n <= 20.
std::int64_t brute_force_optimal(const Msa& msa);

}  // namespace fbg

#endif  // FBG_SEGMENTATION_HPP
