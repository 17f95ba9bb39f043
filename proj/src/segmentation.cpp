#include "fbg/segmentation.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace fbg {

bool is_valid_segment(const TextIndex& idx, std::uint32_t begin, std::uint32_t end) {
  if (begin >= end || end > idx.cols())
    throw OutOfBounds("segment columns out of range");
  const std::uint32_t len = end - begin;
  for (std::uint32_t t = 0; t < idx.rows(); ++t) {
    const SaInterval iv = idx.suffix_interval(t, begin, len);
    if (!idx.occurrences_all_at_column(iv, begin)) return false;
  }
  return true;
}

ValidRanges compute_valid_ranges(const TextIndex& idx) {
  const std::uint32_t n = idx.cols();
  ValidRanges vr;
  vr.v.assign(n + 1, kUndefined);

  // Candidate start; never moves left. Once some [start, j) is valid,
  // [start, j+1) stays valid (right closure), so only advances get tested.
  std::uint32_t start = 0;
  bool have_valid = false;
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (!have_valid) {
      if (!is_valid_segment(idx, start, j)) continue;
      have_valid = true;
    }
    while (start + 1 < j && is_valid_segment(idx, start + 1, j)) ++start;
    vr.v[j] = start;
  }
  return vr;
}

ScoreTable compute_scores_reference(const ValidRanges& vr) {
  const std::uint32_t n = vr.cols();
  ScoreTable st;
  st.s.assign(n + 1, kInfiniteScore);
  st.x.assign(n + 1, kUndefined);
  st.s[0] = 0;
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (vr.v[j] == kUndefined) continue;
    for (std::int64_t jp = 0; jp <= vr.v[j]; ++jp) {
      const std::int64_t score = std::max<std::int64_t>(j - jp, st.s[jp]);
      if (score <= st.s[j]) {  // <= keeps the largest minimizer
        st.s[j] = score;
        st.x[j] = jp;
      }
    }
  }
  return st;
}

ScoreTable compute_scores(const ValidRanges& vr) {
  const std::uint32_t n = vr.cols();
  ScoreTable st;
  st.s.assign(n + 1, kInfiniteScore);
  st.x.assign(n + 1, kUndefined);
  st.s[0] = 0;

  auto& s = st.s;
  std::int64_t jstar = 0;
  std::int64_t next_insert = 1;
  // Indices jstar+1..v[j] with s values increasing front to back; both
  // window ends only move right, so each index enters and leaves once.
  std::deque<std::int64_t> window;

  for (std::uint32_t j = 1; j <= n; ++j) {
    const std::int64_t vj = vr.v[j];
    if (vj == kUndefined) continue;

    for (; next_insert <= vj; ++next_insert) {
      if (next_insert <= jstar) continue;
      while (!window.empty() && s[window.back()] >= s[next_insert]) window.pop_back();
      window.push_back(next_insert);
    }

    // Accept jstar iff its candidate value beats every remaining s in the
    // window; on ties the optimum lies further right, so advance.
    while (true) {
      const std::int64_t k = std::max<std::int64_t>(j - jstar, s[jstar]);
      const std::int64_t window_min = window.empty() ? kInfiniteScore : s[window.front()];
      if (k < window_min) break;
      ++jstar;
      assert(jstar <= vj);
      if (!window.empty() && window.front() == jstar) window.pop_front();
    }
    st.s[j] = std::max<std::int64_t>(j - jstar, s[jstar]);
    st.x[j] = jstar;
  }
  return st;
}

Segmentation traceback(const ScoreTable& st) {
  const std::size_t n = st.s.size() - 1;
  if (st.s[n] == kInfiniteScore)
    throw NoValidSegmentation("no valid segmentation covers the alignment");
  Segmentation seg;
  std::size_t j = n;
  while (j > 0) {
    const std::int64_t begin = st.x[j];
    seg.blocks.push_back({static_cast<std::uint32_t>(begin),
                          static_cast<std::uint32_t>(j)});
    j = static_cast<std::size_t>(begin);
  }
  std::reverse(seg.blocks.begin(), seg.blocks.end());
  return seg;
}

std::int64_t brute_force_optimal(const Msa& msa) {
  const std::uint32_t n = msa.col_count();
  if (n > 20) throw TooLarge("brute_force_optimal limited to n <= 20");
  const TextIndex idx = TextIndex::build(msa);

  // Memoize validity of every segment first.
  std::vector<std::vector<bool>> valid(n + 1, std::vector<bool>(n + 1, false));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a + 1; b <= n; ++b)
      valid[a][b] = is_valid_segment(idx, a, b);

  std::int64_t best = kInfiniteScore;
  const std::uint32_t boundary_sets = n >= 1 ? (1u << (n - 1)) : 0;
  for (std::uint32_t mask = 0; mask < boundary_sets; ++mask) {
    // Bit i of mask set = boundary between columns i and i+1.
    std::int64_t max_width = 0;
    std::uint32_t begin = 0;
    bool ok = true;
    for (std::uint32_t j = 1; j <= n && ok; ++j) {
      if (j == n || (mask >> (j - 1)) & 1) {
        if (!valid[begin][j]) { ok = false; break; }
        max_width = std::max<std::int64_t>(max_width, j - begin);
        begin = j;
      }
    }
    if (ok) best = std::min(best, max_width);
  }
  return best;
}

}  // namespace fbg
