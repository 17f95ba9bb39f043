#include "fbg/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace fbg {

namespace {

// Stable counting sort of `in` by key(i), keys in [0, key_count).
void counting_sort(const std::vector<std::uint32_t>& in,
                   std::vector<std::uint32_t>& out,
                   std::vector<std::uint32_t>& bucket,
                   std::uint32_t key_count,
                   const std::vector<std::uint32_t>& key) {
  bucket.assign(key_count + 1, 0);
  for (std::uint32_t i : in) ++bucket[key[i] + 1];
  for (std::uint32_t k = 1; k <= key_count; ++k) bucket[k] += bucket[k - 1];
  for (std::uint32_t i : in) out[bucket[key[i]]++] = i;
}

}  // namespace

std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text) {
  const std::uint32_t n = static_cast<std::uint32_t>(text.size());
  std::vector<std::uint32_t> sa(n);
  if (n == 0) return sa;

  // Prefix-doubling with LSD radix sort: keys are (rank[i], rank[i+k]) pairs,
  // where positions past the end carry key 0 (the implicit sentinel).
  // Ranks stay in [1, n] so the counting-sort key range is always n + 1.
  std::vector<std::uint32_t> rank(n), key2(n), tmp(n), bucket;

  bucket.assign(257, 0);
  for (std::uint8_t c : text) ++bucket[c + 1];
  for (std::uint32_t c = 1; c <= 256; ++c) bucket[c] += bucket[c - 1];
  for (std::uint32_t i = 0; i < n; ++i) sa[bucket[text[i]]++] = i;
  rank[sa[0]] = 1;
  std::uint32_t distinct = 1;
  for (std::uint32_t i = 1; i < n; ++i) {
    if (text[sa[i]] != text[sa[i - 1]]) ++distinct;
    rank[sa[i]] = distinct;
  }

  for (std::uint32_t k = 1; distinct < n; k <<= 1) {
    const std::uint32_t key_count = n + 1;
    for (std::uint32_t i = 0; i < n; ++i)
      key2[i] = (i + k < n) ? rank[i + k] : 0;
    counting_sort(sa, tmp, bucket, key_count, key2);
    counting_sort(tmp, sa, bucket, key_count, rank);

    tmp[sa[0]] = 1;
    distinct = 1;
    for (std::uint32_t i = 1; i < n; ++i) {
      const std::uint32_t a = sa[i - 1], b = sa[i];
      if (rank[a] != rank[b] || key2[a] != key2[b]) ++distinct;
      tmp[b] = distinct;
    }
    rank.swap(tmp);
  }
  return sa;
}

std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> sa) {
  std::vector<std::uint32_t> inv(sa.size());
  for (std::uint32_t i = 0; i < sa.size(); ++i) inv[sa[i]] = i;
  return inv;
}

std::vector<std::uint32_t> build_lcp(std::span<const std::uint8_t> text,
                                     std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> rank_of) {
  const std::uint32_t n = static_cast<std::uint32_t>(text.size());
  std::vector<std::uint32_t> lcp(n, 0);
  std::uint32_t h = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t r = rank_of[i];
    if (r == 0) { h = 0; continue; }
    const std::uint32_t j = sa[r - 1];
    while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
    lcp[r] = h;
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace fbg
