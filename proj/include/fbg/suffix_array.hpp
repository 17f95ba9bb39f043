#ifndef FBG_SUFFIX_ARRAY_HPP
#define FBG_SUFFIX_ARRAY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace fbg {

/// Suffix array of `text` over byte codes. Suffixes are compared by code
/// order with end-of-text acting as an implicit smallest sentinel, so a
/// proper prefix sorts before its extensions. Deterministic.
std::vector<std::uint32_t> build_suffix_array(std::span<const std::uint8_t> text);

/// Inverse permutation of a suffix array.
std::vector<std::uint32_t> invert_permutation(std::span<const std::uint32_t> sa);

/// LCP array: lcp[0] = 0, lcp[i] = length of the longest common prefix of
/// the suffixes at sa[i-1] and sa[i]. Kasai's algorithm.
std::vector<std::uint32_t> build_lcp(std::span<const std::uint8_t> text,
                                     std::span<const std::uint32_t> sa,
                                     std::span<const std::uint32_t> rank_of);

}  // namespace fbg

#endif  // FBG_SUFFIX_ARRAY_HPP
