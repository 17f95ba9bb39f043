#ifndef FBG_FBG_INDEX_HPP
#define FBG_FBG_INDEX_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "fbg/bitvector.hpp"
#include "fbg/errors.hpp"
#include "fbg/founder_graph.hpp"

namespace fbg {

/// Live suffix-array interval of an in-progress backward search, plus
/// diagnostics: symbols consumed and interval expansions performed.
struct QueryState {
  std::uint64_t lo = 1;
  std::uint64_t hi = 0;
  std::uint32_t matched = 0;
  std::uint32_t expanded = 0;

  bool alive() const { return lo <= hi; }
};

/// BWT-based membership index over the paths of a segment-repeat-free
/// founder block graph.
///
/// The indexed text C concatenates ell(v) ell(w) 0 over all edges (v, w) in
/// canonical order (for an edgeless single-block graph, ell(v) 0 over all
/// nodes). Bitvectors over suffix-array index space mark, for each node v,
/// the maximal interval whose suffixes start with ell(v). Backward search
/// that expands the interval to such a marked interval whenever it is
/// contained in one answers substring-membership on graph paths in O(|q|)
/// BWT operations.
class FbgIndex {
 public:
  static constexpr std::array<char, 4> kMagic = {'F', 'B', 'G', 'I'};
  static constexpr std::uint8_t kFormatVersion = 1;

  static FbgIndex build(const FounderBlockGraph& g);

  /// State covering the whole suffix-array range.
  QueryState start() const;

  /// One backward-search step with symbol code `a` (1..sigma); anything
  /// else yields a dead state. Dead states are values, not errors.
  QueryState backward_extend(QueryState st, std::uint8_t a) const;

  /// Replaces the interval with the marked node-label interval containing
  /// it, if any; counts only proper widenings, so it is idempotent.
  QueryState expand(QueryState st) const;

  /// True iff `q` occurs in the graph's paths. Characters are mapped
  /// through the graph alphabet; unknown characters make the answer false.
  /// The empty string occurs everywhere.
  bool query(std::string_view q) const { return query_state(q).alive(); }

  /// Runs the expanded backward search and returns the final state with its
  /// step counters (dead as soon as a symbol fails to extend).
  QueryState query_state(std::string_view q) const;

  const Alphabet& alphabet() const { return alphabet_; }
  std::uint64_t text_size() const { return c_len_; }
  std::uint8_t bwt_at(std::uint64_t i) const;
  const Bitvector& mark_b() const { return mark_b_; }
  const Bitvector& mark_e() const { return mark_e_; }

  /// Occurrences of symbol code `a` in bwt[0, i).
  std::uint64_t occ(std::uint8_t a, std::uint64_t i) const;

  /// Suffix-array interval of an arbitrary code sequence (plain backward
  /// search, no expansion).
  QueryState interval_of(std::span<const std::uint8_t> codes) const;

  void serialize(std::ostream& out) const;
  static FbgIndex deserialize(std::istream& in);

 private:
  static constexpr std::uint32_t kOccBlock = 64;  // symbols per occ sample

  void build_rank_support();

  bool two_bit() const { return alphabet_.sigma() <= 4; }

  Alphabet alphabet_;
  std::uint64_t c_len_ = 0;

  // sigma <= 4: BWT packed two bits per symbol with separator slots stored
  // as code 1 and excluded via the zeros bitvector. Larger alphabets keep
  // one byte per symbol with full per-symbol prefix-count tables.
  std::vector<std::uint64_t> packed_;
  Bitvector zeros_;
  std::vector<std::uint8_t> bytes_;

  std::vector<std::uint32_t> occ_samples_;          // 4 counters per block
  std::vector<std::vector<std::uint32_t>> occ_full_;  // [sym][pos], sigma > 4
  std::vector<std::uint64_t> count_less_;           // symbols < a in C

  Bitvector mark_b_;
  Bitvector mark_e_;
};

}  // namespace fbg

#endif  // FBG_FBG_INDEX_HPP
