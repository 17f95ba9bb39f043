#include "fbg/fbg_index.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>

#include "fbg/suffix_array.hpp"

namespace fbg {

namespace {

// Every 2-bit slot filled with the given code.
constexpr std::array<std::uint64_t, 4> kSpread = {
    0x0000000000000000ULL, 0x5555555555555555ULL,
    0xAAAAAAAAAAAAAAAAULL, 0xFFFFFFFFFFFFFFFFULL};

// Occurrences of 2-bit code `c` among the first `k` slots of `word`.
std::uint64_t count_code(std::uint64_t word, std::uint8_t c, std::uint32_t k) {
  if (k == 0) return 0;
  const std::uint64_t x = word ^ kSpread[c];
  const std::uint64_t nonzero = (x | (x >> 1)) & 0x5555555555555555ULL;
  const std::uint64_t mask =
      k == 32 ? ~std::uint64_t{0} : (std::uint64_t{1} << (2 * k)) - 1;
  return k - static_cast<std::uint64_t>(std::popcount(nonzero & mask));
}

void write_bytes(std::ostream& out, const void* data, std::size_t size) {
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
}

void write_u8(std::ostream& out, std::uint8_t v) { write_bytes(out, &v, 1); }

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<std::uint8_t, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  write_bytes(out, b.data(), b.size());
}

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<std::uint8_t, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
  write_bytes(out, b.data(), b.size());
}

void read_bytes(std::istream& in, void* data, std::size_t size) {
  in.read(static_cast<char*>(data), static_cast<std::streamsize>(size));
  if (static_cast<std::size_t>(in.gcount()) != size)
    throw TruncatedStream("index stream ends prematurely");
}

std::uint8_t read_u8(std::istream& in) {
  std::uint8_t v;
  read_bytes(in, &v, 1);
  return v;
}

std::uint32_t read_u32(std::istream& in) {
  std::array<std::uint8_t, 4> b;
  read_bytes(in, b.data(), b.size());
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  std::array<std::uint8_t, 8> b;
  read_bytes(in, b.data(), b.size());
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

void write_words(std::ostream& out, const std::vector<std::uint64_t>& words) {
  for (std::uint64_t w : words) write_u64(out, w);
}

std::vector<std::uint64_t> read_words(std::istream& in, std::size_t count) {
  std::vector<std::uint64_t> words(count);
  for (auto& w : words) w = read_u64(in);
  return words;
}

}  // namespace

FbgIndex FbgIndex::build(const FounderBlockGraph& g) {
  FbgIndex ix;

  {
    std::array<bool, 256> seen{};
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
      for (char c : g.label(v)) seen[static_cast<unsigned char>(c)] = true;
    std::string symbols;
    for (int c = 0; c < 256; ++c)
      if (seen[c]) symbols.push_back(static_cast<char>(c));
    ix.alphabet_ = Alphabet::from_symbols(std::move(symbols));
  }

  // The indexed text: ell(v) ell(w) 0 per edge in canonical order; for an
  // edgeless (single-block) graph, ell(v) 0 per node.
  std::vector<std::uint8_t> c_text;
  auto append_label = [&](std::uint32_t node) {
    for (char c : g.label(node)) c_text.push_back(ix.alphabet_.code_of(c));
  };
  if (g.edge_count() == 0) {
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
      append_label(v);
      c_text.push_back(0);
    }
  } else {
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
      for (std::uint32_t w : g.out_edges(v)) {
        append_label(v);
        append_label(w);
        c_text.push_back(0);
      }
    }
  }
  ix.c_len_ = c_text.size();

  const auto sa = build_suffix_array(c_text);
  std::vector<std::uint8_t> bwt(ix.c_len_);
  for (std::uint64_t i = 0; i < ix.c_len_; ++i) {
    const std::uint64_t p = sa[i];
    bwt[i] = p == 0 ? c_text[ix.c_len_ - 1] : c_text[p - 1];
  }

  if (ix.two_bit()) {
    ix.packed_.assign((ix.c_len_ + 31) / 32, 0);
    ix.zeros_ = Bitvector(ix.c_len_);
    for (std::uint64_t i = 0; i < ix.c_len_; ++i) {
      if (bwt[i] == 0) {
        ix.zeros_.set(i);  // the 2-bit slot stays 0, excluded via zeros_
      } else {
        ix.packed_[i / 32] |=
            static_cast<std::uint64_t>(bwt[i] - 1) << (2 * (i % 32));
      }
    }
    ix.zeros_.finalize();
  } else {
    ix.bytes_ = std::move(bwt);
  }
  ix.build_rank_support();

  // Locate each node label and mark its maximal interval in B/E. The
  // intervals must be non-empty and pairwise disjoint; anything else means
  // the graph was not segment repeat-free.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> intervals;
  intervals.reserve(g.node_count());
  std::vector<std::uint8_t> codes;
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    codes.clear();
    for (char c : g.label(v)) codes.push_back(ix.alphabet_.code_of(c));
    const QueryState st = ix.interval_of(codes);
    if (!st.alive())
      throw NotRepeatFree("node label does not occur in the index text");
    intervals.emplace_back(st.lo, st.hi);
  }
  std::sort(intervals.begin(), intervals.end());
  for (std::size_t i = 1; i < intervals.size(); ++i)
    if (intervals[i].first <= intervals[i - 1].second)
      throw NotRepeatFree("node label intervals overlap");

  ix.mark_b_ = Bitvector(ix.c_len_);
  ix.mark_e_ = Bitvector(ix.c_len_);
  for (const auto& [lo, hi] : intervals) {
    ix.mark_b_.set(lo);
    ix.mark_e_.set(hi);
  }
  ix.mark_b_.finalize();
  ix.mark_e_.finalize();
  return ix;
}

void FbgIndex::build_rank_support() {
  const std::uint8_t sigma = alphabet_.sigma();
  if (two_bit()) {
    const std::uint64_t blocks = (c_len_ + kOccBlock - 1) / kOccBlock;
    occ_samples_.assign((blocks + 1) * 4, 0);
    std::array<std::uint32_t, 4> running{};
    for (std::uint64_t b = 0; b < blocks; ++b) {
      for (int c = 0; c < 4; ++c) {
        const std::uint64_t w0 = count_code(packed_[b * 2], static_cast<std::uint8_t>(c), 32);
        std::uint64_t w1 = 0;
        if (b * 2 + 1 < packed_.size())
          w1 = count_code(packed_[b * 2 + 1], static_cast<std::uint8_t>(c), 32);
        running[c] += static_cast<std::uint32_t>(w0 + w1);
        occ_samples_[(b + 1) * 4 + c] = running[c];
      }
    }
  } else {
    occ_full_.assign(sigma + 1, std::vector<std::uint32_t>(c_len_ + 1, 0));
    for (std::uint64_t i = 0; i < c_len_; ++i) {
      for (std::uint8_t a = 0; a <= sigma; ++a)
        occ_full_[a][i + 1] = occ_full_[a][i] + (bytes_[i] == a ? 1 : 0);
    }
  }

  count_less_.assign(sigma + 2, 0);
  for (std::uint8_t a = 0; a <= sigma; ++a) {
    const std::uint64_t total = occ(a, c_len_);
    count_less_[a + 1] = count_less_[a] + total;
  }
}

std::uint64_t FbgIndex::occ(std::uint8_t a, std::uint64_t i) const {
  if (two_bit()) {
    if (a == 0) return zeros_.rank(i);
    const std::uint8_t code = a - 1;
    const std::uint64_t block = i / kOccBlock;
    std::uint64_t r = occ_samples_[block * 4 + code];
    std::uint64_t word = block * 2;
    std::uint64_t rem = i - block * kOccBlock;
    while (rem > 0) {
      const std::uint32_t take = static_cast<std::uint32_t>(std::min<std::uint64_t>(rem, 32));
      r += count_code(packed_[word], code, take);
      rem -= take;
      ++word;
    }
    // Separator slots are stored as 2-bit code 0; discount them for symbol 1.
    if (code == 0) r -= zeros_.rank(i);
    return r;
  }
  return occ_full_[a][i];
}

std::uint8_t FbgIndex::bwt_at(std::uint64_t i) const {
  if (!two_bit()) return bytes_[i];
  if (zeros_[i]) return 0;
  return static_cast<std::uint8_t>(((packed_[i / 32] >> (2 * (i % 32))) & 3) + 1);
}

QueryState FbgIndex::start() const { return {0, c_len_ - 1, 0, 0}; }

QueryState FbgIndex::backward_extend(QueryState st, std::uint8_t a) const {
  ++st.matched;
  if (a == 0 || a > alphabet_.sigma() || !st.alive()) {
    st.lo = 1;
    st.hi = 0;
    return st;
  }
  const std::uint64_t base = count_less_[a];
  const std::uint64_t lo = base + occ(a, st.lo);
  const std::uint64_t hi = base + occ(a, st.hi + 1);
  st.lo = lo;
  st.hi = hi - 1;  // hi >= 1: code 0 occurs in C, so base >= 1 for a >= 1
  return st;
}

QueryState FbgIndex::expand(QueryState st) const {
  if (!st.alive()) return st;
  const std::uint64_t r = mark_b_.rank(st.lo + 1);
  if (r == 0) return st;
  const std::uint64_t lo = mark_b_.select(r);
  const std::uint64_t hi = mark_e_.select(r);
  if (lo <= st.lo && st.hi <= hi && (lo != st.lo || hi != st.hi)) {
    st.lo = lo;
    st.hi = hi;
    ++st.expanded;
  }
  return st;
}

QueryState FbgIndex::query_state(std::string_view q) const {
  QueryState st = start();
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    st = expand(st);
    st = backward_extend(st, alphabet_.code_of(*it));
    if (!st.alive()) return st;
  }
  return st;
}

QueryState FbgIndex::interval_of(std::span<const std::uint8_t> codes) const {
  QueryState st = start();
  for (auto it = codes.rbegin(); it != codes.rend(); ++it) {
    st = backward_extend(st, *it);
    if (!st.alive()) return st;
  }
  return st;
}

void FbgIndex::serialize(std::ostream& out) const {
  write_bytes(out, kMagic.data(), kMagic.size());
  write_u8(out, kFormatVersion);
  write_u8(out, alphabet_.sigma());
  write_u64(out, c_len_);
  write_bytes(out, alphabet_.symbols().data(), alphabet_.symbols().size());
  write_u8(out, two_bit() ? 2 : 8);
  if (two_bit()) {
    write_words(out, packed_);
    write_words(out, zeros_.words());
  } else {
    write_bytes(out, bytes_.data(), bytes_.size());
  }
  write_words(out, mark_b_.words());
  write_words(out, mark_e_.words());
  write_u32(out, kOccBlock);
}

FbgIndex FbgIndex::deserialize(std::istream& in) {
  std::array<char, 4> magic;
  read_bytes(in, magic.data(), magic.size());
  if (magic != kMagic) throw BadMagic("not an FBGI index stream");
  const std::uint8_t version = read_u8(in);
  if (version != kFormatVersion)
    throw VersionMismatch("unsupported index format version");

  FbgIndex ix;
  const std::uint8_t sigma = read_u8(in);
  ix.c_len_ = read_u64(in);
  std::string symbols(sigma, '\0');
  read_bytes(in, symbols.data(), symbols.size());
  ix.alphabet_ = Alphabet::from_symbols(std::move(symbols));

  const std::uint8_t mode = read_u8(in);
  if (mode != (ix.two_bit() ? 2 : 8))
    throw VersionMismatch("packing mode inconsistent with alphabet size");
  const std::size_t bit_words = (ix.c_len_ + 63) / 64;
  if (ix.two_bit()) {
    ix.packed_ = read_words(in, (ix.c_len_ + 31) / 32);
    ix.zeros_ = Bitvector(ix.c_len_, read_words(in, bit_words));
  } else {
    ix.bytes_.resize(ix.c_len_);
    read_bytes(in, ix.bytes_.data(), ix.bytes_.size());
  }
  ix.mark_b_ = Bitvector(ix.c_len_, read_words(in, bit_words));
  ix.mark_e_ = Bitvector(ix.c_len_, read_words(in, bit_words));
  const std::uint32_t occ_block = read_u32(in);
  if (occ_block != kOccBlock)
    throw VersionMismatch("unsupported occ sampling parameter");
  ix.build_rank_support();
  return ix;
}

}  // namespace fbg
