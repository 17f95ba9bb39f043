#ifndef FBG_MSA_HPP
#define FBG_MSA_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fbg/errors.hpp"

namespace fbg {

/// Dense symbol coding for one input: the distinct characters in canonical
/// (lexicographic) order, mapped to codes 1..sigma. Code 0 is reserved for
/// the row separator and never maps to a character.
class Alphabet {
 public:
  Alphabet() { code_of_.fill(0); }

  static Alphabet from_rows(const std::vector<std::string>& rows);

  std::uint8_t sigma() const { return static_cast<std::uint8_t>(symbols_.size()); }

  /// Code of `c`, or 0 if `c` is not part of the alphabet.
  std::uint8_t code_of(char c) const {
    return code_of_[static_cast<unsigned char>(c)];
  }

  char char_of(std::uint8_t code) const { return symbols_[code - 1]; }

  const std::string& symbols() const { return symbols_; }

  /// Rebuilds the code table from an explicit symbol list (must be sorted
  /// and duplicate-free).
  static Alphabet from_symbols(std::string symbols);

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

 private:
  std::string symbols_;
  std::array<std::uint8_t, 256> code_of_;
};

/// Gapless multiple sequence alignment: m rows of identical length n.
/// Rows are stored upper-cased; the alphabet covers exactly the characters
/// observed in the rows.
struct Msa {
  std::vector<std::string> names;
  std::vector<std::string> rows;
  Alphabet alphabet;

  std::uint32_t row_count() const { return static_cast<std::uint32_t>(rows.size()); }
  std::uint32_t col_count() const {
    return rows.empty() ? 0 : static_cast<std::uint32_t>(rows.front().size());
  }
};

enum class DropReason { kContainsGap, kContainsAmbiguous };

std::string_view to_string(DropReason r);

/// Which rows a filtering pass removed and why.
struct FilterReport {
  std::size_t kept = 0;
  std::vector<std::pair<std::string, DropReason>> dropped;
};

/// One FASTA record; sequences are upper-cased with whitespace stripped.
struct FastaRecord {
  std::string name;
  std::string sequence;
};

/// Reads FASTA records without any length constraints (used for query
/// pattern files as well as alignments).
std::vector<FastaRecord> read_fasta_records(std::string_view text);

/// Parses an aligned FASTA file into a validated MSA.
Msa parse_aligned_fasta(std::string_view text);

/// Serializes an MSA back to FASTA (one line per sequence).
std::string write_fasta(const Msa& msa);

/// Builds an MSA directly from rows (names auto-generated when empty).
Msa msa_from_rows(std::vector<std::string> rows, std::vector<std::string> names = {});

/// Drops rows containing '-' (when drop_gaps) or 'N' (when drop_ambiguous).
/// Row order is preserved and the alphabet is rebuilt from the survivors.
std::pair<Msa, FilterReport> filter_rows(const Msa& msa, bool drop_gaps,
                                         bool drop_ambiguous);

}  // namespace fbg

#endif  // FBG_MSA_HPP
