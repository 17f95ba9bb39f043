#include "fbg/msa.hpp"

#include <algorithm>
#include <cctype>

namespace fbg {

Alphabet Alphabet::from_rows(const std::vector<std::string>& rows) {
  std::array<bool, 256> seen{};
  for (const auto& row : rows)
    for (char c : row) seen[static_cast<unsigned char>(c)] = true;
  std::string symbols;
  for (int c = 0; c < 256; ++c)
    if (seen[c]) symbols.push_back(static_cast<char>(c));
  return from_symbols(std::move(symbols));
}

Alphabet Alphabet::from_symbols(std::string symbols) {
  Alphabet a;
  a.symbols_ = std::move(symbols);
  for (std::size_t i = 0; i < a.symbols_.size(); ++i)
    a.code_of_[static_cast<unsigned char>(a.symbols_[i])] =
        static_cast<std::uint8_t>(i + 1);
  return a;
}

std::string_view to_string(DropReason r) {
  switch (r) {
    case DropReason::kContainsGap: return "contains-gap";
    case DropReason::kContainsAmbiguous: return "contains-ambiguous";
  }
  return "unknown";
}

std::vector<FastaRecord> read_fasta_records(std::string_view text) {
  std::vector<FastaRecord> records;
  bool in_record = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.front() == '>') {
      records.push_back({std::string(line.substr(1)), {}});
      in_record = true;
    } else {
      if (!in_record) throw InvalidFasta("sequence data before the first '>' header");
      auto& seq = records.back().sequence;
      for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        seq.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
      }
    }
  }
  return records;
}

Msa parse_aligned_fasta(std::string_view text) {
  auto records = read_fasta_records(text);
  if (records.empty()) throw EmptyInput("no FASTA records");

  std::vector<std::string> names, rows;
  names.reserve(records.size());
  rows.reserve(records.size());
  for (auto& rec : records) {
    if (rec.sequence.empty())
      throw InvalidFasta("record '" + rec.name + "' has no sequence data");
    names.push_back(std::move(rec.name));
    rows.push_back(std::move(rec.sequence));
  }
  return msa_from_rows(std::move(rows), std::move(names));
}

std::string write_fasta(const Msa& msa) {
  std::string out;
  for (std::size_t i = 0; i < msa.rows.size(); ++i) {
    out.push_back('>');
    out += msa.names[i];
    out.push_back('\n');
    out += msa.rows[i];
    out.push_back('\n');
  }
  return out;
}

Msa msa_from_rows(std::vector<std::string> rows, std::vector<std::string> names) {
  if (rows.empty()) throw EmptyInput("MSA must have at least one row");
  if (rows.front().empty()) throw EmptyInput("MSA rows must not be empty");
  for (const auto& row : rows)
    if (row.size() != rows.front().size())
      throw NonUniformRowLength("MSA rows differ in length");
  if (names.empty()) {
    names.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      names.push_back("row" + std::to_string(i + 1));
  }
  Msa msa;
  msa.alphabet = Alphabet::from_rows(rows);
  msa.names = std::move(names);
  msa.rows = std::move(rows);
  return msa;
}

std::pair<Msa, FilterReport> filter_rows(const Msa& msa, bool drop_gaps,
                                         bool drop_ambiguous) {
  FilterReport report;
  std::vector<std::string> names, rows;
  for (std::size_t i = 0; i < msa.rows.size(); ++i) {
    const std::string& row = msa.rows[i];
    if (drop_gaps && row.find('-') != std::string::npos) {
      report.dropped.emplace_back(msa.names[i], DropReason::kContainsGap);
      continue;
    }
    if (drop_ambiguous && row.find('N') != std::string::npos) {
      report.dropped.emplace_back(msa.names[i], DropReason::kContainsAmbiguous);
      continue;
    }
    names.push_back(msa.names[i]);
    rows.push_back(row);
  }
  if (rows.empty()) throw AllRowsFiltered("filtering removed every row");
  report.kept = rows.size();
  return {msa_from_rows(std::move(rows), std::move(names)), std::move(report)};
}

}  // namespace fbg
