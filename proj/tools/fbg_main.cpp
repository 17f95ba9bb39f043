#include <cctype>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fbg/fbg_index.hpp"
#include "fbg/founder_graph.hpp"
#include "fbg/msa.hpp"
#include "fbg/segmentation.hpp"
#include "fbg/text_index.hpp"

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fbg::Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fbg::Error("cannot open " + path + " for writing");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw fbg::Error("write to " + path + " failed");
}

json filter_to_json(const fbg::FilterReport& report) {
  json dropped = json::array();
  for (const auto& [name, reason] : report.dropped)
    dropped.push_back({{"name", name}, {"reason", std::string(fbg::to_string(reason))}});
  return {{"kept", report.kept}, {"dropped", std::move(dropped)}};
}

json stats_to_json(const fbg::GraphStats& s) {
  return {{"blocks", s.blocks},
          {"nodes", s.nodes},
          {"edges", s.edges},
          {"max_label_length", s.max_label_length},
          {"total_label_length", s.total_label_length},
          {"max_nodes_per_block", s.max_nodes_per_block}};
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

struct BuildOptions {
  std::string msa_path;
  std::string out_path;
  std::string stats_path;
  bool no_filter_gaps = false;
  bool no_filter_ambiguous = false;
};

int run_build(const BuildOptions& opt) {
  const auto t0 = Clock::now();
  const fbg::Msa parsed = fbg::parse_aligned_fasta(read_file(opt.msa_path));
  auto [msa, report] =
      fbg::filter_rows(parsed, !opt.no_filter_gaps, !opt.no_filter_ambiguous);
  const double t_parse = seconds_since(t0);

  const auto t1 = Clock::now();
  const fbg::TextIndex idx = fbg::TextIndex::build(msa);
  const fbg::ValidRanges vr = fbg::compute_valid_ranges(idx);
  const fbg::ScoreTable st = fbg::compute_scores(vr);
  const fbg::Segmentation seg = fbg::traceback(st);
  const double t_segment = seconds_since(t1);

  const auto t2 = Clock::now();
  const fbg::FounderBlockGraph graph = fbg::build_graph(msa, seg);
  if (!fbg::verify_repeat_free(graph, idx, seg))
    throw fbg::NotRepeatFree("constructed graph failed repeat-freeness verification");
  const double t_graph = seconds_since(t2);

  write_file(opt.out_path, fbg::write_gfa(graph));

  const auto stats = fbg::graph_stats(graph);
  std::cerr << "blocks=" << stats.blocks << " nodes=" << stats.nodes
            << " edges=" << stats.edges << " max_block_width="
            << st.s[msa.col_count()] << "\n";

  if (!opt.stats_path.empty()) {
    json doc = {{"schema", 1},
                {"filter", filter_to_json(report)},
                {"graph", stats_to_json(stats)},
                {"max_block_width", st.s[msa.col_count()]},
                {"timing_seconds",
                 {{"parse", t_parse},
                  {"segment", t_segment},
                  {"graph", t_graph},
                  {"total", seconds_since(t0)}}}};
    write_file(opt.stats_path, doc.dump(2) + "\n");
  }
  return 0;
}

struct IndexOptions {
  std::string graph_path;
  std::string out_path;
  std::string msa_path;
};

int run_index(const IndexOptions& opt) {
  const fbg::FounderBlockGraph graph = fbg::read_gfa(read_file(opt.graph_path));
  const fbg::FbgIndex ix = fbg::FbgIndex::build(graph);

  std::ostringstream buf(std::ios::binary);
  ix.serialize(buf);
  const std::string bytes = std::move(buf).str();
  write_file(opt.out_path, bytes);

  std::cout << "index_bytes\t" << bytes.size() << "\n";
  if (!opt.msa_path.empty()) {
    const fbg::Msa msa = fbg::parse_aligned_fasta(read_file(opt.msa_path));
    const std::uint64_t packed =
        (static_cast<std::uint64_t>(msa.row_count()) * msa.col_count() * 2 + 7) / 8;
    std::cout << "msa_2bit_bytes\t" << packed << "\n";
    std::cout << "index_fraction\t"
              << static_cast<double>(bytes.size()) / static_cast<double>(packed)
              << "\n";
  }
  return 0;
}

struct QueryOptions {
  std::string index_path;
  std::string pattern;
  bool have_pattern = false;
  std::string patterns_path;
  std::string format = "tsv";
};

int run_query(const QueryOptions& opt) {
  std::ifstream in(opt.index_path, std::ios::binary);
  if (!in) throw fbg::Error("cannot open " + opt.index_path);
  const fbg::FbgIndex ix = fbg::FbgIndex::deserialize(in);

  std::vector<std::pair<std::string, std::string>> patterns;
  if (opt.have_pattern)
    patterns.emplace_back("1", upper(opt.pattern));
  if (!opt.patterns_path.empty()) {
    const auto records = fbg::read_fasta_records(read_file(opt.patterns_path));
    std::size_t ordinal = patterns.size();
    for (const auto& rec : records) {
      ++ordinal;
      patterns.emplace_back(
          rec.name.empty() ? std::to_string(ordinal) : rec.name, rec.sequence);
    }
  }
  if (patterns.empty()) throw fbg::Error("no pattern given");

  json results = json::array();
  for (const auto& [name, pattern] : patterns) {
    const bool found = ix.query(pattern);
    if (opt.format == "json")
      results.push_back({{"name", name}, {"found", found}});
    else
      std::cout << name << '\t' << (found ? "FOUND" : "NOT_FOUND") << "\n";
  }
  if (opt.format == "json") std::cout << results.dump(2) << "\n";
  return 0;
}

int run_stats(const std::string& graph_path) {
  const fbg::FounderBlockGraph graph = fbg::read_gfa(read_file(graph_path));
  json doc = stats_to_json(fbg::graph_stats(graph));
  doc["schema"] = 1;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Founder block graphs from gapless alignments, with a succinct path index"};
  app.require_subcommand(1);

  BuildOptions build_opt;
  auto* build = app.add_subcommand(
      "build", "Segment an aligned FASTA and write the founder block graph as GFA");
  build->add_option("--msa", build_opt.msa_path, "Aligned FASTA input")->required();
  build->add_option("--out", build_opt.out_path, "Output GFA path")->required();
  build->add_option("--stats", build_opt.stats_path, "Write build statistics JSON here");
  build->add_flag("--no-filter-gaps", build_opt.no_filter_gaps,
                  "Keep rows that contain '-'");
  build->add_flag("--no-filter-ambiguous", build_opt.no_filter_ambiguous,
                  "Keep rows that contain 'N'");

  IndexOptions index_opt;
  auto* index = app.add_subcommand("index", "Build the binary index from a GFA graph");
  index->add_option("--graph", index_opt.graph_path, "Input GFA")->required();
  index->add_option("--out", index_opt.out_path, "Output index path")->required();
  index->add_option("--msa", index_opt.msa_path,
                    "Aligned FASTA for the 2-bit size comparison");

  QueryOptions query_opt;
  auto* query = app.add_subcommand("query", "Run membership queries against an index");
  query->add_option("--index", query_opt.index_path, "Binary index path")->required();
  auto* inline_pattern = query->add_option("--pattern", query_opt.pattern,
                                           "Single inline pattern");
  query->add_option("--patterns", query_opt.patterns_path, "FASTA file of patterns")
      ->excludes(inline_pattern);
  query->add_option("--format", query_opt.format, "Output format: tsv or json")
      ->check(CLI::IsMember({"tsv", "json"}));

  std::string stats_graph;
  auto* stats = app.add_subcommand("stats", "Print graph statistics as JSON");
  stats->add_option("--graph", stats_graph, "Input GFA")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  query_opt.have_pattern = inline_pattern->count() > 0;

  try {
    if (build->parsed()) return run_build(build_opt);
    if (index->parsed()) return run_index(index_opt);
    if (query->parsed()) return run_query(query_opt);
    if (stats->parsed()) return run_stats(stats_graph);
  } catch (const fbg::NoValidSegmentation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fbg::NotRepeatFree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
