#ifndef FBG_FOUNDER_GRAPH_HPP
#define FBG_FOUNDER_GRAPH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fbg/errors.hpp"
#include "fbg/msa.hpp"
#include "fbg/segmentation.hpp"
#include "fbg/text_index.hpp"

namespace fbg {

/// Founder block graph: per block, the distinct segment strings of the rows
/// as nodes; edges connect strings adjacent in some row. Nodes are numbered
/// block-major, label-lexicographic, which makes every downstream artifact
/// (GFA, index text) byte-deterministic.
class FounderBlockGraph {
 public:
  std::uint32_t node_count() const { return static_cast<std::uint32_t>(labels_.size()); }
  std::uint32_t block_count() const { return static_cast<std::uint32_t>(block_first_.size()) - 1; }
  std::uint64_t edge_count() const { return edge_count_; }

  const std::string& label(std::uint32_t node) const { return labels_[node]; }
  std::uint32_t block_of(std::uint32_t node) const { return node_block_[node]; }

  /// Nodes of block b: ids in [block_begin(b), block_end(b)).
  std::uint32_t block_begin(std::uint32_t b) const { return block_first_[b]; }
  std::uint32_t block_end(std::uint32_t b) const { return block_first_[b + 1]; }

  const std::vector<std::uint32_t>& out_edges(std::uint32_t node) const {
    return out_edges_[node];
  }
  const std::vector<std::uint32_t>& in_edges(std::uint32_t node) const {
    return in_edges_[node];
  }

  bool operator==(const FounderBlockGraph&) const = default;

  /// Assembles a graph from raw parts; nodes must already be in canonical
  /// order. Validates the block-graph shape (labels per block distinct and
  /// of equal length, edges between consecutive blocks only).
  static FounderBlockGraph from_parts(std::vector<std::string> labels,
                                      std::vector<std::uint32_t> node_block,
                                      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint32_t> node_block_;
  std::vector<std::uint32_t> block_first_;
  std::vector<std::vector<std::uint32_t>> out_edges_;
  std::vector<std::vector<std::uint32_t>> in_edges_;
  std::uint64_t edge_count_ = 0;
};

struct GraphStats {
  std::uint32_t blocks = 0;
  std::uint32_t nodes = 0;
  std::uint64_t edges = 0;
  std::uint32_t max_label_length = 0;    // W
  std::uint64_t total_label_length = 0;  // N
  std::uint32_t max_nodes_per_block = 0;
};

/// Materializes the graph induced by `seg` on `msa`.
FounderBlockGraph build_graph(const Msa& msa, const Segmentation& seg);

/// True iff every block of `seg` is a valid segment, which characterizes
/// segment-repeat-freeness of the induced graph: each node label occurs in
/// the rows only at its block's start column.
bool verify_repeat_free(const FounderBlockGraph& g, const TextIndex& idx,
                        const Segmentation& seg);

/// True iff `q` is a substring of some source-to-sink path label. Dynamic
/// programming over (node, offset) states; no path enumeration. The empty
/// string occurs in any graph.
bool graph_match_oracle(const FounderBlockGraph& g, std::string_view q);

/// GFA 1.1 text: H line, S lines in node-id order with a BL:i:<block> tag,
/// L lines sorted by (from, to) with 0M overlap. Ids and blocks are 1-based.
std::string write_gfa(const FounderBlockGraph& g);

FounderBlockGraph read_gfa(std::string_view text);

GraphStats graph_stats(const FounderBlockGraph& g);

}  // namespace fbg

#endif  // FBG_FOUNDER_GRAPH_HPP
