#include "fbg/founder_graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <unordered_map>

namespace fbg {

FounderBlockGraph FounderBlockGraph::from_parts(
    std::vector<std::string> labels, std::vector<std::uint32_t> node_block,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
  FounderBlockGraph g;
  const std::uint32_t n_nodes = static_cast<std::uint32_t>(labels.size());
  if (n_nodes == 0) throw MalformedGfa("graph has no nodes");

  std::uint32_t n_blocks = 0;
  for (std::uint32_t b : node_block) n_blocks = std::max(n_blocks, b + 1);
  g.block_first_.assign(n_blocks + 1, 0);
  for (std::uint32_t i = 0; i < n_nodes; ++i) {
    // Canonical order: block-major, then label-lexicographic.
    if (i + 1 < n_nodes &&
        (node_block[i] > node_block[i + 1] ||
         (node_block[i] == node_block[i + 1] && labels[i] >= labels[i + 1])))
      throw MalformedGfa("nodes not in canonical (block, label) order");
    ++g.block_first_[node_block[i] + 1];
  }
  for (std::uint32_t b = 0; b < n_blocks; ++b) {
    if (g.block_first_[b + 1] == 0) throw MalformedGfa("empty block");
    g.block_first_[b + 1] += g.block_first_[b];
  }
  for (std::uint32_t b = 0; b < n_blocks; ++b) {
    const std::uint32_t first = g.block_first_[b];
    for (std::uint32_t i = first + 1; i < g.block_first_[b + 1]; ++i)
      if (labels[i].size() != labels[first].size())
        throw MalformedGfa("labels within a block differ in length");
  }

  g.out_edges_.resize(n_nodes);
  g.in_edges_.resize(n_nodes);
  for (auto [from, to] : edges) {
    if (from >= n_nodes || to >= n_nodes)
      throw MalformedGfa("edge references an unknown node");
    if (node_block[from] + 1 != node_block[to])
      throw MalformedGfa("edge does not connect consecutive blocks");
    g.out_edges_[from].push_back(to);
    g.in_edges_[to].push_back(from);
  }
  for (auto& adj : g.out_edges_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    g.edge_count_ += adj.size();
  }
  for (auto& adj : g.in_edges_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  g.labels_ = std::move(labels);
  g.node_block_ = std::move(node_block);
  return g;
}

FounderBlockGraph build_graph(const Msa& msa, const Segmentation& seg) {
  const std::uint32_t n = msa.col_count();
  std::uint32_t expected_begin = 0;
  for (const auto& block : seg.blocks) {
    if (block.begin != expected_begin || block.end <= block.begin)
      throw SegmentationMismatch("segmentation does not cover the columns");
    expected_begin = block.end;
  }
  if (expected_begin != n)
    throw SegmentationMismatch("segmentation does not cover the columns");

  const std::uint32_t b = static_cast<std::uint32_t>(seg.blocks.size());
  std::vector<std::string> labels;
  std::vector<std::uint32_t> node_block;
  // Per block: distinct labels, lexicographic. Per row, remember its node in
  // the current and previous block to induce the edges.
  std::vector<std::uint32_t> prev_node(msa.row_count()), cur_node(msa.row_count());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edge_seen;

  for (std::uint32_t i = 0; i < b; ++i) {
    const auto& range = seg.blocks[i];
    std::map<std::string_view, std::uint32_t> distinct;
    for (std::uint32_t t = 0; t < msa.row_count(); ++t)
      distinct.emplace(std::string_view(msa.rows[t]).substr(range.begin, range.width()), 0);
    const std::uint32_t first_id = static_cast<std::uint32_t>(labels.size());
    std::uint32_t next = first_id;
    for (auto& [label, id] : distinct) {
      id = next++;
      labels.emplace_back(label);
      node_block.push_back(i);
    }
    for (std::uint32_t t = 0; t < msa.row_count(); ++t) {
      cur_node[t] = distinct.find(std::string_view(msa.rows[t]).substr(range.begin, range.width()))->second;
      if (i > 0 && edge_seen.emplace(prev_node[t], cur_node[t]).second)
        edges.emplace_back(prev_node[t], cur_node[t]);
    }
    std::swap(prev_node, cur_node);
  }
  return FounderBlockGraph::from_parts(std::move(labels), std::move(node_block),
                                       std::move(edges));
}

bool verify_repeat_free(const FounderBlockGraph& g, const TextIndex& idx,
                        const Segmentation& seg) {
  if (g.block_count() != seg.blocks.size()) return false;
  // Every node label is some row's segment string, so checking each block
  // against each row covers every label's occurrence set.
  for (const auto& block : seg.blocks)
    if (!is_valid_segment(idx, block.begin, block.end)) return false;
  return true;
}

bool graph_match_oracle(const FounderBlockGraph& g, std::string_view q) {
  if (q.empty()) return true;

  // frontier[node][p] = true: q[0..k] matched, ending after label char p-1.
  std::vector<std::vector<char>> frontier(g.node_count()), next(g.node_count());
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    frontier[v].assign(g.label(v).size() + 1, 0);
    next[v].assign(g.label(v).size() + 1, 0);
  }

  bool any = false;
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    const std::string& label = g.label(v);
    for (std::size_t o = 0; o < label.size(); ++o)
      if (label[o] == q[0]) { frontier[v][o + 1] = 1; any = true; }
  }

  for (std::size_t k = 1; k < q.size() && any; ++k) {
    any = false;
    for (auto& states : next) std::fill(states.begin(), states.end(), 0);
    for (std::uint32_t v = 0; v < g.node_count(); ++v) {
      const std::string& label = g.label(v);
      for (std::size_t p = 1; p <= label.size(); ++p) {
        if (!frontier[v][p]) continue;
        if (p < label.size()) {
          if (label[p] == q[k]) { next[v][p + 1] = 1; any = true; }
        } else {
          for (std::uint32_t w : g.out_edges(v))
            if (g.label(w)[0] == q[k]) { next[w][1] = 1; any = true; }
        }
      }
    }
    frontier.swap(next);
  }
  return any;
}

std::string write_gfa(const FounderBlockGraph& g) {
  std::string out = "H\tVN:Z:1.1\n";
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    out += "S\t";
    out += std::to_string(v + 1);
    out += '\t';
    out += g.label(v);
    out += "\tBL:i:";
    out += std::to_string(g.block_of(v) + 1);
    out += '\n';
  }
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    for (std::uint32_t w : g.out_edges(v)) {
      out += "L\t";
      out += std::to_string(v + 1);
      out += "\t+\t";
      out += std::to_string(w + 1);
      out += "\t+\t0M\n";
    }
  }
  return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      break;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
  return fields;
}

std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw MalformedGfa(std::string("bad integer in ") + what);
  return value;
}

}  // namespace

FounderBlockGraph read_gfa(std::string_view text) {
  struct RawNode {
    std::string label;
    std::int64_t block;
  };
  std::unordered_map<std::string, std::uint32_t> id_of;
  std::vector<RawNode> raw;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw_edges;

  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    const auto fields = split_fields(line);
    if (fields[0] == "H") continue;
    if (fields[0] == "S") {
      if (fields.size() < 3) throw MalformedGfa("S line needs id and sequence");
      std::string name(fields[1]);
      if (id_of.count(name)) throw MalformedGfa("duplicate segment id " + name);
      std::int64_t block = -1;
      bool have_tag = false;
      for (std::size_t f = 3; f < fields.size(); ++f) {
        if (fields[f].starts_with("BL:i:")) {
          block = parse_int(fields[f].substr(5), "BL tag");
          have_tag = true;
        }
      }
      if (!have_tag) throw MissingBlockTag("S line lacks a BL:i tag: " + name);
      if (block < 1) throw MalformedGfa("BL tag must be a positive block index");
      if (fields[2].empty()) throw MalformedGfa("empty segment sequence");
      id_of.emplace(std::move(name), static_cast<std::uint32_t>(raw.size()));
      raw.push_back({std::string(fields[2]), block});
    } else if (fields[0] == "L") {
      if (fields.size() < 6 || fields[2] != "+" || fields[4] != "+" || fields[5] != "0M")
        throw MalformedGfa("L line must be <from> + <to> + 0M");
      auto from = id_of.find(std::string(fields[1]));
      auto to = id_of.find(std::string(fields[3]));
      if (from == id_of.end() || to == id_of.end())
        throw MalformedGfa("L line references an unknown segment");
      raw_edges.emplace_back(from->second, to->second);
    } else {
      throw MalformedGfa("unsupported GFA line type");
    }
  }
  if (raw.empty()) throw MalformedGfa("GFA contains no segments");

  // Normalize block numbering to 0..b-1 and renumber nodes canonically.
  std::vector<std::int64_t> block_ids;
  for (const auto& node : raw) block_ids.push_back(node.block);
  std::sort(block_ids.begin(), block_ids.end());
  block_ids.erase(std::unique(block_ids.begin(), block_ids.end()), block_ids.end());

  std::vector<std::uint32_t> order(raw.size());
  for (std::uint32_t i = 0; i < raw.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (raw[a].block != raw[b].block) return raw[a].block < raw[b].block;
    return raw[a].label < raw[b].label;
  });

  std::vector<std::uint32_t> new_id(raw.size());
  std::vector<std::string> labels(raw.size());
  std::vector<std::uint32_t> node_block(raw.size());
  for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
    const std::uint32_t old = order[rank];
    new_id[old] = rank;
    labels[rank] = std::move(raw[old].label);
    node_block[rank] = static_cast<std::uint32_t>(
        std::lower_bound(block_ids.begin(), block_ids.end(), raw[old].block) -
        block_ids.begin());
  }
  for (auto& [from, to] : raw_edges) {
    from = new_id[from];
    to = new_id[to];
  }
  return FounderBlockGraph::from_parts(std::move(labels), std::move(node_block),
                                       std::move(raw_edges));
}

GraphStats graph_stats(const FounderBlockGraph& g) {
  GraphStats stats;
  stats.blocks = g.block_count();
  stats.nodes = g.node_count();
  stats.edges = g.edge_count();
  for (std::uint32_t v = 0; v < g.node_count(); ++v) {
    const auto len = static_cast<std::uint32_t>(g.label(v).size());
    stats.max_label_length = std::max(stats.max_label_length, len);
    stats.total_label_length += len;
  }
  for (std::uint32_t b = 0; b < g.block_count(); ++b)
    stats.max_nodes_per_block =
        std::max(stats.max_nodes_per_block, g.block_end(b) - g.block_begin(b));
  return stats;
}

}  // namespace fbg
