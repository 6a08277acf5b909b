#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dhce {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Immutable undirected simple graph in compressed adjacency form.
///
/// Node ids are dense and 0-based. Every adjacency list is sorted, free of
/// duplicates and self-loops, and the relation is symmetric.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on node_count nodes. Self-loops and repeated edges
  /// (in either orientation) are dropped.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges);

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

std::vector<std::uint32_t> degrees(const Graph& g);

/// Result of reading an edge list: the graph plus the external label of
/// every node id, in id order.
struct ParsedGraph {
  Graph graph;
  std::vector<std::string> labels;
};

/// Reads a whitespace-separated edge list.
///
/// Each non-blank line holds exactly two node labels. Lines starting with
/// '#' are comments, except `# node <label>`, which declares a node that may
/// have no edges. Labels are mapped to ids in order of first appearance.
/// Throws ParseError on a line that does not have two tokens.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(std::string_view text);

/// Writes `u v` lines using node ids as labels. Isolated nodes are declared
/// with `# node <id>` so the node count survives a round trip.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace dhce
