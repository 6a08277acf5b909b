#include "dhce/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "dhce/error.hpp"

namespace dhce {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges) {
  std::vector<Edge> arcs;
  arcs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    require(u < node_count && v < node_count, "edge endpoint out of range");
    if (u == v) continue;
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.offsets_.assign(node_count + 1, 0);
  g.targets_.reserve(arcs.size());
  for (auto [u, v] : arcs) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  for (std::size_t i = 0; i < node_count; ++i) g.offsets_[i + 1] += g.offsets_[i];
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::uint32_t> degrees(const Graph& g) {
  std::vector<std::uint32_t> out(g.node_count());
  for (NodeId v = 0; v < out.size(); ++v) out[v] = static_cast<std::uint32_t>(g.degree(v));
  return out;
}

namespace {

class LabelMap {
 public:
  NodeId id(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> release() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  LabelMap labels;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(std::move(t));
    if (fields.empty()) continue;
    if (fields.front().front() == '#') {
      if (fields.size() == 3 && fields[0] == "#" && fields[1] == "node") labels.id(fields[2]);
      continue;
    }
    if (fields.size() != 2) {
      throw ParseError(line_no, "expected 2 node labels, found " + std::to_string(fields.size()));
    }
    const NodeId u = labels.id(fields[0]);
    const NodeId v = labels.id(fields[1]);
    edges.emplace_back(u, v);
  }
  ParsedGraph out;
  out.labels = labels.release();
  out.graph = Graph::from_edges(out.labels.size(), edges);
  return out;
}

ParsedGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) out << "# node " << v << '\n';
  }
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace dhce
