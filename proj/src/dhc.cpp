#include "dhce/dhc.hpp"

#include <algorithm>
#include <ostream>

#include "dhce/error.hpp"

namespace dhce {

namespace {

// h never exceeds the number of values, so larger values are clamped into
// the top histogram bin.
std::uint32_t h_index(std::span<const std::uint32_t> values, std::vector<std::uint32_t>& histogram) {
  const auto n = static_cast<std::uint32_t>(values.size());
  histogram.assign(n + 1, 0);
  for (std::uint32_t v : values) ++histogram[std::min(v, n)];
  std::uint32_t at_least = 0;
  for (std::uint32_t h = n; h > 0; --h) {
    at_least += histogram[h];
    if (at_least >= h) return h;
  }
  return 0;
}

}  // namespace

std::uint32_t h_index(std::span<const std::uint32_t> values) {
  std::vector<std::uint32_t> histogram;
  return h_index(values, histogram);
}

NodeValues dhc_step(const Graph& g, std::span<const std::uint32_t> values) {
  require(values.size() == g.node_count(), "dhc_step: value vector length != node count");
  NodeValues out(values.size());
  std::vector<std::uint32_t> gathered;
  std::vector<std::uint32_t> histogram;
  for (NodeId v = 0; v < out.size(); ++v) {
    gathered.clear();
    for (NodeId u : g.neighbors(v)) gathered.push_back(values[u]);
    out[v] = h_index(gathered, histogram);
  }
  return out;
}

DhcTrace dhc_trace(const Graph& g) {
  DhcTrace trace;
  trace.states.push_back(degrees(g));
  for (;;) {
    NodeValues next = dhc_step(g, trace.states.back());
    ++trace.converged_in;
    if (next == trace.states.back()) break;
    trace.states.push_back(std::move(next));
  }
  return trace;
}

// Batagelj-Zaversnik: nodes kept sorted by current degree in an array of
// buckets; removing the minimum node decrements its higher neighbors.
NodeValues coreness(const Graph& g) {
  const std::size_t n = g.node_count();
  NodeValues degree = degrees(g);
  if (n == 0) return degree;
  const std::uint32_t max_degree = *std::max_element(degree.begin(), degree.end());

  std::vector<std::size_t> bucket_start(max_degree + 2, 0);
  for (auto d : degree) ++bucket_start[d + 1];
  for (std::size_t d = 0; d <= max_degree; ++d) bucket_start[d + 1] += bucket_start[d];

  std::vector<NodeId> order(n);
  std::vector<std::size_t> position(n);
  {
    std::vector<std::size_t> next = bucket_start;
    for (NodeId v = 0; v < n; ++v) {
      position[v] = next[degree[v]]++;
      order[position[v]] = v;
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = order[i];
    for (NodeId u : g.neighbors(v)) {
      if (degree[u] <= degree[v]) continue;
      // Swap u to the front of its bucket, then shrink the bucket.
      const std::uint32_t du = degree[u];
      const std::size_t front = bucket_start[du];
      const NodeId w = order[front];
      if (w != u) {
        std::swap(order[front], order[position[u]]);
        position[w] = position[u];
        position[u] = front;
      }
      ++bucket_start[du];
      --degree[u];
    }
  }
  return degree;
}

void write_trace_csv(std::ostream& out, const DhcTrace& trace) {
  const std::size_t n = trace.states.empty() ? 0 : trace.states.front().size();
  out << "iteration";
  for (std::size_t i = 0; i < n; ++i) out << ",n" << i;
  out << '\n';
  for (std::size_t m = 0; m < trace.states.size(); ++m) {
    out << m;
    for (auto v : trace.states[m]) out << ',' << v;
    out << '\n';
  }
}

}  // namespace dhce
