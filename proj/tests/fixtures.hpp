#pragma once

#include <vector>

#include "dhce/generators.hpp"
#include "dhce/graph.hpp"
#include "dhce/random.hpp"

namespace dhce::testing {

inline Graph complete(NodeId n) {
  std::vector<Edge> e;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

// Center 0 with `leaves` leaves.
inline Graph star(NodeId leaves) {
  std::vector<Edge> e;
  for (NodeId v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

inline Graph path(NodeId n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

inline Graph cycle(NodeId n) {
  std::vector<Edge> e;
  for (NodeId v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

inline Graph empty_graph(NodeId n) { return Graph::from_edges(n, {}); }

// Mixed corpus of random ER/BA/WS graphs with n in [20, 200].
inline std::vector<Graph> random_corpus(std::size_t per_model, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < per_model; ++i) {
    const std::size_t n = 20 + rng.below(181);
    out.push_back(generate(GeneratorSpec::erdos_renyi(n, 0.02 + 0.18 * rng.uniform(), rng.next())));
    out.push_back(generate(GeneratorSpec::barabasi_albert(n, 1 + rng.below(5), rng.next())));
    const std::size_t k = rng.below(2) == 0 ? 4 : 6;
    out.push_back(generate(GeneratorSpec::watts_strogatz(n, k, 0.5 * rng.uniform(), rng.next())));
  }
  return out;
}

}  // namespace dhce::testing
