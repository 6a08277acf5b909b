#include "dhce/generators.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <string>
#include <vector>

#include "dhce/error.hpp"
#include "dhce/random.hpp"

namespace dhce {

std::string_view model_name(GraphModel model) {
  switch (model) {
    case GraphModel::ErdosRenyi: return "ER";
    case GraphModel::BarabasiAlbert: return "BA";
    case GraphModel::WattsStrogatz: return "WS";
  }
  return "?";
}

GraphModel parse_model(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "ER") return GraphModel::ErdosRenyi;
  if (upper == "BA") return GraphModel::BarabasiAlbert;
  if (upper == "WS" || upper == "SW") return GraphModel::WattsStrogatz;
  throw ParameterError("unknown graph model '" + std::string(name) + "' (expected ER, BA or WS)");
}

GeneratorSpec GeneratorSpec::erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.model = GraphModel::ErdosRenyi;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

GeneratorSpec GeneratorSpec::barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed) {
  GeneratorSpec s;
  s.model = GraphModel::BarabasiAlbert;
  s.n = n;
  s.m = m;
  s.seed = seed;
  return s;
}

GeneratorSpec GeneratorSpec::watts_strogatz(std::size_t n, std::size_t k, double beta,
                                            std::uint64_t seed) {
  GeneratorSpec s;
  s.model = GraphModel::WattsStrogatz;
  s.n = n;
  s.k = k;
  s.beta = beta;
  s.seed = seed;
  return s;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw ParameterError("node count must be at least 1");
  switch (spec.model) {
    case GraphModel::ErdosRenyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ParameterError("ER: p must lie in [0, 1]");
      break;
    case GraphModel::BarabasiAlbert:
      if (spec.m < 1) throw ParameterError("BA: m must be at least 1");
      if (spec.m >= spec.n) throw ParameterError("BA: m must be smaller than n");
      break;
    case GraphModel::WattsStrogatz:
      if (spec.k < 2 || spec.k % 2 != 0) throw ParameterError("WS: k must be even and at least 2");
      if (spec.k >= spec.n) throw ParameterError("WS: k must be smaller than n");
      if (!(spec.beta >= 0.0 && spec.beta <= 1.0)) {
        throw ParameterError("WS: beta must lie in [0, 1]");
      }
      break;
  }
}

namespace {

Graph erdos_renyi(const GeneratorSpec& spec, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < spec.n; ++u) {
    for (NodeId v = u + 1; v < spec.n; ++v) {
      if (rng.bernoulli(spec.p)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(spec.n, edges);
}

// Seed clique on m nodes; each later node attaches to m distinct earlier
// nodes drawn proportionally to degree.
Graph barabasi_albert(const GeneratorSpec& spec, Rng& rng) {
  const auto m = static_cast<NodeId>(spec.m);
  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;  // node v appears degree(v) times
  for (NodeId u = 0; u < m; ++u) {
    for (NodeId v = u + 1; v < m; ++v) {
      edges.emplace_back(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (auto v = m; v < spec.n; ++v) {
    targets.clear();
    while (targets.size() < m) {
      // Only reachable while every existing node has degree 0 (m == 1).
      const NodeId t = endpoints.empty() ? static_cast<NodeId>(rng.below(v))
                                         : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return Graph::from_edges(spec.n, edges);
}

// Ring lattice, then each clockwise edge (u, u+j) has its far endpoint
// rewired with probability beta to a uniformly chosen node that is neither
// u nor already adjacent to u.
Graph watts_strogatz(const GeneratorSpec& spec, Rng& rng) {
  const auto n = static_cast<NodeId>(spec.n);
  const auto half = static_cast<NodeId>(spec.k / 2);
  std::vector<std::set<NodeId>> adj(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId j = 1; j <= half; ++j) {
      const NodeId v = (u + j) % n;
      adj[u].insert(v);
      adj[v].insert(u);
    }
  }
  for (NodeId j = 1; j <= half; ++j) {
    for (NodeId u = 0; u < n; ++u) {
      if (!rng.bernoulli(spec.beta)) continue;
      const NodeId v = (u + j) % n;
      if (!adj[u].contains(v)) continue;  // already rewired away
      if (adj[u].size() >= n - 1) continue;
      NodeId w = static_cast<NodeId>(rng.below(n));
      while (w == u || adj[u].contains(w)) w = static_cast<NodeId>(rng.below(n));
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  switch (spec.model) {
    case GraphModel::ErdosRenyi: return erdos_renyi(spec, rng);
    case GraphModel::BarabasiAlbert: return barabasi_albert(spec, rng);
    case GraphModel::WattsStrogatz: return watts_strogatz(spec, rng);
  }
  throw ParameterError("unknown graph model");
}

}  // namespace dhce
