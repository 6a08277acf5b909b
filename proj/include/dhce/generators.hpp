#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "dhce/graph.hpp"

namespace dhce {

enum class GraphModel { ErdosRenyi, BarabasiAlbert, WattsStrogatz };

std::string_view model_name(GraphModel model);
/// Accepts "ER", "BA", "WS" (case-insensitive). Throws ParameterError.
GraphModel parse_model(std::string_view name);

struct GeneratorSpec {
  GraphModel model = GraphModel::ErdosRenyi;
  std::size_t n = 1;
  double p = 0.0;          // ER edge probability
  std::size_t m = 1;       // BA edges per new node
  std::size_t k = 2;       // WS ring degree (even)
  double beta = 0.0;       // WS rewiring probability
  std::uint64_t seed = 0;

  static GeneratorSpec erdos_renyi(std::size_t n, double p, std::uint64_t seed);
  static GeneratorSpec barabasi_albert(std::size_t n, std::size_t m, std::uint64_t seed);
  static GeneratorSpec watts_strogatz(std::size_t n, std::size_t k, double beta, std::uint64_t seed);
};

/// Throws ParameterError if any parameter is out of range.
void validate(const GeneratorSpec& spec);

/// Samples a graph. The result is a pure function of the spec, seed included.
Graph generate(const GeneratorSpec& spec);

}  // namespace dhce
