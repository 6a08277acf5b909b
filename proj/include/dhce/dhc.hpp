#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "dhce/graph.hpp"

namespace dhce {

using NodeValues = std::vector<std::uint32_t>;

/// Largest h such that at least h of the values are >= h. Zero for an
/// empty input.
std::uint32_t h_index(std::span<const std::uint32_t> values);

/// One synchronous H-index update: out[i] is the h-index of the previous
/// values of i's neighbors.
NodeValues dhc_step(const Graph& g, std::span<const std::uint32_t> values);

/// States of the iterated update, starting from the degree vector.
///
/// states.front() is the degree vector and states.back() the first fixed
/// point, which is the coreness vector. Consecutive states are distinct.
/// converged_in counts the updates applied, including the final one that
/// reproduced its input, so it equals states.size().
struct DhcTrace {
  std::vector<NodeValues> states;
  std::size_t converged_in = 0;
};

DhcTrace dhc_trace(const Graph& g);

/// Core numbers by bucket-based k-core peeling. Shares no code with the
/// H-index iteration.
NodeValues coreness(const Graph& g);

/// One CSV row per state, one column per node (header `iteration,n0,n1,...`).
void write_trace_csv(std::ostream& out, const DhcTrace& trace);

}  // namespace dhce
