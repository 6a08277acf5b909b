#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dhce/dhc.hpp"
#include "dhce/graph.hpp"

namespace dhce {

/// Base-2 Shannon entropy of the empirical distribution of values.
/// An empty input has entropy 0.
double shannon_entropy(std::span<const std::uint32_t> values);

/// Entropy of each DHC state, in iteration order.
struct Embedding {
  std::vector<double> entropies;
};

struct EmbedOptions {
  // When false the degree-state entropy is dropped. A graph whose degree
  // vector is already the fixed point keeps its single entry.
  bool include_degree_entropy = true;
};

Embedding embed_trace(const DhcTrace& trace, const EmbedOptions& options = {});
Embedding embed_graph(const Graph& g, const EmbedOptions& options = {});

/// Embeds every graph, fanning out over up to `threads` workers (0 picks
/// the hardware concurrency). Output order matches input order.
std::vector<Embedding> embed_graphs(std::span<const Graph> graphs, const EmbedOptions& options = {},
                                    unsigned threads = 1);

/// Row-major matrix of aligned embeddings.
class EmbeddingMatrix {
 public:
  EmbeddingMatrix() = default;
  EmbeddingMatrix(std::size_t rows, std::size_t width);

  std::size_t rows() const noexcept { return width_ == 0 ? 0 : values_.size() / width_; }
  std::size_t width() const noexcept { return width_; }

  std::span<const double> row(std::size_t i) const { return {values_.data() + i * width_, width_}; }
  std::span<double> row(std::size_t i) { return {values_.data() + i * width_, width_}; }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * width_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return values_[i * width_ + j]; }

  std::vector<std::string> row_labels;
  std::vector<std::string> class_labels;  // empty or one per row

  bool has_class_labels() const noexcept { return !class_labels.empty(); }

 private:
  std::vector<double> values_;
  std::size_t width_ = 0;
};

/// Pads every embedding to the longest length by repeating its own last
/// entry. Row labels default to the row index.
EmbeddingMatrix align(std::span<const Embedding> embeddings);

/// CSV with header `graph_id,label,e0,e1,...`; entries use 6 decimals.
void write_matrix_csv(std::ostream& out, const EmbeddingMatrix& m);
EmbeddingMatrix read_matrix_csv(std::istream& in);

}  // namespace dhce
