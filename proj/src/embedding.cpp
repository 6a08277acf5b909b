#include "dhce/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <string>
#include <thread>

#include "dhce/error.hpp"
#include "dhce/io.hpp"

namespace dhce {

double shannon_entropy(std::span<const std::uint32_t> values) {
  if (values.empty()) return 0.0;
  std::vector<std::uint32_t> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double total = static_cast<double>(sorted.size());
  double h = 0.0;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double p = static_cast<double>(j - i) / total;
    h -= p * std::log2(p);
    i = j;
  }
  // A single distinct value gives -1 * log2(1) = -0.0.
  return h <= 0.0 ? 0.0 : h;
}

Embedding embed_trace(const DhcTrace& trace, const EmbedOptions& options) {
  Embedding e;
  const std::size_t first = (!options.include_degree_entropy && trace.states.size() > 1) ? 1 : 0;
  for (std::size_t m = first; m < trace.states.size(); ++m) {
    e.entropies.push_back(shannon_entropy(trace.states[m]));
  }
  return e;
}

Embedding embed_graph(const Graph& g, const EmbedOptions& options) {
  return embed_trace(dhc_trace(g), options);
}

std::vector<Embedding> embed_graphs(std::span<const Graph> graphs, const EmbedOptions& options,
                                    unsigned threads) {
  std::vector<Embedding> out(graphs.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, graphs.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i) out[i] = embed_graph(graphs[i], options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < graphs.size() && !failed; i = next++) {
        try {
          out[i] = embed_graph(graphs[i], options);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  }
  workers.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

EmbeddingMatrix::EmbeddingMatrix(std::size_t rows, std::size_t width)
    : values_(rows * width, 0.0), width_(width) {
  require(width > 0 || rows == 0, "EmbeddingMatrix: zero width with non-zero rows");
}

EmbeddingMatrix align(std::span<const Embedding> embeddings) {
  require(!embeddings.empty(), "align: empty embedding set");
  std::size_t width = 0;
  for (const auto& e : embeddings) {
    require(!e.entropies.empty(), "align: empty embedding");
    width = std::max(width, e.entropies.size());
  }
  EmbeddingMatrix m(embeddings.size(), width);
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const auto& src = embeddings[i].entropies;
    auto row = m.row(i);
    std::copy(src.begin(), src.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(src.size()), row.end(), src.back());
    m.row_labels.push_back(std::to_string(i));
  }
  return m;
}

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void write_matrix_csv(std::ostream& out, const EmbeddingMatrix& m) {
  out << "graph_id,label";
  for (std::size_t j = 0; j < m.width(); ++j) out << ",e" << j;
  out << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i < m.row_labels.size() ? m.row_labels[i] : std::to_string(i)) << ','
        << (m.has_class_labels() ? m.class_labels[i] : std::string());
    for (double x : m.row(i)) out << ',' << fixed6(x);
    out << '\n';
  }
}

EmbeddingMatrix read_matrix_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty embedding file");
  const auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "graph_id" || header[1] != "label") {
    throw ParseError(1, "expected header graph_id,label,e0,...");
  }
  const std::size_t width = header.size() - 2;
  std::vector<std::vector<std::string>> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != width + 2) {
      throw ParseError(line_no, "expected " + std::to_string(width + 2) + " fields, found " +
                                    std::to_string(fields.size()));
    }
    rows.push_back(std::move(fields));
  }
  EmbeddingMatrix m(rows.size(), width);
  bool any_label = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.row_labels.push_back(rows[i][0]);
    any_label = any_label || !rows[i][1].empty();
    for (std::size_t j = 0; j < width; ++j) {
      const std::string& cell = rows[i][j + 2];
      std::size_t used = 0;
      double x = 0.0;
      try {
        x = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != cell.size() || cell.empty()) {
        throw ParseError(i + 2, "not a number: '" + cell + "'");
      }
      m(i, j) = x;
    }
  }
  if (any_label) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][1].empty()) throw ParseError(i + 2, "missing class label");
      m.class_labels.push_back(rows[i][1]);
    }
  }
  return m;
}

}  // namespace dhce
