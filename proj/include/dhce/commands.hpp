#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dhce/embedding.hpp"
#include "dhce/eval.hpp"
#include "dhce/generators.hpp"
#include "dhce/projection.hpp"

namespace dhce::cli {

/// One class of a synthetic corpus: `count` graphs drawn from `spec`
/// (whose seed is ignored; per-graph seeds derive from the run seed).
struct ClassSpec {
  std::string label;
  GeneratorSpec spec;
  std::size_t count = 0;
};

/// Parses `[label=]MODEL:n:params...:count` items separated by commas.
/// ER takes p, BA takes m, WS takes k and beta. The label defaults to the
/// model name. Throws ParameterError.
std::vector<ClassSpec> parse_class_specs(std::string_view text);

enum class Command { Generate, Embed, Classify, Project };

struct RunConfig {
  Command command = Command::Generate;
  std::filesystem::path manifest;
  std::filesystem::path embeddings;
  std::filesystem::path out;
  std::filesystem::path per_run_out;  // classify: optional per-run CSV
  std::filesystem::path trace_dir;    // embed: optional per-graph DHC traces
  std::uint64_t seed = 0;
  std::size_t knn_k = 5;
  std::size_t folds = 10;
  std::size_t runs = 500;
  std::vector<ClassSpec> classes;
  bool include_degree_entropy = true;
  unsigned threads = 0;  // 0: hardware concurrency
  bool verbose = false;
};

/// Worker cap from DHC_THREADS, or 0 when unset.
unsigned threads_from_env();

/// Writes <out>/graphs/<label>_<i>.txt and <out>/manifest.csv.
void cmd_generate(const RunConfig& cfg);

/// Embeds every graph in the manifest and returns the aligned matrix.
EmbeddingMatrix embed_manifest(const RunConfig& cfg);
void cmd_embed(const RunConfig& cfg);

EvalReport cmd_classify(const RunConfig& cfg);

/// Writes the coordinate CSV to cfg.out and the variance sidecar next to it.
Projection2D cmd_project(const RunConfig& cfg);
std::filesystem::path sidecar_path(const std::filesystem::path& csv);

}  // namespace dhce::cli
