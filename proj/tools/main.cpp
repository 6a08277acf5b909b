// dhce: generate synthetic graph corpora, embed graphs as DHC entropy
// sequences, classify embeddings with KNN, and project them with PCA.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dhce/commands.hpp"
#include "dhce/error.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;
constexpr int kInternalError = 3;

}  // namespace

int main(int argc, char** argv) {
  using dhce::cli::Command;
  dhce::cli::RunConfig cfg;
  std::string classes;

  CLI::App app{"DHC entropy whole-graph embedding pipeline"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Write a synthetic edge-list corpus and manifest.csv");
  generate->add_option("--out", cfg.out, "Output dataset directory")->required();
  generate->add_option("--classes", classes,
                       "Comma-separated [label=]MODEL:n:params:count items; "
                       "ER:n:p:count, BA:n:m:count, WS:n:k:beta:count")
      ->required();
  generate->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

  auto* embed = app.add_subcommand("embed", "Embed every graph of a manifest into an aligned CSV matrix");
  embed->add_option("--manifest", cfg.manifest, "CSV manifest with header path,label")
      ->required()
      ->check(CLI::ExistingFile);
  embed->add_option("--out", cfg.out, "Embedding matrix CSV")->required();
  embed->add_flag("--skip-degree-entropy", "Drop the entropy of the degree state");
  embed->add_option("--trace-dir", cfg.trace_dir, "Also write each graph's DHC states as CSV");
  embed->add_flag("--verbose", cfg.verbose, "Log the number of DHC updates per graph");

  auto* classify = app.add_subcommand("classify", "Repeated stratified k-fold KNN classification");
  auto* cls_embeddings =
      classify->add_option("--embeddings", cfg.embeddings, "Embedding matrix CSV")->check(CLI::ExistingFile);
  auto* cls_manifest =
      classify->add_option("--manifest", cfg.manifest, "Manifest to embed on the fly")->check(CLI::ExistingFile);
  cls_embeddings->excludes(cls_manifest);
  classify->add_option("--out", cfg.out, "Report JSON (stdout when omitted)");
  classify->add_option("--per-run", cfg.per_run_out, "Per-run scores CSV");
  classify->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  classify->add_option("--k", cfg.knn_k, "Number of neighbors")->capture_default_str()->check(CLI::PositiveNumber);
  classify->add_option("--folds", cfg.folds, "Cross-validation folds")->capture_default_str()->check(CLI::Range(2, 1 << 20));
  classify->add_option("--runs", cfg.runs, "Repetitions")->capture_default_str()->check(CLI::PositiveNumber);
  classify->add_flag("--skip-degree-entropy", "Drop the entropy of the degree state (with --manifest)");

  auto* project = app.add_subcommand("project", "Two-component PCA of an embedding matrix");
  project->add_option("--embeddings", cfg.embeddings, "Embedding matrix CSV")->required()->check(CLI::ExistingFile);
  project->add_option("--out", cfg.out, "Coordinates CSV; the variance ratios go to <out>.variance.json")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (generate->parsed()) {
      cfg.command = Command::Generate;
      cfg.classes = dhce::cli::parse_class_specs(classes);
      dhce::cli::cmd_generate(cfg);
    } else if (embed->parsed()) {
      cfg.command = Command::Embed;
      cfg.include_degree_entropy = embed->count("--skip-degree-entropy") == 0;
      dhce::cli::cmd_embed(cfg);
    } else if (classify->parsed()) {
      cfg.command = Command::Classify;
      cfg.include_degree_entropy = classify->count("--skip-degree-entropy") == 0;
      dhce::cli::cmd_classify(cfg);
    } else {
      cfg.command = Command::Project;
      dhce::cli::cmd_project(cfg);
    }
  } catch (const dhce::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const dhce::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return 0;
}
