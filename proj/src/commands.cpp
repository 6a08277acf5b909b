#include "dhce/commands.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <system_error>

#include "dhce/error.hpp"
#include "dhce/io.hpp"
#include "dhce/random.hpp"

namespace dhce::cli {

namespace fs = std::filesystem;

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

std::size_t parse_count(std::string_view field, std::string_view item, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
    throw ParameterError("class spec '" + std::string(item) + "': " + what +
                         " must be a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

double parse_real(std::string_view field, std::string_view item, const char* what) {
  const std::string text(field);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (text.empty() || used != text.size()) {
    throw ParameterError("class spec '" + std::string(item) + "': " + what +
                         " must be a number, got '" + text + "'");
  }
  return value;
}

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char c : label) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<ClassSpec> parse_class_specs(std::string_view text) {
  std::vector<ClassSpec> out;
  std::set<std::string> seen;
  for (std::string_view item : split(text, ',')) {
    if (item.empty()) throw ParameterError("empty class spec in '" + std::string(text) + "'");
    ClassSpec cls;
    std::string_view body = item;
    if (const auto eq = item.find('='); eq != std::string_view::npos) {
      cls.label = std::string(item.substr(0, eq));
      body = item.substr(eq + 1);
    }
    const auto fields = split(body, ':');
    if (fields.size() < 2) {
      throw ParameterError("class spec '" + std::string(item) + "': expected MODEL:n:params:count");
    }
    const GraphModel model = parse_model(fields[0]);
    const std::size_t expected = model == GraphModel::WattsStrogatz ? 5 : 4;
    if (fields.size() != expected) {
      throw ParameterError("class spec '" + std::string(item) + "': " +
                           std::string(model_name(model)) + " takes " +
                           (model == GraphModel::WattsStrogatz ? "WS:n:k:beta:count"
                            : model == GraphModel::ErdosRenyi  ? "ER:n:p:count"
                                                               : "BA:n:m:count"));
    }
    const std::size_t n = parse_count(fields[1], item, "n");
    switch (model) {
      case GraphModel::ErdosRenyi:
        cls.spec = GeneratorSpec::erdos_renyi(n, parse_real(fields[2], item, "p"), 0);
        break;
      case GraphModel::BarabasiAlbert:
        cls.spec = GeneratorSpec::barabasi_albert(n, parse_count(fields[2], item, "m"), 0);
        break;
      case GraphModel::WattsStrogatz:
        cls.spec = GeneratorSpec::watts_strogatz(n, parse_count(fields[2], item, "k"),
                                                 parse_real(fields[3], item, "beta"), 0);
        break;
    }
    cls.count = parse_count(fields.back(), item, "count");
    if (cls.label.empty()) cls.label = std::string(model_name(model));
    if (!valid_label(cls.label)) {
      throw ParameterError("class label '" + cls.label + "' may only use letters, digits, _ - .");
    }
    if (!seen.insert(cls.label).second) {
      throw ParameterError("duplicate class label '" + cls.label + "'; prefix one with label=");
    }
    validate(cls.spec);
    out.push_back(std::move(cls));
  }
  return out;
}

unsigned threads_from_env() {
  const char* value = std::getenv("DHC_THREADS");
  if (value == nullptr || *value == '\0') return 0;
  unsigned n = 0;
  const std::string_view text(value);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size() || n == 0) {
    throw ParameterError("DHC_THREADS must be a positive integer, got '" + std::string(text) + "'");
  }
  return n;
}

namespace {

unsigned worker_count(const RunConfig& cfg) {
  unsigned threads = cfg.threads;
  if (const unsigned cap = threads_from_env(); cap != 0) {
    threads = threads == 0 ? cap : std::min(threads, cap);
  }
  return threads;
}

// Replaces `target` with a fully written staging directory.
void publish_directory(const fs::path& staging, const fs::path& target) {
  std::error_code ec;
  if (fs::exists(target)) {
    const bool previous_output = fs::is_directory(target) && fs::exists(target / "manifest.csv");
    const bool empty_dir = fs::is_directory(target) && fs::is_empty(target);
    if (!previous_output && !empty_dir) {
      fs::remove_all(staging, ec);
      throw IoError("refusing to replace '" + target.string() +
                    "': not empty and not a generated dataset");
    }
    fs::remove_all(target, ec);
    if (ec) throw IoError("cannot replace '" + target.string() + "': " + ec.message());
  }
  fs::rename(staging, target, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove_all(staging, ignored);
    throw IoError("cannot move dataset into '" + target.string() + "': " + ec.message());
  }
}

void write_plain(const fs::path& file, std::string_view contents) {
  std::ofstream out(file, std::ios::binary);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("cannot write '" + file.string() + "'");
}

}  // namespace

void cmd_generate(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ParameterError("generate: --out is required");
  if (cfg.classes.empty()) throw ParameterError("generate: --classes is required");

  const fs::path target = fs::absolute(cfg.out).lexically_normal();
  std::error_code ec;
  if (target.has_parent_path()) fs::create_directories(target.parent_path(), ec);
  if (ec) throw IoError("cannot create '" + target.parent_path().string() + "': " + ec.message());
  std::random_device entropy;
  const fs::path staging = target.parent_path() /
                           (target.filename().string() + ".tmp" + std::to_string(entropy()));
  fs::create_directories(staging / "graphs", ec);
  if (ec) throw IoError("cannot create '" + staging.string() + "': " + ec.message());

  std::vector<ManifestEntry> entries;
  try {
    for (std::size_t c = 0; c < cfg.classes.size(); ++c) {
      const ClassSpec& cls = cfg.classes[c];
      for (std::size_t i = 0; i < cls.count; ++i) {
        GeneratorSpec spec = cls.spec;
        spec.seed = derive_seed(derive_seed(cfg.seed, c), i);
        std::ostringstream text;
        write_edge_list(text, generate(spec));
        char name[64];
        std::snprintf(name, sizeof name, "_%04zu.txt", i);
        const std::string relative = "graphs/" + cls.label + name;
        write_plain(staging / relative, text.str());
        entries.push_back({relative, cls.label});
      }
    }
    write_plain(staging / "manifest.csv", manifest_csv(entries));
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  publish_directory(staging, target);
}

EmbeddingMatrix embed_manifest(const RunConfig& cfg) {
  if (cfg.manifest.empty()) throw ParameterError("--manifest is required");
  const Manifest manifest = read_manifest(cfg.manifest);
  if (manifest.entries.empty()) throw DataError("manifest '" + cfg.manifest.string() + "' lists no graphs");

  std::vector<Graph> graphs;
  graphs.reserve(manifest.entries.size());
  for (const auto& e : manifest.entries) graphs.push_back(read_graph_file(manifest.resolve(e)).graph);

  const EmbedOptions options{.include_degree_entropy = cfg.include_degree_entropy};
  std::vector<Embedding> embeddings = embed_graphs(graphs, options, worker_count(cfg));

  if (cfg.verbose || !cfg.trace_dir.empty()) {
    if (!cfg.trace_dir.empty()) {
      std::error_code ec;
      fs::create_directories(cfg.trace_dir, ec);
      if (ec) throw IoError("cannot create '" + cfg.trace_dir.string() + "': " + ec.message());
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const DhcTrace trace = dhc_trace(graphs[i]);
      if (cfg.verbose) {
        std::clog << manifest.entries[i].path << ": converged in " << trace.converged_in
                  << " updates\n";
      }
      if (!cfg.trace_dir.empty()) {
        std::ostringstream csv;
        write_trace_csv(csv, trace);
        write_file_atomic(cfg.trace_dir / ("trace_" + std::to_string(i) + ".csv"), csv.str());
      }
    }
  }

  EmbeddingMatrix m = align(embeddings);
  bool labeled = false;
  for (std::size_t i = 0; i < manifest.entries.size(); ++i) {
    m.row_labels[i] = manifest.entries[i].path;
    labeled = labeled || !manifest.entries[i].label.empty();
  }
  if (labeled) {
    for (const auto& e : manifest.entries) {
      if (e.label.empty()) throw DataError("manifest row '" + e.path + "' has no label");
      m.class_labels.push_back(e.label);
    }
  }
  return m;
}

void cmd_embed(const RunConfig& cfg) {
  if (cfg.out.empty()) throw ParameterError("embed: --out is required");
  const EmbeddingMatrix m = embed_manifest(cfg);
  std::ostringstream csv;
  write_matrix_csv(csv, m);
  write_file_atomic(cfg.out, csv.str());
}

namespace {

EmbeddingMatrix load_embeddings(const fs::path& file) {
  std::istringstream in(read_text_file(file));
  try {
    return read_matrix_csv(in);
  } catch (const ParseError& e) {
    throw DataError("'" + file.string() + "': " + e.what());
  }
}

}  // namespace

EvalReport cmd_classify(const RunConfig& cfg) {
  EmbeddingMatrix m;
  if (!cfg.embeddings.empty()) {
    m = load_embeddings(cfg.embeddings);
  } else if (!cfg.manifest.empty()) {
    m = embed_manifest(cfg);
  } else {
    throw ParameterError("classify: --embeddings or --manifest is required");
  }
  const LabeledDataset ds = LabeledDataset::from_matrix(std::move(m));
  const EvalReport report = cross_validate(
      ds, CvOptions{.k_neighbors = cfg.knn_k, .folds = cfg.folds, .runs = cfg.runs, .seed = cfg.seed});
  if (!cfg.per_run_out.empty()) {
    std::ostringstream csv;
    write_per_run_csv(csv, report);
    write_file_atomic(cfg.per_run_out, csv.str());
  }
  if (cfg.out.empty()) {
    std::cout << report_json(report);
  } else {
    write_file_atomic(cfg.out, report_json(report));
  }
  return report;
}

fs::path sidecar_path(const fs::path& csv) {
  fs::path p = csv;
  p.replace_extension(".variance.json");
  return p;
}

Projection2D cmd_project(const RunConfig& cfg) {
  if (cfg.embeddings.empty()) throw ParameterError("project: --embeddings is required");
  if (cfg.out.empty()) throw ParameterError("project: --out is required");
  const EmbeddingMatrix m = load_embeddings(cfg.embeddings);
  if (m.rows() < 2) {
    throw DataError("'" + cfg.embeddings.string() + "' has " + std::to_string(m.rows()) +
                    " rows; projection needs at least 2");
  }
  Projection2D p = pca_2d(m);
  std::ostringstream csv;
  write_projection_csv(csv, p);
  write_file_atomic(sidecar_path(cfg.out), projection_sidecar_json(p));
  write_file_atomic(cfg.out, csv.str());
  return p;
}

}  // namespace dhce::cli
