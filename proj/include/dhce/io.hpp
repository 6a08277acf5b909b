#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dhce/graph.hpp"

namespace dhce {

struct ManifestEntry {
  std::string path;   // as written in the manifest
  std::string label;
};

struct Manifest {
  std::filesystem::path directory;  // relative paths resolve against this
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& e) const;
};

/// CSV with header `path,label`. Throws IoError / ParseError.
Manifest read_manifest(const std::filesystem::path& file);
std::string manifest_csv(const std::vector<ManifestEntry>& entries);

ParsedGraph read_graph_file(const std::filesystem::path& file);

std::string read_text_file(const std::filesystem::path& file);

/// Writes to a sibling temporary file and renames it into place, so readers
/// never observe a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& file, std::string_view contents);

/// Splits one CSV line on commas (no quoting) after stripping a trailing CR.
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace dhce
