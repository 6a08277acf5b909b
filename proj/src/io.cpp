#include "dhce/io.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

#include "dhce/error.hpp"

namespace dhce {

namespace fs = std::filesystem;

std::filesystem::path Manifest::resolve(const ManifestEntry& e) const {
  const fs::path p(e.path);
  return p.is_absolute() ? p : directory / p;
}

std::vector<std::string> split_csv_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      return out;
    }
    out.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::string read_text_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open '" + file.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + file.string() + "'");
  return buf.str();
}

Manifest read_manifest(const fs::path& file) {
  std::istringstream in(read_text_file(file));
  Manifest manifest;
  manifest.directory = file.parent_path();
  std::string line;
  if (!std::getline(in, line)) throw IoError("manifest '" + file.string() + "' is empty");
  const auto header = split_csv_line(line);
  if (header.size() != 2 || header[0] != "path" || header[1] != "label") {
    throw IoError("manifest '" + file.string() + "': expected header path,label");
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    auto fields = split_csv_line(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw IoError("manifest '" + file.string() + "' line " + std::to_string(line_no) +
                    ": expected path,label");
    }
    manifest.entries.push_back({std::move(fields[0]), std::move(fields[1])});
  }
  return manifest;
}

std::string manifest_csv(const std::vector<ManifestEntry>& entries) {
  std::string out = "path,label\n";
  for (const auto& e : entries) out += e.path + "," + e.label + "\n";
  return out;
}

ParsedGraph read_graph_file(const fs::path& file) {
  const std::string text = read_text_file(file);
  try {
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw DataError("'" + file.string() + "': " + e.what());
  }
}

void write_file_atomic(const fs::path& file, std::string_view contents) {
  std::random_device entropy;
  const fs::path tmp =
      file.parent_path() / (file.filename().string() + ".tmp" + std::to_string(entropy()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
      std::error_code ignored;
      fs::remove(tmp, ignored);
      throw IoError("error writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, file, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw IoError("cannot move output into place at '" + file.string() + "': " + ec.message());
  }
}

}  // namespace dhce
