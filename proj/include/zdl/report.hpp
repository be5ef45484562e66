#pragma once

// Artifact output: RFC-4180 CSV with a JSON sidecar, JSON summaries and
// SVG plots.  Everything written carries the config and manifest hashes and
// nothing time-dependent, so reruns are byte-identical.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace zdl {

using Json = nlohmann::json;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row);
  // Index of a column; config error if absent.
  std::size_t column(std::string_view name) const;
};

// %.17g, or "nan" / "inf" / "-inf".
std::string fmt(double x);
std::string fmt(std::int64_t x);

std::string csv_field(std::string_view s);
// CRLF-terminated records, header first.
std::string to_csv(const Table& table);
// Inverse of to_csv (quoted fields, embedded CRLF and "" escapes).
Table parse_csv(std::string_view text);

// git blob hash of the canonical (sorted-key, compact) dump.
std::string json_hash(const Json& j);

struct Provenance {
  std::string config_hash;
  std::string manifest_hash;
  Json to_json() const;
};

struct SvgSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct SvgAxes {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

std::string svg_line_plot(const SvgAxes& axes, const std::vector<SvgSeries>& series,
                          const Provenance& prov);
std::string svg_histogram(const SvgAxes& axes, const std::vector<std::string>& labels,
                          const std::vector<double>& counts, const Provenance& prov);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

class ArtifactWriter {
 public:
  ArtifactWriter(std::filesystem::path dir, Provenance prov);

  // name.csv plus name.csv.json with the hashes, row count and content hash.
  void csv(const std::string& name, const Table& table);
  // name.json; the provenance is added under "provenance".
  void json(const std::string& name, Json body);
  void svg(const std::string& name, const std::string& svg);

  const std::vector<std::string>& files() const { return files_; }
  const std::filesystem::path& dir() const { return dir_; }
  const Provenance& provenance() const { return prov_; }

 private:
  std::filesystem::path dir_;
  Provenance prov_;
  std::vector<std::string> files_;
};

}  // namespace zdl
