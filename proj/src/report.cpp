#include "zdl/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "zdl/calibration.hpp"
#include "zdl/error.hpp"

namespace zdl {

void Table::add(std::vector<std::string> row) {
  require(row.size() == columns.size(), ErrorKind::config,
          "row has " + std::to_string(row.size()) + " fields, table has " +
              std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::size_t Table::column(std::string_view name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  require(it != columns.end(), ErrorKind::config, "no column '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::string fmt(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt(std::int64_t x) { return std::to_string(x); }

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_csv(const Table& table) {
  std::string out;
  auto record = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += ',';
      out += csv_field(r[i]);
    }
    out += "\r\n";
  };
  record(table.columns);
  for (const auto& r : table.rows) record(r);
  return out;
}

Table parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> recs;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false, at_start = true;
  std::size_t i = 0;
  auto end_field = [&] {
    rec.push_back(std::move(field));
    field.clear();
    at_start = true;
  };
  auto end_record = [&] {
    end_field();
    recs.push_back(std::move(rec));
    rec.clear();
  };
  while (i < text.size()) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field += c;
      }
      ++i;
      continue;
    }
    if (c == '"' && at_start) {
      quoted = true;
      at_start = false;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' || c == '\n') {
      if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      end_record();
    } else {
      field += c;
      at_start = false;
    }
    ++i;
  }
  require(!quoted, ErrorKind::parse, "unterminated quoted CSV field");
  if (!field.empty() || !rec.empty()) end_record();
  Table t;
  require(!recs.empty(), ErrorKind::parse, "empty CSV");
  t.columns = std::move(recs.front());
  for (std::size_t r = 1; r < recs.size(); ++r) {
    require(recs[r].size() == t.columns.size(), ErrorKind::parse,
            "CSV record " + std::to_string(r + 1) + " has the wrong field count");
    t.rows.push_back(std::move(recs[r]));
  }
  return t;
}

std::string json_hash(const Json& j) { return git_blob_hash(j.dump()); }

Json Provenance::to_json() const {
  return Json{{"config_hash", config_hash}, {"manifest_hash", manifest_hash}};
}

// -------------------------------------------------------------------- svg

namespace {

constexpr double kW = 640, kH = 420, kL = 70, kR = 20, kTop = 40, kB = 50;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", x);
  return buf;
}

std::string esc(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string header(const SvgAxes& axes, const Provenance& prov) {
  std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kW) + "\" height=\"" +
                  num(kH) + "\" viewBox=\"0 0 " + num(kW) + " " + num(kH) + "\">\n";
  s += "<desc>config_hash=" + esc(prov.config_hash) + " manifest_hash=" + esc(prov.manifest_hash) +
       "</desc>\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  s += "<text x=\"" + num(kW / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
       esc(axes.title) + "</text>\n";
  s += "<text x=\"" + num(kW / 2) + "\" y=\"" + num(kH - 10) +
       "\" text-anchor=\"middle\" font-size=\"12\">" + esc(axes.x_label) + "</text>\n";
  s += "<text x=\"14\" y=\"" + num(kH / 2) + "\" text-anchor=\"middle\" font-size=\"12\" "
       "transform=\"rotate(-90 14 " + num(kH / 2) + ")\">" + esc(axes.y_label) + "</text>\n";
  s += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kH - kB) + "\" x2=\"" + num(kW - kR) + "\" y2=\"" +
       num(kH - kB) + "\" stroke=\"black\"/>\n";
  s += "<line x1=\"" + num(kL) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kL) + "\" y2=\"" +
       num(kH - kB) + "\" stroke=\"black\"/>\n";
  return s;
}

struct Scale {
  double lo, hi;
  bool log;
  double map(double v, double a, double b) const {
    double x = log ? std::log10(v) : v;
    return a + (b - a) * (x - lo) / (hi - lo);
  }
  double unmap_tick(int i, int n) const {
    double x = lo + (hi - lo) * i / n;
    return log ? std::pow(10.0, x) : x;
  }
};

Scale make_scale(const std::vector<double>& vals, bool log) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : vals) {
    if (!std::isfinite(v) || (log && v <= 0)) continue;
    double x = log ? std::log10(v) : v;
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (!std::isfinite(lo)) lo = 0, hi = 1;
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  return {lo, hi, log};
}

}  // namespace

std::string svg_line_plot(const SvgAxes& axes, const std::vector<SvgSeries>& series,
                          const Provenance& prov) {
  std::vector<double> xs, ys;
  for (const auto& s : series) {
    require(s.x.size() == s.y.size(), ErrorKind::config, "series '" + s.label + "' x/y mismatch");
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  Scale sx = make_scale(xs, axes.log_x), sy = make_scale(ys, axes.log_y);
  std::string out = header(axes, prov);
  for (int i = 0; i <= 4; ++i) {
    double xv = sx.unmap_tick(i, 4), yv = sy.unmap_tick(i, 4);
    double px = sx.map(xv, kL, kW - kR), py = sy.map(yv, kH - kB, kTop);
    out += "<text x=\"" + num(px) + "\" y=\"" + num(kH - kB + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\">" + tick(xv) + "</text>\n";
    out += "<text x=\"" + num(kL - 6) + "\" y=\"" + num(py + 3) +
           "\" text-anchor=\"end\" font-size=\"10\">" + tick(yv) + "</text>\n";
  }
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* col = kPalette[k % std::size(kPalette)];
    std::string pts;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      if ((axes.log_x && s.x[i] <= 0) || (axes.log_y && s.y[i] <= 0)) continue;
      double px = sx.map(s.x[i], kL, kW - kR), py = sy.map(s.y[i], kH - kB, kTop);
      if (!pts.empty()) pts += ' ';
      pts += num(px) + "," + num(py);
      out += "<circle cx=\"" + num(px) + "\" cy=\"" + num(py) + "\" r=\"2.5\" fill=\"" + col +
             "\"/>\n";
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(col) + "\" points=\"" + pts + "\"/>\n";
    out += "<text x=\"" + num(kL + 10) + "\" y=\"" + num(kTop + 14 + 14.0 * k) +
           "\" font-size=\"11\" fill=\"" + col + "\">" + esc(s.label) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string svg_histogram(const SvgAxes& axes, const std::vector<std::string>& labels,
                          const std::vector<double>& counts, const Provenance& prov) {
  require(labels.size() == counts.size(), ErrorKind::config, "histogram labels/counts mismatch");
  std::string out = header(axes, prov);
  double top = 0;
  for (double c : counts) top = std::max(top, c);
  if (top <= 0) top = 1;
  const double n = std::max<double>(1, static_cast<double>(counts.size()));
  const double bw = (kW - kL - kR) / n;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    double h = (kH - kB - kTop) * counts[i] / top;
    double x = kL + bw * static_cast<double>(i);
    out += "<rect x=\"" + num(x + 2) + "\" y=\"" + num(kH - kB - h) + "\" width=\"" +
           num(std::max(1.0, bw - 4)) + "\" height=\"" + num(h) + "\" fill=\"" + kPalette[0] +
           "\"/>\n";
    out += "<text x=\"" + num(x + bw / 2) + "\" y=\"" + num(kH - kB + 16) +
           "\" text-anchor=\"middle\" font-size=\"10\">" + esc(labels[i]) + "</text>\n";
    out += "<text x=\"" + num(x + bw / 2) + "\" y=\"" + num(kH - kB - h - 4) +
           "\" text-anchor=\"middle\" font-size=\"10\">" + tick(counts[i]) + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

// ------------------------------------------------------------------ files

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorKind::io, "cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  require(static_cast<bool>(out), ErrorKind::io, "write failed for '" + path.string() + "'");
}

ArtifactWriter::ArtifactWriter(std::filesystem::path dir, Provenance prov)
    : dir_(std::move(dir)), prov_(std::move(prov)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  require(!ec, ErrorKind::io, "cannot create '" + dir_.string() + "': " + ec.message());
}

void ArtifactWriter::csv(const std::string& name, const Table& table) {
  const std::string body = to_csv(table);
  write_file(dir_ / (name + ".csv"), body);
  Json side = prov_.to_json();
  side["file"] = name + ".csv";
  side["rows"] = table.rows.size();
  side["columns"] = table.columns;
  side["content_hash"] = git_blob_hash(body);
  write_file(dir_ / (name + ".csv.json"), side.dump(2) + "\n");
  files_.push_back(name + ".csv");
  files_.push_back(name + ".csv.json");
}

void ArtifactWriter::json(const std::string& name, Json body) {
  body["provenance"] = prov_.to_json();
  write_file(dir_ / (name + ".json"), body.dump(2) + "\n");
  files_.push_back(name + ".json");
}

void ArtifactWriter::svg(const std::string& name, const std::string& svg) {
  write_file(dir_ / (name + ".svg"), svg);
  files_.push_back(name + ".svg");
}

}  // namespace zdl
