#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>

#include "zdl/calibration.hpp"
#include "zdl/detector.hpp"
#include "zdl/exponents.hpp"
#include "zdl/kernels.hpp"
#include "zdl/large_values.hpp"
#include "zdl/verify.hpp"
#include "zdl/zeros.hpp"

#ifndef ZDL_DATA_DIR
#define ZDL_DATA_DIR "data"
#endif

namespace zdlab {

using namespace zdl;
namespace fs = std::filesystem;

namespace {

enum class Kind { number, integer, string, boolean, number_list };

struct Key {
  Kind kind;
  Json fallback;
};

std::string default_manifest() { return std::string(ZDL_DATA_DIR) + "/calibration_manifest.txt"; }

const std::map<std::string, std::map<std::string, Key>>& schema() {
  static const std::map<std::string, std::map<std::string, Key>> s = [] {
    const Key out{Kind::string, "zdlab-out"};
    const Key workers{Kind::integer, 0};
    const Key manifest{Kind::string, default_manifest()};
    const Key zeros{Kind::string, ""};
    std::map<std::string, std::map<std::string, Key>> m;
    m["calibrate"] = {{"seed", {Kind::integer, static_cast<std::int64_t>(kCalibrationSeed)}},
                      {"manifest", manifest}, {"out", out}, {"workers", workers}};
    m["scan-R"] = {{"T", {Kind::number, 1e4}},          {"dt", {Kind::number, 0.05}},
                   {"sigma", {Kind::number, 0.75}},     {"eta", {Kind::number, 0.1}},
                   {"policy", {Kind::string, "all_integers"}}, {"refine", {Kind::boolean, false}},
                   {"manifest", manifest}, {"out", out}, {"workers", workers}};
    m["scan-theorem-lhs"] = {{"T", {Kind::number, 1e4}},
                             {"Ts", {Kind::number_list, Json::array()}},
                             {"dt", {Kind::number, 0.05}},
                             {"nu", {Kind::number, 0.4}},
                             {"eps", {Kind::number, 0.25}},
                             {"policy", {Kind::string, "all_integers"}},
                             {"refine", {Kind::boolean, false}},
                             {"zeros", zeros}, {"manifest", manifest}, {"out", out},
                             {"workers", workers}};
    m["find-zeros"] = {{"T", {Kind::number, 1000.0}}, {"manifest", manifest}, {"out", out},
                       {"workers", workers}};
    m["verify-lemma"] = {{"id", {Kind::string, "all"}},
                         {"seed", {Kind::integer, static_cast<std::int64_t>(kVerifySeed)}},
                         {"zeros", zeros}, {"manifest", manifest}, {"out", out},
                         {"workers", workers}};
    m["detect"] = {{"T", {Kind::number, 1e4}},   {"eps", {Kind::number, 0.3}},
                   {"nu", {Kind::number, 0.5}},  {"U", {Kind::number, 200.0}},
                   {"beta", {Kind::number, 0.5}}, {"zeros", zeros}, {"manifest", manifest},
                   {"out", out}, {"workers", workers}};
    m["exponents"] = {{"mode", {Kind::string, "rhs"}},
                      {"profile", {Kind::string, "DH"}},
                      {"delta", {Kind::number, 0.1}},
                      {"eps_c", {Kind::number, 0.01}},
                      {"nu", {Kind::number, 0.4}},
                      {"eps", {Kind::number, 0.25}},
                      {"eta", {Kind::number, 0.05}},
                      {"beta_pointwise", {Kind::number, 0.5}},
                      {"manifest", manifest}, {"out", out}};
    m["report"] = {{"in", {Kind::string, ""}}, {"manifest", manifest}, {"out", out}};
    return m;
  }();
  return s;
}

const std::map<std::string, Key>& keys_of(const std::string& command) {
  auto it = schema().find(command);
  require(it != schema().end(), ErrorKind::config, "unknown command '" + command + "'");
  return it->second;
}

bool known_anywhere(const std::string& key) {
  for (const auto& [c, ks] : schema())
    if (ks.count(key)) return true;
  return false;
}

double parse_number(const std::string& key, const std::string& text) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::config, "'" + key + "': not a finite number: '" + text + "'");
}

Json coerce_json(const std::string& key, Kind kind, const Json& v) {
  switch (kind) {
    case Kind::number:
      require(v.is_number(), ErrorKind::config, "'" + key + "' must be a number");
      return v.get<double>();
    case Kind::integer:
      require(v.is_number_integer() || (v.is_number() && std::floor(v.get<double>()) == v.get<double>()),
              ErrorKind::config, "'" + key + "' must be an integer");
      return v.is_number_integer() ? v.get<std::int64_t>()
                                   : static_cast<std::int64_t>(v.get<double>());
    case Kind::string:
      require(v.is_string(), ErrorKind::config, "'" + key + "' must be a string");
      return v;
    case Kind::boolean:
      require(v.is_boolean(), ErrorKind::config, "'" + key + "' must be true or false");
      return v;
    case Kind::number_list: {
      require(v.is_array(), ErrorKind::config, "'" + key + "' must be an array of numbers");
      Json out = Json::array();
      for (const auto& e : v) {
        require(e.is_number(), ErrorKind::config, "'" + key + "' must be an array of numbers");
        out.push_back(e.get<double>());
      }
      return out;
    }
  }
  return v;
}

Json coerce_flag(const std::string& key, Kind kind, const std::string& text) {
  switch (kind) {
    case Kind::number: return parse_number(key, text);
    case Kind::integer: {
      const double v = parse_number(key, text);
      require(std::floor(v) == v, ErrorKind::config, "'" + key + "' must be an integer");
      return static_cast<std::int64_t>(v);
    }
    case Kind::string: return text;
    case Kind::boolean:
      if (text == "true" || text == "1") return true;
      if (text == "false" || text == "0") return false;
      fail(ErrorKind::config, "'" + key + "' must be true or false");
    case Kind::number_list: {
      Json out = Json::array();
      std::size_t start = 0;
      while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos
                                                                          : comma - start);
        if (!piece.empty()) out.push_back(parse_number(key, piece));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      return out;
    }
  }
  return text;
}

// ------------------------------------------------------------- utilities

double num(const Json& p, const char* k) { return p.at(k).get<double>(); }
std::string str(const Json& p, const char* k) { return p.at(k).get<std::string>(); }

// Exact rational from the shortest decimal form of a config value.
Rational rat(const Json& p, const char* k) { return parse_rational(p.at(k).dump()); }

MPolicy policy_of(const std::string& s) {
  if (s == "all_integers") return MPolicy::all_integers;
  if (s == "dyadic_refined") return MPolicy::dyadic_refined;
  fail(ErrorKind::config, "policy must be all_integers or dyadic_refined, got '" + s + "'");
}

struct Session {
  std::optional<CalibrationManifest> manifest;
  Provenance prov;
};

Session open_session(const Invocation& inv, bool manifest_required) {
  Session s;
  const std::string path = str(inv.params, "manifest");
  if (fs::exists(path)) s.manifest = load_manifest(path);
  else require(!manifest_required, ErrorKind::io, "calibration manifest not found: " + path);
  Json hashed = inv.params;
  hashed.erase("out");
  hashed.erase("workers");
  hashed.erase("manifest");
  hashed["command"] = inv.command;
  s.prov.config_hash = json_hash(hashed);
  s.prov.manifest_hash = s.manifest ? s.manifest->hash() : "none";
  if (inv.params.contains("workers"))
    kernels::set_workers(static_cast<int>(inv.params.at("workers").get<std::int64_t>()));
  return s;
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

ZeroTable zeros_for(const Json& p, double t_max) {
  const std::string path = p.contains("zeros") ? str(p, "zeros") : "";
  if (path.empty()) return find_zeros(std::max(t_max, 10.0));
  require(fs::exists(path), ErrorKind::io, "zero table not found: " + path);
  ZeroTable t = ingest_zeros(path);
  require(t.t_max >= t_max, ErrorKind::horizon,
          "zero table " + path + " reaches " + fmt(t.t_max) + ", need " + fmt(t_max));
  return t;
}

Table interval_table(const IntervalSet& set) {
  Table t{{"lo", "hi", "length"}, {}};
  for (const auto& iv : set.intervals) t.add({fmt(iv.lo), fmt(iv.hi), fmt(iv.hi - iv.lo)});
  return t;
}

Json set_summary(const IntervalSet& set) {
  return Json{{"measure", set.measure},
              {"discretization_error", set.discretization_error},
              {"marked_points", set.marked_points},
              {"intervals", set.intervals.size()}};
}

// ---------------------------------------------------------------- commands

int cmd_calibrate(const Invocation& inv) {
  Session s = open_session(inv, false);
  const auto m = calibrate(static_cast<std::uint64_t>(inv.params.at("seed").get<std::int64_t>()));
  const std::string path = str(inv.params, "manifest");
  save_manifest(m, path);
  Json j{{"command", "calibrate"}, {"manifest", path}, {"content_hash", m.hash()}};
  for (const auto& [k, v] : m.constants) j["constants"][k] = v;
  print(j);
  return 0;
}

int cmd_scan_r(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  ScanConfig cfg = ScanConfig::over(num(p, "T"), num(p, "dt"));
  cfg.sigma = num(p, "sigma");
  cfg.eta = num(p, "eta");
  cfg.M_policy = policy_of(str(p, "policy"));
  cfg.refine = p.at("refine").get<bool>();
  const IntervalSet set = measure_R(cfg.sigma, cfg.eta, cfg);
  ArtifactWriter w(str(p, "out"), s.prov);
  w.csv("r_set", interval_table(set));
  Json j{{"command", "scan-R"}, {"params", p}, {"result", set_summary(set)}};
  j["params"].erase("out");
  w.json("r_set", j);
  print(j);
  return 0;
}

int cmd_scan_lhs(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  std::vector<double> Ts;
  for (const auto& v : p.at("Ts")) Ts.push_back(v.get<double>());
  if (Ts.empty()) Ts.push_back(num(p, "T"));
  const double nu = num(p, "nu"), eps = num(p, "eps");
  ArtifactWriter w(str(p, "out"), s.prov);
  const ZeroTable zeros = zeros_for(p, *std::max_element(Ts.begin(), Ts.end()));
  Table tab{{"T", "measure", "discretization_error", "marked_points", "bound_8T^(nu/2+eps)",
             "measure_over_T^(nu/2)", "zero_count", "rhs_zero_term", "rhs_nu_half", "rhs_total"},
            {}};
  Json rows = Json::array();
  SvgSeries lhs{"LHS measure", {}, {}}, bound{"8 T^(nu/2+eps)", {}, {}};
  for (double T : Ts) {
    ScanConfig cfg = ScanConfig::over(T, num(p, "dt"));
    cfg.nu = nu;
    cfg.eps = eps;
    cfg.M_policy = policy_of(str(p, "policy"));
    cfg.refine = p.at("refine").get<bool>();
    const IntervalSet set = measure_theorem_lhs(cfg);
    const TheoremRhs rhs = theorem_rhs(zeros, T, nu, eps);
    const double b = 8.0 * std::pow(T, nu / 2.0 + eps);
    tab.add({fmt(T), fmt(set.measure), fmt(set.discretization_error), fmt(set.marked_points),
             fmt(b), fmt(set.measure / std::pow(T, nu / 2.0)), fmt(rhs.zeros), fmt(rhs.zero_term),
             fmt(rhs.nu_half), fmt(rhs.total)});
    Json row = set_summary(set);
    row["T"] = T;
    row["rhs_total"] = rhs.total;
    rows.push_back(row);
    lhs.x.push_back(T);
    lhs.y.push_back(set.measure);
    bound.x.push_back(T);
    bound.y.push_back(b);
    if (Ts.size() == 1) w.csv("theorem_lhs_set", interval_table(set));
  }
  w.csv("theorem_lhs_table", tab);
  if (Ts.size() > 1)
    w.svg("theorem_lhs_table",
          svg_line_plot({"Theorem LHS measure vs T", "T", "measure", true, true}, {lhs, bound},
                        s.prov));
  Json j{{"command", "scan-theorem-lhs"}, {"params", p}, {"rows", rows}};
  j["params"].erase("out");
  w.json("theorem_lhs", j);
  print(j);
  return 0;
}

int cmd_find_zeros(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  const ZeroTable z = find_zeros(num(p, "T"));
  Table tab{{"index", "gamma"}, {}};
  for (std::size_t i = 0; i < z.records.size(); ++i)
    tab.add({fmt(static_cast<std::int64_t>(i + 1)), fmt(z.records[i].gamma)});
  ArtifactWriter w(str(p, "out"), s.prov);
  w.csv("zeros", tab);
  Json j{{"command", "find-zeros"}, {"T", num(p, "T")}, {"count", z.size()}, {"t_max", z.t_max}};
  if (!z.records.empty()) j["first"] = z.records.front().gamma;
  w.json("zeros", j);
  print(j);
  return 0;
}

std::string file_stem(std::string id) {
  for (char& c : id)
    if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
  return "verify_" + id;
}

int cmd_verify(const Invocation& inv) {
  Session s = open_session(inv, true);
  const Json& p = inv.params;
  VerifyContext ctx(*s.manifest, static_cast<std::uint64_t>(p.at("seed").get<std::int64_t>()));
  if (!str(p, "zeros").empty()) {
    require(fs::exists(str(p, "zeros")), ErrorKind::io, "zero table not found: " + str(p, "zeros"));
    ctx.supply_zeros(ingest_zeros(str(p, "zeros")));
  }
  std::vector<std::string> ids;
  if (str(p, "id") == "all") ids = suite_ids();
  else ids.push_back(str(p, "id"));
  ArtifactWriter w(str(p, "out"), s.prov);
  Json all = Json::array();
  bool ok = true;
  for (const auto& id : ids) {
    const SuiteResult r = run_suite(id, ctx);
    w.csv(file_stem(id), r.table);
    w.json(file_stem(id), r.summary());
    all.push_back(r.summary());
    ok = ok && r.passed;
  }
  print(Json{{"command", "verify-lemma"}, {"suites", all}, {"passed", ok}});
  return ok ? 0 : 1;
}

int cmd_detect(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  DetectorConfig cfg;
  cfg.T = num(p, "T");
  cfg.eps = num(p, "eps");
  cfg.nu = num(p, "nu");
  cfg.U = num(p, "U");
  cfg.beta = num(p, "beta");
  cfg.validate();
  const ZeroTable zeros = zeros_for(p, 2.0 * cfg.U + 1.0);
  const DetectorRun run = run_detector(cfg, zeros);
  Table tab{{"gamma", "K", "k", "block", "block_threshold", "r", "route", "M", "M_prime",
             "witness_value", "witness_threshold", "verified", "diagnostic"},
            {}};
  std::map<std::string, double> routes;
  for (const auto& c : run.zeros) {
    tab.add({fmt(c.witness.t_or_gamma), fmt(c.search.K), fmt(static_cast<std::int64_t>(c.search.k)),
             fmt(c.search.block_value), fmt(c.search.threshold), fmt(c.r), c.route,
             fmt(c.witness.M), fmt(c.witness.M_prime), fmt(c.witness.value),
             fmt(c.witness.threshold), c.verified ? "1" : "0", c.diagnostic});
    routes[c.route.substr(0, c.route.find(':'))] += 1.0;
  }
  ArtifactWriter w(str(p, "out"), s.prov);
  w.csv("detector", tab);
  std::vector<std::string> labels;
  std::vector<double> counts;
  for (const auto& [k, v] : routes) {
    labels.push_back(k);
    counts.push_back(v);
  }
  w.svg("detector_routes",
        svg_histogram({"Zero classification", "route", "zeros", false, false}, labels, counts,
                      s.prov));
  Json j{{"command", "detect"},
         {"R", run.R},
         {"zeros", run.zeros.size()},
         {"u1", run.u1},
         {"verified", run.verified},
         {"unverified", run.unverified},
         {"u1_budget_ratio", run.u1_budget_ratio}};
  w.json("detector", j);
  print(j);
  return run.unverified == 0 ? 0 : 1;
}

Json trace_json(const std::vector<TraceStep>& steps) {
  Json a = Json::array();
  for (const auto& s : steps) a.push_back(Json{{"rule", s.rule}, {"values", s.values}});
  return a;
}

Json rational_json(const Rational& q) {
  return Json{{"exact", zdl::to_string(q)}, {"value", to_double(q)}};
}

int cmd_exponents(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  const std::string mode = str(p, "mode");
  Json j{{"command", "exponents"}, {"mode", mode}};
  int status = 0;
  if (mode == "rhs") {
    const std::string name = str(p, "profile");
    DensityExponentProfile prof;
    if (name == "DH") prof = DensityExponentProfile::DH();
    else if (name == "STRONG_DH") prof = DensityExponentProfile::strong_DH(rat(p, "delta"), rat(p, "eps_c"));
    else {
      require(fs::exists(name), ErrorKind::io, "profile file not found: " + name);
      prof = DensityExponentProfile::load(name);
    }
    const auto r = rhs_exponent(rat(p, "nu"), rat(p, "eps"), prof);
    j["profile"] = prof.name;
    j["exponent"] = to_double(r.exponent);
    j["exponent_exact"] = zdl::to_string(r.exponent);
    j["argmax_alpha"] = rational_json(r.argmax_alpha);
    j["branch"] = to_string(r.branch);
    j["epsilon_budget"] = rational_json(r.epsilon_budget);
    j["total"] = rational_json(r.total);
    j["trace"] = trace_json(r.trace);
  } else if (mode == "induction") {
    const auto t = induction_verify(rat(p, "eps"), rat(p, "eta"));
    j["J"] = t.J;
    j["checks"] = t.checks;
    j["passed"] = t.passed();
    j["trace"] = trace_json(t.steps);
    Json f = Json::array();
    for (std::size_t i = 0; i < t.failures.size() && i < 20; ++i) {
      const auto& e = t.failures[i];
      f.push_back(Json{{"j", e.j}, {"beta", zdl::to_string(e.beta)}, {"check", e.check},
                       {"lhs", zdl::to_string(e.lhs)}, {"rhs", zdl::to_string(e.rhs)}});
    }
    j["failures"] = f;
    status = t.passed() ? 0 : 1;
  } else if (mode == "strong-dh") {
    const Rational d = rat(p, "delta");
    const auto r = strong_dh_application(rat(p, "eps"), [d](const Rational&) { return d; },
                                         rat(p, "beta_pointwise"));
    j["eps0"] = rational_json(r.eps0);
    j["eps_prime"] = rational_json(r.eps_prime);
    j["delta1"] = rational_json(r.delta1);
    j["interval_empty"] = r.interval_empty;
    j["passed"] = r.passed;
    j["checks"] = trace_json(r.checks);
    status = r.passed ? 0 : 1;
  } else if (mode == "budget") {
    const auto b = converse_budget(rat(p, "nu"), rat(p, "eps"));
    j["u1"] = rational_json(b.u1);
    j["one_spaced"] = rational_json(b.one_spaced);
    j["total"] = rational_json(b.total);
    j["rules"] = trace_json(b.rules);
  } else {
    fail(ErrorKind::config, "mode must be rhs, induction, strong-dh or budget, got '" + mode + "'");
  }
  j["params"] = p;
  j["params"].erase("out");
  ArtifactWriter w(str(p, "out"), s.prov);
  w.json("exponents_" + mode, j);
  print(j);
  return status;
}

int cmd_report(const Invocation& inv) {
  Session s = open_session(inv, false);
  const Json& p = inv.params;
  const fs::path in = str(p, "in").empty() ? fs::path(str(p, "out")) : fs::path(str(p, "in"));
  require(fs::is_directory(in), ErrorKind::io, "report input directory not found: " + in.string());
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(in))
    if (e.is_regular_file() && e.path().filename() != "report_index.json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  ArtifactWriter w(str(p, "out"), s.prov);
  Json index = Json::array();
  for (const auto& f : files) {
    const std::string body = read_file(f);
    index.push_back(Json{{"file", f.filename().string()}, {"content_hash", git_blob_hash(body)}});
    if (f.extension() != ".csv") continue;
    const Table t = parse_csv(body);
    const std::string stem = f.stem().string();
    const auto has = [&](const char* c) {
      return std::find(t.columns.begin(), t.columns.end(), c) != t.columns.end();
    };
    if (has("T") && has("measure")) {
      SvgSeries ser{"measure", {}, {}};
      for (const auto& r : t.rows) {
        ser.x.push_back(parse_number("T", r[t.column("T")]));
        ser.y.push_back(parse_number("measure", r[t.column("measure")]));
      }
      w.svg(stem + "_plot", svg_line_plot({stem, "T", "measure", true, true}, {ser}, s.prov));
    } else if (has("route")) {
      std::map<std::string, double> h;
      for (const auto& r : t.rows) {
        const std::string& route = r[t.column("route")];
        h[route.substr(0, route.find(':'))] += 1.0;
      }
      std::vector<std::string> labels;
      std::vector<double> counts;
      for (const auto& [k, v] : h) {
        labels.push_back(k);
        counts.push_back(v);
      }
      w.svg(stem + "_routes", svg_histogram({stem, "route", "count", false, false}, labels,
                                            counts, s.prov));
    }
  }
  Json j{{"command", "report"}, {"input", in.filename().string()}, {"files", index}};
  w.json("report_index", j);
  print(j);
  return 0;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : schema()) v.push_back(k);
    return v;
  }();
  return c;
}

Json defaults(const std::string& command) {
  Json j = Json::object();
  for (const auto& [k, key] : keys_of(command)) j[k] = key.fallback;
  return j;
}

Invocation resolve(const std::string& command, const Json& config,
                   const std::vector<std::pair<std::string, std::string>>& flags) {
  const auto& keys = keys_of(command);
  Invocation inv{command, defaults(command)};
  if (!config.is_null()) {
    require(config.is_object(), ErrorKind::config, "config must be a JSON object");
    // top level: shared keys and per-command sections
    for (const auto& [k, v] : config.items()) {
      if (schema().count(k)) {
        require(v.is_object(), ErrorKind::config, "section '" + k + "' must be an object");
        continue;
      }
      require(known_anywhere(k), ErrorKind::config, "unknown config key '" + k + "'");
      if (auto it = keys.find(k); it != keys.end()) inv.params[k] = coerce_json(k, it->second.kind, v);
    }
    for (const auto& [section, body] : config.items()) {
      if (!schema().count(section)) continue;
      const auto& skeys = keys_of(section);
      for (const auto& [k, v] : body.items())
        require(skeys.count(k), ErrorKind::config,
                "unknown key '" + k + "' in section '" + section + "'");
      if (section != command) continue;
      for (const auto& [k, v] : body.items()) inv.params[k] = coerce_json(k, keys.at(k).kind, v);
    }
  }
  for (const auto& [k, text] : flags) {
    auto it = keys.find(k);
    require(it != keys.end(), ErrorKind::config, "unknown option '" + k + "' for " + command);
    inv.params[k] = coerce_flag(k, it->second.kind, text);
  }
  return inv;
}

int execute(const Invocation& inv) {
  const std::string& c = inv.command;
  if (c == "calibrate") return cmd_calibrate(inv);
  if (c == "scan-R") return cmd_scan_r(inv);
  if (c == "scan-theorem-lhs") return cmd_scan_lhs(inv);
  if (c == "find-zeros") return cmd_find_zeros(inv);
  if (c == "verify-lemma") return cmd_verify(inv);
  if (c == "detect") return cmd_detect(inv);
  if (c == "exponents") return cmd_exponents(inv);
  if (c == "report") return cmd_report(inv);
  fail(ErrorKind::config, "unknown command '" + c + "'");
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::io:
    case ErrorKind::config:
    case ErrorKind::parse:
      return 2;
    default:
      return 3;
  }
}

}  // namespace zdlab
