#include "zdl/calibration.hpp"

#include <openssl/sha.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "zdl/detector.hpp"
#include "zdl/error.hpp"
#include "zdl/gamma.hpp"
#include "zdl/zeros.hpp"
#include "zdl/zeta.hpp"

namespace zdl {

std::string git_blob_hash(const std::string& content) {
  const std::string blob = "blob " + std::to_string(content.size()) + std::string(1, '\0') + content;
  unsigned char md[SHA_DIGEST_LENGTH];
  SHA1(reinterpret_cast<const unsigned char*>(blob.data()), blob.size(), md);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned char c : md) {
    out.push_back(hex[c >> 4]);
    out.push_back(hex[c & 15]);
  }
  return out;
}

double CalibrationManifest::get(const std::string& key) const {
  const auto it = constants.find(key);
  require(it != constants.end(), ErrorKind::config, "manifest: missing constant " + key);
  return it->second;
}

std::string CalibrationManifest::body() const {
  std::string out;
  char buf[64];
  for (const auto& [k, v] : constants) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += k + "=" + buf + "\n";
  }
  return out;
}

std::string CalibrationManifest::serialize() const {
  std::string out = "# zdlab calibration manifest\n";
  out += "# seed: " + std::to_string(seed) + "\n";
  for (const auto& [k, d] : domains) out += "# domain " + k + ": " + d + "\n";
  out += "# content-hash: " + hash() + "\n";
  return out + body();
}

CalibrationManifest parse_manifest(const std::string& text) {
  CalibrationManifest m;
  std::istringstream in(text);
  std::string line;
  std::string declared;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string h = "# content-hash: ";
      const std::string s = "# seed: ";
      const std::string d = "# domain ";
      if (line.rfind(h, 0) == 0) declared = line.substr(h.size());
      else if (line.rfind(s, 0) == 0) m.seed = std::stoull(line.substr(s.size()));
      else if (line.rfind(d, 0) == 0) {
        const auto colon = line.find(": ", d.size());
        if (colon != std::string::npos)
          m.domains[line.substr(d.size(), colon - d.size())] = line.substr(colon + 2);
      }
      continue;
    }
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorKind::parse,
            "manifest: expected key=value at line " + std::to_string(lineno));
    char* end = nullptr;
    const std::string val = line.substr(eq + 1);
    const double v = std::strtod(val.c_str(), &end);
    require(end && *end == '\0' && std::isfinite(v) && v > 0.0, ErrorKind::parse,
            "manifest: bad value at line " + std::to_string(lineno));
    m.constants[line.substr(0, eq)] = v;
  }
  require(!declared.empty(), ErrorKind::parse, "manifest: missing content-hash header");
  require(declared == m.hash(), ErrorKind::config,
          "manifest: content hash mismatch (declared " + declared + ", actual " + m.hash() + ")");
  return m;
}

CalibrationManifest load_manifest(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::io, "manifest: cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_manifest(ss.str());
}

void save_manifest(const CalibrationManifest& m, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), ErrorKind::io, "manifest: cannot write " + path);
  f << m.serialize();
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double log_uniform(Rng& rng, double a, double b) {
  return std::exp(rng.uniform(std::log(a), std::log(b)));
}

}  // namespace

CalibrationManifest calibrate(std::uint64_t seed) {
  CalibrationManifest m;
  m.seed = seed;
  Rng rng(seed);

  {
    double c = 0.0;
    for (int i = 0; i < 200; ++i) {
      const double sigma = rng.uniform(0.0, 1.0);
      const double t = rng.sign() * log_uniform(rng, kTwoPi, 1e4);
      const auto r = zeta_afe(Complex(sigma, t));
      c = std::max(c, std::abs(r.value - zeta_reference(Complex(sigma, t))) / r.error_budget);
    }
    m.constants["C_afe"] = c;
    m.domains["C_afe"] = "200 samples, sigma uniform [0,1], |t| log-uniform [2pi,1e4], random sign";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 120; ++i) {
      const double T = log_uniform(rng, 3.0, 1e4);
      const double sigma = rng.uniform(0.5, 1.5);
      const double t = rng.uniform(T, 2.0 * T);
      const Complex s(sigma, t);
      c = std::max(c, std::abs(zeta_afe_long(s, T) - zeta_reference(s)) * std::pow(T, sigma));
    }
    m.constants["C_afe_long"] = c;
    m.domains["C_afe_long"] = "120 samples, T log-uniform [3,1e4], sigma [0.5,1.5], t uniform [T,2T]";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double sigma = rng.uniform(0.0, 1.0);
      const double t = log_uniform(rng, kTwoPi, 1e5);
      const double z = std::abs(zeta_reference(Complex(sigma, t)));
      c = std::max(c, z / (std::pow(t, (1.0 - sigma) / 2.0) * std::log(t)));
    }
    m.constants["C_convexity"] = c;
    m.domains["C_convexity"] = "400 samples, sigma [0,1], |t| log-uniform [2pi,1e5]";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 400; ++i) {
      const double x = rng.uniform(-0.5, 3.0);
      const double y = rng.sign() * rng.uniform(1.0, 50.0);
      const Complex w(x, y);
      const double g = std::exp(log_gamma(w).real());
      c = std::max(c, g * std::abs(w) * std::exp(std::abs(y)));
    }
    m.constants["C_gamma"] = c;
    m.domains["C_gamma"] = "400 samples, Re w [-0.5,3], |Im w| [1,50]";
  }
  const ZeroTable zeros = find_zeros(1100.0);
  {
    double c = 0.0;
    int used = 0;
    while (used < 120) {
      const double s1 = rng.uniform(-1.0, 2.0);
      const double u = rng.sign() * rng.uniform(2.0, 1000.0);
      try {
        c = std::max(c, partial_fraction_residual(zeros, s1, u) / std::log(std::abs(u) + 2.0));
        ++used;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::conditioning) throw;
      }
    }
    m.constants["C_zeta_prime_frac"] = c;
    m.domains["C_zeta_prime_frac"] =
        "120 samples, sigma1 [-1,2], |u| [2,1000], zeros from find_zeros(1100)";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 300; ++i) {
      const double U = rng.uniform(0.0, 1000.0);
      c = std::max(c, static_cast<double>(box_count(zeros, U)) / std::log(U + 2.0));
    }
    m.constants["C_box"] = c;
    m.domains["C_box"] = "300 samples, U uniform [0,1000], zeros from find_zeros(1100)";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 6; ++i) {
      const double T = log_uniform(rng, 300.0, 2000.0);
      const double L = std::log(T);
      const double sigma = rng.uniform(0.5, 1.0 - 2.0 / L);
      const double tmin = std::pow(T, (1.0 - sigma) / 2.0);
      const double t = rng.sign() * rng.uniform(tmin, T / 2.0);
      double A = rng.uniform(1.0, std::sqrt(T) / 2.0);
      double B = rng.uniform(A + 0.5, 2.0 * A);
      // Integer endpoints, as in every scan block, where the truncated
      // integral gives the endpoint term half weight.
      if (i % 2 == 1) {
        A = std::floor(A);
        B = std::max(A + 1.0, std::floor(B));
      }
      c = std::max(c, perron_check(sigma, t, T, A, std::min(B, 2.0 * A)).deviation);
    }
    m.constants["C_perron"] = c;
    m.domains["C_perron"] =
        "6 samples, T log-uniform [300,2000], sigma [1/2,1-2/log T], |t| [T^{(1-sigma)/2},T/2], "
        "A [1,sqrt(T)/2], B (A,2A], odd samples with integer A and B";
  }
  {
    double c = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double t = rng.uniform(100.0, 5000.0);
      c = std::max(c, smoothed_mangoldt_residual(Complex(1.0, t), 50.0, 1e4) * std::cbrt(50.0));
    }
    m.constants["C_mellin"] = c;
    m.domains["C_mellin"] = "20 samples, s = 1 + it, t uniform [100,5000], Y = 50, T = 1e4";
  }
  {
    double c = 0.0;
    for (std::int64_t N : {100, 300, 1000}) {
      for (int rep = 0; rep < 4; ++rep) {
        std::vector<double> a(static_cast<std::size_t>(N));
        for (double& x : a) x = rng.sign();
        std::vector<double> pts;
        double t = rng.uniform(-2000.0, -1000.0);
        for (int k = 0; k < 100; ++k) {
          pts.push_back(t);
          t += 1.0 + rng.uniform(0.0, 20.0);
        }
        c = std::max(c, mean_value_check(N, a, pts) / std::log(2.0 * static_cast<double>(N)));
      }
    }
    m.constants["C_mv"] = c;
    m.domains["C_mv"] =
        "N in {100,300,1000} x 4 draws, random +-1 coefficients, 100 one-spaced points";
  }
  return m;
}

}  // namespace zdl
