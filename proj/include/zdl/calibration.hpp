#pragma once

// Calibrated stand-ins for the unspecified implied constants, measured on
// fixed seeded domains and persisted as a flat key=value manifest.

#include <cstdint>
#include <map>
#include <random>
#include <string>

namespace zdl {

// Portable deterministic sampler: mt19937_64 with explicit conversions,
// so the sequence does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  // Integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(gen_() % span);
  }
  double sign() { return (gen_() & 1) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 gen_;
};

// git blob hash: sha1("blob <len>\0" + content), lower-case hex.
std::string git_blob_hash(const std::string& content);

struct CalibrationManifest {
  std::map<std::string, double> constants;
  std::map<std::string, std::string> domains;
  std::uint64_t seed = 0;

  double get(const std::string& key) const;
  // Body (key=value lines) and the full file text with header.
  std::string body() const;
  std::string hash() const { return git_blob_hash(body()); }
  std::string serialize() const;
};

inline constexpr std::uint64_t kCalibrationSeed = 20240917;
inline constexpr double kHeadroom = 1.5;

// Runs every calibration on its fixed domain.  Deterministic.
CalibrationManifest calibrate(std::uint64_t seed = kCalibrationSeed);

CalibrationManifest parse_manifest(const std::string& text);
CalibrationManifest load_manifest(const std::string& path);
void save_manifest(const CalibrationManifest& m, const std::string& path);

}  // namespace zdl
