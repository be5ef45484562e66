#pragma once

// Lemma verification suites.  Each id maps to one statement of the theory
// and runs it on a pinned, seeded domain; calibrated constants come from the
// manifest and are used with kHeadroom.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdl/calibration.hpp"
#include "zdl/report.hpp"
#include "zdl/zeros.hpp"

namespace zdl {

inline constexpr std::uint64_t kVerifySeed = 1729;

struct SuiteResult {
  std::string id;
  bool passed = true;
  std::int64_t samples = 0;
  std::int64_t failures = 0;
  std::int64_t skipped = 0;
  // max over samples of observed / allowed (<= 1 means within bound)
  double worst_ratio = 0.0;
  Table table;
  std::vector<std::string> notes;

  // Records one sample; ratio <= 1 passes.
  void sample(double ratio);
  Json summary() const;
};

class VerifyContext {
 public:
  explicit VerifyContext(CalibrationManifest manifest, std::uint64_t seed = kVerifySeed);

  const CalibrationManifest& manifest() const { return manifest_; }
  std::uint64_t seed() const { return seed_; }
  // calibrated constant times kHeadroom
  double budget(const std::string& key) const;
  // A table reaching at least t_max: the supplied one if long enough,
  // otherwise computed (and cached).
  const ZeroTable& zeros(double t_max);
  void supply_zeros(ZeroTable table) { zeros_ = std::move(table); }

 private:
  CalibrationManifest manifest_;
  std::uint64_t seed_;
  std::optional<ZeroTable> zeros_;
};

const std::vector<std::string>& suite_ids();
// Config error for an unknown id.
SuiteResult run_suite(const std::string& id, VerifyContext& ctx);

}  // namespace zdl
