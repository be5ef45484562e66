#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "zdl/calibration.hpp"
#include "zdl/zeros.hpp"

namespace testing {

inline const zdl::CalibrationManifest& manifest() {
  static const zdl::CalibrationManifest m =
      zdl::load_manifest(std::string(ZDL_DATA_DIR) + "/calibration_manifest.txt");
  return m;
}

// calibrated constant with the usual headroom
inline double budget(const std::string& key) { return zdl::kHeadroom * manifest().get(key); }

// Zeros up to 1100, computed once per process.
inline const zdl::ZeroTable& zeros() {
  static const zdl::ZeroTable z = zdl::find_zeros(1100.0);
  return z;
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
  return std::abs(a - b) / std::max(1.0, std::abs(b));
}

}  // namespace testing
