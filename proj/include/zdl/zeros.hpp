#pragma once

// Zeta zeros on the critical line: Hardy's Z function, sign-change zero
// finding, zero-table ingestion and validation, and the counting and
// proximity checks built on a table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zdl/eval.hpp"

namespace zdl {

// Riemann-Siegel theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi.
long double riemann_siegel_theta_ext(double t);
double riemann_siegel_theta(double t);

// e^{i theta(t)} zeta(1/2 + it) from the Euler-Maclaurin reference value;
// numerical error if the discarded imaginary part exceeds 1e-8.
double hardy_Z(double t);
// Imaginary part discarded by hardy_Z.
double hardy_Z_residue(double t);

// Riemann-Siegel main sum plus the first `terms` (0..5) corrections.
double hardy_Z_rs(double t, int terms = 5);
// Riemann-Siegel above kRiemannSiegelFrom, Euler-Maclaurin below.
double hardy_Z_fast(double t);
inline constexpr double kRiemannSiegelFrom = 400.0;

enum class ZeroSource { computed, ingested };

struct ZeroRecord {
  double gamma = 0.0;
  ZeroSource source = ZeroSource::computed;
};

struct ZeroTable {
  std::vector<ZeroRecord> records;
  double t_max = 0.0;

  std::size_t size() const { return records.size(); }
  // #{gamma <= t}
  std::int64_t count_upto(double t) const;
};

// Riemann-von Mangoldt main term theta(t)/pi + 1.
double zero_count_main_term(double t);
inline constexpr double kCountTolerance = 3.0;

inline constexpr double kScanStep = 0.05;
inline constexpr double kBisectTol = 1e-9;

ZeroTable find_zeros(double T);
ZeroTable ingest_zeros(const std::string& path);
// Same validation as ingest_zeros, from text already in memory.
ZeroTable parse_zeros(const std::string& text);

// Completeness against the main term at every ordinate and at t_max;
// incompleteness error naming the first offending interval.
void validate_completeness(const ZeroTable& table);

struct ZeroCount {
  std::int64_t value = 0;
  std::string note;
};

ZeroCount count_N(const ZeroTable& table, double sigma, double T);
std::int64_t box_count(const ZeroTable& table, double U);

double partial_fraction_residual(const ZeroTable& table, double sigma1, double u);

struct NearbyZero {
  double gamma = 0.0;  // signed ordinate (conjugate zeros have gamma < 0)
  double distance = 0.0;
};

std::optional<NearbyZero> nearby_zero(const ZeroTable& table, double sigma, double t,
                                      double T);

}  // namespace zdl
