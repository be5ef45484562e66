#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "oracle_values.hpp"
#include "test_support.hpp"
#include "zdl/zeros.hpp"
#include "zdl/zeta.hpp"

using namespace zdl;

TEST_SUITE("zeros") {

TEST_CASE("theta and Z against the oracle") {
  for (const auto& [t, v] : oracle::kTheta) CHECK(riemann_siegel_theta(t) == doctest::Approx(v).epsilon(1e-13));
  for (const auto& [t, v] : oracle::kHardyZ) {
    INFO("t = " << t);
    CHECK(std::abs(hardy_Z(t) - v) < 1e-9);
    CHECK(std::abs(hardy_Z_fast(t) - v) < 1e-7);
  }
  for (double t : {10.0, 100.0, 1000.0}) CHECK(std::abs(hardy_Z_residue(t)) < 1e-8);
  CHECK(std::abs(std::abs(hardy_Z(50)) - std::abs(zeta_reference({0.5, 50}))) < 1e-8);
  CHECK(hardy_Z(14.0) * hardy_Z(14.2) < 0);
}

TEST_CASE("Riemann-Siegel agrees with Euler-Maclaurin above the switch") {
  for (double t = 400; t < 3000; t += 97.3) CHECK(std::abs(hardy_Z_rs(t) - hardy_Z(t)) < 1e-7);
}

TEST_CASE("find_zeros up to 100") {
  const ZeroTable z = find_zeros(100);
  REQUIRE(z.size() == 29);
  CHECK(z.t_max == 100);
  CHECK(std::abs(z.records[0].gamma - oracle::kZeroOrdinates[0]) < 1e-8);
  CHECK(std::abs(z.records[1].gamma - oracle::kZeroOrdinates[1]) < 1e-8);
  CHECK(std::abs(z.records[2].gamma - oracle::kZeroOrdinates[2]) < 1e-8);
  CHECK(std::abs(z.records[28].gamma - oracle::kZeroOrdinates[3]) < 1e-8);
}

TEST_CASE("find_zeros up to 1100") {
  const ZeroTable& z = testing::zeros();
  CHECK(z.count_upto(500) == oracle::kZerosUpTo500);
  CHECK(z.count_upto(1000) == oracle::kZerosUpTo1000);
  CHECK(std::abs(z.records[29].gamma - oracle::kZeroOrdinates[4]) < 1e-8);
  CHECK(std::abs(z.records[99].gamma - oracle::kZeroOrdinates[5]) < 1e-8);
  CHECK(std::abs(z.records[648].gamma - oracle::kZeroOrdinates[6]) < 1e-8);
  // |count - main term| <= 2 at T + 1/2 up to 500, <= 3 everywhere
  for (int T = 10; T <= 500; ++T)
    CHECK(std::abs(double(z.count_upto(T + 0.5)) - zero_count_main_term(T + 0.5)) <= 2.0);
  for (double t = 10; t <= 1100; t += 0.25)
    CHECK(std::abs(double(z.count_upto(t)) - zero_count_main_term(t)) <= 3.0);
  // sign change and small |Z| at every zero
  for (std::size_t i = 0; i < z.size(); i += 5) {
    const double g = z.records[i].gamma;
    CHECK(std::abs(hardy_Z_fast(g)) < 1e-6);
    CHECK(hardy_Z_fast(g - 1e-4) * hardy_Z_fast(g + 1e-4) < 0);
  }
  // the T = 200 table is a prefix of this one
  const ZeroTable small = find_zeros(200);
  REQUIRE(small.size() <= z.size());
  for (std::size_t i = 0; i < small.size(); ++i) CHECK(small.records[i].gamma == z.records[i].gamma);
}

TEST_CASE("find_zeros domain") {
  CHECK_THROWS_AS(find_zeros(5), Error);
  CHECK_THROWS_AS(find_zeros(2e6), Error);
}

TEST_CASE("ingestion") {
  const ZeroTable t = parse_zeros("# first three\n14.134725\n21.022040\n\n25.010858\n");
  REQUIRE(t.size() == 3);
  CHECK(t.records[0].source == ZeroSource::ingested);
  CHECK(t.t_max == doctest::Approx(25.010858));
  const ZeroTable e = parse_zeros("");
  CHECK(e.size() == 0);
  CHECK(e.t_max == 0);
  try {
    parse_zeros("21.022040\n14.134725\n");
    FAIL("descending accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::order_violation);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_zeros("14.1\nabc\n");
    FAIL("garbage accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::parse);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
  try {
    // missing the zeros between 14 and 60
    parse_zeros("14.134725\n60.831778\n");
    FAIL("incomplete table accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::incomplete);
  }
  try {
    ingest_zeros("/nonexistent/zeros.txt");
    FAIL("missing file accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::io);
  }
  // round trip through a file
  const auto path = std::filesystem::temp_directory_path() / "zdl_zeros_roundtrip.txt";
  {
    std::ofstream f(path);
    f.precision(17);
    for (const auto& r : testing::zeros().records)
      if (r.gamma < 300) f << r.gamma << "\n";
  }
  const ZeroTable back = ingest_zeros(path.string());
  CHECK(back.size() == static_cast<std::size_t>(testing::zeros().count_upto(300)));
  std::filesystem::remove(path);
}

TEST_CASE("count_N") {
  const ZeroTable& z = testing::zeros();
  CHECK(count_N(z, 0.6, 1000).value == 0);
  CHECK(count_N(z, 0.5, 100).value == 58);
  CHECK(count_N(z, 0.0, 100).value == 58);
  CHECK(!count_N(z, 0.5, 100).note.empty());
  // nonincreasing in sigma, nondecreasing in T
  for (double T : {50.0, 200.0, 900.0}) {
    std::int64_t prev = count_N(z, 0.0, T).value;
    for (double s = 0.05; s <= 1.0; s += 0.05) {
      const auto v = count_N(z, s, T).value;
      CHECK(v <= prev);
      prev = v;
    }
  }
  for (double s : {0.3, 0.5, 0.7}) {
    std::int64_t prev = 0;
    for (double T = 10; T <= 1100; T += 10) {
      const auto v = count_N(z, s, T).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
  try {
    count_N(z, 0.5, 2000);
    FAIL("beyond horizon");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::horizon);
  }
}

TEST_CASE("box_count") {
  const ZeroTable& z = testing::zeros();
  CHECK(box_count(z, 0) == 0);
  CHECK(box_count(z, 14) == 1);
  CHECK(box_count(z, 1000) <= testing::budget("C_box") * std::log(1002.0));
  for (int U = 0; U <= 990; U += 10) CHECK(box_count(z, U) <= testing::budget("C_box") * std::log(U + 2.0));
  // partition: no ordinate sits on an integer, so unit boxes add up
  std::int64_t sum = 0;
  for (int k = 0; k < 1000; ++k) sum += box_count(z, k);
  CHECK(sum == z.count_upto(1000));
  CHECK_THROWS_AS(box_count(z, 1100), Error);
}

TEST_CASE("partial fraction residual") {
  const ZeroTable& z = testing::zeros();
  const double c = testing::budget("C_zeta_prime_frac");
  CHECK(partial_fraction_residual(z, 2, 1000) <= c * std::log(1002.0));
  CHECK(partial_fraction_residual(z, 0.75, 100) <= c * std::log(102.0));
  CHECK(partial_fraction_residual(z, 0.75, -100) == doctest::Approx(partial_fraction_residual(z, 0.75, 100)).epsilon(1e-9));
  try {
    partial_fraction_residual(z, 0.5, z.records[10].gamma);
    FAIL("at a zero");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::conditioning);
  }
}

TEST_CASE("nearby zero") {
  const ZeroTable big = find_zeros(1e4);
  const double g1 = big.records[0].gamma;
  const auto own = nearby_zero(big, 0.5, g1, 1e4);
  REQUIRE(own.has_value());
  CHECK(own->gamma == g1);
  CHECK(own->distance == 0);
  const auto far = nearby_zero(big, 0.9, 5000, 1e4);
  REQUIRE(far.has_value());
  CHECK(far->distance <= std::pow(std::log(1e4), 2) / 4);
  // a rectangle too far right of the line contains nothing
  CHECK(!nearby_zero(big, 1.0, 5000, 1e4).has_value() == (0.5 < 1.0 - 1 / std::sqrt(std::log(std::log(1e4)))));
}

}  // TEST_SUITE
