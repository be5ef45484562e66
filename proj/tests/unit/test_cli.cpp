#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <optional>

#include "commands.hpp"
#include "zdl/report.hpp"

using namespace zdl;
namespace fs = std::filesystem;

TEST_SUITE("cli") {

TEST_CASE("every command has defaults") {
  const auto& c = zdlab::commands();
  for (const char* name : {"calibrate", "scan-R", "scan-theorem-lhs", "find-zeros", "verify-lemma",
                           "detect", "exponents", "report"})
    CHECK(std::find(c.begin(), c.end(), name) != c.end());
  CHECK(zdlab::defaults("scan-theorem-lhs")["T"] == 1e4);
  CHECK(zdlab::defaults("scan-theorem-lhs")["nu"] == 0.4);
  CHECK(zdlab::defaults("detect")["U"] == 200.0);
}

TEST_CASE("resolution order: defaults, top level, section, flags") {
  const Json config = Json::parse(R"({"T": 1000, "nu": 0.3, "detect": {"U": 50}, "scan-R": {"T": 2000}})");
  const auto inv = zdlab::resolve("scan-theorem-lhs", config, {{"nu", "0.2"}});
  CHECK(inv.params["T"] == 1000.0);
  CHECK(inv.params["nu"] == 0.2);
  CHECK(inv.params["eps"] == 0.25);
  const auto r = zdlab::resolve("scan-R", config, {});
  CHECK(r.params["T"] == 2000.0);
  CHECK(!r.params.contains("nu"));
  const auto d = zdlab::resolve("detect", config, {{"T", "5e3"}});
  CHECK(d.params["U"] == 50.0);
  CHECK(d.params["T"] == 5000.0);
  const auto l = zdlab::resolve("scan-theorem-lhs", Json(), {{"Ts", "1e3,3e3"}, {"refine", "true"}});
  CHECK(l.params["Ts"] == Json::array({1000.0, 3000.0}));
  CHECK(l.params["refine"] == true);
}

TEST_CASE("bad configs are rejected") {
  auto kind_of = [](auto&& f) -> std::optional<ErrorKind> {
    try {
      f();
    } catch (const Error& e) {
      return e.kind();
    }
    return std::nullopt;
  };
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json::parse(R"({"Tmax": 1})"), {}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json::parse(R"({"detect": {"sigma": 1}})"), {}); }) ==
        ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json::parse(R"({"T": "big"})"), {}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json(), {{"T", "1e4x"}}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json(), {{"nu", "0.1"}}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("calibrate", Json(), {{"seed", "1.5"}}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("nope", Json(), {}); }) == ErrorKind::config);
  CHECK(kind_of([] { zdlab::resolve("scan-R", Json::array(), {}); }) == ErrorKind::config);
}

TEST_CASE("exit codes") {
  CHECK(zdlab::exit_code(ErrorKind::io) == 2);
  CHECK(zdlab::exit_code(ErrorKind::config) == 2);
  CHECK(zdlab::exit_code(ErrorKind::parse) == 2);
  CHECK(zdlab::exit_code(ErrorKind::horizon) == 3);
  CHECK(zdlab::exit_code(ErrorKind::capacity) == 3);
}

TEST_CASE("exponents command writes a summary with provenance") {
  const fs::path out = fs::temp_directory_path() / "zdl_cli_test";
  fs::remove_all(out);
  auto inv = zdlab::resolve("exponents", Json(),
                            {{"profile", "DH"}, {"nu", "0.3"}, {"eps", "0.001"}, {"out", out.string()}});
  CHECK(zdlab::execute(inv) == 0);
  const Json j = Json::parse(read_file(out / "exponents_rhs.json"));
  CHECK(j["exponent_exact"] == "1203/2000");
  CHECK(j["provenance"]["config_hash"].get<std::string>().size() == 40);
  CHECK(!j["trace"].empty());
  // the output directory does not enter the config hash
  const fs::path out2 = out / "again";
  inv.params["out"] = out2.string();
  CHECK(zdlab::execute(inv) == 0);
  CHECK(read_file(out2 / "exponents_rhs.json") == read_file(out / "exponents_rhs.json"));

  auto ind = zdlab::resolve("exponents", Json(), {{"mode", "induction"}, {"eps", "0.1"}, {"eta", "0.05"},
                                                  {"out", out.string()}});
  CHECK(zdlab::execute(ind) == 0);
  auto bad = zdlab::resolve("exponents", Json(), {{"mode", "sideways"}, {"out", out.string()}});
  CHECK_THROWS_AS(zdlab::execute(bad), Error);
  fs::remove_all(out);
}

TEST_CASE("detect names a missing zero table") {
  auto inv = zdlab::resolve("detect", Json(), {{"zeros", "/nonexistent/zeros.txt"}});
  try {
    zdlab::execute(inv);
    FAIL("missing table accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
    CHECK(zdlab::exit_code(e.kind()) == 2);
    CHECK(std::string(e.what()).find("/nonexistent/zeros.txt") != std::string::npos);
  }
}

}  // TEST_SUITE
