#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <limits>

#include "zdl/error.hpp"
#include "zdl/report.hpp"

using namespace zdl;
namespace fs = std::filesystem;

TEST_SUITE("report") {

TEST_CASE("number formatting") {
  CHECK(fmt(0.1) == "0.10000000000000001");
  CHECK(std::stod(fmt(1.0 / 3)) == 1.0 / 3);
  CHECK(fmt(std::numeric_limits<double>::quiet_NaN()) == "nan");
  CHECK(fmt(-std::numeric_limits<double>::infinity()) == "-inf");
  CHECK(fmt(std::int64_t{-42}) == "-42");
}

TEST_CASE("csv round trip") {
  Table t{{"name", "value", "note"}, {}};
  t.add({"plain", "1", ""});
  t.add({"with,comma", "2", "say \"hi\""});
  t.add({"multi\r\nline", "3", "lf\nonly"});
  const std::string text = to_csv(t);
  CHECK(text.substr(0, 17) == "name,value,note\r\n");
  CHECK(text.find("\"with,comma\"") != std::string::npos);
  CHECK(text.find("\"say \"\"hi\"\"\"") != std::string::npos);
  const Table back = parse_csv(text);
  CHECK(back.columns == t.columns);
  CHECK(back.rows == t.rows);
  CHECK(to_csv(back) == text);
  CHECK(t.column("note") == 2);
  CHECK_THROWS_AS(t.column("missing"), Error);
  CHECK_THROWS_AS(t.add({"short"}), Error);
}

TEST_CASE("json hash is the git blob hash of the canonical dump") {
  CHECK(json_hash(Json::object()) == "9e26dfeeb6e641a33dae4961196235bdb965b21b");
  const Json a = Json::parse(R"({"b":[1,2],"a":1})");
  const Json b = Json::parse(R"({"a":1,"b":[1,2]})");
  CHECK(json_hash(a) == "a6c135cdc13beae12acb48af65a38da67f04ffa4");
  CHECK(json_hash(a) == json_hash(b));
  CHECK(json_hash(a) != json_hash(Json::parse(R"({"a":2,"b":[1,2]})")));
}

TEST_CASE("artifact writer carries provenance everywhere") {
  const fs::path dir = fs::temp_directory_path() / "zdl_report_test";
  fs::remove_all(dir);
  const Provenance prov{"c0ffee", "beef"};
  ArtifactWriter w(dir, prov);
  Table t{{"x", "y"}, {}};
  t.add({"1", "2"});
  t.add({"3", "4"});
  w.csv("table", t);
  w.json("summary", Json{{"k", 1}});
  w.svg("plot", svg_line_plot({"title", "x", "y", false, true}, {{"s", {1, 2, 3}, {1, 10, 100}}}, prov));
  CHECK(w.files() == std::vector<std::string>{"table.csv", "table.csv.json", "summary.json", "plot.svg"});

  const Json side = Json::parse(read_file(dir / "table.csv.json"));
  CHECK(side["config_hash"] == "c0ffee");
  CHECK(side["manifest_hash"] == "beef");
  CHECK(side["rows"] == 2);
  CHECK(side["columns"] == Json::array({"x", "y"}));
  CHECK(side["content_hash"].get<std::string>().size() == 40);
  const Json sum = Json::parse(read_file(dir / "summary.json"));
  CHECK(sum["provenance"]["config_hash"] == "c0ffee");
  const std::string svg = read_file(dir / "plot.svg");
  CHECK(svg.find("config_hash=c0ffee") != std::string::npos);
  CHECK(svg.find("manifest_hash=beef") != std::string::npos);
  CHECK(parse_csv(read_file(dir / "table.csv")).rows == t.rows);

  // a rewrite is byte-identical
  const std::string first = read_file(dir / "table.csv.json");
  ArtifactWriter again(dir, prov);
  again.csv("table", t);
  CHECK(read_file(dir / "table.csv.json") == first);
  fs::remove_all(dir);
}

TEST_CASE("file errors") {
  try {
    read_file("/nonexistent/zdl/file");
    FAIL("missing file read");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::io);
  }
}

}  // TEST_SUITE
