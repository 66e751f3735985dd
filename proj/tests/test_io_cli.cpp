#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cuplength/cli.hpp"
#include "cuplength/error.hpp"
#include "cuplength/io.hpp"
#include "fixtures.hpp"

using namespace cuplength;

namespace {

ErrorKind parse_error_kind(const std::string& text, bool csv) {
  std::istringstream in(text);
  try {
    if (csv) {
      parse_distance_csv(in);
    } else {
      parse_filtered_complex(in);
    }
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

std::string run_cli(JobConfig cfg, int* code = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run(cfg, out, err);
  if (code) *code = rc;
  return out.str();
}

}  // namespace

TEST_CASE("distance CSV parsing") {
  std::istringstream ok("0,1\n1,0\n");
  CHECK(parse_distance_csv(ok).size() == 2);
  CHECK(parse_error_kind("0,1\n2,0\n", true) == ErrorKind::AsymmetricMatrix);
  CHECK(parse_error_kind("0,x\nx,0\n", true) == ErrorKind::ParseError);
  CHECK(parse_error_kind("", true) == ErrorKind::ParseError);
}

TEST_CASE("complex file parsing") {
  std::istringstream ok("# hollow triangle\n0 0\n0 1\n0 2\n0 0 1\n0 1 2\n0 0 2  # trailing comment\n");
  CHECK(parse_filtered_complex(ok).size() == 6);
  std::istringstream unsorted("0 0\n0 1\n0 2\n0 3\n0 3 2\n0 2 1\n0 1 3\n");
  CHECK(parse_filtered_complex(unsorted).contains(Simplex{2, 3}));
  CHECK(parse_error_kind("0 0\n0 1\n0 1 1\n", false) == ErrorKind::ParseError);
  CHECK(parse_error_kind("zero 0\n", false) == ErrorKind::ParseError);
  CHECK(parse_error_kind("1\n", false) == ErrorKind::ParseError);
  CHECK(parse_error_kind("0 0 1\n", false) == ErrorKind::MissingFace);

  auto klein = load_filtered_complex(fixtures::data_path("klein.txt"));
  auto cv = klein.critical_values();
  CHECK(std::vector<double>(cv.begin(), cv.end()) == std::vector<double>{0, 1, 2, 3});
  CHECK_THROWS_AS(load_filtered_complex("/nonexistent/file.txt"), Error);
}

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(2);
  for (int round = 0; round < 30; ++round) {
    auto c = fixtures::random_filtration(rng);
    auto d = cup_diagram(compute_barcode(c, 2), c, 2).first;
    auto text = diagram_to_json(d).dump();
    CHECK(diagram_from_json(nlohmann::ordered_json::parse(text)) == d);
    const CupFunction f = fixtures::random_function(rng);
    CHECK(function_from_json(nlohmann::ordered_json::parse(function_to_json(f).dump())) == f);
  }
  CHECK_THROWS_AS(diagram_from_json(nlohmann::ordered_json::parse("{\"points\":[{}]}")), Error);
}

TEST_CASE("cup-diagram output for the Klein bottle") {
  JobConfig cfg;
  cfg.command = "cup-diagram";
  cfg.inputs = {fixtures::data_path("klein.txt")};
  CHECK(run_cli(cfg) ==
        "{\"points\":[{\"birth\":1,\"death\":3,\"inf\":false,\"value\":1},"
        "{\"birth\":2,\"death\":3,\"inf\":false,\"value\":2},"
        "{\"birth\":2,\"inf\":true,\"value\":2}]}\n");
  cfg.format = "csv";
  CHECK(run_cli(cfg) == "birth,death,value\n1,3,1\n2,3,2\n2,inf,2\n");
}

TEST_CASE("erosion presets") {
  JobConfig cfg;
  cfg.command = "erosion";
  cfg.inputs = {"torus", "wedge-lower"};
  CHECK(std::stod(run_cli(cfg)) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));
  CHECK(run_cli(cfg) == "1.0471975511965976\n");
}

TEST_CASE("oracle-check exit codes") {
  for (const auto& name : {"hollow_triangle.txt", "klein.txt", "square.csv"}) {
    JobConfig cfg;
    cfg.command = "oracle-check";
    cfg.inputs = {fixtures::data_path(name)};
    int code = -1;
    CHECK(run_cli(cfg, &code) == "ok\n");
    CHECK(code == 0);
  }
}

TEST_CASE("SVG output is deterministic and marks infinity") {
  JobConfig cfg;
  cfg.command = "plot";
  cfg.format = "svg";
  cfg.inputs = {fixtures::data_path("klein.txt")};
  const std::string a = run_cli(cfg);
  const std::string b = run_cli(cfg);
  CHECK(a == b);
  CHECK(a.find("<svg") == 0);
  CHECK(a.find("∞") != std::string::npos);
  CHECK(a.find("<polygon") != std::string::npos);
}

TEST_CASE("output files and argument checks") {
  const auto path = std::filesystem::temp_directory_path() / "cuplength_test_out.json";
  JobConfig cfg;
  cfg.command = "cup-function";
  cfg.inputs = {fixtures::data_path("torus.txt")};
  cfg.output = path.string();
  CHECK(run_cli(cfg).empty());
  std::ifstream in(path);
  auto f = function_from_json(nlohmann::ordered_json::parse(in));
  CHECK(evaluate(f, Interval::closed(0, 5)) == 2);
  std::filesystem::remove(path);

  JobConfig bad;
  bad.command = "cup-diagram";
  bad.inputs = {fixtures::data_path("torus.txt")};
  bad.max_dim = 0;
  CHECK_THROWS_AS(run_cli(bad), Error);
  bad.max_dim = 2;
  bad.trim_eps = -1;
  CHECK_THROWS_AS(run_cli(bad), Error);
}
