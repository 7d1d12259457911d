#include "fracheat/calibration.hpp"
#include "fracheat/domain_io.hpp"
#include "fracheat/report_io.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace fracheat;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fracheat_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("domain documents round trip") {
  const std::vector<std::pair<int, std::string>> docs = {
      {2, R"({"type": "ball", "center": [0.5, 0], "radius": 2})"},
      {3, R"({"type": "halfspace"})"},
      {2, R"({"type": "halfspace", "axis": [1, 1], "center": [0, 1]})"},
      {2, R"({"type": "exterior_ball", "radius": 1})"},
      {3, R"({"type": "cone", "angle": 0.6, "beta": 0.3})"},
      {2, R"({"type": "hyperplane_complement"})"},
      {2, R"({"type": "special_lipschitz", "breakpoints": [[-1, 0], [1, 1]], "lipschitz_constant": 0.5})"},
      {1, R"({"type": "interval_complement", "intervals": [[-1, 1], [3, 4]]})"},
      {1, R"({"type": "ball_union_exterior_ball", "center": [0], "radius": [1, 3]})"},
  };
  for (const auto& [d, text] : docs) {
    CAPTURE(text);
    const Domain D = load_domain(text, d);
    const Domain again = domain_from_json(domain_to_json(D), d);
    CHECK(again.describe() == D.describe());
    CHECK(D.dim() == d);
  }
  CHECK(load_domain(R"({"type": "halfspace", "axis": [3, 4]})", 2).describe() ==
        Domain::half_space(make_point({0.6, 0.8}), make_point({0, 0})).describe());
}

TEST_CASE("malformed domain documents are rejected") {
  CHECK_THROWS_AS(load_domain(R"({"type": "torus"})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "radius": 1)", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "center": [0, 0, 0], "radius": 1})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "center": [0, 0]})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "radius": -1})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "radius": 1, "angle": 2})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "ball", "radius": "one"})", 2), ConfigError);
  CHECK_THROWS_AS(load_domain(R"({"type": "interval_complement", "intervals": [[0, 2], [1, 3]]})", 1), ConfigError);
  CHECK_THROWS_AS(load_domain("/nonexistent/domain.json", 2), ConfigError);
  CHECK_THROWS_AS(load_domain("", 2), ConfigError);
}

TEST_CASE("domain documents from files") {
  const fs::path dir = scratch_dir("domain");
  const fs::path file = dir / "ext.json";
  std::ofstream(file) << R"({"type": "exterior_ball", "center": [0, 0], "radius": 1.5})";
  CHECK(load_domain(file.string(), 2).type_name() == "exterior_ball");
}

TEST_CASE("points") {
  CHECK(parse_point("0.5,-1", 2) == make_point({0.5, -1.0}));
  CHECK(parse_point(" 2 ", 1) == make_point({2.0}));
  CHECK_THROWS_AS(parse_point("0.5", 2), ConfigError);
  CHECK_THROWS_AS(parse_point("0.5,x", 2), ConfigError);
  CHECK_THROWS_AS(parse_point("1,,2", 3), ConfigError);
}

TEST_CASE("number formatting") {
  CHECK(format_number(1.0 / 3.0) == "0.333333333");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(12345678912.0) == "1.23456789e+10");
  CHECK(format_number(-0.25) == "-0.25");
  CHECK(format_number(NAN) == "nan");
  CHECK(format_number(-INFINITY) == "-inf");
  CHECK(format_point(make_point({1.5, -2.0})) == "1.5;-2");
}

TEST_CASE("ratio reports") {
  RatioReport r;
  r.kind = "profile";
  r.domain = "ball";
  RatioCell c;
  c.t = 0.5;
  c.x = make_point({0.1});
  c.y = make_point({0.1});
  c.ratio = 1.25;
  c.std_err = 0.01;
  c.noisy = true;
  c.near_boundary = true;
  r.cells.push_back(c);
  summarize(r);
  const std::string csv = ratio_csv(r);
  CHECK(csv.rfind("t,x,y,ratio,stderr,lower_ratio,flags\n", 0) == 0);
  CHECK(csv.find("0.5,0.1,0.1,1.25,0.01,0,noisy|near_boundary\n") != std::string::npos);
  const fs::path dir = scratch_dir("report");
  const fs::path out = write_report(dir / "nested", "r", csv, ratio_sidecar(r));
  CHECK(fs::exists(out));
  CHECK(fs::exists(dir / "nested" / "r.json"));
  std::ifstream in(dir / "nested" / "r.json");
  const auto j = nlohmann::json::parse(in);
  CHECK(j.at("kind") == "profile");
  CHECK(j.at("stderr_flags") == 1);
}

TEST_CASE("calibration file") {
  const fs::path dir = scratch_dir("calibration");
  const std::string path = (dir / "cal.json").string();
  CHECK(load_calibration(path).empty());
  CalibrationEntry e;
  e.kind = "lambda1";
  e.d = 2;
  e.alpha = 1.5;
  e.domain = "ball";
  e.value = 1.0 / 3.0 + 1e-17;
  e.std_err = 0.01;
  e.seed = 0xFFFFFFFFFFFFFFFFULL;
  e.n = 1000;
  e.window_lo = 1.0;
  e.window_hi = 4.0;
  append_calibration(path, e);
  CalibrationEntry f = e;
  f.value = 2.0;
  f.seed = 3;
  append_calibration(path, f);
  const auto entries = load_calibration(path);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].value == e.value);
  CHECK(entries[0].seed == e.seed);
  CHECK(find_calibration(entries, "lambda1", 2, 1.5, "ball")->value == 2.0);
  CHECK_FALSE(find_calibration(entries, "lambda1", 3, 1.5, "ball").has_value());
  CHECK(find_same_run(entries, e)->value == e.value);
  CalibrationEntry g = e;
  g.n = 2000;
  CHECK_FALSE(find_same_run(entries, g).has_value());
  std::ofstream(dir / "bad.json") << "{\"entries\": [{\"kind\": 1}]}";
  CHECK_THROWS_AS(load_calibration((dir / "bad.json").string()), ConfigError);
}

}  // TEST_SUITE
