#include "fracheat/cli.hpp"
#include "fracheat/stable_core.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace fracheat;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "fracheat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Run r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<std::vector<std::string>> rows(const std::string& csv) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(csv);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    out.push_back(fields);
  }
  return out;
}

// First value of the data row of a single-row table.
double value(const Run& r, std::size_t column = 0) { return std::stod(rows(r.out).at(1).at(column)); }

fs::path scratch_dir(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("fracheat_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

const std::string kHalfLine = R"({"type": "halfspace"})";
const std::string kUnitInterval = R"({"type": "ball", "center": [0], "radius": 1})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("density") {
  const Run r = run({"density", "--d", "1", "--alpha", "1", "--t", "1", "--x", "0", "--y", "0"});
  CHECK(r.code == 0);
  CHECK(rows(r.out).at(0).at(0) == "value");
  CHECK(value(r) == doctest::Approx(0.3183099).epsilon(1e-7));
  const Run zero = run({"density", "--d", "1", "--alpha", "1", "--t", "0"});
  CHECK(zero.code == 2);
  CHECK(zero.err.find("t > 0") != std::string::npos);
  CHECK(run({"density", "--d", "1", "--alpha", "2", "--t", "1"}).code == 2);
  CHECK(run({"density", "--d", "2", "--t", "1", "--x", "0"}).code == 2);
}

TEST_CASE("ball queries") {
  CHECK(value(run({"ball", "exit-time", "--d", "1", "--alpha", "1", "--r", "1", "--x", "0"})) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(value(run({"ball", "tail", "--x", "0", "--R", "2"})) == doctest::Approx(0.3333333).epsilon(1e-7));
  CHECK(value(run({"ball", "green", "--x", "0", "--v", "0.5"})) == doctest::Approx(0.4192007).epsilon(1e-7));
  CHECK(value(run({"ball", "poisson", "--x", "0", "--y", "2"})) ==
        doctest::Approx(1.0 / (2.0 * M_PI * std::sqrt(3.0))).epsilon(1e-8));
  const Run b = run({"ball", "tail", "--x", "0.5", "--R", "3", "--bracket"});
  CHECK(b.code == 0);
  CHECK(value(b, 1) <= value(b, 0));
  CHECK(value(b, 0) <= value(b, 2));
  CHECK(run({"ball", "green", "--x", "0", "--v", "2"}).code == 2);
  CHECK(run({"ball"}).code == 2);
}

TEST_CASE("survival") {
  const Run p = run({"survival", "--domain", kHalfLine, "--t", "16", "--x", "1", "--profile"});
  CHECK(p.code == 0);
  CHECK(value(p, 3) == doctest::Approx(0.25));
  const Run m = run({"survival", "--domain", kHalfLine, "--t", "16", "--x", "1", "--mc", "--n", "20000", "--h", "1e-4",
                     "--adaptive", "0.02", "--seed", "5"});
  CHECK(m.code == 0);
  const double mean = value(m, 2), se = value(m, 3);
  CHECK(se > 0.0);
  CHECK(mean > 0.25 / 4.0);
  CHECK(mean < 0.25 * 4.0);
  CHECK(run({"survival", "--domain", R"({"type": "torus"})", "--t", "1", "--x", "1", "--profile"}).code == 2);
  CHECK(run({"survival", "--domain", "{\"type\": ", "--t", "1", "--x", "1", "--profile"}).code == 2);
  CHECK(run({"survival", "--domain", kHalfLine, "--t", "1", "--x", "1"}).code == 2);
  CHECK(run({"survival", "--domain", kHalfLine, "--t", "1", "--x", "1", "--mc", "--profile"}).code == 2);
  CHECK(run({"survival", "--domain", kHalfLine, "--t", "1", "--x", "-1", "--mc"}).code == 2);
}

TEST_CASE("heat kernel rows") {
  const std::vector<std::string> common = {"heatkernel", "--domain", kUnitInterval, "--t", "0.5", "--mc",
                                           "--n",        "20000",    "--h",         "0.01"};
  auto with = [&](std::vector<std::string> extra, const char* seed) {
    std::vector<std::string> a = common;
    a.insert(a.end(), extra.begin(), extra.end());
    a.insert(a.end(), {"--seed", seed});
    return run(a);
  };
  const Run xy = with({"--x", "-0.3", "--y", "0.4"}, "1");
  const Run yx = with({"--x", "0.4", "--y", "-0.3"}, "2");
  REQUIRE(xy.code == 0);
  REQUIRE(yx.code == 0);
  const double a = value(xy, 4), sa = value(xy, 5), b = value(yx, 4), sb = value(yx, 5);
  CHECK(std::abs(a - b) <= 3.0 * std::hypot(sa, sb));
  const Run free = run({"density", "--t", "0.5", "--x", "-0.3", "--y", "0.4"});
  CHECK(a <= value(free) + 3.0 * sa);
  CHECK(value(xy, 3) == doctest::Approx(value(free)).epsilon(1e-8));

  const Run p = run({"heatkernel", "--domain", kUnitInterval, "--t", "0.5", "--x", "-0.3", "--y", "0.4",
                     "--profile-bracket", "--lambda1", "1.16"});
  const Run q = run({"heatkernel", "--domain", kUnitInterval, "--t", "0.5", "--x", "0.4", "--y", "-0.3",
                     "--profile-bracket", "--lambda1", "1.16"});
  REQUIRE(p.code == 0);
  CHECK(value(p, 3) == value(q, 3));
  CHECK(value(p, 4) == value(q, 4));
}

TEST_CASE("verify suites") {
  const fs::path dir = scratch_dir("verify");
  const Run id = run({"verify", "identities", "--out", dir.string()});
  CHECK(id.code == 0);
  CHECK(id.out.find("FAIL") == std::string::npos);
  CHECK(fs::exists(dir / "identities_d1_a1.csv"));

  const fs::path doc = dir / "halfspace.json";
  std::ofstream(doc) << kHalfLine;
  const Run f = run({"verify", "factorization", "--domain", doc.string(), "--t", "1", "--point", "0.5", "--point", "1.5",
                     "--n", "4000", "--h", "0.005", "--out", dir.string()});
  CHECK((f.code == 0 || f.code == 1));
  CHECK(f.out.find("empirical_C") != std::string::npos);
  CHECK(fs::exists(dir / "factorization_halfspace.csv"));
  CHECK(fs::exists(dir / "factorization_halfspace.json"));

  CHECK(run({"verify", "profiles", "--domain", "{oops", "--t", "1", "--point", "1"}).code == 2);
  const Run noisy = run({"verify", "profiles", "--domain", kHalfLine, "--t", "1", "--point", "1", "--n", "30",
                         "--noise", "0.001", "--out", dir.string()});
  CHECK(noisy.code == 3);
  CHECK(noisy.err.find("n >=") != std::string::npos);

  const Run bhp = run({"verify", "bhp", "--n", "20000", "--p", "0.5", "--out", dir.string()});
  CHECK(bhp.code == 0);
  CHECK(rows(bhp.out).at(0).at(4) == "exact");
  CHECK(run({"verify", "bhp", "--d", "2"}).code == 2);
}

TEST_CASE("calibration") {
  const fs::path dir = scratch_dir("calibrate");
  const std::string file = (dir / "cal.json").string();
  const std::vector<std::string> args = {"calibrate", "lambda1", "--d", "1", "--alpha", "1", "--n", "20000", "--h",
                                         "0.01", "--seed", "9", "--calibration", file};
  const Run first = run(args);
  REQUIRE(first.code == 0);
  CHECK(first.out.find("stored") != std::string::npos);
  const Run second = run(args);
  CHECK(second.code == 0);
  CHECK(second.out.find("reproduced") != std::string::npos);
  CHECK(value(first, 1) == value(second, 1));

  // The stored lambda1 feeds the ball profile.
  const Run prof = run({"survival", "--domain", kUnitInterval, "--t", "2", "--x", "0", "--profile", "--calibration", file});
  const Run bare = run({"survival", "--domain", kUnitInterval, "--t", "2", "--x", "0", "--profile"});
  CHECK(value(prof, 3) < value(bare, 3));

  // Early times are not yet in the power-law regime, so the two halves of this window disagree.
  const Run bad = run({"calibrate", "beta", "--domain", kHalfLine, "--x", "1", "--window", "0.001,1000", "--n", "4000",
                       "--h", "1e-3", "--adaptive", "0.05", "--calibration", file});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("disagree") != std::string::npos);
  CHECK(run({"calibrate", "beta", "--domain", kUnitInterval, "--x", "0", "--window", "1,2", "--calibration", file})
            .code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"density", "--t", "1", "--bogus", "3"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
