#include "fracheat/calibration.hpp"

#include "fracheat/domain_io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fracheat {

namespace {

using nlohmann::json;

json to_json(const CalibrationEntry& e) {
  return json{{"kind", e.kind},
              {"d", e.d},
              {"alpha", e.alpha},
              {"domain", e.domain},
              {"value", e.value},
              {"stderr", e.std_err},
              {"seed", e.seed},
              {"n", e.n},
              {"window", {e.window_lo, e.window_hi}},
              {"scale", e.scale},
              {"h", e.h},
              {"adaptive", e.adaptive},
              {"first_half", e.first_half},
              {"second_half", e.second_half}};
}

CalibrationEntry from_json(const json& j) {
  CalibrationEntry e;
  e.kind = j.at("kind").get<std::string>();
  e.d = j.at("d").get<int>();
  e.alpha = j.at("alpha").get<double>();
  e.domain = j.at("domain").get<std::string>();
  e.value = j.at("value").get<double>();
  e.std_err = j.at("stderr").get<double>();
  e.seed = j.at("seed").get<std::uint64_t>();
  e.n = j.at("n").get<long long>();
  e.window_lo = j.at("window").at(0).get<double>();
  e.window_hi = j.at("window").at(1).get<double>();
  e.scale = j.value("scale", 1.0);
  e.h = j.value("h", 0.0);
  e.adaptive = j.value("adaptive", 0.0);
  e.first_half = j.value("first_half", 0.0);
  e.second_half = j.value("second_half", 0.0);
  return e;
}

bool same_key(const CalibrationEntry& a, const std::string& kind, int d, double alpha, const std::string& domain) {
  return a.kind == kind && a.d == d && a.alpha == alpha && a.domain == domain;
}

}  // namespace

std::vector<CalibrationEntry> load_calibration(const std::string& path) {
  std::vector<CalibrationEntry> out;
  if (!std::filesystem::exists(path)) return out;
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read calibration file '" + path + "'");
  try {
    const json doc = json::parse(in);
    for (const auto& e : doc.at("entries")) out.push_back(from_json(e));
  } catch (const json::exception& e) {
    throw ConfigError("malformed calibration file '" + path + "': " + e.what());
  }
  return out;
}

std::optional<CalibrationEntry> find_calibration(const std::vector<CalibrationEntry>& entries, const std::string& kind,
                                                 int d, double alpha, const std::string& domain) {
  for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
    if (same_key(*it, kind, d, alpha, domain)) return *it;
  }
  return std::nullopt;
}

std::optional<CalibrationEntry> find_same_run(const std::vector<CalibrationEntry>& entries,
                                              const CalibrationEntry& run) {
  for (const auto& e : entries) {
    if (same_key(e, run.kind, run.d, run.alpha, run.domain) && e.seed == run.seed && e.n == run.n &&
        e.window_lo == run.window_lo && e.window_hi == run.window_hi && e.scale == run.scale && e.h == run.h && e.adaptive == run.adaptive) {
      return e;
    }
  }
  return std::nullopt;
}

void append_calibration(const std::string& path, const CalibrationEntry& entry) {
  json doc{{"entries", json::array()}};
  for (const auto& e : load_calibration(path)) doc["entries"].push_back(to_json(e));
  doc["entries"].push_back(to_json(entry));
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write calibration file '" + path + "'");
  out << doc.dump(2) << '\n';
}

}  // namespace fracheat
