#include "fracheat/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracheat {

namespace {

std::string flags(const RatioCell& c) {
  std::string f;
  auto add = [&](const char* s) {
    if (!f.empty()) f += '|';
    f += s;
  };
  if (c.noisy) add("noisy");
  if (c.near_boundary) add("near_boundary");
  if (c.outside_range) add("outside_range");
  return f.empty() ? "-" : f;
}

nlohmann::json opt(const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, res.ptr);
}

std::string format_point(const Point& p) {
  std::string s;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (i) s += ';';
    s += format_number(p(i));
  }
  return s;
}

std::string ratio_csv(const RatioReport& report) {
  std::ostringstream os;
  os << "t,x,y,ratio,stderr,lower_ratio,flags\n";
  for (const RatioCell& c : report.cells) {
    os << format_number(c.t) << ',' << format_point(c.x) << ',' << format_point(c.y) << ',' << format_number(c.ratio)
       << ',' << format_number(c.std_err) << ',' << format_number(c.lower_ratio) << ',' << flags(c) << '\n';
  }
  return os.str();
}

nlohmann::json ratio_sidecar(const RatioReport& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["domain"] = r.domain;
  j["d"] = r.d;
  j["alpha"] = r.alpha;
  j["times"] = r.times;
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["cells"] = r.cells.size();
  j["min_ratio"] = r.min_ratio;
  j["max_ratio"] = r.max_ratio;
  j["q05"] = r.q05;
  j["q50"] = r.q50;
  j["q95"] = r.q95;
  j["empirical_C"] = r.empirical_C;
  j["empirical_C_half"] = opt(r.empirical_C_half);
  j["near_boundary_q95"] = opt(r.near_boundary_q95);
  j["boundary_factor"] = opt(r.boundary_factor);
  j["diagonal_C"] = opt(r.diagonal_C);
  j["off_diagonal_C"] = opt(r.off_diagonal_C);
  j["stderr_flags"] = r.stderr_flags;
  j["outside_range"] = r.outside_range;
  j["finite"] = r.finite();
  j["stable"] = r.stable();
  j["boundary_ok"] = r.boundary_ok();
  return j;
}

std::string identity_csv(const IdentityReport& report) {
  std::ostringstream os;
  os << "check,error,tolerance,pass,detail\n";
  for (const IdentityCheck& c : report.checks) {
    os << '"' << c.name << "\"," << format_number(c.error) << ',' << format_number(c.tolerance) << ','
       << (c.pass ? "true" : "false") << ",\"" << c.detail << "\"\n";
  }
  return os.str();
}

nlohmann::json identity_sidecar(const IdentityReport& report) {
  nlohmann::json j;
  j["kind"] = "identities";
  j["d"] = report.d;
  j["alpha"] = report.alpha;
  j["checks"] = report.checks.size();
  j["pass"] = report.pass();
  return j;
}

std::string mc_header() { return "mean,stderr,n,seed,step,wall_seconds,diagnostic"; }

std::string mc_row(const MCEstimate& e) {
  std::ostringstream os;
  os << format_number(e.mean) << ',' << format_number(e.std_err) << ',' << e.n << ',' << e.seed << ','
     << format_number(e.step) << ',' << format_number(e.wall_seconds) << ",\"" << e.diagnostic << '"';
  return os.str();
}

std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& stem, const std::string& csv,
                                   const nlohmann::json& sidecar) {
  std::filesystem::create_directories(dir);
  const auto csv_path = dir / (stem + ".csv");
  const auto json_path = dir / (stem + ".json");
  std::ofstream c(csv_path);
  std::ofstream j(json_path);
  if (!c || !j) throw std::runtime_error("cannot write report files in " + dir.string());
  c << csv;
  j << sidecar.dump(2) << '\n';
  return csv_path;
}

}  // namespace fracheat
