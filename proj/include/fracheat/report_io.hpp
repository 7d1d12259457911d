#pragma once

// Tabular output: comma separated with a header row, numbers at 9 significant
// digits, locale independent. Report metadata goes into a JSON sidecar.

#include "fracheat/harness.hpp"
#include "fracheat/montecarlo.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>

namespace fracheat {

/// 9 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// Coordinates joined by ';' so a point stays one CSV field.
std::string format_point(const Point& p);

std::string ratio_csv(const RatioReport& report);
nlohmann::json ratio_sidecar(const RatioReport& report);

std::string identity_csv(const IdentityReport& report);
nlohmann::json identity_sidecar(const IdentityReport& report);

/// Header for mc_row.
std::string mc_header();
std::string mc_row(const MCEstimate& e);

/// Writes <dir>/<stem>.csv and <dir>/<stem>.json, creating dir. Returns the CSV path.
std::filesystem::path write_report(const std::filesystem::path& dir, const std::string& stem, const std::string& csv,
                                   const nlohmann::json& sidecar);

}  // namespace fracheat
