#pragma once

// CSV tables for curves and JSON for factor reports.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slitfactor/fresnel.hpp"
#include "slitfactor/scan.hpp"

namespace slitfactor {

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// 17 significant digits; parses back to the identical double.
std::string format_number(double value);

/// Header line, then one comma-separated record per line, newline-terminated.
void emit_csv(std::ostream& out, const CsvTable& table);
std::string to_csv(const CsvTable& table);

/// Throws InvalidInput on malformed input.
CsvTable parse_csv(std::istream& in);

CsvTable pattern_table(std::span<const PatternSample> samples);     // chi,intensity
CsvTable scan_table(const ScanCurve& curve);                        // n,sigma
CsvTable sweep_table(const SlitWidthCurve& curve);                  // fill,rescaled,sigma_s
CsvTable detuning_table(std::span<const DetuningPoint> points);     // delta,mean_intensity

/// Keys in order: input, divisors, sigma_table, threshold, model, oracle_agrees.
nlohmann::ordered_json factor_report_json(const FactorReport& report);
void emit_factor_report(std::ostream& out, const FactorReport& report);

/// Writes content to path, throwing IoError with the system reason on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace slitfactor
