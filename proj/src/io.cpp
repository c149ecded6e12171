#include "slitfactor/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "slitfactor/error.hpp"

namespace slitfactor {

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void emit_csv(std::ostream& out, const CsvTable& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream out;
  emit_csv(out, table);
  return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

CsvTable parse_csv(std::istream& in) {
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("CSV input has no header");
  table.header = split_fields(line);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != table.header.size()) {
      throw InvalidInput("CSV record has " + std::to_string(fields.size()) + " fields, expected " +
                         std::to_string(table.header.size()));
    }
    std::vector<double> row;
    for (const auto& f : fields) {
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (f.empty() || *end != '\0') throw InvalidInput("malformed CSV number '" + f + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

CsvTable pattern_table(std::span<const PatternSample> samples) {
  CsvTable t{{"chi", "intensity"}, {}};
  for (const auto& s : samples) t.rows.push_back({s.chi, s.intensity});
  return t;
}

CsvTable scan_table(const ScanCurve& curve) {
  CsvTable t{{"n", "sigma"}, {}};
  for (const auto& p : curve.points) t.rows.push_back({static_cast<double>(p.order), p.sigma});
  return t;
}

CsvTable sweep_table(const SlitWidthCurve& curve) {
  CsvTable t{{"fill", "rescaled", "sigma_s"}, {}};
  for (const auto& p : curve.points) t.rows.push_back({p.fill, p.rescaled, p.sigma});
  return t;
}

CsvTable detuning_table(std::span<const DetuningPoint> points) {
  CsvTable t{{"delta", "mean_intensity"}, {}};
  for (const auto& p : points) t.rows.push_back({p.detuning, p.mean_intensity});
  return t;
}

nlohmann::ordered_json factor_report_json(const FactorReport& report) {
  nlohmann::ordered_json j;
  j["input"] = report.input;
  j["divisors"] = report.divisors;
  auto table = nlohmann::ordered_json::array();
  for (const auto& p : report.sigma_table) {
    nlohmann::ordered_json row;
    row["n"] = p.order;
    row["sigma"] = p.sigma;
    table.push_back(std::move(row));
  }
  j["sigma_table"] = std::move(table);
  j["threshold"] = report.threshold;
  j["model"] = std::string(to_string(report.model.model));
  j["oracle_agrees"] = report.oracle_agrees;
  return j;
}

void emit_factor_report(std::ostream& out, const FactorReport& report) {
  out << factor_report_json(report).dump(2) << '\n';
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open output file '" + path.string() + "': " + std::strerror(errno));
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("failed writing output file '" + path.string() + "': " + std::strerror(errno));
  }
}

}  // namespace slitfactor
