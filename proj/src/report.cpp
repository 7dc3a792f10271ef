#include "huygens/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "huygens/errors.hpp"

namespace huygens {

ReportRow make_row(std::map<std::string, double> params, double computed, double reference,
                   std::string reference_source, double tolerance, bool relative,
                   std::string case_tag, double gamma) {
  ReportRow row;
  row.params = std::move(params);
  row.computed = computed;
  row.reference = reference;
  row.reference_source = std::move(reference_source);
  row.abs_err = std::abs(computed - reference);
  row.rel_err = reference != 0.0 ? row.abs_err / std::abs(reference) : row.abs_err;
  row.tolerance = tolerance;
  row.relative = relative;
  row.case_tag = std::move(case_tag);
  row.gamma = gamma;
  row.pass = (relative ? row.rel_err : row.abs_err) <= tolerance;
  return row;
}

bool ExperimentReport::pass() const {
  return !rows.empty() &&
         std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass; });
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  throw ParameterError("unknown report format '" + std::string(name) + "' (csv|json)");
}

std::string format_number(double v) { return fmt::format("{:.17g}", v); }

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "experiment,params,computed,reference,abs_err,rel_err,case_tag,gamma,pass\n";
  for (const ReportRow& row : report.rows) {
    std::map<std::string, std::string> pairs;
    for (const auto& [key, value] : row.params) pairs[key] = format_number(value);
    if (!row.quantity.empty()) pairs["quantity"] = row.quantity;
    std::string params;
    for (const auto& [key, value] : pairs) {
      if (!params.empty()) params += ';';
      params += key + '=' + value;
    }
    out << report.experiment << ',' << params << ',' << format_number(row.computed) << ','
        << format_number(row.reference) << ',' << format_number(row.abs_err) << ','
        << format_number(row.rel_err) << ',' << row.case_tag << ','
        << format_number(row.gamma) << ',' << (row.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

// nlohmann writes the shortest representation that parses back to the same
// double, so JSON values round-trip bit-for-bit like the %.17g CSV fields.
nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return format_number(v);
  return v;
}

}  // namespace

std::string report_to_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["experiment"] = report.experiment;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.inputs) inputs[k] = number(v);
  j["inputs"] = inputs;
  j["settings"] = report.settings;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReportRow& row : report.rows) {
    nlohmann::ordered_json r;
    r["quantity"] = row.quantity;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : row.params) params[k] = number(v);
    r["params"] = params;
    r["computed"] = number(row.computed);
    r["reference"] = number(row.reference);
    r["reference_source"] = row.reference_source;
    r["abs_err"] = number(row.abs_err);
    r["rel_err"] = number(row.rel_err);
    r["case_tag"] = row.case_tag;
    r["gamma"] = number(row.gamma);
    r["tolerance"] = number(row.tolerance);
    r["tolerance_kind"] = row.relative ? "relative" : "absolute";
    r["pass"] = row.pass;
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  j["pass"] = report.pass();
  j["wall_time_s"] = number(report.wall_time_s);
  return j.dump(2) + "\n";
}

void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open report file '" + path.string() + "'");
  file << (format == ReportFormat::Csv ? report_to_csv(report) : report_to_json(report));
  file.flush();
  if (!file) throw std::runtime_error("failed writing report file '" + path.string() + "'");
}

}  // namespace huygens
