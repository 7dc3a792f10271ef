#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace huygens {

/// One compared quantity. abs_err = |computed - reference|; the reference's
/// origin (closed form, oracle, cross-method) is named in reference_source.
struct ReportRow {
  std::map<std::string, double> params;
  std::string quantity;  // what is being compared; written as quantity=<name> among params
  double computed = 0.0;
  double reference = 0.0;
  std::string reference_source;
  double abs_err = 0.0;
  double rel_err = 0.0;
  std::string case_tag;
  double gamma = 0.0;
  double tolerance = 0.0;
  bool relative = false;  // tolerance applies to rel_err instead of abs_err
  bool pass = false;
};

/// Fills abs_err/rel_err and pass from computed, reference and tolerance.
ReportRow make_row(std::map<std::string, double> params, double computed, double reference,
                   std::string reference_source, double tolerance, bool relative = false,
                   std::string case_tag = "", double gamma = 0.0);

struct ExperimentReport {
  std::string experiment;
  std::map<std::string, double> inputs;
  std::map<std::string, std::string> settings;  // profile, quadrature family, ...
  std::vector<ReportRow> rows;
  double wall_time_s = 0.0;

  bool pass() const;
};

enum class ReportFormat { Csv, Json };

ReportFormat parse_report_format(std::string_view name);

/// %.17g: round-trips every double exactly.
std::string format_number(double v);

/// Columns: experiment,params,computed,reference,abs_err,rel_err,case_tag,gamma,pass.
/// `params` is the row's key=value pairs (plus quantity=<name>) joined by ';'
/// in sorted key order.
/// Wall time is left out so identical runs give identical bytes.
std::string report_to_csv(const ExperimentReport& report);
std::string report_to_json(const ExperimentReport& report);

/// Writes the report; std::runtime_error naming the path on I/O failure.
void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace huygens
