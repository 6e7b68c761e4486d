#pragma once

// Orchestration behind the `accel` command-line tool: table reproduction,
// ad-hoc runs on DSL expressions, and report rendering.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "accel/realkit.hpp"
#include "accel/transform.hpp"

namespace accel::cli {

struct ReportRow {
  std::size_t r = 0;
  std::optional<double> value;
  std::optional<double> abs_error;  // present iff the report has a reference
  std::string cond_flag = "ok";     // ok | ill_conditioned | degenerate | error
  std::string message;

  bool operator==(const ReportRow&) const = default;
};

struct RunReport {
  std::string method;  // d, D, aitken, wynn, levin-t, levin-u, euler
  std::string label;   // column description, e.g. "x=-1.5"
  std::size_t m = 0;
  std::vector<std::size_t> r_values;
  std::string scheme;
  std::size_t power_offset = 0;
  std::optional<double> reference;
  std::string reference_note;
  std::vector<ReportRow> rows;  // sorted by r
  double wall_time = 0.0;

  bool has_error() const;
  bool operator==(const RunReport&) const = default;
};

/// "arith:l=<real>,h=<real>", "arithidx:l=<int>", "geom:sigma=<real>",
/// "explicit:<v1,v2,...>". Unknown keys are rejected.
NodeScheme parse_node_scheme(std::string_view text);
std::string format_node_scheme(const NodeScheme& scheme);

/// "2,4,6" -> {2, 4, 6}
std::vector<std::size_t> parse_r_list(std::string_view text);

/// "name=<constant expression>", e.g. "beta=2*pi/3".
std::pair<std::string, double> parse_param(std::string_view text);

std::vector<RunReport> run_reproduce(std::string_view table_id, const QuadratureConfig& cfg = {});

struct SeriesRequest {
  std::string expr;
  Bindings params;
  std::size_t m = 1;
  std::vector<std::size_t> r_values{1};
  std::size_t l = 0;
  std::size_t power_offset = 0;
  std::optional<double> reference;
};
RunReport run_series(const SeriesRequest& req);

struct IntegralRequest {
  std::string expr;
  Bindings params;
  std::size_t m = 1;
  std::vector<std::size_t> r_values{1};
  NodeScheme nodes = ArithmeticReal{0.0, 1.0};
  std::size_t power_offset = 0;
  std::optional<double> reference;
  QuadratureConfig quadrature;
};
RunReport run_integral(const IntegralRequest& req);

struct ClassicRequest {
  std::string method;  // aitken | wynn | levin-t | levin-u | euler
  std::string expr;
  Bindings params;
  std::size_t count = 5;  // partial sums used by aitken / wynn
  std::size_t r = 8;      // levin order or euler depth
  std::size_t l = 0;
  std::optional<double> reference;
};
RunReport run_classic(const ClassicRequest& req);

enum class Format { Markdown, Csv, Json };
Format parse_format(std::string_view text);

std::string to_markdown(const std::vector<RunReport>& reports, bool quiet = false);
std::string to_csv(const std::vector<RunReport>& reports);
std::string to_json(const std::vector<RunReport>& reports);
std::vector<RunReport> reports_from_json(std::string_view text);

std::string render(const std::vector<RunReport>& reports, Format format, bool quiet = false);

/// Quadrature config with abs_tol taken from ACCEL_QUAD_TOL when set.
QuadratureConfig quadrature_from_env();

}  // namespace accel::cli
