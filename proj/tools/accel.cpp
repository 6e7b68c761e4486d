#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accel/cli.hpp"
#include "accel/error.hpp"

namespace {

struct Common {
  std::string expr;
  std::vector<std::string> params;
  std::size_t m = 1;
  std::string r_list = "1";
  std::optional<double> reference;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--expr", c.expr, "term or integrand expression")->required();
  cmd->add_option("--param", c.params, "parameter binding name=value (repeatable)");
  cmd->add_option("--reference", c.reference, "reference value for abs_error");
}

accel::Bindings bindings_of(const std::vector<std::string>& params) {
  accel::Bindings out;
  for (const auto& p : params) {
    auto [name, value] = accel::cli::parse_param(p);
    out[name] = value;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Levin-Sidi convergence acceleration for series and integrals"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "md";
  bool quiet = false;
  app.add_option("--format", format, "md, csv or json")->check(CLI::IsMember({"md", "markdown", "csv", "json"}));
  app.add_flag("--quiet", quiet, "tables only");

  std::string table;
  auto* reproduce = app.add_subcommand("reproduce", "rerun one of the reference tables");
  reproduce->add_option("table", table, "table1 .. table5")->required();

  Common series_args;
  std::size_t series_l = 0;
  std::size_t series_offset = 0;
  auto* series = app.add_subcommand("series", "d-transformation of an infinite series");
  add_common(series, series_args);
  series->add_option("--m", series_args.m, "order of the difference-equation class");
  series->add_option("--r", series_args.r_list, "comma-separated r values");
  series->add_option("--l", series_l, "index offset");
  series->add_option("--power-offset", series_offset, "basis power shift");

  Common integral_args;
  std::string nodes = "arith:l=0,h=1";
  std::size_t integral_offset = 0;
  auto* integral = app.add_subcommand("integral", "D-transformation of an integral over [0, inf)");
  add_common(integral, integral_args);
  integral->add_option("--m", integral_args.m, "order of the differential-equation class");
  integral->add_option("--r", integral_args.r_list, "comma-separated r values");
  integral->add_option("--nodes", nodes, "arith:l=,h= | arithidx:l= | geom:sigma= | explicit:v1,...");
  integral->add_option("--power-offset", integral_offset, "basis power shift");

  Common classic_args;
  accel::cli::ClassicRequest classic_req;
  auto* classic = app.add_subcommand("classic", "classical baseline accelerators");
  add_common(classic, classic_args);
  classic->add_option("--method", classic_req.method, "aitken | wynn | levin-t | levin-u | euler")
      ->required()
      ->check(CLI::IsMember({"aitken", "wynn", "levin-t", "levin-u", "euler"}));
  classic->add_option("--count", classic_req.count, "partial sums for aitken / wynn");
  classic->add_option("--r", classic_req.r, "levin order or euler depth");
  classic->add_option("--l", classic_req.l, "levin start index");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<accel::cli::RunReport> reports;
    if (*reproduce) {
      reports = accel::cli::run_reproduce(table, accel::cli::quadrature_from_env());
    } else if (*series) {
      accel::cli::SeriesRequest req;
      req.expr = series_args.expr;
      req.params = bindings_of(series_args.params);
      req.m = series_args.m;
      req.r_values = accel::cli::parse_r_list(series_args.r_list);
      req.l = series_l;
      req.power_offset = series_offset;
      req.reference = series_args.reference;
      reports.push_back(accel::cli::run_series(req));
    } else if (*integral) {
      accel::cli::IntegralRequest req;
      req.expr = integral_args.expr;
      req.params = bindings_of(integral_args.params);
      req.m = integral_args.m;
      req.r_values = accel::cli::parse_r_list(integral_args.r_list);
      req.nodes = accel::cli::parse_node_scheme(nodes);
      req.power_offset = integral_offset;
      req.reference = integral_args.reference;
      req.quadrature = accel::cli::quadrature_from_env();
      reports.push_back(accel::cli::run_integral(req));
    } else {
      classic_req.expr = classic_args.expr;
      classic_req.params = bindings_of(classic_args.params);
      classic_req.reference = classic_args.reference;
      reports.push_back(accel::cli::run_classic(classic_req));
    }
    std::cout << accel::cli::render(reports, accel::cli::parse_format(format), quiet);
    for (const auto& rep : reports) {
      if (rep.has_error()) return 2;
    }
    return 0;
  } catch (const accel::ParseError& e) {
    std::cerr << "accel: " << to_string(e.kind()) << " at offset " << e.offset() << ": " << e.what() << '\n';
    return 2;
  } catch (const accel::Error& e) {
    std::cerr << "accel: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return 2;
  }
}
