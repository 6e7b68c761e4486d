#include "accel/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "accel/classic.hpp"
#include "accel/error.hpp"
#include "accel/expr.hpp"

namespace accel::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::string_view what) {
  text = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    fail(ErrorKind::InvalidParams, "invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  text = trim(text);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorKind::InvalidParams, "invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string flag_of(const TransformResult& r) {
  if (r.flags.degenerate) return "degenerate";
  if (r.flags.ill_conditioned) return "ill_conditioned";
  return "ok";
}

ReportRow row_from_entry(const TableEntry& e, const std::optional<double>& reference) {
  ReportRow row;
  row.r = e.r;
  if (e.result) {
    row.value = e.result->value;
    row.cond_flag = flag_of(*e.result);
    if (reference) row.abs_error = std::abs(e.result->value - *reference);
  } else {
    row.cond_flag = "error";
    row.message = e.message;
  }
  return row;
}

void sort_rows(RunReport& report) {
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return a.r < b.r; });
}

// ---------------------------------------------------------------------------
// Reproduction configurations.

constexpr double kPi = std::numbers::pi;

struct SeriesColumn {
  std::string label;
  Bindings params;
  double reference;
};

std::vector<RunReport> reproduce_series(const std::string& table, const std::string& expr, std::size_t m,
                                        const std::vector<std::size_t>& r_values,
                                        const std::vector<SeriesColumn>& columns) {
  std::vector<RunReport> out;
  for (const auto& col : columns) {
    SeriesRequest req;
    req.expr = expr;
    req.params = col.params;
    req.m = m;
    req.r_values = r_values;
    req.reference = col.reference;
    RunReport rep = run_series(req);
    rep.label = table + ": " + col.label;
    rep.reference_note = table + " exact row";
    out.push_back(std::move(rep));
  }
  return out;
}

RunReport reproduce_bessel_product(const QuadratureConfig& cfg) {
  const auto start = Clock::now();
  const ExprAst ast = parse_expr("besselj0(t)*besselj1(t)/t", ExprContext::Integral);
  IntegrandFamily f = make_integrand(ast, {});
  // J1(t)/t -> 1/2 as t -> 0, so the integrand extends continuously with f(0) = 1/2.
  f.value = [inner = f.value](double t) { return t == 0.0 ? 0.5 : inner(t); };
  const std::vector<std::size_t> r_values{2, 4, 6, 8, 10};
  const NodeScheme scheme = ArithmeticReal{0.0, 1.0};
  constexpr std::size_t offset = 1;
  RunReport rep;
  rep.method = "D";
  rep.label = "table4: J0(t)J1(t)/t";
  rep.m = 3;
  rep.r_values = r_values;
  rep.scheme = format_node_scheme(scheme);
  rep.power_offset = offset;
  rep.reference = 2.0 / kPi;
  rep.reference_note = "table4 exact value 2/pi";
  for (const auto& e : D_table(f, rep.m, r_values, scheme, cfg, offset)) rep.rows.push_back(row_from_entry(e, rep.reference));
  sort_rows(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

}  // namespace

bool RunReport::has_error() const {
  return std::any_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.cond_flag == "error"; });
}

NodeScheme parse_node_scheme(std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    fail(ErrorKind::InvalidParams, "node scheme must look like kind:args, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);
  if (kind == "explicit") {
    Explicit e;
    for (auto part : split(args, ',')) e.nodes.push_back(parse_real(part, "explicit node"));
    return e;
  }
  std::vector<std::pair<std::string_view, std::string_view>> kv;
  for (auto part : split(args, ',')) {
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) fail(ErrorKind::InvalidParams, "expected key=value in node scheme, got '" + std::string(part) + "'");
    const std::string_view key = trim(part.substr(0, eq));
    for (const auto& [k, v] : kv) {
      if (k == key) fail(ErrorKind::InvalidParams, "duplicate key '" + std::string(key) + "' in node scheme");
    }
    kv.emplace_back(key, part.substr(eq + 1));
  }
  auto take = [&](std::initializer_list<std::string_view> allowed) {
    for (const auto& [k, v] : kv) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) {
        fail(ErrorKind::InvalidParams, "unknown key '" + std::string(k) + "' for node scheme '" + std::string(kind) + "'");
      }
    }
  };
  auto get = [&](std::string_view key) -> std::optional<std::string_view> {
    for (const auto& [k, v] : kv) {
      if (k == key) return v;
    }
    return std::nullopt;
  };
  auto require = [&](std::string_view key) {
    auto v = get(key);
    if (!v) fail(ErrorKind::InvalidParams, "node scheme '" + std::string(kind) + "' needs key '" + std::string(key) + "'");
    return *v;
  };
  if (kind == "arith") {
    take({"l", "h"});
    return ArithmeticReal{parse_real(require("l"), "l"), parse_real(require("h"), "h")};
  }
  if (kind == "arithidx") {
    take({"l"});
    return ArithmeticIndex{parse_count(require("l"), "l")};
  }
  if (kind == "geom") {
    take({"sigma"});
    return Geometric{parse_real(require("sigma"), "sigma")};
  }
  fail(ErrorKind::InvalidParams, "unknown node scheme '" + std::string(kind) + "'");
}

std::string format_node_scheme(const NodeScheme& scheme) {
  struct Visitor {
    std::string operator()(const ArithmeticIndex& s) const { return "arithidx:l=" + std::to_string(s.l); }
    std::string operator()(const ArithmeticReal& s) const { return "arith:l=" + fmt15(s.l) + ",h=" + fmt15(s.h); }
    std::string operator()(const Geometric& s) const { return "geom:sigma=" + fmt15(s.sigma); }
    std::string operator()(const Explicit& s) const {
      std::string out = "explicit:";
      for (std::size_t i = 0; i < s.nodes.size(); ++i) out += (i ? "," : "") + fmt15(s.nodes[i]);
      return out;
    }
  };
  return std::visit(Visitor{}, scheme);
}

std::vector<std::size_t> parse_r_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (auto part : split(text, ',')) {
    const std::size_t r = parse_count(part, "r");
    if (r < 1) fail(ErrorKind::InvalidParams, "r must be >= 1");
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<std::string, double> parse_param(std::string_view text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    fail(ErrorKind::InvalidParams, "parameter must look like name=value, got '" + std::string(text) + "'");
  }
  const std::string name(trim(text.substr(0, eq)));
  return {name, eval_constant(text.substr(eq + 1))};
}

std::vector<RunReport> run_reproduce(std::string_view table_id, const QuadratureConfig& cfg) {
  const std::vector<std::size_t> even_r{2, 4, 6, 8, 10};
  if (table_id == "table1") {
    return reproduce_series("table1", "legendre(n, x) / ((1 - 2*n)*(2*n + 3))", 2, even_r,
                            {{"x=-1.5", {{"x", -1.5}}, 0.559016994374947},
                             {"x=0.5", {{"x", 0.5}}, 0.25},
                             {"x=0.9", {{"x", 0.9}}, 0.111803398874}});
  }
  if (table_id == "table2") {
    return reproduce_series("table2", "cos((n + 1/2)*beta) * legendre(n, cos(phi))", 4, {2, 3, 4, 5, 6},
                            {{"beta=2pi/3,phi=pi/6", {{"beta", 2 * kPi / 3}, {"phi", kPi / 6}}, 0.0},
                             {"beta=pi/6,phi=2pi/3", {{"beta", kPi / 6}, {"phi", 2 * kPi / 3}}, 0.605000333706055}});
  }
  if (table_id == "table3") {
    std::vector<RunReport> out;
    for (const auto& [label, b, ref] : {std::tuple{"a=pi/2,b=0", 0.0, 0.5},
                                        std::tuple{"a=pi/2,b=pi/2", kPi / 2, 0.3992050585256}}) {
      IntegralRequest req;
      req.expr = "sin(a*t^2 + b*t)";
      req.params = {{"a", kPi / 2}, {"b", b}};
      req.m = 2;
      req.r_values = even_r;
      req.nodes = ArithmeticReal{0.2, 0.2};
      req.reference = ref;
      req.quadrature = cfg;
      RunReport rep = run_integral(req);
      rep.label = std::string("table3: ") + label;
      rep.reference_note = "table3 exact value";
      out.push_back(std::move(rep));
    }
    return out;
  }
  if (table_id == "table4") return {reproduce_bessel_product(cfg)};
  if (table_id == "table5") {
    IntegralRequest req;
    req.expr = "log(1+t)/(1+t^2)";
    req.m = 2;
    req.r_values = even_r;
    req.nodes = Geometric{0.2};
    req.power_offset = 1;
    req.reference = 1.460362116753;
    req.quadrature = cfg;
    RunReport rep = run_integral(req);
    rep.label = "table5: log(1+t)/(1+t^2)";
    rep.reference_note = "table5 exact value";
    return {rep};
  }
  fail(ErrorKind::InvalidParams, "unknown table '" + std::string(table_id) + "' (expected table1..table5)");
}

RunReport run_series(const SeriesRequest& req) {
  const auto start = Clock::now();
  const ExprAst ast = parse_expr(req.expr, ExprContext::Series);
  RunReport rep;
  rep.method = "d";
  rep.label = req.expr;
  rep.m = req.m;
  rep.r_values = req.r_values;
  rep.scheme = format_node_scheme(ArithmeticIndex{req.l});
  rep.power_offset = req.power_offset;
  rep.reference = req.reference;
  if (req.reference) rep.reference_note = "user supplied";
  const TermSequence terms = make_term_sequence(ast, req.params);
  for (const auto& e : d_table(terms, req.m, req.r_values, req.l, req.power_offset)) {
    rep.rows.push_back(row_from_entry(e, req.reference));
  }
  sort_rows(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

RunReport run_integral(const IntegralRequest& req) {
  const auto start = Clock::now();
  const ExprAst ast = parse_expr(req.expr, ExprContext::Integral);
  RunReport rep;
  rep.method = "D";
  rep.label = req.expr;
  rep.m = req.m;
  rep.r_values = req.r_values;
  rep.scheme = format_node_scheme(req.nodes);
  rep.power_offset = req.power_offset;
  rep.reference = req.reference;
  if (req.reference) rep.reference_note = "user supplied";
  const IntegrandFamily f = make_integrand(ast, req.params);
  for (const auto& e : D_table(f, req.m, req.r_values, req.nodes, req.quadrature, req.power_offset)) {
    rep.rows.push_back(row_from_entry(e, req.reference));
  }
  sort_rows(rep);
  rep.wall_time = seconds_since(start);
  return rep;
}

RunReport run_classic(const ClassicRequest& req) {
  const auto start = Clock::now();
  const ExprAst ast = parse_expr(req.expr, ExprContext::Series);
  const TermSequence terms = make_term_sequence(ast, req.params);
  RunReport rep;
  rep.method = req.method;
  rep.label = req.expr;
  rep.reference = req.reference;
  if (req.reference) rep.reference_note = "user supplied";

  ReportRow row;
  try {
    double value = 0.0;
    if (req.method == "aitken" || req.method == "wynn") {
      row.r = req.count;
      const PartialSums sums = partial_sums(terms, req.count);
      const std::span<const double> seq(sums.values.data() + 1, req.count);
      if (req.method == "aitken") {
        value = aitken(seq).back();
      } else {
        const WynnResult w = wynn_epsilon(seq);
        value = w.value;
        if (w.degenerate) row.cond_flag = "degenerate";
      }
    } else if (req.method == "levin-t" || req.method == "levin-u") {
      row.r = req.r;
      rep.scheme = format_node_scheme(ArithmeticIndex{req.l});
      value = levin(req.method == "levin-t" ? LevinKind::T : LevinKind::U, terms, req.r, req.l);
    } else if (req.method == "euler") {
      row.r = req.r;
      std::vector<double> a(req.r + 1);
      for (std::size_t n = 0; n < a.size(); ++n) a[n] = terms(n);
      value = euler_transform(a, req.r);
    } else {
      fail(ErrorKind::InvalidParams, "unknown classic method '" + req.method + "'");
    }
    row.value = value;
    if (req.reference) row.abs_error = std::abs(value - *req.reference);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidParams && row.r == 0) throw;
    row.cond_flag = "error";
    row.message = e.what();
  }
  rep.r_values = {row.r};
  rep.rows.push_back(std::move(row));
  rep.wall_time = seconds_since(start);
  return rep;
}

// ---------------------------------------------------------------------------
// Rendering

Format parse_format(std::string_view text) {
  if (text == "md" || text == "markdown") return Format::Markdown;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  fail(ErrorKind::InvalidParams, "unknown format '" + std::string(text) + "' (md, csv or json)");
}

std::string to_markdown(const std::vector<RunReport>& reports, bool quiet) {
  std::ostringstream out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const RunReport& rep = reports[i];
    if (i > 0) out << '\n';
    if (!quiet) {
      out << "### " << rep.label << '\n';
      out << "method " << rep.method;
      if (rep.m > 0) out << ", m = " << rep.m;
      if (!rep.scheme.empty()) out << ", nodes " << rep.scheme;
      if (rep.power_offset != 0) out << ", power offset " << rep.power_offset;
      if (rep.reference) out << ", reference " << fmt15(*rep.reference) << " (" << rep.reference_note << ")";
      out << "\n\n";
    }
    out << "| r | value | abs_error | cond_flag |\n|---|---|---|---|\n";
    for (const auto& row : rep.rows) {
      out << "| " << row.r << " | " << (row.value ? fmt15(*row.value) : "") << " | "
          << (row.abs_error ? fmt15(*row.abs_error) : "") << " | " << row.cond_flag << " |\n";
    }
    if (!quiet) {
      for (const auto& row : rep.rows) {
        if (!row.message.empty()) out << "\nr = " << row.r << ": " << row.message << '\n';
      }
    }
  }
  return out.str();
}

std::string to_csv(const std::vector<RunReport>& reports) {
  std::ostringstream out;
  for (const RunReport& rep : reports) {
    if (reports.size() > 1) out << "# " << rep.label << '\n';
    out << "r,value,abs_error,cond_flag\n";
    for (const auto& row : rep.rows) {
      out << row.r << ',' << (row.value ? fmt15(*row.value) : "") << ','
          << (row.abs_error ? fmt15(*row.abs_error) : "") << ',' << row.cond_flag << '\n';
    }
  }
  return out.str();
}

namespace {

nlohmann::json optional_number(const std::optional<double>& v) {
  if (v && std::isfinite(*v)) return *v;
  return nullptr;
}

std::optional<double> read_optional(const nlohmann::json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

}  // namespace

std::string to_json(const std::vector<RunReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const RunReport& rep : reports) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : rep.rows) {
      rows.push_back({{"r", row.r},
                      {"value", optional_number(row.value)},
                      {"abs_error", optional_number(row.abs_error)},
                      {"cond_flag", row.cond_flag},
                      {"message", row.message}});
    }
    arr.push_back({{"method", rep.method},
                   {"label", rep.label},
                   {"m", rep.m},
                   {"r_values", rep.r_values},
                   {"scheme", rep.scheme},
                   {"power_offset", rep.power_offset},
                   {"reference", optional_number(rep.reference)},
                   {"reference_note", rep.reference_note},
                   {"rows", rows},
                   {"wall_time", rep.wall_time}});
  }
  return arr.dump(2) + "\n";
}

std::vector<RunReport> reports_from_json(std::string_view text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  std::vector<RunReport> out;
  for (const auto& j : arr) {
    RunReport rep;
    rep.method = j.at("method").get<std::string>();
    rep.label = j.at("label").get<std::string>();
    rep.m = j.at("m").get<std::size_t>();
    rep.r_values = j.at("r_values").get<std::vector<std::size_t>>();
    rep.scheme = j.at("scheme").get<std::string>();
    rep.power_offset = j.at("power_offset").get<std::size_t>();
    rep.reference = read_optional(j.at("reference"));
    rep.reference_note = j.at("reference_note").get<std::string>();
    rep.wall_time = j.at("wall_time").get<double>();
    for (const auto& jr : j.at("rows")) {
      ReportRow row;
      row.r = jr.at("r").get<std::size_t>();
      row.value = read_optional(jr.at("value"));
      row.abs_error = read_optional(jr.at("abs_error"));
      row.cond_flag = jr.at("cond_flag").get<std::string>();
      row.message = jr.at("message").get<std::string>();
      rep.rows.push_back(std::move(row));
    }
    out.push_back(std::move(rep));
  }
  return out;
}

std::string render(const std::vector<RunReport>& reports, Format format, bool quiet) {
  switch (format) {
    case Format::Markdown: return to_markdown(reports, quiet);
    case Format::Csv: return to_csv(reports);
    case Format::Json: return to_json(reports);
  }
  return {};
}

QuadratureConfig quadrature_from_env() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("ACCEL_QUAD_TOL"); env != nullptr && *env != '\0') {
    cfg.abs_tol = parse_real(env, "ACCEL_QUAD_TOL");
    if (!(cfg.abs_tol > 0.0)) fail(ErrorKind::InvalidParams, "ACCEL_QUAD_TOL must be > 0");
  }
  return cfg;
}

}  // namespace accel::cli
