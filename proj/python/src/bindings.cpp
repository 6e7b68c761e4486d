#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "accel/classic.hpp"
#include "accel/cli.hpp"
#include "accel/expr.hpp"
#include "accel/transform.hpp"

namespace py = pybind11;
using namespace accel;

namespace {

Bindings to_bindings(const std::map<std::string, double>& params) { return {params.begin(), params.end()}; }

std::vector<std::vector<double>> matrix_rows(const Matrix& m) {
  std::vector<std::vector<double>> rows(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return rows;
}

LevinKind levin_kind(const std::string& kind) {
  if (kind == "t") return LevinKind::T;
  if (kind == "u") return LevinKind::U;
  fail(ErrorKind::InvalidParams, "levin kind must be 't' or 'u'");
}

TransformResult series_from_expr(const std::string& expr, const std::map<std::string, double>& params, std::size_t m,
                                 std::size_t r, std::size_t l, std::size_t power_offset) {
  const TermSequence terms = make_term_sequence(parse_expr(expr, ExprContext::Series), to_bindings(params));
  return d_transform(terms, TransformParams{m, r, ArithmeticIndex{l}, power_offset});
}

TransformResult integral_from_expr(const std::string& expr, const std::map<std::string, double>& params, std::size_t m,
                                   std::size_t r, const std::string& nodes, std::size_t power_offset, double abs_tol) {
  const IntegrandFamily f = make_integrand(parse_expr(expr, ExprContext::Integral), to_bindings(params));
  return D_transform(f, m, r, cli::parse_node_scheme(nodes), QuadratureConfig{abs_tol, 30}, power_offset);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Levin-Sidi d- and D-transformations and classical sequence accelerators";

  // Held for the lifetime of the interpreter.
  static const py::handle error_type = py::exception<Error>(m, "AccelError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = error_type(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<TransformResult>(m, "TransformResult")
      .def_readonly("value", &TransformResult::value)
      .def_property_readonly("betas", [](const TransformResult& r) { return matrix_rows(r.betas); })
      .def_readonly("condition_estimate", &TransformResult::condition_estimate)
      .def_readonly("residual", &TransformResult::residual)
      .def_readonly("nodes_used", &TransformResult::nodes_used)
      .def_property_readonly("ill_conditioned", [](const TransformResult& r) { return r.flags.ill_conditioned; })
      .def_property_readonly("degenerate", [](const TransformResult& r) { return r.flags.degenerate; })
      .def("__repr__", [](const TransformResult& r) {
        return "TransformResult(value=" + py::repr(py::float_(r.value)).cast<std::string>() + ")";
      });

  m.def(
      "d_transform",
      [](const std::vector<double>& terms, std::size_t m_, std::size_t r, std::size_t l, std::size_t power_offset) {
        return d_transform(std::span<const double>(terms), TransformParams{m_, r, ArithmeticIndex{l}, power_offset});
      },
      py::arg("terms"), py::arg("m"), py::arg("r"), py::arg("l") = 0, py::arg("power_offset") = 0);
  m.def(
      "d_transform",
      [](const std::function<double(std::size_t)>& term, std::size_t m_, std::size_t r, std::size_t l,
         std::size_t power_offset) {
        return d_transform(TermSequence(term), TransformParams{m_, r, ArithmeticIndex{l}, power_offset});
      },
      py::arg("terms"), py::arg("m"), py::arg("r"), py::arg("l") = 0, py::arg("power_offset") = 0,
      "Terms given as a callable n -> f(n).");
  m.def("d_transform_expr", &series_from_expr, py::arg("expr"), py::arg("params") = std::map<std::string, double>{},
        py::arg("m") = 1, py::arg("r") = 1, py::arg("l") = 0, py::arg("power_offset") = 0);
  m.def("D_transform_expr", &integral_from_expr, py::arg("expr"), py::arg("params") = std::map<std::string, double>{},
        py::arg("m") = 1, py::arg("r") = 1, py::arg("nodes") = "arith:l=0,h=1", py::arg("power_offset") = 0,
        py::arg("abs_tol") = QuadratureConfig{}.abs_tol);

  m.def("aitken", [](const std::vector<double>& seq) { return aitken(seq); }, py::arg("seq"));
  m.def(
      "wynn_epsilon",
      [](const std::vector<double>& seq) {
        const WynnResult w = wynn_epsilon(seq);
        return py::make_tuple(w.value, w.degenerate);
      },
      py::arg("seq"), "Returns (value, degenerate).");
  m.def(
      "euler_transform", [](const std::vector<double>& a, std::size_t depth) { return euler_transform(a, depth); },
      py::arg("magnitudes"), py::arg("depth"));
  m.def(
      "levin",
      [](const std::string& kind, const std::vector<double>& terms, std::size_t r, std::size_t l) {
        return levin(levin_kind(kind), std::span<const double>(terms), r, l);
      },
      py::arg("kind"), py::arg("terms"), py::arg("r"), py::arg("l") = 0);
  m.def(
      "exact_sum_recurrence",
      [](const std::vector<double>& coeffs, const std::vector<double>& terms, std::size_t N) {
        return exact_sum_recurrence(RecurrenceCoeffs{coeffs}, partial_sums(std::span<const double>(terms)), N);
      },
      py::arg("coeffs"), py::arg("terms"), py::arg("N"));

  m.def(
      "eval_constant", [](const std::string& text) { return eval_constant(text); }, py::arg("text"));
  m.def(
      "normalize_expr",
      [](const std::string& text, const std::string& context) {
        if (context != "series" && context != "integral") fail(ErrorKind::InvalidParams, "context must be 'series' or 'integral'");
        return print_expr(parse_expr(text, context == "series" ? ExprContext::Series : ExprContext::Integral));
      },
      py::arg("text"), py::arg("context") = "series");

  m.def(
      "reproduce_json", [](const std::string& table) { return cli::to_json(cli::run_reproduce(table)); },
      py::arg("table"));
}
