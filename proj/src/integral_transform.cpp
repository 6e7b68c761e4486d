#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "accel/transform.hpp"

namespace accel {

namespace {

// 7-point Gauss / 15-point Kronrod abscissae and weights (QUADPACK qk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a, b;
  double value, error, resabs;
  int depth;

  bool operator<(const Panel& o) const { return error < o.error; }
};

double sample(const std::function<double(double)>& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) fail(ErrorKind::DomainError, "integrand is not finite at t = " + std::to_string(t));
  return v;
}

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b, int depth) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = sample(f, center);
  double resk = fc * kWgk[7];
  double resg = fc * kWg[3];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = sample(f, center - dx);
    const double f2 = sample(f, center + dx);
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return Panel{a, b, resk * half, std::abs((resk - resg) * half), resabs * std::abs(half), depth};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  if (!(cfg.abs_tol > 0.0)) fail(ErrorKind::InvalidParams, "quadrature: abs_tol must be > 0");
  if (!(b >= a)) fail(ErrorKind::InvalidParams, "quadrature: interval must satisfy a <= b");
  QuadratureResult out;
  if (a == b) return out;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  std::priority_queue<Panel> work;
  std::vector<Panel> done;  // panels already at the rounding floor
  work.push(gauss_kronrod(f, a, b, 0));
  out.evaluations = 15;
  double total_err = work.top().error;
  double total_abs = work.top().resabs;
  while (!work.empty() && total_err > std::max(cfg.abs_tol, 50.0 * eps * total_abs)) {
    const Panel worst = work.top();
    work.pop();
    if (worst.error <= 50.0 * eps * worst.resabs) {
      done.push_back(worst);
      continue;
    }
    if (worst.depth >= cfg.max_depth) {
      fail(ErrorKind::QuadratureNoConvergence, "quadrature: max depth " + std::to_string(cfg.max_depth) +
                                                   " reached on [" + std::to_string(worst.a) + ", " +
                                                   std::to_string(worst.b) + "]");
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Panel right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total_err += left.error + right.error - worst.error;
    total_abs += left.resabs + right.resabs - worst.resabs;
    work.push(left);
    work.push(right);
    out.evaluations += 30;
  }

  CompensatedSum value;
  double err = 0.0;
  while (!work.empty()) {
    value += work.top().value;
    err += work.top().error;
    work.pop();
  }
  for (const Panel& p : done) {
    value += p.value;
    err += p.error;
  }
  out.value = value.value();
  out.error = err;
  return out;
}

std::vector<double> cumulative_integrals(const IntegrandFamily& f, const std::vector<double>& nodes,
                                         const QuadratureConfig& cfg) {
  std::vector<double> out;
  out.reserve(nodes.size());
  CompensatedSum acc;
  double left = f.domain_start;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (!(nodes[j] >= left) || (j > 0 && !(nodes[j] > nodes[j - 1]))) {
      fail(ErrorKind::InvalidParams, "cumulative_integrals: nodes must be increasing and >= domain_start");
    }
    acc += integrate_adaptive(f.value, left, nodes[j], cfg).value;
    out.push_back(acc.value());
    left = nodes[j];
  }
  return out;
}

IntegrandFamily make_integrand(const ExprAst& ast, Bindings bindings) {
  if (ast.context() != ExprContext::Integral) fail(ErrorKind::ContextError, "integrand must use integral context");
  for (const auto& name : ast.parameters()) {
    if (!bindings.contains(name)) fail(ErrorKind::UnboundParameter, "parameter '" + name + "' is not bound");
  }
  auto session = std::make_shared<EvalSession>(ast);
  auto shared = std::make_shared<const Bindings>(std::move(bindings));
  IntegrandFamily fam;
  fam.value = [session, shared](double t) { return session->eval(*shared, t); };
  fam.jet_at = [session, shared](double t, std::size_t order) { return session->eval_jet(*shared, t, order); };
  return fam;
}

TransformResult D_transform(const IntegrandFamily& f, std::size_t m, std::size_t r, const NodeScheme& scheme,
                            const QuadratureConfig& cfg, std::size_t power_offset) {
  if (m < 1 || r < 1) fail(ErrorKind::InvalidParams, "D_transform: m and r must be >= 1");
  if (m - 1 > kMaxJetOrder) fail(ErrorKind::InvalidParams, "D_transform: m must be <= " + std::to_string(kMaxJetOrder + 1));
  const std::size_t equations = m * r + 1;
  const std::vector<double> nodes = make_nodes(scheme, equations);
  const std::vector<double> partial = cumulative_integrals(f, nodes, cfg);

  TransformResult out;
  out.nodes_used = nodes;
  Matrix a(equations, equations);
  std::vector<double> rhs(equations);
  for (std::size_t j = 0; j < equations; ++j) {
    const double x = nodes[j];
    const Jet jet = f.jet_at(x, m - 1);
    rhs[j] = partial[j];
    a(j, 0) = 1.0;
    if (jet.value() == 0.0) out.flags.degenerate = true;
    for (std::size_t k = 0; k < m; ++k) {
      const double deriv = jet.derivative(k);
      if (!std::isfinite(deriv)) fail(ErrorKind::DomainError, "D_transform: non-finite derivative");
      for (std::size_t i = 0; i < r; ++i) {
        a(j, 1 + k * r + i) = -deriv * std::pow(x, static_cast<double>(k + power_offset) - static_cast<double>(i));
      }
    }
  }

  const SolveReport sol = solve_linear_basic(a, rhs, 0);
  out.value = sol.solution[0];
  out.betas = Matrix(m, r);
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < r; ++i) out.betas(k, i) = sol.solution[1 + k * r + i];
  }
  out.condition_estimate = sol.condition_estimate;
  out.residual = sol.residual_inf_norm;
  out.flags.ill_conditioned = sol.ill_conditioned;
  return out;
}

std::vector<TableEntry> D_table(const IntegrandFamily& f, std::size_t m, const std::vector<std::size_t>& r_values,
                                const NodeScheme& scheme, const QuadratureConfig& cfg, std::size_t power_offset) {
  std::vector<TableEntry> out;
  out.reserve(r_values.size());
  for (std::size_t r : r_values) {
    TableEntry entry;
    entry.r = r;
    try {
      entry.result = D_transform(f, m, r, scheme, cfg, power_offset);
    } catch (const Error& e) {
      entry.error = e.kind();
      entry.message = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace accel
