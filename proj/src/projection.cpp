#include "perispline/projection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace perispline {

namespace {

void legendre_pair(int n, double x, double& pn, double& dpn) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  dpn = n * (x * p1 - p0) / (x * x - 1.0);
}

int resolve_nodes(const SplineSpace& space, int nodes_per_cell, const char* who) {
  if (nodes_per_cell == 0) return default_nodes_per_cell(space.r);
  if (nodes_per_cell < space.r || nodes_per_cell > 64)
    throw std::invalid_argument(std::string(who) + ": nodes_per_cell must lie in [r, 64]");
  return nodes_per_cell;
}

void check_periodic(const TestFunction& u, const char* who) {
  if (!u.value) throw std::invalid_argument(std::string(who) + ": test function has no value callable");
  if (std::abs(u.value(0.0) - u.value(1.0)) > 1e-10)
    throw std::invalid_argument(std::string(who) + ": test function is not 1-periodic");
}

double deriv_at(const TestFunction& u, int l, double x) {
  if (l == 0) return u.value(x);
  if (!u.deriv)
    throw std::invalid_argument("stability report: test function has no derivative callable");
  return u.deriv(l, x);
}

}  // namespace

GaussRule gauss_legendre(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("gauss_legendre: order must lie in [1, 64]");
  GaussRule rule;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pn = 0.0, dpn = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre_pair(n, x, pn, dpn);
      const double dx = pn / dpn;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pair(n, x, pn, dpn);
    const double w = 2.0 / ((1.0 - x * x) * dpn * dpn);
    // i = 0 is the largest root; store ascending with the mirrored partner.
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) {
    double pn = 0.0, dpn = 0.0;
    legendre_pair(n, 0.0, pn, dpn);
    rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    rule.weights[static_cast<std::size_t>(n / 2)] = 2.0 / (dpn * dpn);
  }
  return rule;
}

std::vector<double> rhs_moments(const SplineSpace& space, const TestFunction& u,
                                int nodes_per_cell) {
  check_periodic(u, "rhs_moments");
  const int npc = resolve_nodes(space, nodes_per_cell, "rhs_moments");
  const GaussRule rule = gauss_legendre(npc);
  const long N = space.N;
  const double h = space.h();

  std::vector<double> b(static_cast<std::size_t>(N), 0.0);
  double vals[kMaxOrder + 1];
  for (long c = 0; c < N; ++c) {
    for (int k = 0; k < npc; ++k) {
      const double x = (static_cast<double>(c) + 0.5 * (rule.nodes[static_cast<std::size_t>(k)] + 1.0)) * h;
      const double w = 0.5 * h * rule.weights[static_cast<std::size_t>(k)];
      const double ux = u.value(x);
      const long j0 = basis_support(space, x, vals);
      for (int i = 0; i < space.r; ++i) {
        const std::size_t idx = static_cast<std::size_t>(mod_index(j0 + i, N)) - 1;
        b[idx] += w * ux * vals[i];
      }
    }
  }
  return b;
}

ProjectionResult project(const SplineSpace& space, const TestFunction& u, int nodes_per_cell) {
  std::vector<double> b = rhs_moments(space, u, nodes_per_cell);
  std::vector<double> rhs(b.size());
  const double invh = static_cast<double>(space.N);
  for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = b[i] * invh;
  std::vector<double> coeffs = solve(make_gram_matrix(space), rhs);
  return ProjectionResult{make_spline(space, std::move(coeffs)), std::move(b)};
}

PeriodicSpline derivative_power(const PeriodicSpline& s, int l) {
  if (l < 0 || l > s.space.r - 1)
    throw std::invalid_argument("derivative_power: need 0 <= l <= r-1");
  PeriodicSpline out = s;
  for (int i = 0; i < l; ++i) out = spline_derivative(out);
  return out;
}

std::vector<double> derivative_coeffs_binomial(const PeriodicSpline& s, int l) {
  if (l < 0 || l > s.space.r - 1)
    throw std::invalid_argument("derivative_coeffs_binomial: need 0 <= l <= r-1");
  const std::size_t n = s.coeffs.size();
  std::vector<double> out(n, 0.0);
  double binom = 1.0;
  double scale = std::pow(static_cast<double>(s.space.N), l);
  for (int m = 0; m <= l; ++m) {
    const std::vector<double> shifted = shift_apply(-m, s.coeffs);
    const double c = ((m % 2 == 0) ? 1.0 : -1.0) * binom * scale;
    for (std::size_t i = 0; i < n; ++i) out[i] += c * shifted[i];
    binom = binom * (l - m) / (m + 1.0);
  }
  return out;
}

double sobolev_seminorm(const PeriodicSpline& s, int l) {
  if (l < 0 || l > s.space.r - 1)
    throw std::invalid_argument("sobolev_seminorm: need 0 <= l <= r-1");
  const PeriodicSpline ds = derivative_power(s, l);
  const CirculantMatrix G = make_gram_matrix(ds.space);
  const std::vector<double> gw = matvec_direct(G, ds.coeffs);
  double quad = 0.0;
  for (std::size_t i = 0; i < gw.size(); ++i) quad += gw[i] * ds.coeffs[i];
  quad *= ds.space.h();
  return std::sqrt(std::max(quad, 0.0));
}

double sup_norm(const PeriodicSpline& s, int samples_per_cell) {
  if (samples_per_cell < 8)
    throw std::invalid_argument("sup_norm: samples_per_cell must be >= 8");
  const long total = static_cast<long>(s.space.N) * samples_per_cell;
  double m = 0.0;
  for (long k = 0; k < total; ++k)
    m = std::max(m, std::abs(spline_eval(s, static_cast<double>(k) / static_cast<double>(total))));
  return m;
}

double l2_error(const TestFunction& u, const PeriodicSpline& s, double shift,
                int nodes_per_cell) {
  check_periodic(u, "l2_error");
  const int npc = resolve_nodes(s.space, nodes_per_cell, "l2_error");
  const GaussRule rule = gauss_legendre(npc);
  const long N = s.space.N;
  const double h = s.space.h();
  double acc = 0.0;
  for (long c = 0; c < N; ++c) {
    for (int k = 0; k < npc; ++k) {
      const double y = (static_cast<double>(c) + 0.5 * (rule.nodes[static_cast<std::size_t>(k)] + 1.0)) * h;
      const double w = 0.5 * h * rule.weights[static_cast<std::size_t>(k)];
      const double d = u.value(reduce_unit(y - shift)) - spline_eval(s, y);
      acc += w * d * d;
    }
  }
  return std::sqrt(std::max(acc, 0.0));
}

double function_l2_norm(const TestFunction& u, int l, const SplineSpace& space,
                        int nodes_per_cell) {
  check_periodic(u, "function_l2_norm");
  const int npc = resolve_nodes(space, nodes_per_cell, "function_l2_norm");
  const GaussRule rule = gauss_legendre(npc);
  const long N = space.N;
  const double h = space.h();
  double acc = 0.0;
  for (long c = 0; c < N; ++c) {
    for (int k = 0; k < npc; ++k) {
      const double x = (static_cast<double>(c) + 0.5 * (rule.nodes[static_cast<std::size_t>(k)] + 1.0)) * h;
      const double v = deriv_at(u, l, x);
      acc += 0.5 * h * rule.weights[static_cast<std::size_t>(k)] * v * v;
    }
  }
  return std::sqrt(std::max(acc, 0.0));
}

double function_sup_norm(const TestFunction& u, int l, const SplineSpace& space,
                         int samples_per_cell) {
  if (samples_per_cell < 8)
    throw std::invalid_argument("function_sup_norm: samples_per_cell must be >= 8");
  const long total = static_cast<long>(space.N) * samples_per_cell;
  double m = 0.0;
  for (long k = 0; k < total; ++k)
    m = std::max(m, std::abs(deriv_at(u, l, static_cast<double>(k) / static_cast<double>(total))));
  return m;
}

StabilityReport spline_stability_report(const PeriodicSpline& approx, const TestFunction& u,
                                        int l, int nodes_per_cell, int samples_per_cell) {
  if (l < 0 || l > approx.space.r - 1)
    throw std::invalid_argument("stability report: need 0 <= l <= r-1");
  StabilityReport rep;
  rep.l = l;
  rep.num_l2 = sobolev_seminorm(approx, l);
  rep.num_sup = sup_norm(derivative_power(approx, l), samples_per_cell);
  rep.den_l2 = function_l2_norm(u, l, approx.space, nodes_per_cell);
  rep.den_sup = function_sup_norm(u, l, approx.space, samples_per_cell);
  rep.applicable = !(rep.den_l2 == 0.0 && rep.den_sup == 0.0);
  if (rep.applicable) {
    rep.ratio_l2 = rep.num_l2 / rep.den_l2;
    rep.ratio_sup = rep.num_sup / rep.den_sup;
  } else {
    rep.ratio_l2 = std::numeric_limits<double>::quiet_NaN();
    rep.ratio_sup = std::numeric_limits<double>::quiet_NaN();
  }
  return rep;
}

StabilityReport stability_report(const SplineSpace& space, const TestFunction& u, int l,
                                 int nodes_per_cell, int samples_per_cell) {
  const ProjectionResult P = project(space, u, nodes_per_cell);
  return spline_stability_report(P.spline, u, l, nodes_per_cell, samples_per_cell);
}

double inverse_inequality_constant(const SplineSpace& space) {
  if (space.r < 2)
    throw std::invalid_argument("inverse_inequality_constant: requires order >= 2");
  const std::vector<double> gr = gram_stencil(space.r);
  const std::vector<double> gr1 = gram_stencil(space.r - 1);
  double best = 0.0;
  for (long m = 1; m <= space.N; ++m) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(space.N);
    const double s = std::sin(0.5 * theta);
    const double ratio = 4.0 * s * s * symbol_from_stencil(gr1, theta) / symbol_from_stencil(gr, theta);
    best = std::max(best, ratio);
  }
  return std::sqrt(best);
}

}  // namespace perispline
