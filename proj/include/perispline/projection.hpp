#pragma once

#include <functional>
#include <string>
#include <vector>

#include "perispline/bspline.hpp"
#include "perispline/gram.hpp"

namespace perispline {

/// A 1-periodic test function with derivatives: deriv(0, x) == value(x).
/// deriv may be left empty for value-only operations (projection, errors);
/// stability reports require it.
struct TestFunction {
  std::string label;
  std::function<double(double)> value;
  std::function<double(int, double)> deriv;
};

/// Gauss-Legendre rule on [-1, 1], nodes ascending. 1 <= n <= 64.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

inline int default_nodes_per_cell(int r) { return std::max(2 * r, 10); }

/// Moments b_i = (u, Phi_i) by composite per-cell Gauss quadrature.
/// nodes_per_cell = 0 picks the default max(2r, 10); otherwise it must lie
/// in [r, 64]. u must be 1-periodic: |u(0) - u(1)| <= 1e-10 is enforced.
std::vector<double> rhs_moments(const SplineSpace& space, const TestFunction& u,
                                int nodes_per_cell = 0);

/// L2 projection P_h u: solves h G c = b with b = rhs_moments.
struct ProjectionResult {
  PeriodicSpline spline;
  std::vector<double> moments;
};
ProjectionResult project(const SplineSpace& space, const TestFunction& u,
                         int nodes_per_cell = 0);

/// l-fold derivative via repeated exact differentiation; 0 <= l <= r-1.
PeriodicSpline derivative_power(const PeriodicSpline& s, int l);

/// Same coefficients through the binomial expansion
/// W = h^{-l} sum_m binom(l, m) (-1)^m P^{-m} V (order drops to r-l).
std::vector<double> derivative_coeffs_binomial(const PeriodicSpline& s, int l);

/// |s|_{H^l} = ||d^l s / dx^l||_{L2} through the exact Gram form of order r-l:
/// ||v||^2 = h <G W, W>. 0 <= l <= r-1.
double sobolev_seminorm(const PeriodicSpline& s, int l);

/// Max of |s| over a uniform grid of samples_per_cell points per cell
/// (>= 8; grid includes the mesh points).
double sup_norm(const PeriodicSpline& s, int samples_per_cell = 32);

/// || u(. - shift) - s ||_{L2}, integrated per cell of s's mesh so the
/// integrand is smooth inside every quadrature cell.
double l2_error(const TestFunction& u, const PeriodicSpline& s, double shift = 0.0,
                int nodes_per_cell = 0);

/// || d^l u ||_{L2(0,1)} by composite Gauss quadrature on the space's mesh.
double function_l2_norm(const TestFunction& u, int l, const SplineSpace& space,
                        int nodes_per_cell = 0);

/// max |d^l u| over the same dense grid sup_norm uses.
double function_sup_norm(const TestFunction& u, int l, const SplineSpace& space,
                         int samples_per_cell = 32);

/// Stability ratios ||d^l A u|| / ||d^l u|| in L2 and sup for an approximant
/// A u in the space. When d^l u vanishes identically the ratios are reported
/// not-applicable (NaN) rather than divided by zero.
struct StabilityReport {
  int l = 0;
  bool applicable = false;
  double num_l2 = 0.0;
  double den_l2 = 0.0;
  double ratio_l2 = 0.0;
  double num_sup = 0.0;
  double den_sup = 0.0;
  double ratio_sup = 0.0;
};

/// Ratios for a given approximant spline (numerators from the spline,
/// denominators from u itself).
StabilityReport spline_stability_report(const PeriodicSpline& approx, const TestFunction& u,
                                        int l, int nodes_per_cell = 0,
                                        int samples_per_cell = 32);

/// Ratios for the L2 projection P_h u.
StabilityReport stability_report(const SplineSpace& space, const TestFunction& u, int l,
                                 int nodes_per_cell = 0, int samples_per_cell = 32);

/// Sharp constant C(r, N) in the inverse inequality ||v'|| <= C h^{-1} ||v||
/// over the space, from the symbol ratio at the discrete frequencies:
/// C = max_m sqrt(4 sin^2(theta_m / 2) g_{r-1}(theta_m) / g_r(theta_m)).
/// Requires r >= 2.
double inverse_inequality_constant(const SplineSpace& space);

}  // namespace perispline
