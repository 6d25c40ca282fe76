#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "perispline/bspline.hpp"
#include "perispline/projection.hpp"

namespace perispline {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigInt binomial_coefficient(int n, int k);

/// sum_{m=0}^{l} binom(l, m) (shift - m)^k (-1)^m in exact integer
/// arithmetic (0^0 = 1). Vanishes for every k <= l-1 regardless of shift;
/// at k = l the value is l! for any shift (and (-1)^l l! when written as the
/// unshifted power sum sum binom(l, m) m^l (-1)^m, which this equals up to
/// the reflection m -> l - m).
BigInt binomial_alternating_sum(int l, int k, int shift);

/// Coefficients (in tau^2) of ((arcsin tau) / tau)^r, exact, first `terms`
/// entries. arcsin tau / tau = sum_n binom(2n, n) / (4^n (2n+1)) tau^{2n}.
std::vector<BigRational> arcsin_ratio_power_series(int r, int terms);

/// Smoothing weights delta_0..delta_{r-1}: the order-(r-1) truncation of
/// ((arcsin tau)/tau)^r. All positive; delta_0 = 1. 2 <= r <= 12.
struct DeltaSeries {
  int r = 0;
  std::vector<BigRational> delta;
};
DeltaSeries tw_delta(int r);

/// Symmetric nodal stencil q_0..q_{r-1}: V_i = q_0 u_i + sum_m q_m (u_{i+m} + u_{i-m}).
/// `exact` is populated by the analytic constructions and empty for raw
/// user-provided stencils.
struct QuasiCoefficients {
  int r = 0;
  std::vector<BigRational> exact;
  std::vector<double> stencil;
};

/// Expands sum_j delta_j sin^{2j}(xi/2) through sin^2(xi/2) = (2 - z - z^{-1})/4
/// into the cosine stencil, exactly.
QuasiCoefficients delta_to_stencil(const DeltaSeries& d);

QuasiCoefficients tw_coefficients(int r);

QuasiCoefficients quasi_from_stencil(int r, std::vector<double> stencil);

/// q(xi) = q_0 + 2 sum_m q_m cos(m xi).
double quasi_symbol(const QuasiCoefficients& qc, double xi);

/// sum_j delta_j sin^{2j}(xi/2).
double delta_symbol(const DeltaSeries& d, double xi);

/// Exact symbol value at xi = 0 (parity = +1) or xi = pi (parity = -1):
/// q_0 + 2 sum_m (+-1)^m q_m. Requires exact coefficients.
BigRational quasi_symbol_exact(const QuasiCoefficients& qc, int parity);

/// Exact delta-form value at the same endpoints: sin^2(xi/2) = 0 or 1.
BigRational delta_symbol_exact(const DeltaSeries& d, int parity);

/// The basis carries a fixed phase: Phi_j is centered at (j + (r-2)/2) h, so
/// nodal stencils approximate u(x - shift * h) with shift = (r-2)/2 cells.
/// Error norms should be measured against that alignment.
double quasi_alignment_shift(int r);

/// C_0 = |q_0| + 2 sum_m |q_m| bounds ||Q u||_inf <= C_0 ||u||_inf.
double quasi_sup_bound(const QuasiCoefficients& qc);

/// Applies the stencil to the nodal samples u(j h) and returns the spline.
PeriodicSpline quasi_interpolate(const SplineSpace& space, const QuasiCoefficients& qc,
                                 const TestFunction& u);

/// Stability ratios for Q u (same shape as the projection report).
StabilityReport quasi_stability_report(const SplineSpace& space, const QuasiCoefficients& qc,
                                       const TestFunction& u, int l, int nodes_per_cell = 0,
                                       int samples_per_cell = 32);

}  // namespace perispline
