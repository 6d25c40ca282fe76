#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace perispline {

/// Largest supported B-spline order. Evaluation uses a fixed stack buffer;
/// Gram stencils of order r need B-splines of order 2r, so this leaves
/// headroom well past the exercised range r <= 12.
inline constexpr int kMaxOrder = 31;

/// x reduced mod 1 into [0, 1).
inline double reduce_unit(double x) {
  double y = x - std::floor(x);
  if (y >= 1.0) y -= 1.0;  // guards rounding when x is a hair below an integer
  return y;
}

/// j reduced mod N into 1..N (1-based circular index).
inline long mod_index(long j, long N) {
  long m = j % N;
  if (m <= 0) m += N;
  return m;
}

/// Space of 1-periodic splines of order r (degree r-1, smoothness C^{r-2})
/// on the uniform mesh x_i = i h, h = 1/N.
struct SplineSpace {
  int r = 0;
  int N = 0;

  SplineSpace(int order, int cells);

  double h() const { return 1.0 / static_cast<double>(N); }
  int dim() const { return N; }
};

/// Centered cardinal B-spline v_r: supported on [-r/2, r/2], unit integral,
/// v_1 = indicator of [-1/2, 1/2) (half-open).
double cardinal_bspline(int r, double x);

/// Fourier transform of v_r: (2 sin(x/2) / x)^r, with a series branch near
/// x = 0 for the removable singularity.
double cardinal_bspline_fourier(int r, double x);

/// Periodized standard basis function Phi_j(x) = sum_l v_r(x/h - (j + lN) - (r-2)/2).
/// j is reduced mod N into 1..N and x mod 1; supp Phi_j covers the r cells
/// starting at x_{j-1}, wrapping around the period.
double basis_eval(const SplineSpace& space, long j, double x);

struct PeriodicSpline {
  SplineSpace space;
  std::vector<double> coeffs;  // V_1..V_N against Phi_1..Phi_N
};

PeriodicSpline make_spline(SplineSpace space, std::vector<double> coeffs);

/// Values of the r basis functions supported at x. Writes them to
/// vals[0..r-1] and returns the unreduced leading index j0: the nonzero
/// basis functions at x are Phi_{j0}, ..., Phi_{j0+r-1} taken mod N.
/// vals must have room for space.r doubles.
long basis_support(const SplineSpace& space, double x, double* vals);

double spline_eval(const PeriodicSpline& s, double x);

/// Exact derivative: an order r-1 spline on the same mesh with coefficients
/// W_j = (V_j - V_{j-1}) / h. Requires r >= 2.
PeriodicSpline spline_derivative(const PeriodicSpline& s);

}  // namespace perispline
