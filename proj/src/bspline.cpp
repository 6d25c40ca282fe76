#include "perispline/bspline.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace perispline {

SplineSpace::SplineSpace(int order, int cells) : r(order), N(cells) {
  if (r < 1) throw std::invalid_argument("SplineSpace: order must be >= 1");
  if (r > kMaxOrder)
    throw std::invalid_argument("SplineSpace: unsupported order " + std::to_string(r));
  if (N < 4 * r)
    throw std::invalid_argument("SplineSpace: need N >= 4r (got N=" + std::to_string(N) +
                                ", r=" + std::to_string(r) + ")");
}

namespace {

inline double order1(double p) { return (p >= -0.5 && p < 0.5) ? 1.0 : 0.0; }

}  // namespace

double cardinal_bspline(int r, double x) {
  if (r < 1) throw std::invalid_argument("cardinal_bspline: order must be >= 1");
  if (r > kMaxOrder)
    throw std::invalid_argument("cardinal_bspline: unsupported order " + std::to_string(r));
  if (r == 1) return order1(x);
  if (!(std::abs(x) < 0.5 * r)) return 0.0;

  // Cox-de Boor pyramid for the centered spline: level m holds the order-m
  // values at p_i = x + (r-m)/2 - i.
  double vals[kMaxOrder + 1];
  for (int i = 0; i < r; ++i) vals[i] = order1(x + 0.5 * (r - 1) - i);
  for (int m = 2; m <= r; ++m) {
    const double inv = 1.0 / (m - 1);
    for (int i = 0; i <= r - m; ++i) {
      const double p = x + 0.5 * (r - m) - i;
      vals[i] = ((0.5 * m + p) * vals[i] + (0.5 * m - p) * vals[i + 1]) * inv;
    }
  }
  return vals[0];
}

double cardinal_bspline_fourier(int r, double x) {
  if (r < 1) throw std::invalid_argument("cardinal_bspline_fourier: order must be >= 1");
  double b;
  if (std::abs(x) < 1e-4) {
    // sin(t)/t with t = x/2; four terms cover |x| < 1e-4 to below 1e-16.
    const double t2 = 0.25 * x * x;
    b = 1.0 - t2 / 6.0 + t2 * t2 / 120.0 - t2 * t2 * t2 / 5040.0;
  } else {
    b = 2.0 * std::sin(0.5 * x) / x;
  }
  double out = 1.0;
  for (int i = 0; i < r; ++i) out *= b;
  return out;
}

double basis_eval(const SplineSpace& space, long j, double x) {
  const long N = space.N;
  const double t = reduce_unit(x) * static_cast<double>(N);
  const double sigma = 0.5 * (space.r - 2);
  const double c = t - sigma - static_cast<double>(mod_index(j, N));
  // Lattice copies j + kN contribute where |c - kN| <= r/2.
  const long k0 = static_cast<long>(std::ceil((c - 0.5 * space.r) / static_cast<double>(N)));
  const long k1 = static_cast<long>(std::floor((c + 0.5 * space.r) / static_cast<double>(N)));
  double sum = 0.0;
  for (long k = k0; k <= k1; ++k)
    sum += cardinal_bspline(space.r, c - static_cast<double>(k) * static_cast<double>(N));
  return sum;
}

PeriodicSpline make_spline(SplineSpace space, std::vector<double> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(space.N))
    throw std::invalid_argument("make_spline: coefficient count must equal N");
  return PeriodicSpline{space, std::move(coeffs)};
}

long basis_support(const SplineSpace& space, double x, double* vals) {
  const long N = space.N;
  const int r = space.r;
  const double t = reduce_unit(x) * static_cast<double>(N);
  long m = static_cast<long>(t);
  if (m >= N) m = N - 1;
  const double sigma = 0.5 * (r - 2);
  const long j0 = m + 2 - r;
  for (int i = 0; i < r; ++i)
    vals[i] = cardinal_bspline(r, t - static_cast<double>(j0 + i) - sigma);
  return j0;
}

double spline_eval(const PeriodicSpline& s, double x) {
  double vals[kMaxOrder + 1];
  const long j0 = basis_support(s.space, x, vals);
  double out = 0.0;
  for (int i = 0; i < s.space.r; ++i)
    out += s.coeffs[static_cast<std::size_t>(mod_index(j0 + i, s.space.N)) - 1] * vals[i];
  return out;
}

PeriodicSpline spline_derivative(const PeriodicSpline& s) {
  if (s.space.r < 2)
    throw std::invalid_argument("spline_derivative: requires order >= 2");
  const long N = s.space.N;
  const double invh = static_cast<double>(N);
  std::vector<double> w(static_cast<std::size_t>(N));
  for (long j = 0; j < N; ++j)
    w[static_cast<std::size_t>(j)] =
        (s.coeffs[static_cast<std::size_t>(j)] - s.coeffs[static_cast<std::size_t>((j + N - 1) % N)]) * invh;
  return make_spline(SplineSpace(s.space.r - 1, s.space.N), std::move(w));
}

}  // namespace perispline
