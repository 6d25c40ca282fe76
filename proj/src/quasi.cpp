#include "perispline/quasi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace perispline {

namespace {

BigInt ipow(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void check_quasi_order(int r, const char* who) {
  if (r < 2 || r > 12)
    throw std::invalid_argument(std::string(who) + ": order must lie in [2, 12]");
}

// Truncated product of two series in tau^2.
std::vector<BigRational> series_mul(const std::vector<BigRational>& a,
                                    const std::vector<BigRational>& b, int terms) {
  std::vector<BigRational> out(static_cast<std::size_t>(terms), BigRational(0));
  for (int i = 0; i < terms; ++i) {
    if (i >= static_cast<int>(a.size())) break;
    for (int j = 0; i + j < terms; ++j) {
      if (j >= static_cast<int>(b.size())) break;
      out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace

BigInt binomial_coefficient(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

BigInt binomial_alternating_sum(int l, int k, int shift) {
  if (l < 0 || k < 0)
    throw std::invalid_argument("binomial_alternating_sum: l and k must be >= 0");
  BigInt sum = 0;
  for (int m = 0; m <= l; ++m) {
    const BigInt base = BigInt(shift) - m;
    const BigInt term = binomial_coefficient(l, m) * ipow(base, k);
    if (m % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

std::vector<BigRational> arcsin_ratio_power_series(int r, int terms) {
  if (r < 1) throw std::invalid_argument("arcsin_ratio_power_series: power must be >= 1");
  if (terms < 1) throw std::invalid_argument("arcsin_ratio_power_series: need at least one term");
  std::vector<BigRational> base(static_cast<std::size_t>(terms));
  for (int n = 0; n < terms; ++n)
    base[static_cast<std::size_t>(n)] =
        BigRational(binomial_coefficient(2 * n, n), ipow(4, n) * (2 * n + 1));
  std::vector<BigRational> out(static_cast<std::size_t>(terms), BigRational(0));
  out[0] = 1;
  for (int i = 0; i < r; ++i) out = series_mul(out, base, terms);
  return out;
}

DeltaSeries tw_delta(int r) {
  check_quasi_order(r, "tw_delta");
  return DeltaSeries{r, arcsin_ratio_power_series(r, r)};
}

QuasiCoefficients delta_to_stencil(const DeltaSeries& d) {
  const int r = d.r;
  check_quasi_order(r, "delta_to_stencil");
  if (d.delta.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("delta_to_stencil: need exactly r smoothing weights");

  // Laurent coefficients on powers z^{-(r-1)}..z^{r-1}, offset r-1;
  // sin^2(xi/2) = (2 - z - z^{-1}) / 4 with z = e^{i xi}.
  const int off = r - 1;
  const int width = 2 * r - 1;
  std::vector<BigRational> acc(static_cast<std::size_t>(width), BigRational(0));
  std::vector<BigRational> pw(static_cast<std::size_t>(width), BigRational(0));
  pw[static_cast<std::size_t>(off)] = 1;
  acc[static_cast<std::size_t>(off)] = d.delta[0];
  const BigRational quarter(1, 4), half(1, 2);
  for (int j = 1; j <= r - 1; ++j) {
    std::vector<BigRational> next(static_cast<std::size_t>(width), BigRational(0));
    for (int p = 0; p < width; ++p) {
      if (pw[static_cast<std::size_t>(p)] == 0) continue;
      const BigRational& c = pw[static_cast<std::size_t>(p)];
      next[static_cast<std::size_t>(p)] += half * c;
      if (p > 0) next[static_cast<std::size_t>(p - 1)] -= quarter * c;
      if (p + 1 < width) next[static_cast<std::size_t>(p + 1)] -= quarter * c;
    }
    pw = std::move(next);
    for (int p = 0; p < width; ++p)
      acc[static_cast<std::size_t>(p)] += d.delta[static_cast<std::size_t>(j)] * pw[static_cast<std::size_t>(p)];
  }

  QuasiCoefficients qc;
  qc.r = r;
  qc.exact.resize(static_cast<std::size_t>(r));
  qc.stencil.resize(static_cast<std::size_t>(r));
  for (int m = 0; m < r; ++m) {
    qc.exact[static_cast<std::size_t>(m)] = acc[static_cast<std::size_t>(off + m)];
    qc.stencil[static_cast<std::size_t>(m)] =
        qc.exact[static_cast<std::size_t>(m)].convert_to<double>();
  }
  return qc;
}

QuasiCoefficients tw_coefficients(int r) { return delta_to_stencil(tw_delta(r)); }

QuasiCoefficients quasi_from_stencil(int r, std::vector<double> stencil) {
  check_quasi_order(r, "quasi_from_stencil");
  if (stencil.empty() || stencil.size() > static_cast<std::size_t>(r))
    throw std::invalid_argument("quasi_from_stencil: need 1..r stencil entries");
  stencil.resize(static_cast<std::size_t>(r), 0.0);
  QuasiCoefficients qc;
  qc.r = r;
  qc.stencil = std::move(stencil);
  return qc;
}

double quasi_symbol(const QuasiCoefficients& qc, double xi) {
  double s = qc.stencil.at(0);
  for (std::size_t m = 1; m < qc.stencil.size(); ++m)
    s += 2.0 * qc.stencil[m] * std::cos(static_cast<double>(m) * xi);
  return s;
}

double delta_symbol(const DeltaSeries& d, double xi) {
  const double s2 = std::sin(0.5 * xi) * std::sin(0.5 * xi);
  double out = 0.0;
  double p = 1.0;
  for (std::size_t j = 0; j < d.delta.size(); ++j) {
    out += d.delta[j].convert_to<double>() * p;
    p *= s2;
  }
  return out;
}

BigRational quasi_symbol_exact(const QuasiCoefficients& qc, int parity) {
  if (parity != 1 && parity != -1)
    throw std::invalid_argument("quasi_symbol_exact: parity must be +1 or -1");
  if (qc.exact.empty())
    throw std::invalid_argument("quasi_symbol_exact: stencil has no exact coefficients");
  BigRational s = qc.exact[0];
  BigRational sign(1);
  for (std::size_t m = 1; m < qc.exact.size(); ++m) {
    sign *= parity;
    s += BigRational(2) * sign * qc.exact[m];
  }
  return s;
}

BigRational delta_symbol_exact(const DeltaSeries& d, int parity) {
  if (parity != 1 && parity != -1)
    throw std::invalid_argument("delta_symbol_exact: parity must be +1 or -1");
  if (parity == 1) return d.delta.at(0);
  BigRational s(0);
  for (const BigRational& x : d.delta) s += x;
  return s;
}

double quasi_alignment_shift(int r) { return 0.5 * (r - 2); }

double quasi_sup_bound(const QuasiCoefficients& qc) {
  double s = std::abs(qc.stencil.at(0));
  for (std::size_t m = 1; m < qc.stencil.size(); ++m) s += 2.0 * std::abs(qc.stencil[m]);
  return s;
}

PeriodicSpline quasi_interpolate(const SplineSpace& space, const QuasiCoefficients& qc,
                                 const TestFunction& u) {
  if (qc.r != space.r)
    throw std::invalid_argument("quasi_interpolate: stencil order differs from space order");
  if (!u.value) throw std::invalid_argument("quasi_interpolate: test function has no value callable");
  const long N = space.N;
  std::vector<double> samples(static_cast<std::size_t>(N));
  for (long j = 1; j <= N; ++j)
    samples[static_cast<std::size_t>(j - 1)] = u.value(reduce_unit(static_cast<double>(j) * space.h()));

  std::vector<double> V(static_cast<std::size_t>(N), 0.0);
  for (long i = 0; i < N; ++i) {
    double v = qc.stencil[0] * samples[static_cast<std::size_t>(i)];
    for (long m = 1; m < static_cast<long>(qc.stencil.size()); ++m)
      v += qc.stencil[static_cast<std::size_t>(m)] *
           (samples[static_cast<std::size_t>((i + m) % N)] +
            samples[static_cast<std::size_t>(((i - m) % N + N) % N)]);
    V[static_cast<std::size_t>(i)] = v;
  }
  return make_spline(space, std::move(V));
}

StabilityReport quasi_stability_report(const SplineSpace& space, const QuasiCoefficients& qc,
                                       const TestFunction& u, int l, int nodes_per_cell,
                                       int samples_per_cell) {
  const PeriodicSpline Q = quasi_interpolate(space, qc, u);
  return spline_stability_report(Q, u, l, nodes_per_cell, samples_per_cell);
}

}  // namespace perispline
