#include "perispline/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fft.hpp"

namespace perispline {

namespace {

using cd = std::complex<double>;

std::vector<cd> to_complex(const std::vector<double>& v) {
  std::vector<cd> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = cd(v[i], 0.0);
  return out;
}

void check_size(const CirculantMatrix& C, const std::vector<double>& v, const char* who) {
  if (C.size() == 0) throw std::invalid_argument(std::string(who) + ": empty matrix");
  if (v.size() != C.size())
    throw std::invalid_argument(std::string(who) + ": vector length must equal matrix size");
}

// lambda_k = sum_j c_j w^{+(j-1)(k-1)} is the unnormalized inverse DFT.
std::vector<cd> eigenvalues_of(const std::vector<double>& first_row) {
  return detail::dft(to_complex(first_row), /*inverse=*/true);
}

}  // namespace

SingularMatrixError::SingularMatrixError(double min_abs, double max_abs)
    : std::runtime_error("circulant solve: numerically singular spectrum (min |lambda| = " +
                         std::to_string(min_abs) + ", max |lambda| = " + std::to_string(max_abs) + ")"),
      min_abs_(min_abs),
      max_abs_(max_abs) {}

CirculantMatrix make_circulant(std::vector<double> first_row) {
  if (first_row.empty()) throw std::invalid_argument("make_circulant: empty first row");
  return CirculantMatrix{std::move(first_row)};
}

CirculantMatrix assemble_symmetric(const SymmetricStencil& stencil) {
  const std::size_t n = stencil.n;
  const std::size_t lags = stencil.offsets.size();
  if (n == 0) throw std::invalid_argument("assemble_symmetric: empty matrix");
  if (lags > n / 2)
    throw std::invalid_argument("assemble_symmetric: stencil wider than floor(n/2)+1, lags would alias");
  std::vector<double> row(n, 0.0);
  row[0] = stencil.diag;
  for (std::size_t j = 1; j <= lags; ++j) {
    row[j] = stencil.offsets[j - 1];
    row[n - j] = stencil.offsets[j - 1];
  }
  return CirculantMatrix{std::move(row)};
}

CirculantMatrix assemble_antisymmetric(std::size_t n, const std::vector<double>& offsets) {
  if (n == 0) throw std::invalid_argument("assemble_antisymmetric: empty matrix");
  if (offsets.size() > (n - 1) / 2)
    throw std::invalid_argument("assemble_antisymmetric: stencil wider than floor((n-1)/2)+1, lags would alias");
  std::vector<double> row(n, 0.0);
  for (std::size_t j = 1; j <= offsets.size(); ++j) {
    row[j] = offsets[j - 1];
    row[n - j] = -offsets[j - 1];
  }
  return CirculantMatrix{std::move(row)};
}

std::vector<double> shift_apply(long k, const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("shift_apply: empty vector");
  const long n = static_cast<long>(v.size());
  long s = k % n;
  if (s < 0) s += n;
  std::vector<double> out(v.size());
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>((i + s) % n)];
  return out;
}

std::vector<double> matvec(const CirculantMatrix& C, const std::vector<double>& v) {
  check_size(C, v, "matvec");
  const std::size_t n = C.size();
  std::vector<cd> lam = eigenvalues_of(C.first_row);
  std::vector<cd> vhat = detail::dft(to_complex(v), /*inverse=*/false);
  for (std::size_t k = 0; k < n; ++k) vhat[k] *= lam[k];
  std::vector<cd> y = detail::dft(std::move(vhat), /*inverse=*/true);
  std::vector<double> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = y[i].real() * scale;
  return out;
}

std::vector<double> matvec_direct(const CirculantMatrix& C, const std::vector<double>& v) {
  check_size(C, v, "matvec_direct");
  const long n = static_cast<long>(C.size());
  std::vector<double> out(C.size(), 0.0);
  for (long j = 0; j < n; ++j) {
    const double c = C.first_row[static_cast<std::size_t>(j)];
    if (c == 0.0) continue;
    for (long i = 0; i < n; ++i)
      out[static_cast<std::size_t>(i)] += c * v[static_cast<std::size_t>((i + j) % n)];
  }
  return out;
}

std::vector<cd> eigenvalues(const CirculantMatrix& C) {
  if (C.size() == 0) throw std::invalid_argument("eigenvalues: empty matrix");
  return eigenvalues_of(C.first_row);
}

std::vector<double> eigenvalues_symmetric(const CirculantMatrix& C) {
  std::vector<cd> lam = eigenvalues(C);
  double max_abs = 0.0, max_imag = 0.0;
  for (const cd& l : lam) {
    max_abs = std::max(max_abs, std::abs(l));
    max_imag = std::max(max_imag, std::abs(l.imag()));
  }
  if (max_imag > 1e-12 * std::max(1.0, max_abs))
    throw std::invalid_argument("eigenvalues_symmetric: spectrum has a nontrivial imaginary part");
  std::vector<double> out(lam.size());
  for (std::size_t k = 0; k < lam.size(); ++k) out[k] = lam[k].real();
  return out;
}

std::vector<double> solve(const CirculantMatrix& C, const std::vector<double>& rhs,
                          double residual_tol) {
  check_size(C, rhs, "solve");
  const std::size_t n = C.size();
  std::vector<cd> lam = eigenvalues_of(C.first_row);
  double min_abs = std::numeric_limits<double>::infinity(), max_abs = 0.0;
  for (const cd& l : lam) {
    const double a = std::abs(l);
    min_abs = std::min(min_abs, a);
    max_abs = std::max(max_abs, a);
  }
  if (min_abs <= 1e3 * std::numeric_limits<double>::epsilon() * max_abs)
    throw SingularMatrixError(min_abs, max_abs);

  std::vector<cd> bhat = detail::dft(to_complex(rhs), /*inverse=*/false);
  for (std::size_t k = 0; k < n; ++k) bhat[k] /= lam[k];
  std::vector<cd> xc = detail::dft(std::move(bhat), /*inverse=*/true);
  std::vector<double> x(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = xc[i].real() * scale;

  std::vector<double> back = matvec(C, x);
  double bscale = 0.0, res = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    bscale = std::max(bscale, std::abs(rhs[i]));
    res = std::max(res, std::abs(back[i] - rhs[i]));
  }
  if (bscale == 0.0) bscale = 1.0;
  if (res > residual_tol * bscale)
    throw std::runtime_error("circulant solve: residual " + std::to_string(res / bscale) +
                             " exceeds tolerance");
  return x;
}

DemkoBound demko_bound(double lambda_min, double lambda_max, int bandwidth) {
  if (bandwidth < 1) throw std::invalid_argument("demko_bound: bandwidth must be >= 1");
  if (!(lambda_min > 0.0))
    throw std::invalid_argument("demko_bound: spectrum not positive definite");
  if (!(lambda_max > lambda_min))
    throw std::invalid_argument("demko_bound: degenerate spectrum (lambda_min >= lambda_max)");
  const double mu = std::sqrt(lambda_min);
  const double m = std::sqrt(lambda_max);
  DemkoBound out;
  out.q = std::pow((m + mu) / (m - mu), 1.0 / static_cast<double>(bandwidth));
  out.C = (1.0 / lambda_min) * std::max(1.0, (mu + m) * (mu + m) / (2.0 * lambda_max));
  return out;
}

}  // namespace perispline
