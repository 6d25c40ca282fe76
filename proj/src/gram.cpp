#include "perispline/gram.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace perispline {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_order(int r, const char* who) {
  if (r < 1) throw std::invalid_argument(std::string(who) + ": order must be >= 1");
  if (2 * r > kMaxOrder)
    throw std::invalid_argument(std::string(who) + ": unsupported order " + std::to_string(r));
}

double envelope_tail(int r, long L) {
  const double pl = std::numbers::pi * static_cast<double>(L);
  return 2.0 * std::pow(pl, -2 * r) * (1.0 + static_cast<double>(L) / (2.0 * r - 1.0));
}

// Golden-section refinement of an extremum bracketed in [a, b]; sign = +1
// minimizes, -1 maximizes.
template <typename F>
double golden_polish(F&& f, double a, double b, double sign) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = sign * f(x1);
  double f2 = sign * f(x2);
  for (int it = 0; it < 90 && (b - a) > 1e-13; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = sign * f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = sign * f(x2);
    }
  }
  return sign * std::min(f1, f2);
}

}  // namespace

std::vector<double> gram_stencil(int r) {
  check_order(r, "gram_stencil");
  std::vector<double> g(static_cast<std::size_t>(r));
  for (int j = 1; j <= r; ++j)
    g[static_cast<std::size_t>(j - 1)] = cardinal_bspline(2 * r, static_cast<double>(j - 1));
  return g;
}

SymbolEvaluator make_symbol_evaluator(int r, double tail_tol) {
  check_order(r, "make_symbol_evaluator");
  if (!(tail_tol > 0.0))
    throw std::invalid_argument("make_symbol_evaluator: tail_tol must be positive");
  long L = 2;
  while (envelope_tail(r, L) > tail_tol) {
    L *= 2;
    if (L > (1L << 24))
      throw std::invalid_argument("make_symbol_evaluator: tail_tol unattainably small");
  }
  // Walk back down: the doubling overshoots by up to 2x.
  while (L > 2 && envelope_tail(r, L - 1) <= tail_tol) --L;
  return SymbolEvaluator{r, L, tail_tol};
}

double symbol_eval(const SymbolEvaluator& ev, double theta) {
  const double th = theta - kTwoPi * std::floor(theta / kTwoPi);
  double sum = 0.0;
  // Sum from the far tails inward so small terms accumulate first.
  for (long l = ev.L; l >= 1; --l) {
    const double a = cardinal_bspline_fourier(ev.r, th + kTwoPi * static_cast<double>(l));
    const double b = cardinal_bspline_fourier(ev.r, th - kTwoPi * static_cast<double>(l));
    sum += a * a + b * b;
  }
  const double c = cardinal_bspline_fourier(ev.r, th);
  return sum + c * c;
}

double symbol_from_stencil(const std::vector<double>& stencil, double theta) {
  if (stencil.empty()) throw std::invalid_argument("symbol_from_stencil: empty stencil");
  double sum = stencil[0];
  for (std::size_t j = 1; j < stencil.size(); ++j)
    sum += 2.0 * stencil[j] * std::cos(static_cast<double>(j) * theta);
  return sum;
}

SpectralBounds spectral_bounds(int r, int min_samples) {
  check_order(r, "spectral_bounds");
  if (min_samples < 4) throw std::invalid_argument("spectral_bounds: min_samples must be >= 4");
  const std::vector<double> g = gram_stencil(r);
  const auto f = [&g](double th) { return symbol_from_stencil(g, th); };

  long M = std::max(min_samples, 1024);
  double lo = 0.0, hi = 0.0;
  long lo_at = 0, hi_at = 0;
  double prev_lo = std::numeric_limits<double>::infinity();
  double prev_hi = -std::numeric_limits<double>::infinity();
  for (int round = 0; round < 16; ++round) {
    lo = std::numeric_limits<double>::infinity();
    hi = -std::numeric_limits<double>::infinity();
    for (long m = 0; m < M; ++m) {
      const double v = f(kTwoPi * static_cast<double>(m) / static_cast<double>(M));
      if (v < lo) {
        lo = v;
        lo_at = m;
      }
      if (v > hi) {
        hi = v;
        hi_at = m;
      }
    }
    if (std::abs(lo - prev_lo) < 1e-12 && std::abs(hi - prev_hi) < 1e-12) break;
    prev_lo = lo;
    prev_hi = hi;
    M *= 2;
  }

  const double step = kTwoPi / static_cast<double>(M);
  SpectralBounds out;
  out.lower = golden_polish(f, (lo_at - 1) * step, (lo_at + 1) * step, +1.0);
  out.upper = golden_polish(f, (hi_at - 1) * step, (hi_at + 1) * step, -1.0);
  out.lower = std::min(out.lower, lo);
  out.upper = std::max(out.upper, hi);
  return out;
}

CirculantMatrix make_gram_matrix(const SplineSpace& space) {
  std::vector<double> g = gram_stencil(space.r);
  SymmetricStencil st;
  st.n = static_cast<std::size_t>(space.N);
  st.diag = g[0];
  st.offsets.assign(g.begin() + 1, g.end());
  return assemble_symmetric(st);
}

GramSystem make_gram_system(const SplineSpace& space) {
  GramSystem gs{space, gram_stencil(space.r), make_gram_matrix(space), spectral_bounds(space.r)};
  return gs;
}

std::vector<double> inverse_first_row(const GramSystem& gs) {
  const std::size_t n = gs.matrix.size();
  std::vector<double> e1(n, 0.0);
  e1[0] = 1.0;
  std::vector<double> gamma = solve(gs.matrix, e1);
  // The true inverse row is fold-symmetric; averaging removes FFT rounding
  // noise so gamma_{N+2-i} == gamma_i holds exactly in the returned vector.
  for (std::size_t i = 1; 2 * i < n; ++i) {
    const double avg = 0.5 * (gamma[i] + gamma[n - i]);
    gamma[i] = avg;
    gamma[n - i] = avg;
  }
  return gamma;
}

DecayCertificate certify_decay(const std::vector<double>& gamma, int r, double C1, double C2,
                               double q, double noise_floor) {
  if (gamma.empty()) throw std::invalid_argument("certify_decay: empty gamma");
  if (r < 1) throw std::invalid_argument("certify_decay: order must be >= 1");
  if (!(q > 1.0)) throw std::invalid_argument("certify_decay: decay rate q must exceed 1");
  if (noise_floor < 0.0) throw std::invalid_argument("certify_decay: noise_floor must be >= 0");
  const long N = static_cast<long>(gamma.size());
  DecayCertificate cert;
  cert.C1 = C1;
  cert.C2 = C2;
  cert.q = q;
  cert.max_slack = -std::numeric_limits<double>::infinity();
  for (long i = r; i <= N / 2 + 1; ++i) {
    const double bound = C1 * std::pow(q, -static_cast<double>(i - 1)) +
                         C2 * std::pow(q, -static_cast<double>(N - i)) + noise_floor;
    const double slack = std::abs(gamma[static_cast<std::size_t>(i - 1)]) - bound;
    cert.max_slack = std::max(cert.max_slack, slack);
  }
  cert.valid = cert.max_slack <= 0.0;
  return cert;
}

double fit_decay_constant(const std::vector<double>& gamma, int r, double q,
                          double noise_floor) {
  if (gamma.empty()) throw std::invalid_argument("fit_decay_constant: empty gamma");
  if (r < 1) throw std::invalid_argument("fit_decay_constant: order must be >= 1");
  if (!(q > 1.0)) throw std::invalid_argument("fit_decay_constant: decay rate q must exceed 1");
  if (noise_floor < 0.0)
    throw std::invalid_argument("fit_decay_constant: noise_floor must be >= 0");
  const long N = static_cast<long>(gamma.size());
  double C = 0.0;
  for (long i = r; i <= N / 2 + 1; ++i) {
    const double excess = std::abs(gamma[static_cast<std::size_t>(i - 1)]) - noise_floor;
    if (excess <= 0.0) continue;
    const double env = std::pow(q, -static_cast<double>(i - 1)) +
                       std::pow(q, -static_cast<double>(N - i));
    C = std::max(C, excess / env);
  }
  return C;
}

BandedInverse banded_truncation_inverse(const GramSystem& gs) {
  const long N = gs.space.N;
  const int r = gs.space.r;
  if (N > 1024)
    throw std::invalid_argument("banded_truncation_inverse: dense path capped at N <= 1024");

  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(N, N);
  for (long i = 0; i < N; ++i)
    for (long d = -(r - 1); d <= r - 1; ++d) {
      const long j = i + d;
      if (j < 0 || j >= N) continue;
      B(i, j) = gs.stencil[static_cast<std::size_t>(std::labs(d))];
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(B, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("banded_truncation_inverse: eigensolver failed");
  BandedInverse out;
  out.lambda_min = es.eigenvalues().minCoeff();
  out.lambda_max = es.eigenvalues().maxCoeff();
  if (!(out.lambda_min > 0.0))
    throw std::runtime_error("banded_truncation_inverse: truncation not positive definite");

  Eigen::MatrixXd inv = B.llt().solve(Eigen::MatrixXd::Identity(N, N));
  out.inverse = DenseMatrix(static_cast<std::size_t>(N), static_cast<std::size_t>(N));
  for (long i = 0; i < N; ++i)
    for (long j = 0; j < N; ++j)
      out.inverse(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = inv(i, j);
  return out;
}

DecayEnvelope decay_envelope_from_banded(const GramSystem& gs, const DemkoBound& banded_bound,
                                         const std::vector<double>& gamma) {
  const long N = gs.space.N;
  const int r = gs.space.r;
  if (r < 2) throw std::invalid_argument("decay_envelope_from_banded: requires order >= 2");
  if (gamma.size() != static_cast<std::size_t>(N))
    throw std::invalid_argument("decay_envelope_from_banded: gamma length must equal N");

  // rho = e_1 - B gamma, supported on slots 1..r-1 and N-r+2..N.
  const auto banded_row_dot = [&](long i) {
    double s = 0.0;
    for (long d = -(r - 1); d <= r - 1; ++d) {
      const long j = i + d;
      if (j < 1 || j > N) continue;
      s += gs.stencil[static_cast<std::size_t>(std::labs(d))] * gamma[static_cast<std::size_t>(j - 1)];
    }
    return s;
  };

  // B gamma = e_1 - rho slotwise: (B gamma)_1 = 1 - rho_1 and
  // (B gamma)_j = -rho_j on the rest of the corner support, so the envelope
  // constants read directly off |B gamma| there.
  const double q = banded_bound.q;
  const double CB = banded_bound.C;
  double c1 = std::abs(banded_row_dot(1));
  for (long j = 2; j <= r - 1; ++j)
    c1 += std::abs(banded_row_dot(j)) * std::pow(q, static_cast<double>(j - 1));
  double c2 = 0.0;
  for (long j = N - r + 2; j <= N; ++j)
    c2 += std::abs(banded_row_dot(j)) * std::pow(q, static_cast<double>(N - j));
  return DecayEnvelope{CB * c1, CB * c2, q};
}

double weighted_gamma_sum(const std::vector<double>& gamma) {
  if (gamma.empty()) throw std::invalid_argument("weighted_gamma_sum: empty gamma");
  const long N = static_cast<long>(gamma.size());
  double s = 0.0;
  for (long i = 1; i <= N / 2 + 1; ++i)
    s += (1.0 + static_cast<double>(i)) * std::abs(gamma[static_cast<std::size_t>(i - 1)]);
  return s;
}

}  // namespace perispline
