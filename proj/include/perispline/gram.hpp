#pragma once

#include <vector>

#include "perispline/bspline.hpp"
#include "perispline/circulant.hpp"
#include "perispline/dense.hpp"

namespace perispline {

/// Stencil (g_1..g_r) of normalized basis inner products
/// g_j = (Phi_j, Phi_1) / h = v_{2r}(j-1). Positive, and
/// g_1 + 2 (g_2 + ... + g_r) = 1.
std::vector<double> gram_stencil(int r);

/// The Gram symbol g(theta) = sum_{l in Z} v^_r(theta + 2 pi l)^2 as a
/// truncated lattice sum. L is chosen as the smallest truncation whose
/// proven envelope tail bound 2 (pi L)^{-2r} (1 + L/(2r-1)) is <= tail_tol.
struct SymbolEvaluator {
  int r = 0;
  long L = 0;
  double tail_tol = 0.0;
};

SymbolEvaluator make_symbol_evaluator(int r, double tail_tol = 1e-14);
double symbol_eval(const SymbolEvaluator& ev, double theta);

/// Same symbol as the finite cosine series g_1 + 2 sum_{j>=2} g_j cos((j-1) theta).
double symbol_from_stencil(const std::vector<double>& stencil, double theta);

/// Extrema of the symbol over a full period: refining uniform scan (doubling
/// until both extrema move by < 1e-12) plus golden-section polish, so the
/// returned lower bound is sharp to ~1e-15. upper is 1 up to rounding.
struct SpectralBounds {
  double lower = 0.0;
  double upper = 0.0;
};
SpectralBounds spectral_bounds(int r, int min_samples = 1024);

/// Gram matrix G of the normalized products (Phi_i, Phi_j)/h, as a symmetric
/// circulant with stencil gram_stencil(r).
CirculantMatrix make_gram_matrix(const SplineSpace& space);

struct GramSystem {
  SplineSpace space;
  std::vector<double> stencil;
  CirculantMatrix matrix;
  SpectralBounds bounds;
};
GramSystem make_gram_system(const SplineSpace& space);

/// First row gamma of G^{-1} via the DFT solve, symmetrized so the fold
/// identity gamma_{N+2-i} = gamma_i holds exactly. Rayleigh bounds give
/// 1 <= gamma_1 <= 1/g_lower and |gamma_i| <= 1/g_lower.
std::vector<double> inverse_first_row(const GramSystem& gs);

/// Checks |gamma_i| <= C1 q^{-(i-1)} + C2 q^{-(N-i)} + noise_floor for
/// i = r..floor(N/2)+1 (the fold symmetry covers the rest). The envelope can
/// drop below the accuracy of any floating-point solve (q^{-i} underflows
/// machine noise around i ~ 35 for q near 3.7), so verification needs an
/// explicit additive floor; pass 0 to check the bare inequality. max_slack is
/// the worst signed excess over the range (negative when the bound holds).
struct DecayCertificate {
  double C1 = 0.0;
  double C2 = 0.0;
  double q = 0.0;
  bool valid = false;
  double max_slack = 0.0;
};
DecayCertificate certify_decay(const std::vector<double>& gamma, int r, double C1,
                               double C2, double q, double noise_floor = 0.0);

/// Least C with (|gamma_i| - noise_floor)_+ <= C (q^{-(i-1)} + q^{-(N-i)})
/// over the same index range as certify_decay. The floor keeps solver noise
/// at indices with exponentially tiny envelopes from inflating the fit.
double fit_decay_constant(const std::vector<double>& gamma, int r, double q,
                          double noise_floor = 0.0);

/// Dense inverse and extreme eigenvalues of the banded truncation of G (the
/// circulant wrap corners beyond |i-j| > r-1 zeroed). Dense work, so N is
/// capped at 1024.
struct BandedInverse {
  DenseMatrix inverse;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};
BandedInverse banded_truncation_inverse(const GramSystem& gs);

/// Transfers a Demko envelope |B^{-1}_{ij}| <= C_B q^{-|i-j|} on the banded
/// truncation B to certificate constants for the circulant inverse row, via
/// gamma = B^{-1}(e_1 - rho) with rho = e_1 - B gamma supported on the first
/// and last r-1 slots:
///   C1 = C_B (|1 - rho_1| + sum_{j=2}^{r-1} |rho_j| q^{j-1}),
///   C2 = C_B  sum_{j=N-r+2}^{N} |rho_j| q^{N-j}.
/// Requires r >= 2.
struct DecayEnvelope {
  double C1 = 0.0;
  double C2 = 0.0;
  double q = 0.0;
};
DecayEnvelope decay_envelope_from_banded(const GramSystem& gs, const DemkoBound& banded_bound,
                                         const std::vector<double>& gamma);

/// sum_{i=1}^{floor(N/2)+1} (1 + i) |gamma_i|; bounded uniformly in N once
/// the decay certificate holds.
double weighted_gamma_sum(const std::vector<double>& gamma);

}  // namespace perispline
