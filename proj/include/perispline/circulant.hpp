#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace perispline {

/// Raised by solve() when the spectrum is numerically singular; carries the
/// offending extreme eigenvalue magnitudes.
class SingularMatrixError : public std::runtime_error {
 public:
  SingularMatrixError(double min_abs, double max_abs);
  double min_abs_eigenvalue() const noexcept { return min_abs_; }
  double max_abs_eigenvalue() const noexcept { return max_abs_; }

 private:
  double min_abs_;
  double max_abs_;
};

/// Circulant matrix acting on 1-based circular vectors:
///   (C v)_i = sum_{j=1}^{n} c_j v_{i+j-1 mod n},
/// so the stored row (c_1..c_n) is correlated against v. Eigenvalues are
/// lambda_k = sum_j c_j w^{(j-1)(k-1)}, w = exp(2 pi i / n), with the
/// eigenvector u_k = (w^{(i-1)(k-1)})_i.
struct CirculantMatrix {
  std::vector<double> first_row;

  std::size_t size() const { return first_row.size(); }
};

CirculantMatrix make_circulant(std::vector<double> first_row);

/// Symmetric stencil (c_1; c_2..c_k): diagonal plus mirrored off-diagonals at
/// circular lags 1..k-1.
struct SymmetricStencil {
  std::size_t n = 0;
  double diag = 0.0;
  std::vector<double> offsets;
};

/// First row (c_1, c_2, ..., c_k, 0, ..., 0, c_k, ..., c_2). The stencil may
/// not be wider than floor(n/2)+1, otherwise lags would alias.
CirculantMatrix assemble_symmetric(const SymmetricStencil& stencil);

/// First row (0, c_2, ..., c_k, 0, ..., 0, -c_k, ..., -c_2). Antisymmetry
/// forces a zero lag-n/2 coefficient for even n, so the width cap is
/// floor((n-1)/2) off-diagonals.
CirculantMatrix assemble_antisymmetric(std::size_t n, const std::vector<double>& offsets);

/// Circular shift (P^k v)_i = v_{i+k mod n}; any sign of k.
std::vector<double> shift_apply(long k, const std::vector<double>& v);

/// FFT path: diagonalize, multiply, transform back. O(n log n) for any n.
std::vector<double> matvec(const CirculantMatrix& C, const std::vector<double>& v);

/// Direct path skipping zero stencil entries; O(n * nnz).
std::vector<double> matvec_direct(const CirculantMatrix& C, const std::vector<double>& v);

/// Eigenvalues in DFT index order k = 1..n.
std::vector<std::complex<double>> eigenvalues(const CirculantMatrix& C);

/// Eigenvalues of a symmetric circulant are real; asserts the imaginary
/// residue stays below 1e-12 (relative to max(1, max |lambda|)).
std::vector<double> eigenvalues_symmetric(const CirculantMatrix& C);

/// DFT-diagonalized solve. Throws SingularMatrixError when
/// min |lambda| <= 1e3 * eps * max |lambda|; verifies the relative residual
/// ||C x - b||_inf / ||b||_inf <= residual_tol afterwards.
std::vector<double> solve(const CirculantMatrix& C, const std::vector<double>& rhs,
                          double residual_tol = 1e-12);

/// Exponential-decay envelope for the inverse of a banded symmetric positive
/// definite matrix with the given spectrum and bandwidth k:
///   |(A^{-1})_{ij}| <= C q^{-|i-j|},
///   q = ((sqrt(lmax)+sqrt(lmin)) / (sqrt(lmax)-sqrt(lmin)))^{1/k},
///   C = (1/lmin) * max(1, (sqrt(lmin)+sqrt(lmax))^2 / (2 lmax)).
struct DemkoBound {
  double C = 0.0;
  double q = 0.0;
};
DemkoBound demko_bound(double lambda_min, double lambda_max, int bandwidth);

}  // namespace perispline
