#pragma once

#include <complex>
#include <vector>

namespace perispline::detail {

/// Unnormalized discrete Fourier transform of arbitrary length n >= 1.
/// forward:  X_k = sum_j x_j exp(-2 pi i j k / n)
/// inverse:  X_k = sum_j x_j exp(+2 pi i j k / n)   (no 1/n factor)
/// Power-of-two lengths use an iterative radix-2 transform; everything else
/// goes through Bluestein's chirp-z reduction to a padded power of two.
std::vector<std::complex<double>> dft(std::vector<std::complex<double>> x,
                                      bool inverse);

}  // namespace perispline::detail
