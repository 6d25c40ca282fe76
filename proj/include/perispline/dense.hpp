#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace perispline {

/// Minimal row-major dense matrix for results that are genuinely dense
/// (banded-truncation inverses, test oracles). Not a linear-algebra type.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

}  // namespace perispline
