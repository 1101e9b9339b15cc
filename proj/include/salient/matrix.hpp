#ifndef SALIENT_MATRIX_HPP
#define SALIENT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace salient {

// Dense row-major matrix of doubles; rows are samples, columns attributes.
struct Matrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& at(size_t r, size_t c) { return a[r * cols + c]; }
  double at(size_t r, size_t c) const { return a[r * cols + c]; }
  std::span<double> row(size_t r) { return {a.data() + r * cols, cols}; }
  std::span<const double> row(size_t r) const { return {a.data() + r * cols, cols}; }
};

}  // namespace salient

#endif
