#ifndef SALIENT_IMAGE_OPS_HPP
#define SALIENT_IMAGE_OPS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "salient/types.hpp"

namespace salient {

// Shared raster kernels. Each parallel kernel computes every output element
// independently, so the OpenMP version is bit-identical to its serial
// reference regardless of thread count. The *_serial variants are the
// reference implementations used by the tests and the kernel benchmark.

// Separable Gaussian blur, border clamped, kernel truncated at 4 sigma and
// renormalized. sigma <= 0 returns the input unchanged.
Plane gaussian_blur(const Plane& src, double sigma);
Plane gaussian_blur_serial(const Plane& src, double sigma);

// Blur (sigma = 1) then keep even-indexed rows/cols; output is ceil(n/2).
Plane downsample2(const Plane& src);

// Bilinear resize with align-corners mapping (symmetric under mirroring).
Plane resize_bilinear(const Plane& src, int out_w, int out_h);

// Min-max normalize to [0,1]; a (near-)constant plane becomes all zeros.
void minmax_normalize(Plane& p, float degenerate_eps = 1e-6f);

// Sum of unit-amplitude isotropic Gaussians centered at the given points,
// each truncated to a box of half-width ceil(3 sigma). Accumulation order per
// output pixel is fixed, so the parallel version matches the serial one.
Plane accumulate_gaussians(const std::vector<std::pair<double, double>>& points, int width,
                           int height, double sigma);
Plane accumulate_gaussians_serial(const std::vector<std::pair<double, double>>& points, int width,
                                  int height, double sigma);

// Median filter on 8-bit data with a (2r+1)^2 window, borders clamped.
// Parallel version uses a per-row sliding histogram; the serial reference
// sorts each window.
std::vector<uint8_t> median_filter_u8(const std::vector<uint8_t>& src, int width, int height,
                                      int radius);
std::vector<uint8_t> median_filter_u8_serial(const std::vector<uint8_t>& src, int width,
                                             int height, int radius);

// Central-difference gradients, borders clamped.
Plane gradient_x(const Plane& src);
Plane gradient_y(const Plane& src);

float plane_min(const Plane& p);
float plane_max(const Plane& p);
double plane_sum(const Plane& p);
bool plane_finite(const Plane& p);

}  // namespace salient

#endif
