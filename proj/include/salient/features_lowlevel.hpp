#ifndef SALIENT_FEATURES_LOWLEVEL_HPP
#define SALIENT_FEATURES_LOWLEVEL_HPP

#include <array>
#include <vector>

#include "salient/types.hpp"

namespace salient {

struct PyramidSpec {
  int orientations = 4;  // 0, 45, 90, 135 degrees
  int scales = 3;
  bool include_lowpass = true;
};

struct HistogramSpec {
  int bins_per_axis = 8;
  std::array<int, 6> median_radii{1, 2, 4, 8, 16, 32};
};

// Directional second-derivative-of-Gaussian response (unsquared) of a single
// plane, steered to theta degrees. Exposed for the orientation tests.
Plane steerable_response(const Plane& luma, double theta_deg, double sigma);

// 13 planes: scale-major 4x3 band-pass energies on a dyadic pyramid, then the
// (mean-removed) low-pass residual energy. Each plane is upsampled to full
// resolution and min-max normalized.
std::vector<Plane> steerable_energy(const RgbImage& img, const PyramidSpec& spec = {});

// Itti-Koch map normalization operator N(.): scale to [0,1], then multiply by
// (1 - mean_of_local_maxima)^2 with the global maximum excluded from the mean.
Plane itti_normalize(const Plane& p);

// Intensity, color (RG/BY double opponency) and orientation conspicuity,
// center scales {2,3,4}, surround deltas {3,4}, min-max normalized.
std::array<Plane, 3> itti_channels(const RgbImage& img);

// Planes 0-2: raw R,G,B. Planes 3-5: per-pixel probability of the pixel's
// channel value under the image's own 256-bin marginal histogram.
std::array<Plane, 6> color_value_channels(const RgbImage& img);

// One plane per median radius: median-filter the image per channel, quantize
// to bins_per_axis^3 joint bins, and give each pixel its own bin's
// probability; each plane min-max normalized.
std::vector<Plane> colorhist3d_probability(const RgbImage& img, const HistogramSpec& spec = {});

}  // namespace salient

#endif
