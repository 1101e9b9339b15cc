#ifndef SALIENT_SIFT_HPP
#define SALIENT_SIFT_HPP

#include <vector>

#include "salient/types.hpp"

namespace salient {

struct SiftParams {
  int octaves = 4;
  int scales_per_octave = 3;
  double base_sigma = 1.6;
  double contrast_threshold = 0.03;
  double edge_ratio = 10.0;
  double density_sigma = 0.0;  // 0 = use 0.02 * max(w, h)
};

struct Keypoint {
  double x = 0.0;  // full-resolution coordinates
  double y = 0.0;
  double scale = 0.0;
  double contrast = 0.0;  // interpolated DoG value
};

struct DogPyramid {
  struct Octave {
    std::vector<Plane> gauss;  // scales_per_octave + 2 planes
    std::vector<Plane> dog;    // scales_per_octave + 1 planes
  };
  std::vector<Octave> octaves;
  SiftParams params;
};

// Gaussian scale space with sigma spaced by 2^(1/scales_per_octave) from
// base_sigma, adjacent differences forming the DoG planes; octaves
// downsampled by 2 (ceil dimensions).
DogPyramid dog_pyramid(const Plane& luma, const SiftParams& p = {});

// 3x3x3 extrema, one quadratic refinement step (offsets clamped to +-0.5),
// low-contrast and edge-response rejection, coordinates mapped back to full
// resolution.
std::vector<Keypoint> detect_keypoints(const DogPyramid& dog);

std::vector<Keypoint> sift_keypoints(const RgbImage& img, const SiftParams& p = {});

// Sum of unit Gaussians (truncated at 3 sigma) at keypoint positions,
// min-max normalized; no keypoints gives an all-zero plane.
Plane sift_density_channel(const std::vector<Keypoint>& kps, int width, int height,
                           double density_sigma);

// Keypoint dump: CSV "image_id,x,y,scale,contrast".
void save_keypoints_csv(const std::vector<Keypoint>& kps, const std::string& image_id,
                        const std::string& path);

}  // namespace salient

#endif
