#ifndef SALIENT_FEATURES_SEMANTIC_HPP
#define SALIENT_FEATURES_SEMANTIC_HPP

#include <array>
#include <optional>
#include <string>
#include <unordered_map>

#include "salient/types.hpp"

namespace salient {

struct HorizonEstimate {
  double row = 0.0;
  double confidence = 0.0;  // edge-energy share of the winning row, in [0,1]
};

// Dominant horizontal-edge row within the middle 60% of image height.
HorizonEstimate estimate_horizon(const RgbImage& img);

// Soft band around the horizon row: exp(-(y-row)^2 / (2 (0.05 h)^2)).
// override_row, when given, replaces the internal estimate.
Plane horizon_channel(const RgbImage& img, std::optional<double> override_row = {});

// Face/person/car planes. Missing maps become zero planes; values are clamped
// to [0,1]; a supplied map with wrong dimensions is an error.
std::array<Plane, 3> detector_channels(int width, int height, const Plane* face,
                                       const Plane* person, const Plane* car);

// 1 - distance-to-center / distance-to-farthest-corner.
Plane center_channel(int width, int height);

// Optional per-image horizon override file: CSV "image_id,horizon_row".
std::unordered_map<std::string, double> load_horizon_overrides(const std::string& path);

}  // namespace salient

#endif
