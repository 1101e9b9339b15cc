#ifndef SALIENT_TYPES_HPP
#define SALIENT_TYPES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "salient/errors.hpp"

namespace salient {

// Single-channel raster, row-major, origin top-left, x = column, y = row.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<float> v;

  Plane() = default;
  Plane(int w, int h, float fill = 0.0f) : width(w), height(h), v(size_t(w) * size_t(h), fill) {}

  float& at(int x, int y) { return v[size_t(y) * width + x]; }
  float at(int x, int y) const { return v[size_t(y) * width + x]; }
  size_t size() const { return v.size(); }
  bool same_shape(const Plane& o) const { return width == o.width && height == o.height; }
};

// A continuous saliency map is just a plane; after minmax_normalize it is in
// [0,1] with min 0 and max 1 (all zero when constant).
using SaliencyMap = Plane;

constexpr int kMinImageDim = 32;

struct RgbImage {
  int width = 0;
  int height = 0;
  Plane r, g, b;

  RgbImage() = default;
  // Validates the invariants: dimensions at least 32x32, all values in [0,1].
  static RgbImage from_planes(Plane r, Plane g, Plane b);

  Plane luma() const;  // 0.299 R + 0.587 G + 0.114 B
};

struct FixationRecord {
  int observer_id = 0;
  double x = 0.0;
  double y = 0.0;
};

struct FixationSet {
  std::string image_id;
  std::vector<FixationRecord> records;
};

// ----- canonical 34-channel registry -----

constexpr int kNumChannels = 34;

enum class ChannelGroup { pyramid, itti, color, colorhist, horizon, detector, center, sift };

struct ChannelInfo {
  int index;
  ChannelGroup group;
  const char* name;
};

// Fixed layout:
//   0..11  steerable-pyramid band-pass energy (scale-major, 4 orientations x 3 scales)
//   12     steerable low-pass residual energy
//   13..15 Itti intensity / color / orientation conspicuity
//   16..18 R, G, B values
//   19..21 per-channel value probability
//   22..27 3D color-histogram probability at 6 median-filter radii
//   28     horizon band
//   29..31 face / person / car detector maps
//   32     center prior
//   33     SIFT keypoint density
std::span<const ChannelInfo> channel_registry();
const char* channel_group_name(ChannelGroup g);

struct FeatureStack {
  int width = 0;
  int height = 0;
  std::array<Plane, kNumChannels> channels;

  FeatureStack() = default;
  FeatureStack(int w, int h) : width(w), height(h) {
    for (auto& c : channels) c = Plane(w, h, 0.0f);
  }

  // Throws InvalidImage if any plane has wrong dimensions or non-finite values.
  void validate() const;

  // The 34-vector for one pixel.
  std::array<double, kNumChannels> pixel_vector(int x, int y) const;
};

struct LabeledSample {
  std::array<double, kNumChannels> features{};
  int label = 0;  // +1 or -1
  std::string image_id;
  int x = 0;
  int y = 0;
};

}  // namespace salient

#endif
