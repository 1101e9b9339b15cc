#include "salient/types.hpp"

#include <cmath>

namespace salient {

RgbImage RgbImage::from_planes(Plane r, Plane g, Plane b) {
  if (!r.same_shape(g) || !r.same_shape(b))
    fail(Err::DimensionMismatch, "RGB planes disagree in shape");
  if (r.width < kMinImageDim || r.height < kMinImageDim)
    fail(Err::ImageTooSmall, "image must be at least 32x32, got " + std::to_string(r.width) + "x" +
                                 std::to_string(r.height));
  for (const Plane* p : {&r, &g, &b})
    for (float v : p->v)
      if (!(v >= 0.0f && v <= 1.0f)) fail(Err::InvalidImage, "channel value outside [0,1]");
  RgbImage img;
  img.width = r.width;
  img.height = r.height;
  img.r = std::move(r);
  img.g = std::move(g);
  img.b = std::move(b);
  return img;
}

Plane RgbImage::luma() const {
  Plane out(width, height);
  for (size_t i = 0; i < out.v.size(); ++i)
    out.v[i] = float(0.299 * r.v[i] + 0.587 * g.v[i] + 0.114 * b.v[i]);
  return out;
}

namespace {

constexpr ChannelInfo kRegistry[kNumChannels] = {
    {0, ChannelGroup::pyramid, "pyr_s0_o0"},
    {1, ChannelGroup::pyramid, "pyr_s0_o45"},
    {2, ChannelGroup::pyramid, "pyr_s0_o90"},
    {3, ChannelGroup::pyramid, "pyr_s0_o135"},
    {4, ChannelGroup::pyramid, "pyr_s1_o0"},
    {5, ChannelGroup::pyramid, "pyr_s1_o45"},
    {6, ChannelGroup::pyramid, "pyr_s1_o90"},
    {7, ChannelGroup::pyramid, "pyr_s1_o135"},
    {8, ChannelGroup::pyramid, "pyr_s2_o0"},
    {9, ChannelGroup::pyramid, "pyr_s2_o45"},
    {10, ChannelGroup::pyramid, "pyr_s2_o90"},
    {11, ChannelGroup::pyramid, "pyr_s2_o135"},
    {12, ChannelGroup::pyramid, "pyr_lowpass"},
    {13, ChannelGroup::itti, "itti_intensity"},
    {14, ChannelGroup::itti, "itti_color"},
    {15, ChannelGroup::itti, "itti_orientation"},
    {16, ChannelGroup::color, "red"},
    {17, ChannelGroup::color, "green"},
    {18, ChannelGroup::color, "blue"},
    {19, ChannelGroup::color, "red_prob"},
    {20, ChannelGroup::color, "green_prob"},
    {21, ChannelGroup::color, "blue_prob"},
    {22, ChannelGroup::colorhist, "colorhist_r1"},
    {23, ChannelGroup::colorhist, "colorhist_r2"},
    {24, ChannelGroup::colorhist, "colorhist_r4"},
    {25, ChannelGroup::colorhist, "colorhist_r8"},
    {26, ChannelGroup::colorhist, "colorhist_r16"},
    {27, ChannelGroup::colorhist, "colorhist_r32"},
    {28, ChannelGroup::horizon, "horizon"},
    {29, ChannelGroup::detector, "face"},
    {30, ChannelGroup::detector, "person"},
    {31, ChannelGroup::detector, "car"},
    {32, ChannelGroup::center, "center"},
    {33, ChannelGroup::sift, "sift_density"},
};

}  // namespace

std::span<const ChannelInfo> channel_registry() { return {kRegistry, kNumChannels}; }

const char* channel_group_name(ChannelGroup g) {
  switch (g) {
    case ChannelGroup::pyramid: return "pyramid";
    case ChannelGroup::itti: return "itti";
    case ChannelGroup::color: return "color";
    case ChannelGroup::colorhist: return "colorhist";
    case ChannelGroup::horizon: return "horizon";
    case ChannelGroup::detector: return "detector";
    case ChannelGroup::center: return "center";
    case ChannelGroup::sift: return "sift";
  }
  return "?";
}

void FeatureStack::validate() const {
  for (const Plane& p : channels) {
    if (p.width != width || p.height != height)
      fail(Err::InvalidImage, "feature plane dimensions disagree with stack");
    for (float v : p.v)
      if (!std::isfinite(v)) fail(Err::InvalidImage, "non-finite feature value");
  }
}

std::array<double, kNumChannels> FeatureStack::pixel_vector(int x, int y) const {
  std::array<double, kNumChannels> out;
  for (int c = 0; c < kNumChannels; ++c) out[c] = channels[c].at(x, y);
  return out;
}

}  // namespace salient
