#ifndef SALIENT_SAMPLING_HPP
#define SALIENT_SAMPLING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "salient/matrix.hpp"
#include "salient/types.hpp"

namespace salient {

struct SamplingSpec {
  int pos_per_image = 10;
  int neg_per_image = 10;
  double pos_percentile = 0.05;
  double neg_percentile = 0.30;
  int border_margin = 10;
  uint64_t rng_seed = 0;  // callers mix a per-image component into this
};

struct PixelMask {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> m;

  PixelMask() = default;
  PixelMask(int w, int h) : width(w), height(h), m(size_t(w) * h, 0) {}
  bool test(int x, int y) const { return m[size_t(y) * width + x] != 0; }
  void set(int x, int y) { m[size_t(y) * width + x] = 1; }
  size_t count() const;
};

// Top floor(pos_percentile*N) / bottom floor(neg_percentile*N) pixels by
// saliency. Ties at either end are broken by row-major order (stable); a
// pixel claimed by the positive mask never appears in the negative one.
std::pair<PixelMask, PixelMask> percentile_regions(const SaliencyMap& gt,
                                                   const SamplingSpec& spec);

struct DrawResult {
  std::vector<LabeledSample> samples;
  int pos_shortfall = 0;
  int neg_shortfall = 0;
};

// Uniform sampling without replacement from each mask, excluding pixels
// within border_margin of an image edge or within border_margin (Chebyshev)
// of the opposite mask. Shortfall is reported, not an error.
DrawResult draw_samples(const FeatureStack& stack, const PixelMask& pos, const PixelMask& neg,
                        const SamplingSpec& spec, const std::string& image_id);

std::pair<Matrix, std::vector<int>> assemble_matrix(const std::vector<LabeledSample>& samples);

struct NormalizationStats {
  std::vector<double> min, max;  // one pair per column
};

// Fit on training rows only; apply maps train min->0 max->1, clamps into
// [0,1], and sends constant columns to 0.
NormalizationStats fit_normalizer(const Matrix& m);
void apply_normalizer(const NormalizationStats& stats, Matrix& m);
void apply_normalizer(const NormalizationStats& stats, std::span<double> row);

// Binary sample matrix: magic SMPL, version u16, n u32, dim u16, then rows of
// dim little-endian f32 followed by an i8 label.
void save_samples_smpl(const Matrix& m, const std::vector<int>& labels, const std::string& path);
std::pair<Matrix, std::vector<int>> load_samples_smpl(const std::string& path);

// CSV with provenance: image_id,x,y,label,f00..f33
void save_samples_csv(const std::vector<LabeledSample>& samples, const std::string& path);

}  // namespace salient

#endif
