#include "salient/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numeric>

#include "salient/rng.hpp"

namespace salient {

size_t PixelMask::count() const {
  size_t n = 0;
  for (uint8_t b : m) n += b;
  return n;
}

std::pair<PixelMask, PixelMask> percentile_regions(const SaliencyMap& gt,
                                                   const SamplingSpec& spec) {
  const size_t n = gt.size();
  const size_t n_pos = size_t(spec.pos_percentile * double(n));
  const size_t n_neg = size_t(spec.neg_percentile * double(n));

  std::vector<uint32_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0u);

  PixelMask pos(gt.width, gt.height), neg(gt.width, gt.height);

  std::vector<uint32_t> order = idx;
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) { return gt.v[a] > gt.v[b]; });
  for (size_t i = 0; i < n_pos && i < n; ++i) pos.m[order[i]] = 1;

  order = idx;
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t a, uint32_t b) { return gt.v[a] < gt.v[b]; });
  size_t taken = 0;
  for (size_t i = 0; i < n && taken < n_neg; ++i) {
    if (pos.m[order[i]]) continue;
    neg.m[order[i]] = 1;
    ++taken;
  }
  return {std::move(pos), std::move(neg)};
}

namespace {

// 1 where any set pixel lies within Chebyshev distance `radius`
PixelMask dilate_box(const PixelMask& src, int radius) {
  const int w = src.width, h = src.height;
  PixelMask horiz(w, h), out(w, h);
  for (int y = 0; y < h; ++y) {
    int inside = 0;  // count of set pixels in [x-radius, x+radius]
    for (int x = -radius; x < w; ++x) {
      int add = x + radius;
      if (add < w && src.test(add, y)) ++inside;
      int drop = x - radius - 1;
      if (drop >= 0 && src.test(drop, y)) --inside;
      if (x >= 0 && inside > 0) horiz.set(x, y);
    }
  }
  for (int x = 0; x < w; ++x) {
    int inside = 0;
    for (int y = -radius; y < h; ++y) {
      int add = y + radius;
      if (add < h && horiz.test(x, add)) ++inside;
      int drop = y - radius - 1;
      if (drop >= 0 && horiz.test(x, drop)) --inside;
      if (y >= 0 && inside > 0) out.set(x, y);
    }
  }
  return out;
}

std::vector<uint32_t> eligible_pixels(const PixelMask& own, const PixelMask& opposite_dilated,
                                      int margin) {
  std::vector<uint32_t> out;
  const int w = own.width, h = own.height;
  for (int y = 0; y < h; ++y) {
    if (y < margin || y >= h - margin) continue;
    for (int x = margin; x < w - margin; ++x) {
      if (!own.test(x, y)) continue;
      if (opposite_dilated.test(x, y)) continue;
      out.push_back(uint32_t(y) * uint32_t(w) + uint32_t(x));
    }
  }
  return out;
}

}  // namespace

DrawResult draw_samples(const FeatureStack& stack, const PixelMask& pos, const PixelMask& neg,
                        const SamplingSpec& spec, const std::string& image_id) {
  if (pos.width != stack.width || pos.height != stack.height || neg.width != stack.width ||
      neg.height != stack.height)
    fail(Err::DimensionMismatch, "masks and stack disagree");

  PixelMask pos_zone = dilate_box(pos, spec.border_margin);
  PixelMask neg_zone = dilate_box(neg, spec.border_margin);

  std::vector<uint32_t> pos_ok = eligible_pixels(pos, neg_zone, spec.border_margin);
  std::vector<uint32_t> neg_ok = eligible_pixels(neg, pos_zone, spec.border_margin);

  Rng rng(spec.rng_seed);
  DrawResult res;
  auto take = [&](std::vector<uint32_t>& pool, int want, int label, int& shortfall) {
    int got = std::min<int>(want, int(pool.size()));
    shortfall = want - got;
    for (int i = 0; i < got; ++i) {
      size_t j = size_t(i) + size_t(rng.next_below(pool.size() - size_t(i)));
      std::swap(pool[size_t(i)], pool[j]);
      uint32_t px = pool[size_t(i)];
      LabeledSample s;
      s.x = int(px % uint32_t(stack.width));
      s.y = int(px / uint32_t(stack.width));
      s.features = stack.pixel_vector(s.x, s.y);
      s.label = label;
      s.image_id = image_id;
      res.samples.push_back(std::move(s));
    }
  };
  take(pos_ok, spec.pos_per_image, +1, res.pos_shortfall);
  take(neg_ok, spec.neg_per_image, -1, res.neg_shortfall);
  return res;
}

std::pair<Matrix, std::vector<int>> assemble_matrix(const std::vector<LabeledSample>& samples) {
  if (samples.empty()) fail(Err::EmptyInput, "assemble_matrix on empty sample list");
  Matrix m(samples.size(), kNumChannels);
  std::vector<int> labels(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    for (int c = 0; c < kNumChannels; ++c) {
      double v = samples[i].features[size_t(c)];
      if (!std::isfinite(v)) fail(Err::InvalidImage, "non-finite feature in sample");
      m.at(i, size_t(c)) = v;
    }
    labels[i] = samples[i].label;
  }
  return {std::move(m), std::move(labels)};
}

NormalizationStats fit_normalizer(const Matrix& m) {
  NormalizationStats s;
  s.min.assign(m.cols, std::numeric_limits<double>::max());
  s.max.assign(m.cols, std::numeric_limits<double>::lowest());
  for (size_t r = 0; r < m.rows; ++r)
    for (size_t c = 0; c < m.cols; ++c) {
      s.min[c] = std::min(s.min[c], m.at(r, c));
      s.max[c] = std::max(s.max[c], m.at(r, c));
    }
  return s;
}

void apply_normalizer(const NormalizationStats& stats, std::span<double> row) {
  for (size_t c = 0; c < row.size(); ++c) {
    double lo = stats.min[c], hi = stats.max[c];
    row[c] = hi > lo ? std::clamp((row[c] - lo) / (hi - lo), 0.0, 1.0) : 0.0;
  }
}

void apply_normalizer(const NormalizationStats& stats, Matrix& m) {
  for (size_t r = 0; r < m.rows; ++r) apply_normalizer(stats, m.row(r));
}

namespace {

template <typename T>
void write_raw(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T read_raw(std::ifstream& in, const std::string& path) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v)) fail(Err::CorruptFile, path + ": truncated");
  return v;
}

}  // namespace

void save_samples_smpl(const Matrix& m, const std::vector<int>& labels, const std::string& path) {
  if (labels.size() != m.rows) fail(Err::DimensionMismatch, "labels/rows disagree");
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out.write("SMPL", 4);
  write_raw<uint16_t>(out, 1);
  write_raw<uint32_t>(out, uint32_t(m.rows));
  write_raw<uint16_t>(out, uint16_t(m.cols));
  for (size_t r = 0; r < m.rows; ++r) {
    for (size_t c = 0; c < m.cols; ++c) write_raw<float>(out, float(m.at(r, c)));
    write_raw<int8_t>(out, int8_t(labels[r]));
  }
}

std::pair<Matrix, std::vector<int>> load_samples_smpl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::IoError, "cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "SMPL", 4) != 0)
    fail(Err::CorruptFile, path + ": bad magic");
  uint16_t version = read_raw<uint16_t>(in, path);
  if (version != 1) fail(Err::VersionMismatch, path + ": version " + std::to_string(version));
  uint32_t n = read_raw<uint32_t>(in, path);
  uint16_t dim = read_raw<uint16_t>(in, path);
  Matrix m(n, dim);
  std::vector<int> labels(n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < dim; ++c) m.at(r, c) = double(read_raw<float>(in, path));
    labels[r] = read_raw<int8_t>(in, path);
  }
  return {std::move(m), std::move(labels)};
}

void save_samples_csv(const std::vector<LabeledSample>& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out << "image_id,x,y,label";
  char buf[48];
  for (int c = 0; c < kNumChannels; ++c) {
    std::snprintf(buf, sizeof buf, ",f%02d", c);
    out << buf;
  }
  out << "\n";
  for (const auto& s : samples) {
    out << s.image_id << "," << s.x << "," << s.y << "," << (s.label > 0 ? "1" : "-1");
    for (int c = 0; c < kNumChannels; ++c) {
      std::snprintf(buf, sizeof buf, ",%.9g", s.features[size_t(c)]);
      out << buf;
    }
    out << "\n";
  }
}

}  // namespace salient
