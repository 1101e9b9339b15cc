#include "salient/image_ops.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace salient {

namespace {

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

std::vector<double> gauss_kernel(double sigma) {
  int radius = std::max(1, int(std::ceil(4.0 * sigma)));
  std::vector<double> k(size_t(2 * radius + 1));
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    double w = std::exp(-0.5 * double(i) * double(i) / (sigma * sigma));
    k[size_t(i + radius)] = w;
    sum += w;
  }
  for (double& w : k) w /= sum;
  return k;
}

// Horizontal then vertical pass. Row/column results are independent, so the
// omp loops produce exactly the serial output.
Plane blur_impl(const Plane& src, double sigma, bool parallel) {
  if (sigma <= 0.0) return src;
  const std::vector<double> k = gauss_kernel(sigma);
  const int radius = int(k.size() / 2);
  const int w = src.width, h = src.height;

  Plane tmp(w, h);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    const float* row = &src.v[size_t(y) * w];
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[size_t(i + radius)] * row[clampi(x + i, 0, w - 1)];
      tmp.at(x, y) = float(acc);
    }
  }

  Plane out(w, h);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += k[size_t(i + radius)] * tmp.at(x, clampi(y + i, 0, h - 1));
      out.at(x, y) = float(acc);
    }
  }
  return out;
}

Plane accumulate_impl(const std::vector<std::pair<double, double>>& points, int width, int height,
                      double sigma, bool parallel) {
  Plane out(width, height, 0.0f);
  if (points.empty()) return out;
  const double r = std::ceil(3.0 * sigma);
  const double inv2s2 = 1.0 / (2.0 * sigma * sigma);
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      double acc = 0.0;
      for (const auto& [fx, fy] : points) {
        double dx = x - fx, dy = y - fy;
        if (std::abs(dx) > r || std::abs(dy) > r) continue;
        acc += std::exp(-(dx * dx + dy * dy) * inv2s2);
      }
      out.at(x, y) = float(acc);
    }
  }
  return out;
}

std::vector<uint8_t> median_impl(const std::vector<uint8_t>& src, int width, int height, int radius,
                                 bool parallel) {
  std::vector<uint8_t> out(src.size());
  const int win = 2 * radius + 1;
  const int half = (win * win) / 2;  // window count is odd; this is the median rank
#pragma omp parallel for schedule(static) if (parallel)
  for (int y = 0; y < height; ++y) {
    int hist[256] = {0};
    // seed histogram with the window centered at x = 0
    for (int dy = -radius; dy <= radius; ++dy) {
      int sy = clampi(y + dy, 0, height - 1);
      for (int dx = -radius; dx <= radius; ++dx)
        hist[src[size_t(sy) * width + clampi(dx, 0, width - 1)]]++;
    }
    for (int x = 0; x < width; ++x) {
      if (x > 0) {
        // slide: drop column x-1-radius, add column x+radius
        int out_col = clampi(x - 1 - radius, 0, width - 1);
        int in_col = clampi(x + radius, 0, width - 1);
        for (int dy = -radius; dy <= radius; ++dy) {
          int sy = clampi(y + dy, 0, height - 1);
          hist[src[size_t(sy) * width + out_col]]--;
          hist[src[size_t(sy) * width + in_col]]++;
        }
      }
      int cum = 0, med = 0;
      for (int v = 0; v < 256; ++v) {
        cum += hist[v];
        if (cum > half) {
          med = v;
          break;
        }
      }
      out[size_t(y) * width + x] = uint8_t(med);
    }
  }
  return out;
}

}  // namespace

Plane gaussian_blur(const Plane& src, double sigma) { return blur_impl(src, sigma, true); }
Plane gaussian_blur_serial(const Plane& src, double sigma) { return blur_impl(src, sigma, false); }

Plane downsample2(const Plane& src) {
  Plane blurred = gaussian_blur(src, 1.0);
  int ow = (src.width + 1) / 2, oh = (src.height + 1) / 2;
  Plane out(ow, oh);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) out.at(x, y) = blurred.at(2 * x, 2 * y);
  return out;
}

Plane resize_bilinear(const Plane& src, int out_w, int out_h) {
  Plane out(out_w, out_h);
  const double sx = out_w > 1 ? double(src.width - 1) / double(out_w - 1) : 0.0;
  const double sy = out_h > 1 ? double(src.height - 1) / double(out_h - 1) : 0.0;
#pragma omp parallel for schedule(static)
  for (int y = 0; y < out_h; ++y) {
    double fy = y * sy;
    int y0 = int(fy);
    int y1 = std::min(y0 + 1, src.height - 1);
    double wy = fy - y0;
    for (int x = 0; x < out_w; ++x) {
      double fx = x * sx;
      int x0 = int(fx);
      int x1 = std::min(x0 + 1, src.width - 1);
      double wx = fx - x0;
      double v = (1 - wy) * ((1 - wx) * src.at(x0, y0) + wx * src.at(x1, y0)) +
                 wy * ((1 - wx) * src.at(x0, y1) + wx * src.at(x1, y1));
      out.at(x, y) = float(v);
    }
  }
  return out;
}

void minmax_normalize(Plane& p, float degenerate_eps) {
  if (p.v.empty()) return;
  float lo = plane_min(p), hi = plane_max(p);
  if (hi - lo < degenerate_eps) {
    std::fill(p.v.begin(), p.v.end(), 0.0f);
    return;
  }
  float inv = 1.0f / (hi - lo);
  for (float& v : p.v) v = (v - lo) * inv;
}

Plane accumulate_gaussians(const std::vector<std::pair<double, double>>& points, int width,
                           int height, double sigma) {
  return accumulate_impl(points, width, height, sigma, true);
}
Plane accumulate_gaussians_serial(const std::vector<std::pair<double, double>>& points, int width,
                                  int height, double sigma) {
  return accumulate_impl(points, width, height, sigma, false);
}

std::vector<uint8_t> median_filter_u8(const std::vector<uint8_t>& src, int width, int height,
                                      int radius) {
  return median_impl(src, width, height, radius, true);
}

std::vector<uint8_t> median_filter_u8_serial(const std::vector<uint8_t>& src, int width, int height,
                                             int radius) {
  // sort-based reference
  std::vector<uint8_t> out(src.size());
  std::vector<uint8_t> window;
  const int win = 2 * radius + 1;
  window.reserve(size_t(win) * win);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      window.clear();
      for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx)
          window.push_back(src[size_t(clampi(y + dy, 0, height - 1)) * width + clampi(x + dx, 0, width - 1)]);
      auto mid = window.begin() + window.size() / 2;
      std::nth_element(window.begin(), mid, window.end());
      out[size_t(y) * width + x] = *mid;
    }
  }
  return out;
}

Plane gradient_x(const Plane& src) {
  Plane out(src.width, src.height);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x)
      out.at(x, y) =
          0.5f * (src.at(clampi(x + 1, 0, src.width - 1), y) - src.at(clampi(x - 1, 0, src.width - 1), y));
  return out;
}

Plane gradient_y(const Plane& src) {
  Plane out(src.width, src.height);
  for (int y = 0; y < src.height; ++y)
    for (int x = 0; x < src.width; ++x)
      out.at(x, y) =
          0.5f * (src.at(x, clampi(y + 1, 0, src.height - 1)) - src.at(x, clampi(y - 1, 0, src.height - 1)));
  return out;
}

float plane_min(const Plane& p) {
  float m = std::numeric_limits<float>::max();
  for (float v : p.v) m = std::min(m, v);
  return m;
}

float plane_max(const Plane& p) {
  float m = std::numeric_limits<float>::lowest();
  for (float v : p.v) m = std::max(m, v);
  return m;
}

double plane_sum(const Plane& p) {
  double s = 0.0;
  for (float v : p.v) s += v;
  return s;
}

bool plane_finite(const Plane& p) {
  for (float v : p.v)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace salient
