#include "salient/features_lowlevel.hpp"

#include <algorithm>
#include <cmath>

#include "salient/image_ops.hpp"

namespace salient {

namespace {

constexpr double kFilterSigma = 1.0;  // basis filter scale on each pyramid level

inline int clampi(int v, int lo, int hi) { return v < lo ? lo : (v > hi ? hi : v); }

struct Taps {
  std::vector<double> g, g1, g2;  // gaussian, first and second derivative
  int radius;
};

Taps derivative_taps(double sigma) {
  Taps t;
  t.radius = std::max(2, int(std::ceil(4.0 * sigma)));
  double s2 = sigma * sigma;
  double gsum = 0.0;
  for (int i = -t.radius; i <= t.radius; ++i) {
    double x = i;
    double g = std::exp(-0.5 * x * x / s2);
    t.g.push_back(g);
    t.g1.push_back(-x / s2 * g);
    t.g2.push_back((x * x / (s2 * s2) - 1.0 / s2) * g);
    gsum += g;
  }
  for (double& v : t.g) v /= gsum;
  for (double& v : t.g1) v /= gsum;
  for (double& v : t.g2) v /= gsum;
  // zero the DC response of the even derivative so constants vanish exactly
  double mean2 = 0.0;
  for (double v : t.g2) mean2 += v;
  mean2 /= double(t.g2.size());
  for (double& v : t.g2) v -= mean2;
  return t;
}

Plane conv_separable(const Plane& src, const std::vector<double>& row_taps,
                     const std::vector<double>& col_taps, int radius) {
  const int w = src.width, h = src.height;
  Plane tmp(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    const float* row = &src.v[size_t(y) * w];
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += row_taps[size_t(i + radius)] * row[clampi(x + i, 0, w - 1)];
      tmp.at(x, y) = float(acc);
    }
  }
  Plane out(w, h);
#pragma omp parallel for schedule(static)
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      double acc = 0.0;
      for (int i = -radius; i <= radius; ++i) acc += col_taps[size_t(i + radius)] * tmp.at(x, clampi(y + i, 0, h - 1));
      out.at(x, y) = float(acc);
    }
  }
  return out;
}

// Basis responses: d2/dx2, d2/dxdy, d2/dy2 of a Gaussian-smoothed plane.
struct BasisResponses {
  Plane xx, xy, yy;
};

BasisResponses basis_responses(const Plane& p, double sigma) {
  Taps t = derivative_taps(sigma);
  BasisResponses b;
  b.xx = conv_separable(p, t.g2, t.g, t.radius);
  b.xy = conv_separable(p, t.g1, t.g1, t.radius);
  b.yy = conv_separable(p, t.g, t.g2, t.radius);
  return b;
}

Plane steer(const BasisResponses& b, double theta_deg) {
  double th = theta_deg * M_PI / 180.0;
  double c = std::cos(th), s = std::sin(th);
  double ka = c * c, kb = 2.0 * c * s, kc = s * s;
  Plane out(b.xx.width, b.xx.height);
  for (size_t i = 0; i < out.v.size(); ++i)
    out.v[i] = float(ka * b.xx.v[i] + kb * b.xy.v[i] + kc * b.yy.v[i]);
  return out;
}

Plane mean_removed_square(const Plane& p) {
  double mean = plane_sum(p) / double(p.size());
  Plane out(p.width, p.height);
  for (size_t i = 0; i < p.v.size(); ++i) {
    double d = p.v[i] - mean;
    out.v[i] = float(d * d);
  }
  return out;
}

}  // namespace

Plane steerable_response(const Plane& luma, double theta_deg, double sigma) {
  return steer(basis_responses(luma, sigma), theta_deg);
}

std::vector<Plane> steerable_energy(const RgbImage& img, const PyramidSpec& spec) {
  if (img.width < kMinImageDim || img.height < kMinImageDim)
    fail(Err::ImageTooSmall, "steerable_energy needs at least 32x32");
  const double thetas[4] = {0.0, 45.0, 90.0, 135.0};

  std::vector<Plane> levels;
  levels.push_back(img.luma());
  for (int s = 1; s < spec.scales; ++s) levels.push_back(downsample2(levels.back()));

  std::vector<Plane> out;
  for (int s = 0; s < spec.scales; ++s) {
    BasisResponses b = basis_responses(levels[size_t(s)], kFilterSigma);
    for (int o = 0; o < spec.orientations; ++o) {
      Plane r = steer(b, thetas[o]);
      for (float& v : r.v) v = v * v;
      Plane full = (s == 0) ? std::move(r) : resize_bilinear(r, img.width, img.height);
      minmax_normalize(full);
      out.push_back(std::move(full));
    }
  }
  if (spec.include_lowpass) {
    Plane low = gaussian_blur(levels.back(), 2.0 * kFilterSigma);
    Plane energy = mean_removed_square(low);
    Plane full = resize_bilinear(energy, img.width, img.height);
    minmax_normalize(full);
    out.push_back(std::move(full));
  }
  return out;
}

Plane itti_normalize(const Plane& p) {
  Plane out = p;
  minmax_normalize(out, 1e-9f);
  float mx = plane_max(out);
  if (mx <= 0.0f) return out;
  // strict 3x3 local maxima, global peaks excluded
  double sum = 0.0;
  int count = 0;
  for (int y = 1; y + 1 < out.height; ++y) {
    for (int x = 1; x + 1 < out.width; ++x) {
      float v = out.at(x, y);
      if (v >= mx - 1e-12f || v < 0.01f) continue;
      bool is_max = true;
      for (int dy = -1; dy <= 1 && is_max; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (out.at(x + dx, y + dy) >= v) {
            is_max = false;
            break;
          }
        }
      if (is_max) {
        sum += v;
        ++count;
      }
    }
  }
  double mbar = count > 0 ? sum / count : 0.0;
  float factor = float((1.0 - mbar) * (1.0 - mbar));
  for (float& v : out.v) v *= factor;
  return out;
}

std::array<Plane, 3> itti_channels(const RgbImage& img) {
  if (img.width < 64 || img.height < 64) fail(Err::ImageTooSmall, "itti_channels needs at least 64x64");

  constexpr int kLevels = 9;  // 0..8
  const int centers[3] = {2, 3, 4};
  const int deltas[2] = {3, 4};
  const double thetas[4] = {0.0, 45.0, 90.0, 135.0};

  // pyramids
  std::vector<Plane> lum{img.luma()}, rp{img.r}, gp{img.g}, bp{img.b};
  for (int l = 1; l < kLevels; ++l) {
    lum.push_back(downsample2(lum.back()));
    rp.push_back(downsample2(rp.back()));
    gp.push_back(downsample2(gp.back()));
    bp.push_back(downsample2(bp.back()));
  }

  // broadly tuned opponent components, clamped at zero
  auto opponents = [](const Plane& r, const Plane& g, const Plane& b) {
    Plane rg(r.width, r.height), by(r.width, r.height);
    for (size_t i = 0; i < r.v.size(); ++i) {
      double R = r.v[i] - 0.5 * (g.v[i] + b.v[i]);
      double G = g.v[i] - 0.5 * (r.v[i] + b.v[i]);
      double B = b.v[i] - 0.5 * (r.v[i] + g.v[i]);
      double Y = 0.5 * (r.v[i] + g.v[i]) - 0.5 * std::abs(r.v[i] - g.v[i]) - b.v[i];
      R = std::max(R, 0.0);
      G = std::max(G, 0.0);
      B = std::max(B, 0.0);
      Y = std::max(Y, 0.0);
      rg.v[i] = float(R - G);
      by.v[i] = float(B - Y);
    }
    return std::pair<Plane, Plane>(std::move(rg), std::move(by));
  };

  std::vector<Plane> rg_pyr, by_pyr;
  for (int l = 0; l < kLevels; ++l) {
    auto [rg, by] = opponents(rp[size_t(l)], gp[size_t(l)], bp[size_t(l)]);
    rg_pyr.push_back(std::move(rg));
    by_pyr.push_back(std::move(by));
  }

  // oriented magnitudes, needed at levels 2..8 only
  std::vector<std::array<Plane, 4>> orient(kLevels);
  for (int l = 2; l < kLevels; ++l) {
    BasisResponses basis = basis_responses(lum[size_t(l)], kFilterSigma);
    for (int o = 0; o < 4; ++o) {
      Plane r = steer(basis, thetas[o]);
      for (float& v : r.v) v = std::abs(v);
      orient[size_t(l)][size_t(o)] = std::move(r);
    }
  }

  auto center_surround = [](const Plane& c, const Plane& s, bool opponent_sign) {
    Plane up = resize_bilinear(s, c.width, c.height);
    Plane out(c.width, c.height);
    for (size_t i = 0; i < out.v.size(); ++i) {
      double d = opponent_sign ? c.v[i] + up.v[i] : c.v[i] - up.v[i];
      out.v[i] = float(std::abs(d));
    }
    return out;
  };

  const int cw = lum[2].width, ch = lum[2].height;  // combination grid
  Plane ibar(cw, ch, 0.0f), cbar(cw, ch, 0.0f);
  std::array<Plane, 4> obar;
  for (auto& p : obar) p = Plane(cw, ch, 0.0f);

  auto add_normalized = [&](Plane& acc, const Plane& fm) {
    Plane n = itti_normalize(fm);
    Plane rs = resize_bilinear(n, cw, ch);
    for (size_t i = 0; i < acc.v.size(); ++i) acc.v[i] += rs.v[i];
  };

  for (int c : centers) {
    for (int d : deltas) {
      int s = c + d;
      add_normalized(ibar, center_surround(lum[size_t(c)], lum[size_t(s)], false));
      // chromatic double opponency: (R-G) at center vs (G-R) at surround
      add_normalized(cbar, center_surround(rg_pyr[size_t(c)], rg_pyr[size_t(s)], true));
      add_normalized(cbar, center_surround(by_pyr[size_t(c)], by_pyr[size_t(s)], true));
      for (int o = 0; o < 4; ++o)
        add_normalized(obar[size_t(o)], center_surround(orient[size_t(c)][size_t(o)],
                                                        orient[size_t(s)][size_t(o)], false));
    }
  }

  Plane osum(cw, ch, 0.0f);
  for (int o = 0; o < 4; ++o) {
    Plane n = itti_normalize(obar[size_t(o)]);
    for (size_t i = 0; i < osum.v.size(); ++i) osum.v[i] += n.v[i];
  }

  std::array<Plane, 3> result;
  const Plane* maps[3] = {&ibar, &cbar, &osum};
  for (int k = 0; k < 3; ++k) {
    Plane n = itti_normalize(*maps[k]);
    Plane full = resize_bilinear(n, img.width, img.height);
    minmax_normalize(full);
    result[size_t(k)] = std::move(full);
  }
  return result;
}

std::array<Plane, 6> color_value_channels(const RgbImage& img) {
  std::array<Plane, 6> out;
  const Plane* chans[3] = {&img.r, &img.g, &img.b};
  const size_t n = img.r.size();
  for (int c = 0; c < 3; ++c) {
    out[size_t(c)] = *chans[c];
    std::array<size_t, 256> hist{};
    for (float v : chans[c]->v) hist[size_t(std::min(int(v * 256.0f), 255))]++;
    Plane prob(img.width, img.height);
    for (size_t i = 0; i < n; ++i)
      prob.v[i] = float(double(hist[size_t(std::min(int(chans[c]->v[i] * 256.0f), 255))]) / double(n));
    out[size_t(c + 3)] = std::move(prob);
  }
  return out;
}

std::vector<Plane> colorhist3d_probability(const RgbImage& img, const HistogramSpec& spec) {
  const int w = img.width, h = img.height;
  const size_t n = size_t(w) * h;
  const int bins = spec.bins_per_axis;

  std::array<std::vector<uint8_t>, 3> q8;
  const Plane* chans[3] = {&img.r, &img.g, &img.b};
  for (int c = 0; c < 3; ++c) {
    q8[size_t(c)].resize(n);
    for (size_t i = 0; i < n; ++i)
      q8[size_t(c)][i] = uint8_t(std::lround(chans[c]->v[i] * 255.0f));
  }

  std::vector<Plane> out;
  for (int radius : spec.median_radii) {
    std::array<std::vector<uint8_t>, 3> med;
    for (int c = 0; c < 3; ++c) med[size_t(c)] = median_filter_u8(q8[size_t(c)], w, h, radius);

    std::vector<uint32_t> hist(size_t(bins) * bins * bins, 0);
    std::vector<uint32_t> bin_of(n);
    for (size_t i = 0; i < n; ++i) {
      uint32_t rb = uint32_t(med[0][i]) * uint32_t(bins) / 256u;
      uint32_t gb = uint32_t(med[1][i]) * uint32_t(bins) / 256u;
      uint32_t bb = uint32_t(med[2][i]) * uint32_t(bins) / 256u;
      uint32_t idx = (rb * uint32_t(bins) + gb) * uint32_t(bins) + bb;
      bin_of[i] = idx;
      hist[idx]++;
    }
    Plane p(w, h);
    for (size_t i = 0; i < n; ++i) p.v[i] = float(double(hist[bin_of[i]]) / double(n));
    minmax_normalize(p);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace salient
