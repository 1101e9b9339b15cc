#include "salient/sift.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "salient/image_ops.hpp"

namespace salient {

DogPyramid dog_pyramid(const Plane& luma, const SiftParams& p) {
  if (luma.width < kMinImageDim || luma.height < kMinImageDim)
    fail(Err::ImageTooSmall, "dog_pyramid needs at least 32x32");
  if (p.scales_per_octave < 2) fail(Err::InvalidArgument, "scales_per_octave must be >= 2");

  const int s = p.scales_per_octave;
  const double k = std::pow(2.0, 1.0 / s);

  DogPyramid pyr;
  pyr.params = p;

  Plane base = gaussian_blur(luma, p.base_sigma);
  for (int o = 0; o < p.octaves; ++o) {
    if (base.width < 8 || base.height < 8) break;  // octave too small to scan
    DogPyramid::Octave oct;
    oct.gauss.push_back(base);
    double sigma_prev = p.base_sigma;
    for (int i = 1; i < s + 2; ++i) {
      double sigma_i = p.base_sigma * std::pow(k, i);
      double inc = std::sqrt(sigma_i * sigma_i - sigma_prev * sigma_prev);
      oct.gauss.push_back(gaussian_blur(oct.gauss.back(), inc));
      sigma_prev = sigma_i;
    }
    for (int i = 0; i < s + 1; ++i) {
      Plane d(oct.gauss[0].width, oct.gauss[0].height);
      for (size_t j = 0; j < d.v.size(); ++j)
        d.v[j] = oct.gauss[size_t(i + 1)].v[j] - oct.gauss[size_t(i)].v[j];
      oct.dog.push_back(std::move(d));
    }
    // seed the next octave from the plane at 2x base_sigma (index s)
    const Plane& seed = oct.gauss[size_t(s)];
    Plane next((seed.width + 1) / 2, (seed.height + 1) / 2);
    for (int y = 0; y < next.height; ++y)
      for (int x = 0; x < next.width; ++x) next.at(x, y) = seed.at(2 * x, 2 * y);
    pyr.octaves.push_back(std::move(oct));
    base = std::move(next);
  }
  return pyr;
}

namespace {

struct RefineResult {
  bool ok = false;
  double off[3] = {0, 0, 0};  // x, y, scale
  double value = 0.0;         // interpolated DoG value
  double dxx = 0, dyy = 0, dxy = 0;
};

RefineResult refine(const std::vector<Plane>& dog, int level, int x, int y) {
  const Plane& d0 = dog[size_t(level - 1)];
  const Plane& d1 = dog[size_t(level)];
  const Plane& d2 = dog[size_t(level + 1)];
  auto v = [&](const Plane& p, int dx, int dy) { return double(p.at(x + dx, y + dy)); };

  RefineResult r;
  double gx = 0.5 * (v(d1, 1, 0) - v(d1, -1, 0));
  double gy = 0.5 * (v(d1, 0, 1) - v(d1, 0, -1));
  double gs = 0.5 * (v(d2, 0, 0) - v(d0, 0, 0));

  r.dxx = v(d1, 1, 0) + v(d1, -1, 0) - 2.0 * v(d1, 0, 0);
  r.dyy = v(d1, 0, 1) + v(d1, 0, -1) - 2.0 * v(d1, 0, 0);
  double dss = v(d2, 0, 0) + v(d0, 0, 0) - 2.0 * v(d1, 0, 0);
  r.dxy = 0.25 * (v(d1, 1, 1) - v(d1, -1, 1) - v(d1, 1, -1) + v(d1, -1, -1));
  double dxs = 0.25 * ((d2.at(x + 1, y) - d2.at(x - 1, y)) - (d0.at(x + 1, y) - d0.at(x - 1, y)));
  double dys = 0.25 * ((d2.at(x, y + 1) - d2.at(x, y - 1)) - (d0.at(x, y + 1) - d0.at(x, y - 1)));

  // solve H * off = -g by Cramer's rule on the 3x3 Hessian
  double H[3][3] = {{r.dxx, r.dxy, dxs}, {r.dxy, r.dyy, dys}, {dxs, dys, dss}};
  double g[3] = {gx, gy, gs};
  double det = H[0][0] * (H[1][1] * H[2][2] - H[1][2] * H[2][1]) -
               H[0][1] * (H[1][0] * H[2][2] - H[1][2] * H[2][0]) +
               H[0][2] * (H[1][0] * H[2][1] - H[1][1] * H[2][0]);
  if (std::abs(det) < 1e-18) {
    r.off[0] = r.off[1] = r.off[2] = 0.0;
  } else {
    for (int c = 0; c < 3; ++c) {
      double M[3][3];
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) M[i][j] = (j == c) ? -g[i] : H[i][j];
      double dc = M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1]) -
                  M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0]) +
                  M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]);
      r.off[c] = std::clamp(dc / det, -0.5, 0.5);
    }
  }
  r.value = v(d1, 0, 0) + 0.5 * (gx * r.off[0] + gy * r.off[1] + gs * r.off[2]);
  r.ok = true;
  return r;
}

}  // namespace

std::vector<Keypoint> detect_keypoints(const DogPyramid& pyr) {
  const SiftParams& p = pyr.params;
  const double k = std::pow(2.0, 1.0 / p.scales_per_octave);
  const double edge_limit = (p.edge_ratio + 1.0) * (p.edge_ratio + 1.0) / p.edge_ratio;

  std::vector<Keypoint> out;
  for (size_t o = 0; o < pyr.octaves.size(); ++o) {
    const auto& dog = pyr.octaves[o].dog;
    const double scale_factor = std::pow(2.0, double(o));
    const int levels = int(dog.size());
    for (int l = 1; l + 1 < levels; ++l) {
      const Plane& d = dog[size_t(l)];
      for (int y = 1; y + 1 < d.height; ++y) {
        for (int x = 1; x + 1 < d.width; ++x) {
          float c = d.at(x, y);
          bool is_max = true, is_min = true;
          for (int dl = -1; dl <= 1 && (is_max || is_min); ++dl) {
            const Plane& n = dog[size_t(l + dl)];
            for (int dy = -1; dy <= 1; ++dy)
              for (int dx = -1; dx <= 1; ++dx) {
                if (dl == 0 && dx == 0 && dy == 0) continue;
                float nv = n.at(x + dx, y + dy);
                if (nv >= c) is_max = false;
                if (nv <= c) is_min = false;
              }
          }
          if (!is_max && !is_min) continue;

          RefineResult r = refine(dog, l, x, y);
          if (std::abs(r.value) < p.contrast_threshold) continue;
          double tr = r.dxx + r.dyy;
          double det2 = r.dxx * r.dyy - r.dxy * r.dxy;
          if (det2 <= 0.0 || tr * tr / det2 >= edge_limit) continue;

          Keypoint kp;
          kp.x = (x + r.off[0]) * scale_factor;
          kp.y = (y + r.off[1]) * scale_factor;
          kp.scale = p.base_sigma * scale_factor * std::pow(k, l + r.off[2]);
          kp.contrast = r.value;
          out.push_back(kp);
        }
      }
    }
  }
  return out;
}

std::vector<Keypoint> sift_keypoints(const RgbImage& img, const SiftParams& p) {
  return detect_keypoints(dog_pyramid(img.luma(), p));
}

Plane sift_density_channel(const std::vector<Keypoint>& kps, int width, int height,
                           double density_sigma) {
  if (density_sigma <= 0.0) fail(Err::InvalidArgument, "density_sigma must be positive");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(kps.size());
  for (const auto& kp : kps) pts.emplace_back(kp.x, kp.y);
  Plane out = accumulate_gaussians(pts, width, height, density_sigma);
  minmax_normalize(out);
  return out;
}

void save_keypoints_csv(const std::vector<Keypoint>& kps, const std::string& image_id,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out << "image_id,x,y,scale,contrast\n";
  char buf[160];
  for (const auto& kp : kps) {
    std::snprintf(buf, sizeof buf, "%s,%.4f,%.4f,%.4f,%.6f\n", image_id.c_str(), kp.x, kp.y,
                  kp.scale, kp.contrast);
    out << buf;
  }
}

}  // namespace salient
