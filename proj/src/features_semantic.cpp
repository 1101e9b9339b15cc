#include "salient/features_semantic.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "salient/image_ops.hpp"

namespace salient {

HorizonEstimate estimate_horizon(const RgbImage& img) {
  if (img.width < 64 || img.height < 64) fail(Err::ImageTooSmall, "horizon needs at least 64x64");
  Plane gy = gradient_y(img.luma());
  const int lo = int(0.2 * img.height);
  const int hi = int(0.8 * img.height);  // middle 60% of rows
  double best = -1.0, total = 0.0;
  int best_row = lo;
  for (int y = lo; y < hi; ++y) {
    double e = 0.0;
    for (int x = 0; x < img.width; ++x) {
      double g = gy.at(x, y);
      e += g * g;
    }
    total += e;
    if (e > best) {
      best = e;
      best_row = y;
    }
  }
  HorizonEstimate est;
  est.row = best_row;
  est.confidence = total > 0.0 ? best / total : 0.0;
  return est;
}

Plane horizon_channel(const RgbImage& img, std::optional<double> override_row) {
  double row = override_row ? *override_row : estimate_horizon(img).row;
  const double band = 0.05 * img.height;
  Plane out(img.width, img.height);
  for (int y = 0; y < img.height; ++y) {
    double d = (y - row) / band;
    float v = float(std::exp(-0.5 * d * d));
    for (int x = 0; x < img.width; ++x) out.at(x, y) = v;
  }
  return out;
}

std::array<Plane, 3> detector_channels(int width, int height, const Plane* face,
                                       const Plane* person, const Plane* car) {
  std::array<Plane, 3> out;
  const Plane* maps[3] = {face, person, car};
  const char* names[3] = {"face", "person", "car"};
  for (int i = 0; i < 3; ++i) {
    if (!maps[i]) {
      out[size_t(i)] = Plane(width, height, 0.0f);
      continue;
    }
    if (maps[i]->width != width || maps[i]->height != height)
      fail(Err::DimensionMismatch, std::string(names[i]) + " map dimensions disagree with image");
    Plane p = *maps[i];
    for (float& v : p.v) v = std::clamp(v, 0.0f, 1.0f);
    out[size_t(i)] = std::move(p);
  }
  return out;
}

Plane center_channel(int width, int height) {
  if (width < 1 || height < 1) fail(Err::InvalidArgument, "center_channel needs positive dims");
  const double cx = (width - 1) / 2.0, cy = (height - 1) / 2.0;
  const double dmax = std::sqrt(cx * cx + cy * cy);
  Plane out(width, height);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      double d = std::sqrt((x - cx) * (x - cx) + (y - cy) * (y - cy));
      out.at(x, y) = dmax > 0.0 ? float(1.0 - d / dmax) : 1.0f;
    }
  return out;
}

std::unordered_map<std::string, double> load_horizon_overrides(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open horizon override file " + path);
  std::unordered_map<std::string, double> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == "image_id,horizon_row") continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) fail(Err::MalformedLine, path + " line " + std::to_string(lineno));
    try {
      out[line.substr(0, comma)] = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      fail(Err::MalformedLine, path + " line " + std::to_string(lineno));
    }
  }
  return out;
}

}  // namespace salient
