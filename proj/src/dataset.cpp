#include "salient/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "salient/image_ops.hpp"
#include "salient/rng.hpp"

namespace salient {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

std::string resolve_relative(const std::string& base_dir, const std::string& p) {
  if (p.empty()) return p;
  std::filesystem::path fp(p);
  if (fp.is_absolute()) return p;
  return (std::filesystem::path(base_dir) / fp).string();
}

}  // namespace

Corpus load_corpus_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open manifest " + path);
  std::string base = std::filesystem::path(path).parent_path().string();
  Corpus corpus;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    if (lineno == 1 && line.rfind("image_id", 0) == 0) continue;  // optional header
    auto f = split_csv_line(line);
    if (f.size() < 3) fail(Err::MalformedLine, "manifest line " + std::to_string(lineno));
    CorpusEntry e;
    e.image_id = f[0];
    e.image_path = resolve_relative(base, f[1]);
    e.fixation_path = resolve_relative(base, f[2]);
    if (f.size() > 3 && !f[3].empty()) e.face_path = resolve_relative(base, f[3]);
    if (f.size() > 4 && !f[4].empty()) e.person_path = resolve_relative(base, f[4]);
    if (f.size() > 5 && !f[5].empty()) e.car_path = resolve_relative(base, f[5]);
    for (const auto& prev : corpus.entries)
      if (prev.image_id == e.image_id)
        fail(Err::MalformedLine, "duplicate image id '" + e.image_id + "'");
    corpus.entries.push_back(std::move(e));
  }
  return corpus;
}

FixationSet load_fixations(const std::string& path, int width, int height,
                           const std::string& image_id) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open fixation file " + path);
  std::string line;
  if (!std::getline(in, line)) fail(Err::EmptyFile, path);
  line = strip_cr(line);
  if (line != "observer_id,x,y")
    fail(Err::MalformedHeader, path + ": expected 'observer_id,x,y', got '" + line + "'");
  FixationSet fix;
  fix.image_id = image_id;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    auto f = split_csv_line(line);
    if (f.size() != 3) fail(Err::MalformedLine, path + " line " + std::to_string(lineno));
    FixationRecord rec;
    try {
      size_t pos = 0;
      rec.observer_id = std::stoi(f[0], &pos);
      if (pos != f[0].size()) throw std::invalid_argument(f[0]);
      rec.x = std::stod(f[1], &pos);
      if (pos != f[1].size()) throw std::invalid_argument(f[1]);
      rec.y = std::stod(f[2], &pos);
      if (pos != f[2].size()) throw std::invalid_argument(f[2]);
    } catch (const std::exception&) {
      fail(Err::MalformedLine, path + " line " + std::to_string(lineno));
    }
    if (!(rec.x >= 0.0 && rec.x < width && rec.y >= 0.0 && rec.y < height))
      fail(Err::OutOfBounds, path + " line " + std::to_string(lineno) + ": (" +
                                 std::to_string(rec.x) + "," + std::to_string(rec.y) + ")");
    fix.records.push_back(rec);
  }
  if (fix.records.empty()) fail(Err::EmptyFile, path + ": no records");
  return fix;
}

void save_fixations(const FixationSet& fix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out << "observer_id,x,y\n";
  char buf[96];
  for (const auto& r : fix.records) {
    std::snprintf(buf, sizeof buf, "%d,%.6g,%.6g\n", r.observer_id, r.x, r.y);
    out << buf;
  }
}

Plane ground_truth_map_raw(const FixationSet& fix, int width, int height, double sigma) {
  if (fix.records.empty()) fail(Err::EmptyFixations, "ground_truth_map needs fixations");
  if (sigma <= 0.0) fail(Err::InvalidArgument, "sigma must be positive");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(fix.records.size());
  for (const auto& r : fix.records) pts.emplace_back(r.x, r.y);
  return accumulate_gaussians(pts, width, height, sigma);
}

SaliencyMap ground_truth_map(const FixationSet& fix, int width, int height, double sigma) {
  Plane m = ground_truth_map_raw(fix, width, height, sigma);
  minmax_normalize(m);
  return m;
}

double default_sigma(int width, int height) { return 0.02 * std::max(width, height); }

std::pair<Corpus, Corpus> split_corpus(const Corpus& c, const SplitSpec& s) {
  if (c.entries.empty()) fail(Err::EmptyInput, "split_corpus on empty corpus");
  if (!(s.train_fraction > 0.0 && s.train_fraction < 1.0))
    fail(Err::InvalidArgument, "train_fraction must be in (0,1)");
  std::vector<size_t> idx(c.entries.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(s.rng_seed);
  rng.shuffle(idx);
  size_t n_train = size_t(std::llround(double(c.entries.size()) * s.train_fraction));
  n_train = std::min(n_train, c.entries.size());
  Corpus train, test;
  for (size_t i = 0; i < idx.size(); ++i)
    (i < n_train ? train : test).entries.push_back(c.entries[idx[i]]);
  return {std::move(train), std::move(test)};
}

Plane load_channel_map(const std::string& path, int width, int height) {
  std::ifstream in(path);
  if (!in) fail(Err::IoError, "cannot open channel map " + path);
  std::string magic;
  int w = 0, h = 0;
  if (!(in >> magic >> w >> h) || magic != "CHAN")
    fail(Err::MalformedHeader, path + ": expected 'CHAN <width> <height>'");
  if (w != width || h != height)
    fail(Err::DimensionMismatch, path + ": map is " + std::to_string(w) + "x" + std::to_string(h) +
                                     ", image is " + std::to_string(width) + "x" +
                                     std::to_string(height));
  Plane p(w, h);
  for (size_t i = 0; i < p.v.size(); ++i) {
    double v = 0.0;
    if (!(in >> v)) fail(Err::CorruptFile, path + ": truncated at value " + std::to_string(i));
    if (!std::isfinite(v)) fail(Err::CorruptFile, path + ": non-finite value");
    p.v[i] = float(std::clamp(v, 0.0, 1.0));
  }
  return p;
}

void save_channel_map(const Plane& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Err::IoError, "cannot write " + path);
  out << "CHAN " << p.width << " " << p.height << "\n";
  char buf[48];
  for (int y = 0; y < p.height; ++y) {
    for (int x = 0; x < p.width; ++x) {
      std::snprintf(buf, sizeof buf, "%.9g", double(p.at(x, y)));
      out << buf << (x + 1 == p.width ? "\n" : " ");
    }
  }
}

RgbImage load_image(const std::string& path) {
  cv::Mat img = cv::imread(path, cv::IMREAD_COLOR);
  if (img.empty()) fail(Err::IoError, "cannot decode image " + path);
  Plane r(img.cols, img.rows), g(img.cols, img.rows), b(img.cols, img.rows);
  for (int y = 0; y < img.rows; ++y) {
    const cv::Vec3b* row = img.ptr<cv::Vec3b>(y);  // BGR
    for (int x = 0; x < img.cols; ++x) {
      b.at(x, y) = row[x][0] / 255.0f;
      g.at(x, y) = row[x][1] / 255.0f;
      r.at(x, y) = row[x][2] / 255.0f;
    }
  }
  return RgbImage::from_planes(std::move(r), std::move(g), std::move(b));
}

void save_gray_png(const Plane& p, const std::string& path) {
  cv::Mat img(p.height, p.width, CV_8UC1);
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x)
      img.at<uint8_t>(y, x) = uint8_t(std::lround(255.0 * std::clamp(double(p.at(x, y)), 0.0, 1.0)));
  if (!cv::imwrite(path, img)) fail(Err::IoError, "cannot write " + path);
}

void save_rgb_png(const RgbImage& img, const std::string& path) {
  cv::Mat m(img.height, img.width, CV_8UC3);
  for (int y = 0; y < img.height; ++y) {
    cv::Vec3b* row = m.ptr<cv::Vec3b>(y);
    for (int x = 0; x < img.width; ++x) {
      row[x][0] = uint8_t(std::lround(255.0 * img.b.at(x, y)));
      row[x][1] = uint8_t(std::lround(255.0 * img.g.at(x, y)));
      row[x][2] = uint8_t(std::lround(255.0 * img.r.at(x, y)));
    }
  }
  if (!cv::imwrite(path, m)) fail(Err::IoError, "cannot write " + path);
}

}  // namespace salient
