#ifndef SALIENT_DATASET_HPP
#define SALIENT_DATASET_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "salient/types.hpp"

namespace salient {

struct CorpusEntry {
  std::string image_id;
  std::string image_path;
  std::string fixation_path;
  std::optional<std::string> face_path;
  std::optional<std::string> person_path;
  std::optional<std::string> car_path;
};

struct Corpus {
  std::vector<CorpusEntry> entries;
};

struct SplitSpec {
  double train_fraction = 0.8;
  uint64_t rng_seed = 0;
};

// Manifest CSV: image_id,image_path,fixation_path[,face_path,person_path,car_path]
// Relative paths are resolved against the manifest's directory.
Corpus load_corpus_manifest(const std::string& path);

// Fixation CSV: header "observer_id,x,y", one record per line. Records outside
// [0,width) x [0,height) are rejected with OutOfBounds.
FixationSet load_fixations(const std::string& path, int width, int height,
                           const std::string& image_id = "");
void save_fixations(const FixationSet& fix, const std::string& path);

// Unnormalized sum of unit Gaussians over the fixations (truncated at 3 sigma).
Plane ground_truth_map_raw(const FixationSet& fix, int width, int height, double sigma);
// The raw map min-max normalized to [0,1].
SaliencyMap ground_truth_map(const FixationSet& fix, int width, int height, double sigma);

// Default ground-truth / density sigma: 2% of the larger image dimension.
double default_sigma(int width, int height);

// Deterministic 80/20-style split: shuffle ids with the seeded PRNG, take the
// first round(N * train_fraction) as the training set.
std::pair<Corpus, Corpus> split_corpus(const Corpus& c, const SplitSpec& s);

// Channel-map file: "CHAN <width> <height>\n" then width*height ASCII reals,
// row-major. Values are clamped to [0,1] on load.
Plane load_channel_map(const std::string& path, int width, int height);
void save_channel_map(const Plane& p, const std::string& path);

// PNG/JPEG decode to 8-bit RGB scaled into [0,1].
RgbImage load_image(const std::string& path);
// 8-bit grayscale PNG, value = round(255 * v).
void save_gray_png(const Plane& p, const std::string& path);
void save_rgb_png(const RgbImage& img, const std::string& path);

}  // namespace salient

#endif
