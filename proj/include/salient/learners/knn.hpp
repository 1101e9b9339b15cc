#ifndef SALIENT_LEARNERS_KNN_HPP
#define SALIENT_LEARNERS_KNN_HPP

#include <span>
#include <vector>

#include "salient/matrix.hpp"

namespace salient {

struct KnnParams {
  int k = 9;
};

struct KnnModel {
  Matrix train;
  std::vector<int> labels;
  KnnParams params;
};

// Fraction of positive labels among the k nearest rows by Euclidean distance;
// ties resolved toward the lower row index. Throws KExceedsN when k > n.
double knn_score(const Matrix& train, const std::vector<int>& labels, std::span<const double> x,
                 const KnnParams& p);

inline double knn_score(const KnnModel& m, std::span<const double> x) {
  return knn_score(m.train, m.labels, x, m.params);
}

}  // namespace salient

#endif
