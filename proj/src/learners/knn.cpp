#include "salient/learners/knn.hpp"

#include <algorithm>
#include <cmath>

#include "salient/errors.hpp"

namespace salient {

double knn_score(const Matrix& train, const std::vector<int>& labels, std::span<const double> x,
                 const KnnParams& p) {
  const size_t n = train.rows;
  if (p.k < 1) fail(Err::InvalidArgument, "k must be >= 1");
  if (size_t(p.k) > n) fail(Err::KExceedsN, "k exceeds training size");

  std::vector<std::pair<double, size_t>> dist(n);
  for (size_t i = 0; i < n; ++i) {
    auto row = train.row(i);
    double d2 = 0.0;
    for (size_t c = 0; c < row.size(); ++c) {
      double d = row[c] - x[c];
      d2 += d * d;
    }
    dist[i] = {d2, i};
  }
  std::partial_sort(dist.begin(), dist.begin() + p.k, dist.end());

  int pos = 0;
  for (int i = 0; i < p.k; ++i) pos += labels[dist[size_t(i)].second] > 0 ? 1 : 0;
  return double(pos) / p.k;
}

}  // namespace salient
