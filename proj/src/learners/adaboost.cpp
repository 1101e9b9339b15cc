#include "salient/learners/adaboost.hpp"

#include <algorithm>
#include <cmath>

#include "salient/errors.hpp"
#include "salient/rng.hpp"

namespace salient {

BoostModel adaboost_train(const Matrix& x, const std::vector<int>& y, const BoostParams& p) {
  const size_t n = x.rows;
  bool has_pos = false, has_neg = false;
  for (int l : y) (l > 0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) fail(Err::SingleClassInput, "adaboost_train needs both classes");

  BoostModel model;
  model.params = p;

  std::vector<double> w(n, 1.0 / double(n));
  std::vector<double> cdf(n);
  Rng rng(p.rng_seed);

  const double eps_min = 1.0 / (2.0 * double(n));

  for (int t = 0; t < p.rounds; ++t) {
    // weighted resample with replacement
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
      acc += w[i];
      cdf[i] = acc;
    }
    Matrix sample(n, x.cols);
    std::vector<int> sample_y(n);
    bool s_pos = false, s_neg = false;
    for (size_t i = 0; i < n; ++i) {
      double u = rng.next_double() * acc;
      size_t j = size_t(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
      if (j >= n) j = n - 1;
      std::copy(x.row(j).begin(), x.row(j).end(), sample.row(i).begin());
      sample_y[i] = y[j];
      (y[j] > 0 ? s_pos : s_neg) = true;
    }
    if (!s_pos || !s_neg) continue;  // degenerate resample, try next round

    SvmModel weak = svm_train(sample, sample_y, p.base);

    // weighted error on the full training set
    std::vector<int> pred(n);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < long(n); ++i)
      pred[size_t(i)] = svm_score(weak, x.row(size_t(i))) >= 0.0 ? 1 : -1;
    double eps = 0.0;
    for (size_t i = 0; i < n; ++i)
      if (pred[i] != y[i]) eps += w[i];

    if (eps >= 0.5) break;  // no better than chance: discard and stop

    BoostModel::Member member;
    member.weak = std::move(weak);
    member.epsilon = eps;
    if (eps <= 0.0) {
      member.alpha = 0.5 * std::log((1.0 - eps_min) / eps_min);
      model.members.push_back(std::move(member));
      break;  // perfect learner, nothing left to reweight
    }
    member.alpha = 0.5 * std::log((1.0 - eps) / eps);

    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      w[i] *= std::exp(-member.alpha * double(y[i]) * double(pred[i]));
      sum += w[i];
    }
    for (size_t i = 0; i < n; ++i) w[i] /= sum;

    model.members.push_back(std::move(member));
  }

  if (model.members.empty())
    fail(Err::NoUsefulWeakLearner, "every boosting round was discarded");
  return model;
}

double adaboost_score(const BoostModel& m, std::span<const double> x) {
  double s = 0.0;
  for (const auto& member : m.members)
    s += member.alpha * (svm_score(member.weak, x) >= 0.0 ? 1.0 : -1.0);
  return s;
}

}  // namespace salient
