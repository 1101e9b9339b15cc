#ifndef SALIENT_LEARNERS_ADABOOST_HPP
#define SALIENT_LEARNERS_ADABOOST_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "salient/learners/svm.hpp"

namespace salient {

struct BoostParams {
  int rounds = 10;
  SvmParams base;
  uint64_t rng_seed = 0;
};

struct BoostModel {
  struct Member {
    SvmModel weak;
    double alpha = 0.0;
    double epsilon = 0.0;  // weighted error when the round was kept
  };
  std::vector<Member> members;
  BoostParams params;
};

// AdaBoost.M1 over SVM base learners trained on weighted resamples. Stops
// early on a perfect round (kept with capped alpha) or when a round's
// weighted error reaches 0.5 (round discarded).
BoostModel adaboost_train(const Matrix& x, const std::vector<int>& y, const BoostParams& p);

// Alpha-weighted vote of the weak learners' sign predictions.
double adaboost_score(const BoostModel& m, std::span<const double> x);

}  // namespace salient

#endif
