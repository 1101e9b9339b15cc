#ifndef SALIENT_LEARNERS_NAIVE_BAYES_HPP
#define SALIENT_LEARNERS_NAIVE_BAYES_HPP

#include <span>
#include <vector>

#include "salient/matrix.hpp"

namespace salient {

struct NbParams {
  double loess_window = 0.5;  // fraction of the grid used per local fit
  int loess_points = 100;     // density sample points per attribute
};

struct NbModel {
  double prior_pos = 0.5;
  double prior_neg = 0.5;
  struct AttrDensity {
    double lo = 0.0, hi = 1.0;
    std::vector<double> pos, neg;  // densities at evenly spaced grid points
  };
  std::vector<AttrDensity> attrs;
  NbParams params;
};

// Class priors are relative frequencies; per attribute and class a 1-D
// density is estimated on an even grid by LOESS (tricube-weighted local
// linear regression) over histogram counts, floored at 1e-9.
NbModel nb_train(const Matrix& x, const std::vector<int>& y, const NbParams& p);

// Posterior P(+1 | x); evaluation interpolates linearly between grid points
// and clamps to the nearest endpoint outside the training range.
double nb_score(const NbModel& m, std::span<const double> x);

}  // namespace salient

#endif
