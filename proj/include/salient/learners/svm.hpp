#ifndef SALIENT_LEARNERS_SVM_HPP
#define SALIENT_LEARNERS_SVM_HPP

#include <span>
#include <vector>

#include "salient/matrix.hpp"

namespace salient {

struct SvmParams {
  double gamma = 0.8;
  double cost = 8.0;
  double smo_tolerance = 1e-3;
  int max_passes = 200;
};

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

struct SvmModel {
  Matrix support;                // support vectors, one per row
  std::vector<double> coef;      // alpha_i * y_i
  double bias = 0.0;
  SvmParams params;

  // training diagnostics, not serialized
  double kkt_violation = 0.0;
  long iterations = 0;
};

// Soft-margin dual via SMO with maximal-violating-pair working-set selection.
// Converges when the largest KKT violation drops below smo_tolerance.
SvmModel svm_train(const Matrix& x, const std::vector<int>& y, const SvmParams& p);

// Signed decision value; predicted label is its sign (0 counts as +1).
double svm_score(const SvmModel& m, std::span<const double> x);

}  // namespace salient

#endif
