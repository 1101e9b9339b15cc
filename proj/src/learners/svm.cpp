#include "salient/learners/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "salient/errors.hpp"

namespace salient {

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
  double d2 = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    d2 += d * d;
  }
  return std::exp(-gamma * d2);
}

namespace {

// Row cache: kernel rows are the dominant cost, and the maximal-violating
// pair revisits a small working set many times.
class KernelCache {
 public:
  KernelCache(const Matrix& x, double gamma, size_t max_rows)
      : x_(x), gamma_(gamma), slots_(std::min(max_rows, x.rows)), slot_of_(x.rows, -1),
        owner_(slots_, -1), rows_(slots_) {}

  const std::vector<double>& row(size_t i) {
    if (slot_of_[i] >= 0) return rows_[size_t(slot_of_[i])];
    size_t s = next_;
    next_ = (next_ + 1) % slots_;
    if (owner_[s] >= 0) slot_of_[size_t(owner_[s])] = -1;
    owner_[s] = long(i);
    slot_of_[i] = long(s);
    auto& r = rows_[s];
    r.resize(x_.rows);
    auto xi = x_.row(i);
#pragma omp parallel for schedule(static)
    for (long j = 0; j < long(x_.rows); ++j) r[size_t(j)] = rbf_kernel(xi, x_.row(size_t(j)), gamma_);
    return r;
  }

 private:
  const Matrix& x_;
  double gamma_;
  size_t slots_;
  size_t next_ = 0;
  std::vector<long> slot_of_, owner_;
  std::vector<std::vector<double>> rows_;
};

}  // namespace

SvmModel svm_train(const Matrix& x, const std::vector<int>& y, const SvmParams& p) {
  const size_t n = x.rows;
  if (n == 0 || y.size() != n) fail(Err::EmptyInput, "svm_train needs samples");
  bool has_pos = false, has_neg = false;
  for (int l : y) (l > 0 ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg) fail(Err::SingleClassInput, "svm_train needs both classes");

  const double C = p.cost;
  const double tol = p.smo_tolerance;

  std::vector<double> alpha(n, 0.0);
  // gradient of the dual objective: grad_i = y_i * u_i - 1, starts at -1
  std::vector<double> grad(n, -1.0);

  KernelCache cache(x, p.gamma, 512);

  const long max_iter = std::max<long>(10000, long(p.max_passes) * long(n));
  long iter = 0;
  double violation = std::numeric_limits<double>::max();
  int stalled = 0;

  while (iter < max_iter) {
    // maximal violating pair over I_up / I_low
    double m_up = -std::numeric_limits<double>::max();
    double m_low = std::numeric_limits<double>::max();
    long i = -1, j = -1;
    for (size_t t = 0; t < n; ++t) {
      double v = -double(y[t]) * grad[t];
      bool in_up = (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0.0);
      bool in_low = (y[t] > 0 && alpha[t] > 0.0) || (y[t] < 0 && alpha[t] < C);
      if (in_up && v > m_up) {
        m_up = v;
        i = long(t);
      }
      if (in_low && v < m_low) {
        m_low = v;
        j = long(t);
      }
    }
    violation = m_up - m_low;
    if (i < 0 || j < 0 || violation < tol) break;

    const auto& ki = cache.row(size_t(i));
    const auto& kj = cache.row(size_t(j));

    double eta = ki[size_t(i)] + kj[size_t(j)] - 2.0 * ki[size_t(j)];
    if (eta < 1e-12) eta = 1e-12;

    // errors E = u - y; for y in {+-1}, E_t = y_t * grad_t
    double Ei = double(y[size_t(i)]) * grad[size_t(i)];
    double Ej = double(y[size_t(j)]) * grad[size_t(j)];

    double ai_old = alpha[size_t(i)], aj_old = alpha[size_t(j)];
    double L, H;
    if (y[size_t(i)] != y[size_t(j)]) {
      L = std::max(0.0, aj_old - ai_old);
      H = std::min(C, C + aj_old - ai_old);
    } else {
      L = std::max(0.0, ai_old + aj_old - C);
      H = std::min(C, ai_old + aj_old);
    }

    double aj_new = aj_old + double(y[size_t(j)]) * (Ei - Ej) / eta;
    aj_new = std::clamp(aj_new, L, H);
    double ai_new = ai_old + double(y[size_t(i)]) * double(y[size_t(j)]) * (aj_old - aj_new);

    if (std::abs(aj_new - aj_old) < 1e-14) {
      if (++stalled > int(n)) break;  // numerically blocked pair
      ++iter;
      continue;
    }
    stalled = 0;

    alpha[size_t(i)] = ai_new;
    alpha[size_t(j)] = aj_new;

    double di = (ai_new - ai_old) * double(y[size_t(i)]);
    double dj = (aj_new - aj_old) * double(y[size_t(j)]);
    for (size_t t = 0; t < n; ++t) grad[t] += double(y[t]) * (di * ki[t] + dj * kj[t]);
    ++iter;
  }

  // bias from free support vectors, falling back to the violation midpoint
  double b_sum = 0.0;
  size_t b_count = 0;
  for (size_t t = 0; t < n; ++t) {
    if (alpha[t] > 1e-12 && alpha[t] < C - 1e-12) {
      b_sum += double(y[t]) - double(y[t]) * (grad[t] + 1.0);  // y_t - u_t
      ++b_count;
    }
  }
  double b;
  if (b_count > 0) {
    b = b_sum / double(b_count);
  } else {
    double m_up = -std::numeric_limits<double>::max(), m_low = std::numeric_limits<double>::max();
    for (size_t t = 0; t < n; ++t) {
      double v = -double(y[t]) * grad[t];
      bool in_up = (y[t] > 0 && alpha[t] < C) || (y[t] < 0 && alpha[t] > 0.0);
      bool in_low = (y[t] > 0 && alpha[t] > 0.0) || (y[t] < 0 && alpha[t] < C);
      if (in_up) m_up = std::max(m_up, v);
      if (in_low) m_low = std::min(m_low, v);
    }
    b = (m_up + m_low) / 2.0;
  }

  SvmModel model;
  model.params = p;
  model.bias = b;
  model.kkt_violation = violation;
  model.iterations = iter;
  size_t n_sv = 0;
  for (double a : alpha)
    if (a > 1e-12) ++n_sv;
  model.support = Matrix(n_sv, x.cols);
  model.coef.reserve(n_sv);
  size_t r = 0;
  for (size_t t = 0; t < n; ++t) {
    if (alpha[t] <= 1e-12) continue;
    std::copy(x.row(t).begin(), x.row(t).end(), model.support.row(r).begin());
    model.coef.push_back(alpha[t] * double(y[t]));
    ++r;
  }
  return model;
}

double svm_score(const SvmModel& m, std::span<const double> x) {
  double s = m.bias;
  for (size_t i = 0; i < m.support.rows; ++i)
    s += m.coef[i] * rbf_kernel(m.support.row(i), x, m.params.gamma);
  return s;
}

}  // namespace salient
