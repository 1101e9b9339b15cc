#include "salient/learners/naive_bayes.hpp"

#include <algorithm>
#include <cmath>

#include "salient/errors.hpp"

namespace salient {

namespace {

// Tricube-weighted local linear fit of (grid, raw) evaluated at each grid
// point, using the window*P nearest grid points.
std::vector<double> loess_smooth(const std::vector<double>& grid, const std::vector<double>& raw,
                                 double window) {
  const int P = int(grid.size());
  int span = std::max(3, int(std::ceil(window * P)));
  span = std::min(span, P);
  std::vector<double> out(size_t(P));
  for (int t = 0; t < P; ++t) {
    int lo = std::clamp(t - span / 2, 0, P - span);
    int hi = lo + span;  // [lo, hi)
    double dmax = std::max(grid[size_t(t)] - grid[size_t(lo)], grid[size_t(hi - 1)] - grid[size_t(t)]);
    if (dmax <= 0.0) dmax = 1.0;
    double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
    for (int u = lo; u < hi; ++u) {
      double d = std::abs(grid[size_t(u)] - grid[size_t(t)]) / dmax;
      double c = 1.0 - d * d * d;
      double w = c * c * c;
      if (w <= 0.0) continue;
      double gx = grid[size_t(u)], gy = raw[size_t(u)];
      sw += w;
      swx += w * gx;
      swy += w * gy;
      swxx += w * gx * gx;
      swxy += w * gx * gy;
    }
    double denom = sw * swxx - swx * swx;
    double value;
    if (std::abs(denom) < 1e-30) {
      value = sw > 0 ? swy / sw : 0.0;
    } else {
      double slope = (sw * swxy - swx * swy) / denom;
      double intercept = (swy - slope * swx) / sw;
      value = intercept + slope * grid[size_t(t)];
    }
    out[size_t(t)] = std::max(value, 1e-9);
  }
  return out;
}

}  // namespace

NbModel nb_train(const Matrix& x, const std::vector<int>& y, const NbParams& p) {
  const size_t n = x.rows;
  size_t n_pos = 0;
  for (int l : y) n_pos += l > 0 ? 1 : 0;
  size_t n_neg = n - n_pos;
  if (n_pos == 0 || n_neg == 0) fail(Err::SingleClassInput, "nb_train needs both classes");
  if (p.loess_points < 2) fail(Err::InvalidArgument, "loess_points must be >= 2");

  NbModel m;
  m.params = p;
  m.prior_pos = double(n_pos) / double(n);
  m.prior_neg = double(n_neg) / double(n);

  const int P = p.loess_points;
  m.attrs.resize(x.cols);
  std::vector<double> grid(size_t(P));

  for (size_t a = 0; a < x.cols; ++a) {
    auto& attr = m.attrs[a];
    attr.lo = attr.hi = x.at(0, a);
    for (size_t r = 1; r < n; ++r) {
      attr.lo = std::min(attr.lo, x.at(r, a));
      attr.hi = std::max(attr.hi, x.at(r, a));
    }
    if (attr.hi - attr.lo < 1e-12) {
      // constant attribute carries no class information
      attr.pos.assign(size_t(P), 1.0);
      attr.neg.assign(size_t(P), 1.0);
      continue;
    }
    const double width = (attr.hi - attr.lo) / P;
    for (int t = 0; t < P; ++t) grid[size_t(t)] = attr.lo + (t + 0.5) * width;

    std::vector<double> raw_pos(size_t(P), 0.0), raw_neg(size_t(P), 0.0);
    for (size_t r = 0; r < n; ++r) {
      int bin = std::min(P - 1, int((x.at(r, a) - attr.lo) / width));
      bin = std::max(bin, 0);
      if (y[r] > 0)
        raw_pos[size_t(bin)] += 1.0 / (double(n_pos) * width);
      else
        raw_neg[size_t(bin)] += 1.0 / (double(n_neg) * width);
    }
    attr.pos = loess_smooth(grid, raw_pos, p.loess_window);
    attr.neg = loess_smooth(grid, raw_neg, p.loess_window);
  }
  return m;
}

namespace {

double interp_density(const NbModel::AttrDensity& attr, const std::vector<double>& dens,
                      int points, double v) {
  const double width = (attr.hi - attr.lo) / points;
  if (width <= 0.0) return dens[0];
  // grid points sit at bin centers
  double t = (v - attr.lo) / width - 0.5;
  if (t <= 0.0) return dens.front();
  if (t >= points - 1) return dens.back();
  int i = int(t);
  double frac = t - i;
  return dens[size_t(i)] * (1.0 - frac) + dens[size_t(i + 1)] * frac;
}

}  // namespace

double nb_score(const NbModel& m, std::span<const double> x) {
  double log_pos = std::log(m.prior_pos);
  double log_neg = std::log(m.prior_neg);
  for (size_t a = 0; a < m.attrs.size(); ++a) {
    const auto& attr = m.attrs[a];
    log_pos += std::log(interp_density(attr, attr.pos, m.params.loess_points, x[a]));
    log_neg += std::log(interp_density(attr, attr.neg, m.params.loess_points, x[a]));
  }
  double mx = std::max(log_pos, log_neg);
  double ep = std::exp(log_pos - mx), en = std::exp(log_neg - mx);
  return ep / (ep + en);
}

}  // namespace salient
