#include "salient/learners/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "salient/errors.hpp"

namespace salient {

double entropy_bits(int n_pos, int n_neg) {
  int n = n_pos + n_neg;
  if (n == 0) return 0.0;
  double h = 0.0;
  for (int c : {n_pos, n_neg}) {
    if (c == 0) continue;
    double p = double(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

namespace {

// inverse standard normal CDF (Acklam's rational approximation)
double inv_norm_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425, phigh = 1.0 - plow;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p <= phigh) {
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  }
  q = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
         ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

struct Builder {
  const Matrix& x;
  const std::vector<int>& y;
  TreeParams p;
  std::vector<TreeNode> nodes;

  int build(std::vector<int>& rows) {
    TreeNode node;
    node.n = int(rows.size());
    node.n_pos = 0;
    for (int r : rows) node.n_pos += y[size_t(r)] > 0 ? 1 : 0;
    int idx = int(nodes.size());
    nodes.push_back(node);

    int n_neg = node.n - node.n_pos;
    if (node.n_pos == 0 || n_neg == 0 || node.n < 2 * p.min_leaf) return idx;

    double parent_h = entropy_bits(node.n_pos, n_neg);
    double best_ratio = 0.0, best_thr = 0.0;
    int best_attr = -1;

    std::vector<std::pair<double, int>> vals(rows.size());
    for (size_t a = 0; a < x.cols; ++a) {
      for (size_t i = 0; i < rows.size(); ++i)
        vals[i] = {x.at(size_t(rows[i]), a), y[size_t(rows[i])]};
      std::sort(vals.begin(), vals.end());

      int left_pos = 0, left_n = 0;
      for (size_t i = 0; i + 1 < vals.size(); ++i) {
        left_pos += vals[i].second > 0 ? 1 : 0;
        ++left_n;
        if (vals[i].first == vals[i + 1].first) continue;  // not a bin boundary
        int right_n = node.n - left_n;
        if (left_n < p.min_leaf || right_n < p.min_leaf) continue;
        int right_pos = node.n_pos - left_pos;
        double wl = double(left_n) / node.n, wr = double(right_n) / node.n;
        double gain = parent_h - wl * entropy_bits(left_pos, left_n - left_pos) -
                      wr * entropy_bits(right_pos, right_n - right_pos);
        if (gain <= 1e-12) continue;
        double split_info = -(wl * std::log2(wl) + wr * std::log2(wr));
        if (split_info < 1e-12) continue;
        double ratio = gain / split_info;
        if (ratio > best_ratio + 1e-12) {
          best_ratio = ratio;
          best_attr = int(a);
          best_thr = 0.5 * (vals[i].first + vals[i + 1].first);
        }
      }
    }

    if (best_attr < 0) return idx;

    std::vector<int> left_rows, right_rows;
    for (int r : rows)
      (x.at(size_t(r), size_t(best_attr)) <= best_thr ? left_rows : right_rows).push_back(r);

    nodes[size_t(idx)].leaf = false;
    nodes[size_t(idx)].attr = best_attr;
    nodes[size_t(idx)].threshold = best_thr;
    int l = build(left_rows);
    int r = build(right_rows);
    nodes[size_t(idx)].left = l;
    nodes[size_t(idx)].right = r;
    return idx;
  }

  // Returns the pessimistic error estimate (count scale) of the subtree; a
  // node collapses when its own leaf bound does not exceed the subtree's.
  double prune(int idx) {
    TreeNode& node = nodes[size_t(idx)];
    int n_neg = node.n - node.n_pos;
    int leaf_err = std::min(node.n_pos, n_neg);
    double leaf_bound = double(node.n) * pessimistic_error(leaf_err, node.n, p.confidence);
    if (node.leaf) return leaf_bound;
    double subtree_bound = prune(node.left) + prune(node.right);
    if (leaf_bound <= subtree_bound + 1e-12) {
      node.leaf = true;
      node.attr = -1;
      node.left = node.right = -1;
      return leaf_bound;
    }
    return subtree_bound;
  }
};

}  // namespace

double pessimistic_error(int err, int n, double cf) {
  if (n == 0) return 0.0;
  double f = double(err) / n;
  double z = inv_norm_cdf(1.0 - cf);
  double z2 = z * z;
  double num = f + z2 / (2.0 * n) + z * std::sqrt(f * (1.0 - f) / n + z2 / (4.0 * double(n) * n));
  return std::min(1.0, num / (1.0 + z2 / n));
}

TreeModel c45_train(const Matrix& x, const std::vector<int>& y, const TreeParams& p) {
  if (x.rows < size_t(2 * p.min_leaf))
    fail(Err::TooFewSamples, "c45_train needs at least 2*min_leaf rows");
  Builder b{x, y, p, {}};
  std::vector<int> rows(x.rows);
  std::iota(rows.begin(), rows.end(), 0);
  b.build(rows);
  b.prune(0);
  TreeModel m;
  m.nodes = std::move(b.nodes);
  m.params = p;
  return m;
}

double c45_score(const TreeModel& m, std::span<const double> x) {
  int idx = 0;
  while (!m.nodes[size_t(idx)].leaf) {
    const TreeNode& node = m.nodes[size_t(idx)];
    idx = x[size_t(node.attr)] <= node.threshold ? node.left : node.right;
  }
  const TreeNode& leaf = m.nodes[size_t(idx)];
  return leaf.n > 0 ? double(leaf.n_pos) / leaf.n : 0.5;
}

}  // namespace salient
