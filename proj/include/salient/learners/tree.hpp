#ifndef SALIENT_LEARNERS_TREE_HPP
#define SALIENT_LEARNERS_TREE_HPP

#include <span>
#include <vector>

#include "salient/matrix.hpp"

namespace salient {

struct TreeParams {
  int min_leaf = 2;
  double confidence = 0.25;
};

struct TreeNode {
  bool leaf = true;
  int attr = -1;
  double threshold = 0.0;
  int left = -1;   // rows with value <= threshold
  int right = -1;
  int n = 0;
  int n_pos = 0;
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // node 0 is the root
  TreeParams params;
};

// binary entropy of a pos/neg split, in bits
double entropy_bits(int n_pos, int n_neg);

// Upper confidence bound on the error rate of a leaf with err errors out of
// n, at confidence cf (C4.5's pessimistic estimate).
double pessimistic_error(int err, int n, double cf);

TreeModel c45_train(const Matrix& x, const std::vector<int>& y, const TreeParams& p);

// positive-class fraction at the reached leaf
double c45_score(const TreeModel& m, std::span<const double> x);

}  // namespace salient

#endif
