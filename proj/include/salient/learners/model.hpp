#ifndef SALIENT_LEARNERS_MODEL_HPP
#define SALIENT_LEARNERS_MODEL_HPP

#include <optional>
#include <string>
#include <variant>

#include "salient/learners/adaboost.hpp"
#include "salient/learners/knn.hpp"
#include "salient/learners/naive_bayes.hpp"
#include "salient/learners/svm.hpp"
#include "salient/learners/tree.hpp"
#include "salient/sampling.hpp"

namespace salient {

enum class Method { svm, c45, knn, nb, adaboost };

const char* method_name(Method m);
std::optional<Method> method_from_name(const std::string& s);

struct LearnerSpec {
  Method method = Method::svm;
  SvmParams svm;
  TreeParams tree;
  KnnParams knn;
  NbParams nb;
  BoostParams boost;
};

struct TrainedModel {
  std::variant<SvmModel, TreeModel, KnnModel, NbModel, BoostModel> model;
  std::optional<NormalizationStats> normalizer;  // stats of the training run

  Method method() const;
};

// Trains on already-normalized rows; the caller attaches the normalizer.
TrainedModel train_model(const Matrix& x, const std::vector<int>& y, const LearnerSpec& spec);

// Continuous score for ROC use. svm/adaboost are signed decision values;
// c45/knn/nb are positive-class fractions or posteriors in [0,1].
double model_score(const TrainedModel& m, std::span<const double> x);

// The method's own decision rule: sign for svm/adaboost (0 -> +1),
// score > 0.5 for the others (0.5 -> +1).
int model_label(Method method, double score);
inline int model_label(const TrainedModel& m, double score) { return model_label(m.method(), score); }

// Model file: magic SMDL, version u16, model-kind u8, kind payload, then a
// normalizer block (present u8 + per-column min/max pairs).
void save_model(const TrainedModel& m, const std::string& path);
TrainedModel load_model(const std::string& path);

}  // namespace salient

#endif
