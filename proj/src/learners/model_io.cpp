#include "salient/learners/model.hpp"

#include <cstring>
#include <fstream>

namespace salient {

const char* method_name(Method m) {
  switch (m) {
    case Method::svm: return "svm";
    case Method::c45: return "c45";
    case Method::knn: return "knn";
    case Method::nb: return "nb";
    case Method::adaboost: return "adaboost";
  }
  return "?";
}

std::optional<Method> method_from_name(const std::string& s) {
  if (s == "svm") return Method::svm;
  if (s == "c45") return Method::c45;
  if (s == "knn") return Method::knn;
  if (s == "nb") return Method::nb;
  if (s == "adaboost") return Method::adaboost;
  return std::nullopt;
}

Method TrainedModel::method() const {
  switch (model.index()) {
    case 0: return Method::svm;
    case 1: return Method::c45;
    case 2: return Method::knn;
    case 3: return Method::nb;
    default: return Method::adaboost;
  }
}

TrainedModel train_model(const Matrix& x, const std::vector<int>& y, const LearnerSpec& spec) {
  TrainedModel out;
  switch (spec.method) {
    case Method::svm: out.model = svm_train(x, y, spec.svm); break;
    case Method::c45: out.model = c45_train(x, y, spec.tree); break;
    case Method::knn:
      if (size_t(spec.knn.k) > x.rows) fail(Err::KExceedsN, "k exceeds training size");
      out.model = KnnModel{x, y, spec.knn};
      break;
    case Method::nb: out.model = nb_train(x, y, spec.nb); break;
    case Method::adaboost: out.model = adaboost_train(x, y, spec.boost); break;
  }
  return out;
}

double model_score(const TrainedModel& m, std::span<const double> x) {
  return std::visit(
      [&](const auto& model) -> double {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, SvmModel>) return svm_score(model, x);
        else if constexpr (std::is_same_v<T, TreeModel>) return c45_score(model, x);
        else if constexpr (std::is_same_v<T, KnnModel>) return knn_score(model, x);
        else if constexpr (std::is_same_v<T, NbModel>) return nb_score(model, x);
        else return adaboost_score(model, x);
      },
      m.model);
}

int model_label(Method method, double score) {
  if (method == Method::svm || method == Method::adaboost) return score >= 0.0 ? 1 : -1;
  return score >= 0.5 ? 1 : -1;
}

namespace {

constexpr uint16_t kVersion = 1;

void w_bytes(std::ofstream& o, const void* p, size_t n) {
  o.write(reinterpret_cast<const char*>(p), std::streamsize(n));
}
template <typename T>
void w(std::ofstream& o, T v) {
  w_bytes(o, &v, sizeof v);
}
void r_bytes(std::ifstream& i, void* p, size_t n, const std::string& path) {
  if (!i.read(reinterpret_cast<char*>(p), std::streamsize(n)))
    fail(Err::CorruptFile, path + ": truncated");
}
template <typename T>
T r(std::ifstream& i, const std::string& path) {
  T v{};
  r_bytes(i, &v, sizeof v, path);
  return v;
}

void write_matrix(std::ofstream& o, const Matrix& m) {
  w<uint32_t>(o, uint32_t(m.rows));
  w<uint16_t>(o, uint16_t(m.cols));
  for (double v : m.a) w<double>(o, v);
}

Matrix read_matrix(std::ifstream& i, const std::string& path) {
  uint32_t rows = r<uint32_t>(i, path);
  uint16_t cols = r<uint16_t>(i, path);
  Matrix m(rows, cols);
  for (double& v : m.a) v = r<double>(i, path);
  return m;
}

void write_svm(std::ofstream& o, const SvmModel& m) {
  write_matrix(o, m.support);
  for (double c : m.coef) w<double>(o, c);
  w<double>(o, m.bias);
  w<double>(o, m.params.gamma);
  w<double>(o, m.params.cost);
  w<double>(o, m.params.smo_tolerance);
  w<int32_t>(o, m.params.max_passes);
}

SvmModel read_svm(std::ifstream& i, const std::string& path) {
  SvmModel m;
  m.support = read_matrix(i, path);
  m.coef.resize(m.support.rows);
  for (double& c : m.coef) c = r<double>(i, path);
  m.bias = r<double>(i, path);
  m.params.gamma = r<double>(i, path);
  m.params.cost = r<double>(i, path);
  m.params.smo_tolerance = r<double>(i, path);
  m.params.max_passes = r<int32_t>(i, path);
  return m;
}

}  // namespace

void save_model(const TrainedModel& tm, const std::string& path) {
  std::ofstream o(path, std::ios::binary);
  if (!o) fail(Err::IoError, "cannot write " + path);
  o.write("SMDL", 4);
  w<uint16_t>(o, kVersion);
  w<uint8_t>(o, uint8_t(tm.model.index()));

  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SvmModel>) {
          write_svm(o, m);
        } else if constexpr (std::is_same_v<T, TreeModel>) {
          w<int32_t>(o, m.params.min_leaf);
          w<double>(o, m.params.confidence);
          w<uint32_t>(o, uint32_t(m.nodes.size()));
          for (const TreeNode& n : m.nodes) {
            w<uint8_t>(o, n.leaf ? 1 : 0);
            w<int32_t>(o, n.attr);
            w<double>(o, n.threshold);
            w<int32_t>(o, n.left);
            w<int32_t>(o, n.right);
            w<int32_t>(o, n.n);
            w<int32_t>(o, n.n_pos);
          }
        } else if constexpr (std::is_same_v<T, KnnModel>) {
          w<int32_t>(o, m.params.k);
          write_matrix(o, m.train);
          for (int l : m.labels) w<int8_t>(o, int8_t(l));
        } else if constexpr (std::is_same_v<T, NbModel>) {
          w<double>(o, m.prior_pos);
          w<double>(o, m.prior_neg);
          w<double>(o, m.params.loess_window);
          w<int32_t>(o, m.params.loess_points);
          w<uint16_t>(o, uint16_t(m.attrs.size()));
          for (const auto& a : m.attrs) {
            w<double>(o, a.lo);
            w<double>(o, a.hi);
            for (double v : a.pos) w<double>(o, v);
            for (double v : a.neg) w<double>(o, v);
          }
        } else {  // BoostModel
          w<int32_t>(o, m.params.rounds);
          w<uint32_t>(o, uint32_t(m.members.size()));
          for (const auto& member : m.members) {
            write_svm(o, member.weak);
            w<double>(o, member.alpha);
            w<double>(o, member.epsilon);
          }
        }
      },
      tm.model);

  if (tm.normalizer) {
    w<uint8_t>(o, 1);
    w<uint16_t>(o, uint16_t(tm.normalizer->min.size()));
    for (size_t c = 0; c < tm.normalizer->min.size(); ++c) {
      w<double>(o, tm.normalizer->min[c]);
      w<double>(o, tm.normalizer->max[c]);
    }
  } else {
    w<uint8_t>(o, 0);
  }
}

TrainedModel load_model(const std::string& path) {
  std::ifstream i(path, std::ios::binary);
  if (!i) fail(Err::IoError, "cannot open " + path);
  char magic[4];
  if (!i.read(magic, 4) || std::memcmp(magic, "SMDL", 4) != 0)
    fail(Err::CorruptFile, path + ": bad magic");
  uint16_t version = r<uint16_t>(i, path);
  if (version != kVersion)
    fail(Err::VersionMismatch, path + ": version " + std::to_string(version));
  uint8_t kind = r<uint8_t>(i, path);

  TrainedModel tm;
  switch (kind) {
    case 0: tm.model = read_svm(i, path); break;
    case 1: {
      TreeModel m;
      m.params.min_leaf = r<int32_t>(i, path);
      m.params.confidence = r<double>(i, path);
      uint32_t count = r<uint32_t>(i, path);
      m.nodes.resize(count);
      for (TreeNode& n : m.nodes) {
        n.leaf = r<uint8_t>(i, path) != 0;
        n.attr = r<int32_t>(i, path);
        n.threshold = r<double>(i, path);
        n.left = r<int32_t>(i, path);
        n.right = r<int32_t>(i, path);
        n.n = r<int32_t>(i, path);
        n.n_pos = r<int32_t>(i, path);
      }
      tm.model = std::move(m);
      break;
    }
    case 2: {
      KnnModel m;
      m.params.k = r<int32_t>(i, path);
      m.train = read_matrix(i, path);
      m.labels.resize(m.train.rows);
      for (int& l : m.labels) l = r<int8_t>(i, path);
      tm.model = std::move(m);
      break;
    }
    case 3: {
      NbModel m;
      m.prior_pos = r<double>(i, path);
      m.prior_neg = r<double>(i, path);
      m.params.loess_window = r<double>(i, path);
      m.params.loess_points = r<int32_t>(i, path);
      uint16_t n_attrs = r<uint16_t>(i, path);
      m.attrs.resize(n_attrs);
      for (auto& a : m.attrs) {
        a.lo = r<double>(i, path);
        a.hi = r<double>(i, path);
        a.pos.resize(size_t(m.params.loess_points));
        a.neg.resize(size_t(m.params.loess_points));
        for (double& v : a.pos) v = r<double>(i, path);
        for (double& v : a.neg) v = r<double>(i, path);
      }
      tm.model = std::move(m);
      break;
    }
    case 4: {
      BoostModel m;
      m.params.rounds = r<int32_t>(i, path);
      uint32_t count = r<uint32_t>(i, path);
      m.members.resize(count);
      for (auto& member : m.members) {
        member.weak = read_svm(i, path);
        member.alpha = r<double>(i, path);
        member.epsilon = r<double>(i, path);
      }
      tm.model = std::move(m);
      break;
    }
    default: fail(Err::CorruptFile, path + ": unknown model kind");
  }

  uint8_t has_norm = r<uint8_t>(i, path);
  if (has_norm) {
    NormalizationStats s;
    uint16_t cols = r<uint16_t>(i, path);
    s.min.resize(cols);
    s.max.resize(cols);
    for (size_t c = 0; c < cols; ++c) {
      s.min[c] = r<double>(i, path);
      s.max[c] = r<double>(i, path);
    }
    tm.normalizer = std::move(s);
  }
  return tm;
}

}  // namespace salient
