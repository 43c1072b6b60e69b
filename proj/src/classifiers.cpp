#include "tablescout/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "tablescout/errors.hpp"

namespace tablescout::clf {

namespace {

using nlohmann::json;

void check_two_classes(const std::vector<Example>& data) {
  if (data.empty()) throw DegenerateData("empty training set");
  bool pos = false, neg = false;
  for (const auto& e : data) {
    if (e.label == +1) pos = true;
    else if (e.label == -1) neg = true;
    else throw DegenerateData("labels must be +1 or -1");
  }
  if (!pos || !neg) throw DegenerateData("training data contains one class");
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// log(1 + exp(z)) without overflow.
double log1pexp(double z) {
  if (z > 35.0) return z;
  return std::log1p(std::exp(z));
}

}  // namespace

// ---- Logistic regression -------------------------------------------------

double lr_score(const LrModel& m, std::span<const double> x) {
  return dot(m.theta, x) + m.theta0;
}

double lr_prob(const LrModel& m, std::span<const double> x) {
  return 1.0 / (1.0 + std::exp(-lr_score(m, x)));
}

double lr_objective(const std::vector<Example>& data, const LrModel& m,
                    double lambda) {
  // Log-likelihood with y in {0,1}: sum y*s - log(1 + e^s), minus the L2
  // penalty on theta (bias unpenalized).
  double ll = 0.0;
  for (const auto& e : data) {
    double s = lr_score(m, e.x);
    double y = e.label == +1 ? 1.0 : 0.0;
    ll += y * s - log1pexp(s);
  }
  return ll - 0.5 * lambda * dot(m.theta, m.theta);
}

std::vector<double> lr_gradient(const std::vector<Example>& data,
                                const LrModel& m, double lambda) {
  std::size_t d = m.theta.size();
  std::vector<double> g(d + 1, 0.0);
  for (const auto& e : data) {
    double p = lr_prob(m, e.x);
    double y = e.label == +1 ? 1.0 : 0.0;
    double r = y - p;
    for (std::size_t j = 0; j < d; ++j) g[j] += r * e.x[j];
    g[d] += r;
  }
  for (std::size_t j = 0; j < d; ++j) g[j] -= lambda * m.theta[j];
  return g;
}

LrModel lr_train(const std::vector<Example>& data, const LrHyper& hyper) {
  check_two_classes(data);
  std::size_t d = data.front().x.size();
  LrModel m;
  m.theta.assign(d, 0.0);

  double obj = lr_objective(data, m, hyper.lambda);
  for (int iter = 0; iter < hyper.max_iters; ++iter) {
    auto g = lr_gradient(data, m, hyper.lambda);
    double gmax = 0.0;
    double gnorm2 = 0.0;
    for (double v : g) {
      gmax = std::max(gmax, std::abs(v));
      gnorm2 += v * v;
    }
    if (gmax < hyper.tol) break;

    // Backtracking line search (Armijo), ascent direction = gradient.
    double step = 1.0;
    LrModel trial = m;
    for (int bt = 0; bt < 60; ++bt) {
      for (std::size_t j = 0; j < d; ++j) trial.theta[j] = m.theta[j] + step * g[j];
      trial.theta0 = m.theta0 + step * g[d];
      double trial_obj = lr_objective(data, trial, hyper.lambda);
      if (trial_obj >= obj + 1e-4 * step * gnorm2) {
        m = trial;
        obj = trial_obj;
        break;
      }
      step *= 0.5;
      if (bt == 59) return m;  // step underflow, give up at current point
    }
  }
  return m;
}

int lr_label(const LrModel& m, std::span<const double> x) {
  return lr_prob(m, x) > 0.5 ? +1 : -1;
}

// ---- Linear soft-margin SVM ----------------------------------------------

double svm_objective(const std::vector<Example>& data, const SvmModel& m,
                     double c) {
  double obj = 0.5 * dot(m.w, m.w);
  for (const auto& e : data) {
    double margin = e.label * (dot(m.w, e.x) + m.b);
    obj += c * std::max(0.0, 1.0 - margin);
  }
  return obj;
}

SvmModel svm_train(const std::vector<Example>& data, const SvmHyper& hyper) {
  check_two_classes(data);
  std::size_t d = data.front().x.size();
  std::size_t n = data.size();
  // Pegasos-style scaling: minimizing lambda/2 ||w||^2 + mean hinge with
  // lambda = 1/(n*C) matches the 1/2 ||w||^2 + C sum hinge objective.
  double lambda = 1.0 / (static_cast<double>(n) * hyper.c);

  SvmModel m;
  m.w.assign(d, 0.0);
  SvmModel avg;
  avg.w.assign(d, 0.0);

  long t = 0;
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    for (const auto& e : data) {
      ++t;
      double eta = 1.0 / (lambda * static_cast<double>(t));
      double margin = e.label * (dot(m.w, e.x) + m.b);
      double shrink = 1.0 - eta * lambda;
      for (std::size_t j = 0; j < d; ++j) m.w[j] *= shrink;
      if (margin < 1.0) {
        for (std::size_t j = 0; j < d; ++j) m.w[j] += eta * e.label * e.x[j];
        m.b += eta * e.label;
      }
      // Running average of iterates.
      double k = 1.0 / static_cast<double>(t);
      for (std::size_t j = 0; j < d; ++j)
        avg.w[j] += (m.w[j] - avg.w[j]) * k;
      avg.b += (m.b - avg.b) * k;
    }
  }
  return avg;
}

int svm_predict(const SvmModel& m, std::span<const double> x) {
  return dot(m.w, x) + m.b > 0.0 ? +1 : -1;
}

// ---- Discretized Naive Bayes ----------------------------------------------

int nb_discretize_value(double v, double step) {
  int num_bins = static_cast<int>(std::ceil(1.0 / step - 1e-12));
  int bin = static_cast<int>(std::floor(v / step)) + 1;
  return std::clamp(bin, 1, num_bins);
}

std::vector<int> nb_discretize(std::span<const double> x, double step) {
  std::vector<int> bins;
  bins.reserve(x.size());
  for (double v : x) bins.push_back(nb_discretize_value(v, step));
  return bins;
}

NbModel nb_train(const std::vector<Example>& data, const NbHyper& hyper) {
  check_two_classes(data);
  std::size_t d = data.front().x.size();

  NbModel m;
  m.step = hyper.step;
  m.num_bins = static_cast<int>(std::ceil(1.0 / hyper.step - 1e-12));

  double n_pos = 0, n_neg = 0;
  for (const auto& e : data) (e.label == +1 ? n_pos : n_neg) += 1.0;
  double n = n_pos + n_neg;
  m.prior_pos = n_pos / n;
  m.prior_neg = n_neg / n;

  m.cond.assign(d, {});
  for (std::size_t j = 0; j < d; ++j) {
    m.cond[j][0].assign(m.num_bins, 0.0);
    m.cond[j][1].assign(m.num_bins, 0.0);
  }
  for (const auto& e : data) {
    std::size_t cls = e.label == +1 ? 0 : 1;
    for (std::size_t j = 0; j < d; ++j) {
      int bin = nb_discretize_value(e.x[j], m.step);
      m.cond[j][cls][bin - 1] += 1.0;
    }
  }
  double denom_pos = n_pos + hyper.alpha * m.num_bins;
  double denom_neg = n_neg + hyper.alpha * m.num_bins;
  for (std::size_t j = 0; j < d; ++j) {
    for (int b = 0; b < m.num_bins; ++b) {
      m.cond[j][0][b] = (m.cond[j][0][b] + hyper.alpha) / denom_pos;
      m.cond[j][1][b] = (m.cond[j][1][b] + hyper.alpha) / denom_neg;
    }
  }
  return m;
}

std::pair<int, double> nb_predict(const NbModel& m,
                                  std::span<const double> x) {
  double log_pos = std::log(m.prior_pos);
  double log_neg = std::log(m.prior_neg);
  for (std::size_t j = 0; j < m.cond.size(); ++j) {
    int bin = nb_discretize_value(x[j], m.step);
    log_pos += std::log(m.cond[j][0][bin - 1]);
    log_neg += std::log(m.cond[j][1][bin - 1]);
  }
  // Normalize via the log-sum trick.
  double mx = std::max(log_pos, log_neg);
  double p_pos = std::exp(log_pos - mx);
  double p_neg = std::exp(log_neg - mx);
  double post_pos = p_pos / (p_pos + p_neg);
  if (log_pos > log_neg) return {+1, post_pos};
  return {-1, 1.0 - post_pos};
}

// ---- Ensemble ---------------------------------------------------------------

FeatureConfig::FeatureConfig() { mask.fill(true); }

std::vector<double> FeatureConfig::apply(
    const features::FeatureVector& fv) const {
  auto a = fv.to_array();
  std::vector<double> out;
  out.reserve(features::kDims);
  for (std::size_t i = 0; i < features::kDims; ++i) {
    if (mask[i]) out.push_back(a[i]);
  }
  return out;
}

std::size_t FeatureConfig::active_dims() const {
  return static_cast<std::size_t>(
      std::count(mask.begin(), mask.end(), true));
}

FeatureConfig FeatureConfig::from_name(const std::string& name) {
  FeatureConfig fc;
  fc.mask.fill(false);
  if (name == "nam") {
    fc.mask[0] = true;
  } else if (name == "nam+ptd") {
    for (std::size_t i = 0; i < 6; ++i) fc.mask[i] = true;
  } else if (name == "nam+ptd+nep") {
    fc.mask.fill(true);
  } else {
    throw Error("unknown feature set: " + name +
                " (expected nam, nam+ptd or nam+ptd+nep)");
  }
  return fc;
}

std::string FeatureConfig::name() const {
  FeatureConfig nam = from_name("nam");
  FeatureConfig nam_ptd = from_name("nam+ptd");
  if (mask == nam.mask) return "nam";
  if (mask == nam_ptd.mask) return "nam+ptd";
  return "nam+ptd+nep";
}

EnsembleModel ensemble_train(
    const std::vector<std::pair<features::FeatureVector, int>>& data,
    const FeatureConfig& fc, const LrHyper& lr_hyper,
    const SvmHyper& svm_hyper, const NbHyper& nb_hyper) {
  std::vector<Example> examples;
  examples.reserve(data.size());
  std::size_t positives = 0;
  for (const auto& [fv, label] : data) {
    examples.push_back({fc.apply(fv), label});
    if (label == +1) ++positives;
  }

  EnsembleModel m;
  m.feature_config = fc;
  m.feature_config.step = nb_hyper.step;
  m.lr = lr_train(examples, lr_hyper);
  m.svm = svm_train(examples, svm_hyper);
  m.nb = nb_train(examples, nb_hyper);
  m.meta = {data.size(), positives, lr_hyper, svm_hyper, nb_hyper};
  return m;
}

int member_predict(const EnsembleModel& m, const features::FeatureVector& x,
                   Voter voter) {
  std::vector<double> v = m.feature_config.apply(x);
  switch (voter) {
    case Voter::Lr: return lr_label(m.lr, v);
    case Voter::Svm: return svm_predict(m.svm, v);
    case Voter::Nb: return nb_predict(m.nb, v).first;
    case Voter::Ensemble: break;
  }
  int votes = lr_label(m.lr, v) + svm_predict(m.svm, v) +
              nb_predict(m.nb, v).first;
  return votes > 0 ? +1 : -1;
}

int ensemble_predict(const EnsembleModel& m,
                     const features::FeatureVector& x) {
  return member_predict(m, x, Voter::Ensemble);
}

// ---- Model file ---------------------------------------------------------------

void write_model_json(const EnsembleModel& m, std::ostream& out) {
  json mask = json::array();
  for (bool b : m.feature_config.mask) mask.push_back(b);

  json cond = json::array();
  for (const auto& dim : m.nb.cond) {
    cond.push_back({{"pos", dim[0]}, {"neg", dim[1]}});
  }

  json j{
      {"version", m.version},
      {"feature_config",
       {{"name", m.feature_config.name()},
        {"step", m.feature_config.step},
        {"mask", mask}}},
      {"lr", {{"theta", m.lr.theta}, {"theta0", m.lr.theta0}}},
      {"svm", {{"w", m.svm.w}, {"b", m.svm.b}}},
      {"nb",
       {{"step", m.nb.step},
        {"num_bins", m.nb.num_bins},
        {"prior_pos", m.nb.prior_pos},
        {"prior_neg", m.nb.prior_neg},
        {"cond", cond}}},
      {"meta",
       {{"num_examples", m.meta.num_examples},
        {"num_positive", m.meta.num_positive},
        {"lr",
         {{"lambda", m.meta.lr.lambda},
          {"max_iters", m.meta.lr.max_iters},
          {"tol", m.meta.lr.tol}}},
        {"svm", {{"c", m.meta.svm.c}, {"epochs", m.meta.svm.epochs}}},
        {"nb", {{"step", m.meta.nb.step}, {"alpha", m.meta.nb.alpha}}}}}};
  out << j.dump(2) << '\n';
}

EnsembleModel read_model_json(std::istream& in) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(e.what(), 0);
  }
  try {
    EnsembleModel m;
    m.version = j.at("version").get<int>();
    if (m.version != 1) {
      throw Error("unsupported model format version " +
                  std::to_string(m.version));
    }
    const auto& fc = j.at("feature_config");
    m.feature_config.step = fc.at("step").get<double>();
    const auto& mask = fc.at("mask");
    if (mask.size() != features::kDims) {
      throw SchemaError("feature mask must have 11 entries", 0);
    }
    for (std::size_t i = 0; i < features::kDims; ++i) {
      m.feature_config.mask[i] = mask.at(i).get<bool>();
    }
    m.lr.theta = j.at("lr").at("theta").get<std::vector<double>>();
    m.lr.theta0 = j.at("lr").at("theta0").get<double>();
    m.svm.w = j.at("svm").at("w").get<std::vector<double>>();
    m.svm.b = j.at("svm").at("b").get<double>();
    const auto& nb = j.at("nb");
    m.nb.step = nb.at("step").get<double>();
    m.nb.num_bins = nb.at("num_bins").get<int>();
    m.nb.prior_pos = nb.at("prior_pos").get<double>();
    m.nb.prior_neg = nb.at("prior_neg").get<double>();
    for (const auto& dim : nb.at("cond")) {
      std::array<std::vector<double>, 2> tables;
      tables[0] = dim.at("pos").get<std::vector<double>>();
      tables[1] = dim.at("neg").get<std::vector<double>>();
      m.nb.cond.push_back(std::move(tables));
    }
    const auto& meta = j.at("meta");
    m.meta.num_examples = meta.at("num_examples").get<std::size_t>();
    m.meta.num_positive = meta.at("num_positive").get<std::size_t>();
    m.meta.lr.lambda = meta.at("lr").at("lambda").get<double>();
    m.meta.lr.max_iters = meta.at("lr").at("max_iters").get<int>();
    m.meta.lr.tol = meta.at("lr").at("tol").get<double>();
    m.meta.svm.c = meta.at("svm").at("c").get<double>();
    m.meta.svm.epochs = meta.at("svm").at("epochs").get<int>();
    m.meta.nb.step = meta.at("nb").at("step").get<double>();
    m.meta.nb.alpha = meta.at("nb").at("alpha").get<double>();
    return m;
  } catch (const json::exception& e) {
    throw SchemaError(e.what(), 0);
  }
}

void save_model(const EnsembleModel& m, const std::string& path) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error("cannot write model file: " + tmp);
    write_model_json(m, out);
  }
  std::filesystem::rename(tmp, path);
}

EnsembleModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open model file: " + path);
  return read_model_json(in);
}

}  // namespace tablescout::clf
