#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tablescout/features.hpp"

namespace tablescout::clf {

struct Example {
  std::vector<double> x;
  int label = -1;  // +1 or -1
};

// ---- Logistic regression -------------------------------------------------

struct LrModel {
  std::vector<double> theta;
  double theta0 = 0.0;
};

struct LrHyper {
  double lambda = 1e-3;  // L2 on theta, bias unpenalized
  int max_iters = 500;
  double tol = 1e-6;  // gradient max-norm stop
};

double lr_score(const LrModel& m, std::span<const double> x);
double lr_prob(const LrModel& m, std::span<const double> x);

// Penalized log-likelihood and its gradient (last component is d/dtheta0),
// exposed so the finite-difference check can target the exact objective.
double lr_objective(const std::vector<Example>& data, const LrModel& m,
                    double lambda);
std::vector<double> lr_gradient(const std::vector<Example>& data,
                                const LrModel& m, double lambda);

// Full-batch gradient ascent with backtracking line search from zero
// initialization. Throws DegenerateData when one class is missing.
LrModel lr_train(const std::vector<Example>& data, const LrHyper& hyper = {});

// ---- Linear soft-margin SVM ----------------------------------------------

struct SvmModel {
  std::vector<double> w;
  double b = 0.0;
};

struct SvmHyper {
  double c = 1.0;
  int epochs = 2000;
};

// (1/2)||w||^2 + C * sum hinge(y (w.x + b)).
double svm_objective(const std::vector<Example>& data, const SvmModel& m,
                     double c);

// Deterministic epoch-based subgradient descent (step 1/(lambda t), fixed
// example order, zero init) returning the averaged iterate.
SvmModel svm_train(const std::vector<Example>& data,
                   const SvmHyper& hyper = {});

// sign(w.x + b), tie -> -1.
int svm_predict(const SvmModel& m, std::span<const double> x);

// ---- Discretized Naive Bayes ----------------------------------------------

struct NbModel {
  double step = 0.2;
  int num_bins = 5;
  double prior_pos = 0.5;
  double prior_neg = 0.5;
  // cond[d][cls][bin], cls 0 = +1, cls 1 = -1, bins 0-based.
  std::vector<std::array<std::vector<double>, 2>> cond;
};

struct NbHyper {
  double step = 0.2;
  double alpha = 1.0;  // Laplace smoothing
};

// floor(v / step) + 1, clamped into [1, num_bins].
int nb_discretize_value(double v, double step);
std::vector<int> nb_discretize(std::span<const double> x, double step);

NbModel nb_train(const std::vector<Example>& data, const NbHyper& hyper = {});

// argmax_y Pr(x|y)Pr(y) in log space with the normalized posterior of the
// returned label; exact tie -> -1.
std::pair<int, double> nb_predict(const NbModel& m, std::span<const double> x);

// ---- Ensemble ---------------------------------------------------------------

enum class Voter { Ensemble, Lr, Svm, Nb };

struct FeatureConfig {
  double step = 0.2;
  std::array<bool, features::kDims> mask;  // active feature dimensions

  FeatureConfig();
  std::vector<double> apply(const features::FeatureVector& fv) const;
  std::size_t active_dims() const;

  // nam | nam+ptd | nam+ptd+nep
  static FeatureConfig from_name(const std::string& name);
  std::string name() const;
};

struct TrainMeta {
  std::size_t num_examples = 0;
  std::size_t num_positive = 0;
  LrHyper lr;
  SvmHyper svm;
  NbHyper nb;
};

struct EnsembleModel {
  int version = 1;
  FeatureConfig feature_config;
  LrModel lr;
  SvmModel svm;
  NbModel nb;
  TrainMeta meta;
};

EnsembleModel ensemble_train(
    const std::vector<std::pair<features::FeatureVector, int>>& data,
    const FeatureConfig& fc = {}, const LrHyper& lr_hyper = {},
    const SvmHyper& svm_hyper = {}, const NbHyper& nb_hyper = {});

int lr_label(const LrModel& m, std::span<const double> x);  // prob > 0.5 -> +1
int member_predict(const EnsembleModel& m, const features::FeatureVector& x,
                   Voter voter);
int ensemble_predict(const EnsembleModel& m, const features::FeatureVector& x);

// Versioned single-document JSON model file.
void write_model_json(const EnsembleModel& m, std::ostream& out);
EnsembleModel read_model_json(std::istream& in);
void save_model(const EnsembleModel& m, const std::string& path);  // atomic
EnsembleModel load_model(const std::string& path);

}  // namespace tablescout::clf
