#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "helpers.hpp"
#include "tablescout/classifiers.hpp"
#include "tablescout/errors.hpp"

using namespace tablescout;

namespace {

clf::Example ex(std::vector<double> x, int y) { return {std::move(x), y}; }

// Independent brute-force evaluation of the NB decision by explicit
// multiplication, mirroring the training/discretization contract.
std::pair<int, double> nb_brute_force(const std::vector<clf::Example>& data,
                                      const clf::NbHyper& hyper,
                                      const std::vector<double>& x) {
  int bins = static_cast<int>(std::ceil(1.0 / hyper.step - 1e-12));
  auto bin_of = [&](double v) {
    int b = static_cast<int>(std::floor(v / hyper.step)) + 1;
    return std::min(std::max(b, 1), bins);
  };
  std::size_t n_pos = 0;
  for (const auto& e : data) n_pos += e.label == +1;
  std::size_t n_neg = data.size() - n_pos;
  double joint[2] = {static_cast<double>(n_pos) / data.size(),
                     static_cast<double>(n_neg) / data.size()};
  for (std::size_t d = 0; d < x.size(); ++d) {
    int qb = bin_of(x[d]);
    for (int cls = 0; cls < 2; ++cls) {
      int want = cls == 0 ? +1 : -1;
      std::size_t count = 0;
      for (const auto& e : data) {
        if (e.label == want && bin_of(e.x[d]) == qb) ++count;
      }
      std::size_t class_count = cls == 0 ? n_pos : n_neg;
      joint[cls] *= (count + hyper.alpha) /
                    (class_count + hyper.alpha * bins);
    }
  }
  int label = joint[0] > joint[1] ? +1 : -1;
  double post = joint[label == +1 ? 0 : 1] / (joint[0] + joint[1]);
  return {label, post};
}

}  // namespace

// ---- logistic regression -----------------------------------------------------

TEST_CASE("lr_score is the affine form") {
  clf::LrModel m;
  m.theta = {0, 0, 0};
  CHECK(clf::lr_score(m, std::vector<double>{1, 2, 3}) == 0.0);
  m.theta = {1, 0, 0};
  CHECK(clf::lr_score(m, std::vector<double>{0.7, 9, 9}) ==
        doctest::Approx(0.7));
  m.theta = {0, 0, 0};
  m.theta0 = -1;
  CHECK(clf::lr_score(m, std::vector<double>{5, 5, 5}) == doctest::Approx(-1));
}

TEST_CASE("lr_prob sigmoid identities") {
  clf::LrModel m;
  m.theta = {1};
  CHECK(clf::lr_prob(m, std::vector<double>{0}) == doctest::Approx(0.5));
  double s = 1.7;
  double p_pos = clf::lr_prob(m, std::vector<double>{s});
  double p_neg = clf::lr_prob(m, std::vector<double>{-s});
  CHECK(p_pos + p_neg == doctest::Approx(1.0));
  CHECK(clf::lr_prob(m, std::vector<double>{std::log(3.0)}) ==
        doctest::Approx(0.75));
}

TEST_CASE("lr_train: symmetric data forces zero bias") {
  auto model = clf::lr_train({ex({1.0}, +1), ex({-1.0}, -1)});
  CHECK(std::abs(model.theta0) < 1e-6);
  CHECK(model.theta[0] > 0.0);
}

TEST_CASE("lr_train beats the zero model on separable data") {
  std::vector<clf::Example> data{ex({1.0}, +1), ex({-1.0}, -1)};
  clf::LrHyper hyper;
  hyper.lambda = 0.1;
  auto model = clf::lr_train(data, hyper);
  // Mean log-loss strictly below ln 2 (the theta = 0 loss).
  double loss = 0;
  for (const auto& e : data) {
    double p = clf::lr_prob(model, e.x);
    loss += -std::log(e.label == +1 ? p : 1.0 - p);
  }
  loss /= data.size();
  CHECK(loss < std::log(2.0));
  // Against a scalar grid-search oracle on theta (theta0 = 0 by symmetry):
  // the trained penalized objective must reach the grid optimum.
  double best = -1e300;
  for (double t = 0.0; t <= 10.0; t += 0.001) {
    clf::LrModel grid;
    grid.theta = {t};
    best = std::max(best, clf::lr_objective(data, grid, hyper.lambda));
  }
  CHECK(clf::lr_objective(data, model, hyper.lambda) >= best - 1e-6);
}

TEST_CASE("lr_train rejects single-class data") {
  CHECK_THROWS_AS(clf::lr_train({ex({1.0}, +1), ex({2.0}, +1)}),
                  DegenerateData);
}

TEST_CASE("lr gradient matches central finite differences") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t dims = 2 + rng() % 3;
    std::vector<clf::Example> data;
    for (int i = 0; i < 6; ++i) {
      std::vector<double> x(dims);
      for (auto& v : x) v = unif(rng);
      data.push_back(ex(x, i % 2 == 0 ? +1 : -1));
    }
    clf::LrModel m;
    m.theta.resize(dims);
    for (auto& v : m.theta) v = unif(rng);
    m.theta0 = unif(rng);
    double lambda = 0.01;
    auto grad = clf::lr_gradient(data, m, lambda);
    REQUIRE(grad.size() == dims + 1);
    double h = 1e-6;
    for (std::size_t d = 0; d <= dims; ++d) {
      auto up = m;
      auto down = m;
      if (d < dims) {
        up.theta[d] += h;
        down.theta[d] -= h;
      } else {
        up.theta0 += h;
        down.theta0 -= h;
      }
      double fd = (clf::lr_objective(data, up, lambda) -
                   clf::lr_objective(data, down, lambda)) /
                  (2 * h);
      double denom = std::max({std::abs(grad[d]), std::abs(fd), 1.0});
      CHECK(std::abs(grad[d] - fd) / denom < 1e-6);
    }
  }
}

TEST_CASE("lr objective is non-decreasing in iteration count") {
  std::vector<clf::Example> data{ex({0.9, 0.1}, +1), ex({0.8, 0.3}, +1),
                                 ex({0.1, 0.7}, -1), ex({0.2, 0.9}, -1),
                                 ex({0.5, 0.5}, +1), ex({0.4, 0.6}, -1)};
  clf::LrHyper hyper;
  double prev = -1e300;
  for (int iters = 1; iters <= 12; ++iters) {
    hyper.max_iters = iters;
    auto m = clf::lr_train(data, hyper);
    double obj = clf::lr_objective(data, m, hyper.lambda);
    CHECK(obj >= prev - 1e-12);
    prev = obj;
  }
}

// ---- SVM ----------------------------------------------------------------------

TEST_CASE("svm 1-D margin case separates all four points") {
  std::vector<clf::Example> data{ex({2.0}, +1), ex({3.0}, +1), ex({0.0}, -1),
                                 ex({-1.0}, -1)};
  auto m = clf::svm_train(data);
  REQUIRE(m.w.size() == 1);
  CHECK(m.w[0] > 0.0);
  double boundary = -m.b / m.w[0];
  CHECK(boundary > 0.0);
  CHECK(boundary < 2.0);
  for (const auto& e : data) {
    CHECK(clf::svm_predict(m, e.x) == e.label);
  }
}

TEST_CASE("mirrored dataset flips svm predictions exactly") {
  std::vector<clf::Example> data{ex({1.0, 0.2}, +1), ex({0.8, 0.9}, +1),
                                 ex({-0.3, 0.1}, -1), ex({-1.0, -0.5}, -1)};
  std::vector<clf::Example> mirrored;
  for (const auto& e : data) {
    std::vector<double> neg;
    for (double v : e.x) neg.push_back(-v);
    mirrored.push_back(ex(neg, -e.label));
  }
  auto m1 = clf::svm_train(data);
  auto m2 = clf::svm_train(mirrored);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int i = 0; i < 50; ++i) {
    std::vector<double> x{unif(rng), unif(rng)};
    std::vector<double> nx{-x[0], -x[1]};
    double s1 = 0, s2 = 0;
    for (int d = 0; d < 2; ++d) {
      s1 += m1.w[d] * x[d];
      s2 += m2.w[d] * nx[d];
    }
    s1 += m1.b;
    s2 += m2.b;
    // Mirroring the data negates the decision function exactly.
    CHECK(s2 == doctest::Approx(-s1).epsilon(1e-12));
    if (s1 != 0.0) {
      CHECK(clf::svm_predict(m2, nx) == -clf::svm_predict(m1, x));
    }
  }
}

TEST_CASE("svm rejects single-class data") {
  CHECK_THROWS_AS(clf::svm_train({ex({1.0}, +1)}), DegenerateData);
}

TEST_CASE("svm_predict sign convention with tie to -1") {
  clf::SvmModel m;
  m.w = {1.0};
  m.b = 0.0;
  CHECK(clf::svm_predict(m, std::vector<double>{2.3}) == +1);
  CHECK(clf::svm_predict(m, std::vector<double>{-0.1}) == -1);
  CHECK(clf::svm_predict(m, std::vector<double>{0.0}) == -1);
}

TEST_CASE("svm objective at the trained model beats the zero model") {
  std::vector<clf::Example> data{ex({0.9, 0.1}, +1), ex({0.7, 0.4}, +1),
                                 ex({0.1, 0.8}, -1), ex({0.3, 0.9}, -1)};
  auto m = clf::svm_train(data);
  clf::SvmModel zero;
  zero.w = {0.0, 0.0};
  CHECK(clf::svm_objective(data, m, 1.0) <
        clf::svm_objective(data, zero, 1.0));
}

// ---- Naive Bayes ---------------------------------------------------------------

TEST_CASE("nb_discretize bins per the step contract") {
  CHECK(clf::nb_discretize_value(0.1, 0.2) == 1);
  CHECK(clf::nb_discretize_value(0.2, 0.2) == 2);
  CHECK(clf::nb_discretize_value(1.0, 0.2) == 5);
  CHECK(clf::nb_discretize_value(0.0, 0.2) == 1);
  auto bins = clf::nb_discretize(std::vector<double>{0.1, 0.95}, 0.2);
  CHECK(bins == std::vector<int>{1, 5});
}

TEST_CASE("nb priors are empirical frequencies") {
  auto m = clf::nb_train({ex({0.1}, +1), ex({0.3}, +1), ex({0.5}, +1),
                          ex({0.9}, -1)});
  CHECK(m.prior_pos == doctest::Approx(0.75));
  CHECK(m.prior_neg == doctest::Approx(0.25));
}

TEST_CASE("unseen bin with 3 positives and 5 bins smooths to 1/8") {
  // All positives in bin 1; bin 2 never seen for class +1.
  auto m = clf::nb_train({ex({0.1}, +1), ex({0.15}, +1), ex({0.05}, +1),
                          ex({0.9}, -1)});
  CHECK(m.cond[0][0][1] == doctest::Approx(1.0 / 8.0));  // (0+1)/(3+5)
  CHECK(m.cond[0][0][0] == doctest::Approx(4.0 / 8.0));  // (3+1)/(3+5)
}

TEST_CASE("nb hand oracle on a 6-example dataset matches to 1e-12") {
  std::vector<clf::Example> data{ex({0.1, 0.9}, +1), ex({0.3, 0.8}, +1),
                                 ex({0.2, 0.6}, +1), ex({0.7, 0.1}, -1),
                                 ex({0.9, 0.3}, -1), ex({0.6, 0.2}, -1)};
  clf::NbHyper hyper;
  auto m = clf::nb_train(data, hyper);
  std::vector<double> q{0.25, 0.75};
  auto [label, post] = clf::nb_predict(m, q);
  auto [blabel, bpost] = nb_brute_force(data, hyper, q);
  CHECK(label == blabel);
  CHECK(std::abs(post - bpost) < 1e-12);
}

TEST_CASE("nb posterior normalizes and ties go negative") {
  // Perfectly symmetric dataset: identical conditionals for both classes.
  std::vector<clf::Example> data{ex({0.1}, +1), ex({0.9}, +1), ex({0.1}, -1),
                                 ex({0.9}, -1)};
  auto m = clf::nb_train(data);
  auto [label, post] = clf::nb_predict(m, std::vector<double>{0.5});
  CHECK(label == -1);
  CHECK(post == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("nb brute-force equivalence on random small datasets") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  clf::NbHyper hyper;
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<clf::Example> data;
    int n = 2 + static_cast<int>(rng() % 5);
    bool has_pos = false, has_neg = false;
    for (int i = 0; i < n; ++i) {
      int y = rng() % 2 ? +1 : -1;
      if (i == n - 1 && !has_pos) y = +1;
      if (i == n - 2 && !has_neg) y = -1;
      (y == +1 ? has_pos : has_neg) = true;
      data.push_back(ex({unif(rng), unif(rng)}, y));
    }
    auto m = clf::nb_train(data, hyper);
    std::vector<double> q{unif(rng), unif(rng)};
    auto [label, post] = clf::nb_predict(m, q);
    auto [blabel, bpost] = nb_brute_force(data, hyper, q);
    CHECK(label == blabel);
    CHECK(std::abs(post - bpost) < 1e-12);
  }
}

TEST_CASE("nb rejects single-class data") {
  CHECK_THROWS_AS(clf::nb_train({ex({0.5}, -1), ex({0.6}, -1)}),
                  DegenerateData);
}

// ---- ensemble -------------------------------------------------------------------

namespace {

features::FeatureVector fv_of(double nam, double nn = 1.0) {
  features::FeatureVector fv;
  fv.nam = nam;
  fv.ptd = {nn, 1.0 - nn, 0, 0, 0};
  return fv;
}

clf::EnsembleModel toy_model() {
  std::vector<std::pair<features::FeatureVector, int>> data;
  for (int i = 0; i < 10; ++i) {
    data.push_back({fv_of(0.8 + 0.01 * i), +1});
    data.push_back({fv_of(0.1 + 0.01 * i), -1});
  }
  return clf::ensemble_train(data);
}

}  // namespace

TEST_CASE("ensemble vote is the majority function") {
  auto majority = [](int a, int b, int c) {
    return (a + b + c) > 0 ? +1 : -1;
  };
  CHECK(majority(+1, +1, -1) == +1);
  CHECK(majority(-1, -1, -1) == -1);
  CHECK(majority(+1, -1, -1) == -1);

  auto model = toy_model();
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    auto fv = fv_of(unif(rng), unif(rng));
    int lr = clf::member_predict(model, fv, clf::Voter::Lr);
    int svm = clf::member_predict(model, fv, clf::Voter::Svm);
    int nb = clf::member_predict(model, fv, clf::Voter::Nb);
    CHECK(clf::ensemble_predict(model, fv) == majority(lr, svm, nb));
  }
}

TEST_CASE("trained toy ensemble separates the classes") {
  auto model = toy_model();
  CHECK(clf::ensemble_predict(model, fv_of(0.9)) == +1);
  CHECK(clf::ensemble_predict(model, fv_of(0.05)) == -1);
  CHECK(model.nb.prior_pos == doctest::Approx(0.5));
}

TEST_CASE("feature masks select dimensions") {
  auto nam = clf::FeatureConfig::from_name("nam");
  CHECK(nam.active_dims() == 1);
  auto namptd = clf::FeatureConfig::from_name("nam+ptd");
  CHECK(namptd.active_dims() == 6);
  auto all = clf::FeatureConfig::from_name("nam+ptd+nep");
  CHECK(all.active_dims() == 11);
  CHECK(nam.name() == "nam");
  CHECK(namptd.name() == "nam+ptd");
  CHECK(all.name() == "nam+ptd+nep");
  CHECK_THROWS_AS(clf::FeatureConfig::from_name("bogus"), Error);

  features::FeatureVector fv;
  fv.nam = 0.4;
  fv.ptd = {0.5, 0.5, 0, 0, 0};
  fv.nep = {0, 0, 0, 1.0, 0};
  CHECK(nam.apply(fv) == std::vector<double>{0.4});
  CHECK(namptd.apply(fv) == std::vector<double>{0.4, 0.5, 0.5, 0, 0, 0});
}

TEST_CASE("training is bit-identical across reruns") {
  auto a = toy_model();
  auto b = toy_model();
  std::stringstream sa, sb;
  clf::write_model_json(a, sa);
  clf::write_model_json(b, sb);
  CHECK(sa.str() == sb.str());
}

TEST_CASE("model JSON round-trips") {
  auto m = toy_model();
  std::stringstream ss;
  clf::write_model_json(m, ss);
  auto back = clf::read_model_json(ss);
  std::stringstream again;
  clf::write_model_json(back, again);
  CHECK(ss.str() == again.str());
  CHECK(back.lr.theta == m.lr.theta);
  CHECK(back.svm.w == m.svm.w);
  CHECK(back.nb.prior_pos == m.nb.prior_pos);
  CHECK(back.nb.cond == m.nb.cond);
}

TEST_CASE("save_model and load_model cover the file path") {
  auto dir = test_helpers::scratch_dir("model");
  auto m = toy_model();
  auto path = (dir / "m.json").string();
  clf::save_model(m, path);
  auto back = clf::load_model(path);
  CHECK(back.lr.theta == m.lr.theta);
  CHECK(back.version == 1);
}
