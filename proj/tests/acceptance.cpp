// Acceptance checks: one pass/fail line per criterion. All tolerances are
// pinned in code; the binary exits non-zero when any criterion fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "helpers.hpp"
#include "tablescout/baseline.hpp"
#include "tablescout/classifiers.hpp"
#include "tablescout/cli.hpp"
#include "tablescout/corpus.hpp"
#include "tablescout/evaluation.hpp"
#include "tablescout/features.hpp"
#include "tablescout/layout.hpp"
#include "tablescout/pdf_ingest.hpp"
#include "tablescout/synth.hpp"
#include "tablescout/weak_labeler.hpp"

using namespace tablescout;
namespace fs = std::filesystem;
using test_helpers::make_line;
using test_helpers::scratch_dir;
using test_helpers::slurp;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

template <typename F>
void criterion(int idx, const std::string& name, F&& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  if (c.ok) {
    std::printf("PASS criterion %d: %s\n", idx, name.c_str());
  } else {
    std::printf("FAIL criterion %d: %s (%s)\n", idx, name.c_str(),
                c.detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// ---- 1. metric formulas ----------------------------------------------------

void metric_oracle(Check& c) {
  // Hand-checkable case.
  auto hand = eval::compute_metrics({3, 1, 2, 4});
  c.require(close(hand.accuracy, 0.7, 1e-12), "hand accuracy");
  c.require(hand.precision && close(*hand.precision, 0.75, 1e-12),
            "hand precision");
  c.require(hand.recall && close(*hand.recall, 0.6, 1e-12), "hand recall");
  c.require(hand.f1 && close(*hand.f1, 0.6667, 1e-4), "hand f1");

  // Independent direct-formula recomputation on random counts.
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 1000; ++trial) {
    eval::ConfusionCounts k{static_cast<std::int64_t>(rng() % 50),
                            static_cast<std::int64_t>(rng() % 50),
                            static_cast<std::int64_t>(rng() % 50),
                            static_cast<std::int64_t>(rng() % 50)};
    if (k.total() == 0) continue;
    auto r = eval::compute_metrics(k);
    double tp = static_cast<double>(k.tp), fp = static_cast<double>(k.fp);
    double fn = static_cast<double>(k.fn), tn = static_cast<double>(k.tn);
    c.require(close(r.accuracy, (tp + tn) / (tp + fp + fn + tn), 1e-12),
              "accuracy formula");
    if (k.tp + k.fp > 0) {
      c.require(r.precision && close(*r.precision, tp / (tp + fp), 1e-12),
                "precision formula");
    } else {
      c.require(!r.precision, "precision must stay undefined");
    }
    if (k.tp + k.fn > 0) {
      c.require(r.recall && close(*r.recall, tp / (tp + fn), 1e-12),
                "recall formula");
    } else {
      c.require(!r.recall, "recall must stay undefined");
    }
    if (r.precision && r.recall && *r.precision + *r.recall > 0.0) {
      double f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
      c.require(r.f1 && close(*r.f1, f1, 1e-12), "f1 formula");
    } else {
      c.require(!r.f1, "f1 must stay undefined");
    }
  }
}

// ---- 2. naive bayes exactness ----------------------------------------------

// Probability-space recount, deliberately independent of the model code
// (no logs, no shared helpers beyond the bin rule).
std::pair<int, double> nb_brute(const std::vector<clf::Example>& data,
                                const std::array<double, 2>& x) {
  auto bin = [](double v) {
    int b = static_cast<int>(std::floor(v / 0.2)) + 1;
    return b < 1 ? 1 : (b > 5 ? 5 : b);
  };
  double score[2] = {0, 0};  // 0 -> +1, 1 -> -1
  double n = static_cast<double>(data.size());
  for (int cls = 0; cls < 2; ++cls) {
    int want = cls == 0 ? +1 : -1;
    double n_cls = 0;
    for (const auto& e : data) n_cls += (e.label == want) ? 1.0 : 0.0;
    double p = n_cls / n;
    for (int d = 0; d < 2; ++d) {
      double match = 0;
      for (const auto& e : data) {
        if (e.label == want && bin(e.x[d]) == bin(x[d])) match += 1.0;
      }
      p *= (match + 1.0) / (n_cls + 5.0);
    }
    score[cls] = p;
  }
  int label = score[0] > score[1] ? +1 : -1;
  double post = score[label == +1 ? 0 : 1] / (score[0] + score[1]);
  return {label, post};
}

void nb_exactness(Check& c) {
  const double vals[2] = {0.1, 0.3};
  const int labels[2] = {+1, -1};
  const std::array<double, 2> queries[4] = {
      {0.1, 0.1}, {0.1, 0.3}, {0.3, 0.1}, {0.3, 0.3}};
  long datasets = 0;
  for (int n = 2; n <= 5; ++n) {
    long combos = 1;
    for (int i = 0; i < n; ++i) combos *= 8;
    for (long code = 0; code < combos; ++code) {
      std::vector<clf::Example> data;
      long rest = code;
      bool has_pos = false, has_neg = false;
      for (int i = 0; i < n; ++i) {
        int opt = static_cast<int>(rest % 8);
        rest /= 8;
        clf::Example e;
        e.x = {vals[opt & 1], vals[(opt >> 1) & 1]};
        e.label = labels[(opt >> 2) & 1];
        (e.label == +1 ? has_pos : has_neg) = true;
        data.push_back(e);
      }
      if (!has_pos || !has_neg) continue;
      ++datasets;
      auto model = clf::nb_train(data);
      for (const auto& q : queries) {
        auto [label, post] = clf::nb_predict(model, q);
        auto [blabel, bpost] = nb_brute(data, q);
        c.require(label == blabel, "label mismatch");
        c.require(close(post, bpost, 1e-12), "posterior mismatch");
        if (!c.ok) return;
      }
    }
  }
  c.require(datasets > 10000, "dataset enumeration too small");
}

// ---- 3. logistic regression gradient ----------------------------------------

void lr_gradient_check(Check& c) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int draw = 0; draw < 20; ++draw) {
    int dims = 1 + static_cast<int>(rng() % 5);
    int n = 4 + static_cast<int>(rng() % 10);
    std::vector<clf::Example> data(n);
    for (auto& e : data) {
      e.x.resize(dims);
      for (auto& v : e.x) v = gauss(rng);
      e.label = (rng() % 2 == 0) ? +1 : -1;
    }
    clf::LrModel m;
    m.theta.resize(dims);
    for (auto& t : m.theta) t = gauss(rng);
    m.theta0 = gauss(rng);

    auto grad = clf::lr_gradient(data, m, 1e-3);
    const double h = 1e-5;
    for (int d = 0; d <= dims; ++d) {
      auto hi = m, lo = m;
      (d < dims ? hi.theta[d] : hi.theta0) += h;
      (d < dims ? lo.theta[d] : lo.theta0) -= h;
      double fd = (clf::lr_objective(data, hi, 1e-3) -
                   clf::lr_objective(data, lo, 1e-3)) /
                  (2.0 * h);
      double denom = std::max({std::fabs(grad[d]), std::fabs(fd), 1.0});
      c.require(std::fabs(grad[d] - fd) / denom < 1e-6,
                "gradient component off");
    }
  }
}

// ---- 4. svm margin sanity ----------------------------------------------------

void svm_margin(Check& c) {
  std::vector<clf::Example> data{
      {{2.0}, +1}, {{3.0}, +1}, {{0.0}, -1}, {{-1.0}, -1}};
  auto m = clf::svm_train(data);
  c.require(m.w[0] > 0.0, "weight sign");
  double boundary = -m.b / m.w[0];  // analytic max-margin boundary is 1.0
  c.require(boundary > 0.5 && boundary < 1.5, "boundary outside (0.5, 1.5)");
  for (const auto& e : data) {
    c.require(clf::svm_predict(m, e.x) == e.label, "training error nonzero");
  }
}

// ---- 5. ensemble majority -----------------------------------------------------

// A one-dimensional model whose three members emit fixed votes regardless
// of the input, so the ensemble rule can be probed on arbitrary triples.
clf::EnsembleModel rigged_model(int lr_vote, int svm_vote, int nb_vote) {
  clf::EnsembleModel m;
  m.feature_config = clf::FeatureConfig::from_name("nam");
  m.lr.theta = {0.0};
  m.lr.theta0 = lr_vote > 0 ? 1.0 : -1.0;
  m.svm.w = {0.0};
  m.svm.b = svm_vote > 0 ? 1.0 : -1.0;
  m.nb.step = 0.2;
  m.nb.num_bins = 5;
  m.nb.prior_pos = nb_vote > 0 ? 0.9 : 0.1;
  m.nb.prior_neg = nb_vote > 0 ? 0.1 : 0.9;
  m.nb.cond.resize(1);
  m.nb.cond[0][0].assign(5, 0.2);
  m.nb.cond[0][1].assign(5, 0.2);
  return m;
}

void ensemble_majority(Check& c) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 10000; ++trial) {
    int votes[3];
    for (int& v : votes) v = (rng() % 2 == 0) ? +1 : -1;
    auto m = rigged_model(votes[0], votes[1], votes[2]);
    features::FeatureVector fv;
    fv.nam = static_cast<double>(rng() % 1000) / 1000.0;
    c.require(clf::member_predict(m, fv, clf::Voter::Lr) == votes[0],
              "lr vote not rigged");
    c.require(clf::member_predict(m, fv, clf::Voter::Svm) == votes[1],
              "svm vote not rigged");
    c.require(clf::member_predict(m, fv, clf::Voter::Nb) == votes[2],
              "nb vote not rigged");
    int majority = (votes[0] + votes[1] + votes[2]) > 0 ? +1 : -1;
    c.require(clf::ensemble_predict(m, fv) == majority, "not the majority");
    if (!c.ok) return;
  }
}

// ---- 6. feature invariants -----------------------------------------------------

void feature_invariants(Check& c) {
  std::mt19937_64 rng(42);
  const char* words[] = {"alpha", "1.5",  "Table",  "quickly", "2001",
                         "45%",   "the",  "London", "value",   "x9"};
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<layout::Line> page;
    int n_lines = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < n_lines; ++i) {
      layout::Line line;
      line.doc_id = "d";
      line.line_idx = i;
      line.y = 700.0 - 14.0 * i;
      line.dominant_font_size = 10.0;
      double x = 50.0;
      int n_words = 1 + static_cast<int>(rng() % 6);
      for (int w = 0; w < n_words; ++w) {
        layout::Word word;
        word.text = words[rng() % 10];
        word.x0 = x;
        word.x1 = x + 5.0 * static_cast<double>(word.text.size());
        line.words.push_back(word);
        x = word.x1 + 1.0 + static_cast<double>(rng() % 12);
      }
      page.push_back(line);
    }
    for (const auto& line : page) {
      auto fv = features::featurize(line, page);
      c.require(fv.nam >= 0.0 && fv.nam <= 1.0, "nam out of [0,1]");
      double ptd_sum = 0;
      for (double v : fv.ptd) ptd_sum += v;
      c.require(close(ptd_sum, 1.0, 1e-9), "ptd does not sum to 1");
      for (double v : fv.nep) {
        c.require(v >= 0.0 && v <= 1.0, "nep component out of [0,1]");
      }
      if (!c.ok) return;
    }
  }

  // Bit-exact scale invariance. Two-word lines whose coordinates are
  // multiples of 10 scale exactly under both 0.1 and 10, so the
  // normalized margin ratio must not move by even one ulp.
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<layout::Line> page;
    int n_lines = 2 + static_cast<int>(rng() % 3);
    for (int i = 0; i < n_lines; ++i) {
      double x0 = 10.0 * static_cast<double>(1 + rng() % 20);
      double w1 = 10.0 * static_cast<double>(1 + rng() % 5);
      double gap = 10.0 * static_cast<double>(1 + rng() % 9);
      double w2 = 10.0 * static_cast<double>(1 + rng() % 5);
      layout::Line line;
      line.doc_id = "d";
      line.line_idx = i;
      line.y = 700.0 - 14.0 * i;
      line.dominant_font_size = 10.0;
      line.words.push_back({"aa", x0, x0 + w1});
      line.words.push_back({"bb", x0 + w1 + gap, x0 + w1 + gap + w2});
      page.push_back(line);
    }
    std::vector<double> base;
    for (const auto& l : page) base.push_back(features::compute_nam(l, page));
    for (double scale : {0.1, 10.0}) {
      auto scaled = page;
      for (auto& l : scaled) {
        for (auto& w : l.words) {
          w.x0 *= scale;
          w.x1 *= scale;
        }
      }
      for (std::size_t i = 0; i < scaled.size(); ++i) {
        c.require(features::compute_nam(scaled[i], scaled) == base[i],
                  "nam changed bits under scaling");
      }
    }
    if (!c.ok) return;
  }
}

// ---- 7. weak labels match generator roles ---------------------------------------

void weak_labeler_roles(Check& c) {
  synth::SynthConfig cfg;
  cfg.docs = 8;
  cfg.seed = 3;
  auto docs = synth::generate(cfg);
  std::size_t emitted = 0;
  for (const auto& doc : docs) {
    auto labeled = weak::weak_label_document(doc.pages, {});
    for (const auto& ll : labeled) {
      int page = ll.line.page;
      int idx = ll.line.line_idx;
      c.require(page >= 0 && page < static_cast<int>(doc.gold.size()),
                "page out of range");
      if (!c.ok) return;
      c.require(ll.label == doc.gold[page][idx],
                "weak label disagrees with generator role");
      ++emitted;
    }
  }
  c.require(emitted > 0, "no labels emitted");

  // A caption on the page edge has an undersized context group and must
  // be skipped outright.
  std::vector<layout::Line> top_edge;
  top_edge.push_back(make_line({"Table", "1:"}, 2.0, 0, 0, 760.0));
  for (int i = 1; i <= 4; ++i) {
    top_edge.push_back(make_line({"1.5", "2.5"}, 8.0, i, 0, 760.0 - 14.0 * i));
  }
  weak::WeakLabelStats stats;
  auto out = weak::weak_label_document({top_edge}, {}, &stats);
  c.require(stats.captions_found == 1, "edge caption not found");
  c.require(stats.captions_used == 0 && out.empty(),
            "edge caption was not skipped");
}

// ---- 8 & 9. end-to-end pipeline helpers ------------------------------------------

std::optional<double> report_metric(const fs::path& report_path,
                                    const std::string& key) {
  std::ifstream in(report_path);
  if (!in) return std::nullopt;
  auto j = nlohmann::json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains(key) || !j[key].is_number()) {
    return std::nullopt;
  }
  return j[key].get<double>();
}

void end_to_end(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto dir = scratch_dir("acc_e2e");
  auto corpus_dir = (dir / "corpus").string();
  auto out_dir = (dir / "out").string();
  c.require(cli::run({"synth", corpus_dir, "--docs", "200", "--seed", "7"}) ==
                0,
            "synth failed");
  c.require(cli::run({"pipeline", corpus_dir, "--out", out_dir, "--k", "8"}) ==
                0,
            "pipeline failed");

  auto acc = report_metric(fs::path(out_dir) / "report.json", "accuracy");
  auto f1 = report_metric(fs::path(out_dir) / "report.json", "f1");
  c.require(acc.has_value() && *acc >= 0.95, "ensemble accuracy below 0.95");
  c.require(f1.has_value() && *f1 >= 0.95, "ensemble f1 below 0.95");

  auto bpred = (dir / "baseline_pred.jsonl").string();
  auto breport = (dir / "baseline_report.json").string();
  c.require(cli::run({"predict", (fs::path(out_dir) / "test_lines.jsonl").string(),
                      "--voter", "baseline", "--out", bpred}) == 0,
            "baseline predict failed");
  c.require(cli::run({"evaluate", bpred,
                      (fs::path(out_dir) / "gold.jsonl").string(), "--report",
                      breport}) == 0,
            "baseline evaluate failed");
  auto bf1 = report_metric(breport, "f1");
  c.require(bf1.has_value(), "baseline report unreadable");
  if (f1 && bf1) {
    c.require(*f1 >= *bf1, "ensemble f1 below the heuristic baseline");
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0).count();
  c.require(secs < 60.0, "runtime over 60 s");
}

void ablation_direction(Check& c) {
  auto t0 = std::chrono::steady_clock::now();
  auto dir = scratch_dir("acc_ablate");
  auto corpus_dir = (dir / "corpus").string();
  c.require(cli::run({"synth", corpus_dir, "--docs", "60", "--seed", "11",
                      "--noise", "0.15"}) == 0,
            "synth failed");
  std::optional<double> f1s[2];
  const char* masks[2] = {"nam", "nam+ptd"};
  for (int i = 0; i < 2; ++i) {
    auto out_dir = (dir / ("out_" + std::string(masks[i]))).string();
    c.require(cli::run({"pipeline", corpus_dir, "--out", out_dir, "--features",
                        masks[i]}) == 0,
              "pipeline failed");
    f1s[i] = report_metric(fs::path(out_dir) / "report.json", "f1");
    c.require(f1s[i].has_value(), "report unreadable");
  }
  if (f1s[0] && f1s[1]) {
    c.require(*f1s[0] <= *f1s[1] + 0.02,
              "layout-only f1 beats layout+pos beyond noise");
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            t0).count();
  c.require(secs < 60.0, "runtime over 60 s");
}

// ---- 10. serialization round-trips ------------------------------------------------

PdfDocument random_pdf_doc(std::mt19937_64& rng) {
  PdfDocument d;
  d.doc_id = "doc" + std::to_string(rng() % 1000);
  int n_pages = 1 + static_cast<int>(rng() % 3);
  for (int p = 0; p < n_pages; ++p) d.pages.push_back({612.0, 792.0});
  d.chars.resize(d.pages.size());
  const char32_t cps[] = {U'A', U'z', U'é', U'€', U'7'};
  for (int p = 0; p < n_pages; ++p) {
    int n = static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) {
      d.chars[p].push_back({cps[rng() % 5], p,
                            static_cast<double>(rng() % 600) + 0.25,
                            static_cast<double>(rng() % 780) + 0.5, "F1",
                            9.0 + static_cast<double>(rng() % 5)});
    }
  }
  return d;
}

std::vector<layout::Line> random_lines(std::mt19937_64& rng) {
  std::vector<layout::Line> lines;
  int n = 1 + static_cast<int>(rng() % 6);
  for (int i = 0; i < n; ++i) {
    lines.push_back(make_line({"tok", "42"},
                              1.0 + static_cast<double>(rng() % 10), i,
                              static_cast<int>(rng() % 2),
                              700.0 - 14.0 * i));
  }
  return lines;
}

void round_trips(Check& c) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    // Char records.
    auto d = random_pdf_doc(rng);
    std::stringstream a;
    pdf::write_richchar_jsonl(d, a);
    std::stringstream a2(a.str());
    c.require(pdf::read_richchar_jsonl(a2) == d, "char jsonl round-trip");

    // Lines.
    auto lines = random_lines(rng);
    std::stringstream b;
    layout::write_lines_jsonl(lines, b);
    std::stringstream b2(b.str());
    c.require(layout::read_lines_jsonl(b2) == lines, "lines jsonl round-trip");

    // Labels.
    std::vector<weak::LabeledLine> labels;
    for (const auto& l : lines) {
      weak::LabeledLine ll;
      ll.line = l;
      ll.label = (rng() % 2 == 0) ? +1 : -1;
      ll.source = "weak";
      if (rng() % 2 == 0) ll.caption = {l.page, 0};
      labels.push_back(ll);
    }
    std::stringstream e;
    weak::write_labels_jsonl(labels, e);
    std::stringstream e2(e.str());
    c.require(weak::read_labels_jsonl(e2) == labels, "labels jsonl round-trip");
    if (!c.ok) return;
  }

  // Model JSON: write -> read -> write must be byte stable.
  std::vector<std::pair<features::FeatureVector, int>> data;
  std::mt19937_64 mrng(8);
  for (int i = 0; i < 40; ++i) {
    features::FeatureVector fv;
    fv.nam = static_cast<double>(mrng() % 1000) / 1000.0;
    fv.ptd = {0.5, 0.2, 0.1, 0.1, 0.1};
    fv.nep = {0, 0, 0, fv.nam, 0};
    data.emplace_back(fv, i % 2 == 0 ? +1 : -1);
  }
  auto model = clf::ensemble_train(data);
  std::stringstream m1, m2;
  clf::write_model_json(model, m1);
  std::stringstream mid(m1.str());
  clf::write_model_json(clf::read_model_json(mid), m2);
  c.require(m1.str() == m2.str(), "model json not byte stable");

  // Rerunning commands with identical inputs is byte identical.
  auto dir = scratch_dir("acc_rerun");
  auto lines_path = (dir / "lines.jsonl").string();
  {
    std::ofstream out(lines_path);
    std::vector<layout::Line> page;
    int idx = 0;
    double y = 760;
    for (int i = 0; i < 6; ++i, y -= 14) {
      page.push_back(make_line({"prose", "words", "here"}, 2.0, idx++, 0, y));
    }
    page.push_back(make_line({"Table", "1:"}, 2.0, idx++, 0, y));
    y -= 14;
    for (int i = 0; i < 6; ++i, y -= 14) {
      page.push_back(make_line({"1.5", "2.5"}, 9.0, idx++, 0, y));
    }
    layout::write_lines_jsonl(page, out);
  }
  auto out1 = (dir / "w1.jsonl").string();
  auto out2 = (dir / "w2.jsonl").string();
  c.require(cli::run({"weaklabel", lines_path, "--out", out1}) == 0 &&
                cli::run({"weaklabel", lines_path, "--out", out2}) == 0,
            "weaklabel rerun failed");
  c.require(slurp(out1) == slurp(out2), "weaklabel rerun differs");

  auto s1 = (dir / "r1" / "corpus").string();
  auto s2 = (dir / "r2" / "corpus").string();
  c.require(cli::run({"synth", s1, "--docs", "4", "--seed", "5"}) == 0 &&
                cli::run({"synth", s2, "--docs", "4", "--seed", "5"}) == 0,
            "synth rerun failed");
  c.require(slurp(fs::path(s1) / "manifest.json") ==
                slurp(fs::path(s2) / "manifest.json"),
            "synth manifests differ");
  c.require(slurp(fs::path(s1) / "lines" / "doc000.jsonl") ==
                slurp(fs::path(s2) / "lines" / "doc000.jsonl"),
            "synth lines differ");
}

// ---- 11. corpus split arithmetic -----------------------------------------------

void split_arithmetic(Check& c) {
  auto dir = scratch_dir("acc_split");
  fs::create_directories(dir / "lines");
  for (int i = 0; i < 67; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "doc%03d.jsonl", i);
    std::ofstream out(dir / "lines" / name);
    layout::write_lines_jsonl({make_line({"a", "b"}, 2.0)}, out);
  }
  auto manifest = corpus::build_manifest(dir.string(), 0.75, 1);
  std::size_t train = 0, test = 0;
  for (const auto& d : manifest.documents) {
    (d.role == corpus::Role::Train ? train : test)++;
  }
  c.require(train == 50, "train split is not 50");
  c.require(test == 17, "test split is not 17");
}

}  // namespace

int main() {
  criterion(1, "metric formulas match an independent recomputation",
            metric_oracle);
  criterion(2, "naive bayes equals brute-force posterior enumeration",
            nb_exactness);
  criterion(3, "logistic objective gradient passes finite differences",
            lr_gradient_check);
  criterion(4, "svm boundary and training error on the 1-d four-point set",
            svm_margin);
  criterion(5, "ensemble output equals the member majority", ensemble_majority);
  criterion(6, "feature ranges, sums, and bit-exact scale invariance",
            feature_invariants);
  criterion(7, "weak labels agree with generator roles; edge captions skip",
            weak_labeler_roles);
  criterion(8, "synthetic end-to-end accuracy/f1 and baseline comparison",
            end_to_end);
  criterion(9, "layout-only f1 does not beat layout+pos beyond noise",
            ablation_direction);
  criterion(10, "serialization round-trips and byte-identical reruns",
            round_trips);
  criterion(11, "67-document corpus splits 50/17 at ratio 0.75",
            split_arithmetic);
  return failures == 0 ? 0 : 1;
}
