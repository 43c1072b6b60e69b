#include "tablescout/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tablescout/baseline.hpp"
#include "tablescout/classifiers.hpp"
#include "tablescout/corpus.hpp"
#include "tablescout/errors.hpp"
#include "tablescout/evaluation.hpp"
#include "tablescout/features.hpp"
#include "tablescout/layout.hpp"
#include "tablescout/pdf_ingest.hpp"
#include "tablescout/synth.hpp"
#include "tablescout/weak_labeler.hpp"

namespace tablescout::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct HyperFlags {
  double lr_lambda = 1e-3;
  int lr_max_iters = 500;
  double lr_tol = 1e-6;
  double svm_c = 1.0;
  int svm_epochs = 2000;
  double nb_step = 0.2;
  double nb_alpha = 1.0;
  std::string features = "nam+ptd+nep";

  clf::LrHyper lr() const { return {lr_lambda, lr_max_iters, lr_tol}; }
  clf::SvmHyper svm() const { return {svm_c, svm_epochs}; }
  clf::NbHyper nb() const { return {nb_step, nb_alpha}; }
};

void add_hyper_flags(CLI::App* cmd, HyperFlags& h) {
  cmd->add_option("--features", h.features,
                  "Feature subset: nam, nam+ptd or nam+ptd+nep");
  cmd->add_option("--lr-lambda", h.lr_lambda, "LR L2 penalty");
  cmd->add_option("--lr-max-iters", h.lr_max_iters, "LR iteration cap");
  cmd->add_option("--lr-tol", h.lr_tol, "LR gradient stop tolerance");
  cmd->add_option("--svm-c", h.svm_c, "SVM soft-margin C");
  cmd->add_option("--svm-epochs", h.svm_epochs, "SVM training epochs");
  cmd->add_option("--nb-step", h.nb_step, "NB discretization step");
  cmd->add_option("--nb-alpha", h.nb_alpha, "NB Laplace smoothing");
}

std::ofstream open_out(const std::string& path) {
  if (auto parent = fs::path(path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return in;
}

// Optional pre-tagged annotations keyed by (doc_id, page, line_idx).
using AnnotationMap =
    std::map<std::tuple<std::string, int, int>,
             std::pair<std::vector<features::PosTag>,
                       std::vector<features::NeTag>>>;

AnnotationMap load_annotations(const std::string& path) {
  AnnotationMap out;
  auto in = open_in(path);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (raw.empty()) continue;
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), lineno);
    }
    try {
      std::vector<features::PosTag> pos;
      std::vector<features::NeTag> ne;
      for (const auto& p : j.at("pos")) {
        auto tag = features::pos_from_string(p.get<std::string>());
        if (!tag) throw SchemaError("unknown POS tag", lineno);
        pos.push_back(*tag);
      }
      for (const auto& n : j.at("ne")) {
        auto tag = features::ne_from_string(n.get<std::string>());
        if (!tag) throw SchemaError("unknown NE tag", lineno);
        ne.push_back(*tag);
      }
      out[{j.at("doc_id").get<std::string>(), j.at("page").get<int>(),
           j.at("line_idx").get<int>()}] = {std::move(pos), std::move(ne)};
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), lineno);
    }
  }
  return out;
}

features::FeatureVector featurize_line(
    const layout::Line& line, const std::vector<layout::Line>& page_lines,
    const AnnotationMap* annotations, const features::Gazetteers* gaz) {
  if (annotations) {
    auto it = annotations->find({line.doc_id, line.page, line.line_idx});
    if (it != annotations->end()) {
      std::vector<features::TokenAnnotation> anns;
      const auto& [pos, ne] = it->second;
      if (pos.size() != ne.size()) {
        throw AnnotationLengthMismatch(pos.size(), ne.size());
      }
      for (std::size_t i = 0; i < pos.size(); ++i) {
        anns.push_back({"", pos[i], ne[i]});
      }
      return features::featurize(line, page_lines, &anns, gaz);
    }
  }
  return features::featurize(line, page_lines, nullptr, gaz);
}

// Page context map for a flat line list: (doc_id, page) -> unique lines.
std::map<std::pair<std::string, int>, std::vector<layout::Line>>
build_page_contexts(const std::vector<layout::Line>& lines) {
  std::map<std::pair<std::string, int>, std::map<int, layout::Line>> uniq;
  for (const auto& l : lines) {
    uniq[{l.doc_id, l.page}].emplace(l.line_idx, l);
  }
  std::map<std::pair<std::string, int>, std::vector<layout::Line>> out;
  for (auto& [key, by_idx] : uniq) {
    auto& v = out[key];
    for (auto& [idx, line] : by_idx) v.push_back(std::move(line));
  }
  return out;
}

struct GazFlags {
  std::string persons, locations, organizations;

  std::optional<features::Gazetteers> load() const {
    if (persons.empty() && locations.empty() && organizations.empty()) {
      return std::nullopt;
    }
    features::Gazetteers g = features::Gazetteers::bundled();
    if (!persons.empty()) g.persons = features::Gazetteers::load_file(persons);
    if (!locations.empty()) {
      g.locations = features::Gazetteers::load_file(locations);
    }
    if (!organizations.empty()) {
      g.organizations = features::Gazetteers::load_file(organizations);
    }
    return g;
  }
};

void add_gaz_flags(CLI::App* cmd, GazFlags& g) {
  cmd->add_option("--gazetteer-persons", g.persons, "Person names file");
  cmd->add_option("--gazetteer-locations", g.locations, "Location names file");
  cmd->add_option("--gazetteer-organizations", g.organizations,
                  "Organization names file");
}

// ---- extract ----------------------------------------------------------------

struct ExtractResult {
  std::vector<layout::Line> lines;
  std::optional<std::string> error;
};

ExtractResult extract_one(const std::string& input,
                          const layout::LayoutConfig& cfg) {
  ExtractResult res;
  try {
    PdfDocument doc;
    if (fs::path(input).extension() == ".pdf") {
      doc = pdf::parse_pdf_file(input);
    } else {
      auto in = open_in(input);
      doc = pdf::read_richchar_jsonl(in);
      if (doc.doc_id.empty()) doc.doc_id = fs::path(input).stem().string();
    }
    if (doc.doc_id.empty()) doc.doc_id = fs::path(input).stem().string();
    for (auto& page : layout::assemble_lines(doc, cfg)) {
      for (auto& line : page) res.lines.push_back(std::move(line));
    }
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  return res;
}

int cmd_extract(const std::vector<std::string>& inputs,
                const std::string& out_path, const layout::LayoutConfig& cfg,
                int jobs) {
  std::vector<ExtractResult> results(inputs.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      results[i] = extract_one(inputs[i], cfg);
    }
  } else {
    // Document-parallel; output order stays input order.
    std::vector<std::future<ExtractResult>> futures;
    futures.reserve(inputs.size());
    std::size_t next = 0;
    while (next < inputs.size()) {
      std::size_t batch = std::min<std::size_t>(
          static_cast<std::size_t>(jobs), inputs.size() - next);
      for (std::size_t i = 0; i < batch; ++i) {
        futures.push_back(std::async(std::launch::async, extract_one,
                                     inputs[next + i], cfg));
      }
      for (std::size_t i = 0; i < batch; ++i) {
        results[next + i] = futures[i].get();
      }
      futures.clear();
      next += batch;
    }
  }

  auto out = open_out(out_path);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (results[i].error) {
      ++failures;
      std::cerr << json{{"input", inputs[i]}, {"error", *results[i].error}}
                       .dump()
                << '\n';
      continue;
    }
    layout::write_lines_jsonl(results[i].lines, out);
  }
  if (failures == inputs.size()) return 1;
  return failures > 0 ? 2 : 0;
}

// ---- weaklabel ----------------------------------------------------------------

void do_weaklabel(const std::vector<layout::Line>& lines,
                  const weak::WeakLabelConfig& cfg, std::ostream& out,
                  weak::WeakLabelStats& stats) {
  // Group by document, preserving first-seen document order.
  std::vector<std::string> doc_order;
  std::map<std::string, std::vector<layout::Line>> by_doc;
  for (const auto& l : lines) {
    if (!by_doc.count(l.doc_id)) doc_order.push_back(l.doc_id);
    by_doc[l.doc_id].push_back(l);
  }
  for (const auto& doc_id : doc_order) {
    auto pages = corpus::group_pages(std::move(by_doc[doc_id]));
    auto labeled = weak::weak_label_document(pages, cfg, &stats);
    weak::write_labels_jsonl(labeled, out);
  }
}

int cmd_weaklabel(const std::string& lines_path, const std::string& out_path,
                  const weak::WeakLabelConfig& cfg) {
  auto in = open_in(lines_path);
  auto lines = layout::read_lines_jsonl(in);
  auto out = open_out(out_path);
  weak::WeakLabelStats stats;
  do_weaklabel(lines, cfg, out, stats);
  std::cout << "captions_found=" << stats.captions_found
            << " captions_used=" << stats.captions_used
            << " lines_emitted=" << stats.lines_emitted << '\n';
  if (stats.captions_found == 0) {
    std::cerr << "warning: no caption lines found\n";
  }
  return 0;
}

// ---- train ----------------------------------------------------------------

clf::EnsembleModel do_train(const std::vector<weak::LabeledLine>& labeled,
                            const HyperFlags& hyper,
                            const AnnotationMap* annotations,
                            const features::Gazetteers* gaz) {
  std::vector<layout::Line> context_lines;
  context_lines.reserve(labeled.size());
  for (const auto& ll : labeled) context_lines.push_back(ll.line);
  auto contexts = build_page_contexts(context_lines);

  std::vector<std::pair<features::FeatureVector, int>> data;
  data.reserve(labeled.size());
  for (const auto& ll : labeled) {
    const auto& page = contexts.at({ll.line.doc_id, ll.line.page});
    data.push_back({featurize_line(ll.line, page, annotations, gaz),
                    ll.label});
  }
  auto fc = clf::FeatureConfig::from_name(hyper.features);
  fc.step = hyper.nb_step;
  return clf::ensemble_train(data, fc, hyper.lr(), hyper.svm(), hyper.nb());
}

int cmd_train(const std::string& labels_path, const std::string& model_path,
              const HyperFlags& hyper, const std::string& annotations_path,
              const GazFlags& gaz_flags) {
  auto in = open_in(labels_path);
  auto labeled = weak::read_labels_jsonl(in);
  std::optional<AnnotationMap> annotations;
  if (!annotations_path.empty()) {
    annotations = load_annotations(annotations_path);
  }
  auto gaz = gaz_flags.load();
  auto model = do_train(labeled, hyper,
                        annotations ? &*annotations : nullptr,
                        gaz ? &*gaz : nullptr);
  clf::save_model(model, model_path);
  std::cout << "trained on " << model.meta.num_examples << " examples ("
            << model.meta.num_positive << " positive), features "
            << model.feature_config.name() << '\n';
  return 0;
}

// ---- predict ----------------------------------------------------------------

void check_model(const clf::EnsembleModel& m) {
  std::size_t dims = m.feature_config.active_dims();
  if (m.lr.theta.size() != dims || m.svm.w.size() != dims ||
      m.nb.cond.size() != dims) {
    throw Error("model parameter shapes do not match its feature mask");
  }
}

void do_predict(const clf::EnsembleModel* model, clf::Voter voter,
                bool use_baseline, const std::vector<layout::Line>& lines,
                const AnnotationMap* annotations,
                const features::Gazetteers* gaz, std::ostream& out) {
  auto contexts = build_page_contexts(lines);
  std::map<std::pair<std::string, int>, std::vector<int>> baseline_labels;
  if (use_baseline) {
    // Baseline statistics are document-level.
    std::map<std::string, std::vector<std::vector<layout::Line>>> docs;
    for (const auto& [key, page] : contexts) docs[key.first].push_back(page);
    for (const auto& [doc_id, pages] : docs) {
      auto labels = baseline::heuristic_predict(pages);
      for (std::size_t p = 0; p < pages.size(); ++p) {
        baseline_labels[{doc_id, pages[p].front().page}] = labels[p];
      }
    }
  }

  std::vector<weak::LabeledLine> preds;
  preds.reserve(lines.size());
  for (const auto& l : lines) {
    int label;
    if (use_baseline) {
      const auto& page = contexts.at({l.doc_id, l.page});
      const auto& labels = baseline_labels.at({l.doc_id, l.page});
      auto it = std::find_if(page.begin(), page.end(),
                             [&](const layout::Line& x) {
                               return x.line_idx == l.line_idx;
                             });
      label = labels[static_cast<std::size_t>(it - page.begin())];
    } else {
      const auto& page = contexts.at({l.doc_id, l.page});
      auto fv = featurize_line(l, page, annotations, gaz);
      label = clf::member_predict(*model, fv, voter);
    }
    preds.push_back({l, label, use_baseline ? "baseline" : "pred",
                     std::nullopt});
  }
  weak::write_labels_jsonl(preds, out);
}

int cmd_predict(const std::string& model_path, const std::string& lines_path,
                const std::string& out_path, const std::string& voter_name,
                const std::string& annotations_path,
                const GazFlags& gaz_flags) {
  bool use_baseline = voter_name == "baseline";
  std::optional<clf::EnsembleModel> model;
  clf::Voter voter = clf::Voter::Ensemble;
  if (!use_baseline) {
    if (voter_name == "ensemble") voter = clf::Voter::Ensemble;
    else if (voter_name == "lr") voter = clf::Voter::Lr;
    else if (voter_name == "svm") voter = clf::Voter::Svm;
    else if (voter_name == "nb") voter = clf::Voter::Nb;
    else throw Error("unknown voter: " + voter_name);
    if (model_path.empty()) throw Error("--model is required");
    model = clf::load_model(model_path);
    check_model(*model);
  }
  auto in = open_in(lines_path);
  auto lines = layout::read_lines_jsonl(in);
  std::optional<AnnotationMap> annotations;
  if (!annotations_path.empty()) {
    annotations = load_annotations(annotations_path);
  }
  auto gaz = gaz_flags.load();
  auto out = open_out(out_path);
  do_predict(model ? &*model : nullptr, voter, use_baseline, lines,
             annotations ? &*annotations : nullptr, gaz ? &*gaz : nullptr,
             out);
  return 0;
}

// ---- evaluate ----------------------------------------------------------------

eval::MetricsReport do_evaluate(const std::vector<weak::LabeledLine>& pred,
                                const std::vector<weak::LabeledLine>& gold) {
  std::map<std::tuple<std::string, int, int>, int> pred_by_key;
  for (const auto& p : pred) {
    pred_by_key[{p.line.doc_id, p.line.page, p.line.line_idx}] = p.label;
  }
  std::vector<int> pred_labels, gold_labels;
  pred_labels.reserve(gold.size());
  gold_labels.reserve(gold.size());
  for (const auto& g : gold) {
    auto it = pred_by_key.find({g.line.doc_id, g.line.page, g.line.line_idx});
    if (it == pred_by_key.end()) {
      throw AlignmentError("no prediction for " + g.line.doc_id + " page " +
                           std::to_string(g.line.page) + " line " +
                           std::to_string(g.line.line_idx));
    }
    pred_labels.push_back(it->second);
    gold_labels.push_back(g.label);
  }
  return eval::compute_metrics(
      eval::count_confusion(pred_labels, gold_labels));
}

int cmd_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& report_path) {
  auto pred_in = open_in(pred_path);
  auto gold_in = open_in(gold_path);
  auto pred = weak::read_labels_jsonl(pred_in);
  auto gold = weak::read_labels_jsonl(gold_in);
  auto report = do_evaluate(pred, gold);
  report.dataset_id = fs::path(gold_path).stem().string();
  report.model_id = fs::path(pred_path).stem().string();
  eval::print_report(report, std::cout);
  if (!report_path.empty()) {
    auto out = open_out(report_path);
    out << eval::report_json(report) << '\n';
  }
  return 0;
}

// ---- featurize ----------------------------------------------------------------

int cmd_featurize(const std::string& lines_path, const std::string& out_path,
                  bool labeled_input, const std::string& annotations_path,
                  const GazFlags& gaz_flags) {
  std::vector<layout::Line> lines;
  std::vector<int> labels;
  {
    auto in = open_in(lines_path);
    if (labeled_input) {
      for (auto& ll : weak::read_labels_jsonl(in)) {
        lines.push_back(ll.line);
        labels.push_back(ll.label);
      }
    } else {
      lines = layout::read_lines_jsonl(in);
    }
  }
  std::optional<AnnotationMap> annotations;
  if (!annotations_path.empty()) {
    annotations = load_annotations(annotations_path);
  }
  auto gaz = gaz_flags.load();
  auto contexts = build_page_contexts(lines);
  auto out = open_out(out_path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& l = lines[i];
    auto fv = featurize_line(l, contexts.at({l.doc_id, l.page}),
                             annotations ? &*annotations : nullptr,
                             gaz ? &*gaz : nullptr);
    auto arr = fv.to_array();
    json j{{"doc_id", l.doc_id},
           {"page", l.page},
           {"line_idx", l.line_idx},
           {"features", std::vector<double>(arr.begin(), arr.end())}};
    if (labeled_input) j["label"] = labels[i];
    out << j.dump() << '\n';
  }
  return 0;
}

// ---- synth ----------------------------------------------------------------

int cmd_synth(const synth::SynthConfig& cfg, const std::string& out_dir) {
  auto docs = synth::generate(cfg);
  synth::write_corpus(docs, cfg, out_dir);
  std::size_t lines = 0;
  for (const auto& d : docs) {
    for (const auto& p : d.pages) lines += p.size();
  }
  std::cout << "generated " << docs.size() << " documents, " << lines
            << " lines\n";
  return 0;
}

// ---- pipeline ----------------------------------------------------------------

std::vector<layout::Line> collect_role_lines(
    const corpus::CorpusManifest& manifest, corpus::Role role,
    std::vector<corpus::StreamError>& errors) {
  corpus::LineStream stream(manifest, role);
  std::vector<layout::Line> lines;
  while (auto doc = stream.next_document()) {
    for (auto& page : *doc) {
      for (auto& l : page) lines.push_back(std::move(l));
    }
  }
  errors.insert(errors.end(), stream.errors().begin(), stream.errors().end());
  return lines;
}

int cmd_pipeline(const std::string& corpus_dir, const std::string& out_dir,
                 const weak::WeakLabelConfig& weak_cfg,
                 const HyperFlags& hyper, const std::string& voter,
                 double split_ratio, std::uint64_t seed) {
  fs::create_directories(out_dir);
  std::string manifest_path = (fs::path(corpus_dir) / "manifest.json").string();
  corpus::CorpusManifest manifest;
  if (fs::exists(manifest_path)) {
    manifest = corpus::load_manifest(manifest_path);
  } else {
    manifest = corpus::build_manifest(corpus_dir, split_ratio, seed);
    corpus::save_manifest(manifest,
                          (fs::path(out_dir) / "manifest.json").string());
  }

  std::vector<corpus::StreamError> errors;
  auto train_lines = collect_role_lines(manifest, corpus::Role::Train, errors);
  auto test_lines = collect_role_lines(manifest, corpus::Role::Test, errors);
  for (const auto& e : errors) {
    std::cerr << json{{"doc", e.doc_id}, {"error", e.message}}.dump() << '\n';
  }

  // Step outputs mirror the standalone commands byte for byte.
  {
    auto out = open_out((fs::path(out_dir) / "train_lines.jsonl").string());
    layout::write_lines_jsonl(train_lines, out);
  }
  {
    auto out = open_out((fs::path(out_dir) / "test_lines.jsonl").string());
    layout::write_lines_jsonl(test_lines, out);
  }

  std::string weak_path = (fs::path(out_dir) / "weak_labels.jsonl").string();
  weak::WeakLabelStats stats;
  {
    auto out = open_out(weak_path);
    do_weaklabel(train_lines, weak_cfg, out, stats);
  }
  std::cout << "captions_found=" << stats.captions_found
            << " captions_used=" << stats.captions_used
            << " lines_emitted=" << stats.lines_emitted << '\n';

  std::string model_path = (fs::path(out_dir) / "model.json").string();
  {
    auto in = open_in(weak_path);
    auto labeled = weak::read_labels_jsonl(in);
    if (labeled.empty()) {
      std::cerr << "no weak labels produced; cannot train\n";
      return 1;
    }
    auto model = do_train(labeled, hyper, nullptr, nullptr);
    clf::save_model(model, model_path);
  }

  std::string pred_path = (fs::path(out_dir) / "pred.jsonl").string();
  {
    auto model = clf::load_model(model_path);
    check_model(model);
    clf::Voter v = clf::Voter::Ensemble;
    if (voter == "lr") v = clf::Voter::Lr;
    else if (voter == "svm") v = clf::Voter::Svm;
    else if (voter == "nb") v = clf::Voter::Nb;
    auto out = open_out(pred_path);
    do_predict(&model, v, false, test_lines, nullptr, nullptr, out);
  }

  // Gold labels for the test split, when the corpus provides them.
  fs::path labels_dir = fs::path(corpus_dir) / "labels";
  std::vector<weak::LabeledLine> gold;
  for (const auto& d : manifest.documents) {
    if (d.role != corpus::Role::Test) continue;
    fs::path gold_path = labels_dir / (d.doc_id + ".jsonl");
    if (!fs::exists(gold_path)) continue;
    auto in = open_in(gold_path.string());
    auto doc_gold = weak::read_labels_jsonl(in);
    gold.insert(gold.end(), doc_gold.begin(), doc_gold.end());
  }
  if (!gold.empty()) {
    std::string gold_path = (fs::path(out_dir) / "gold.jsonl").string();
    {
      auto out = open_out(gold_path);
      weak::write_labels_jsonl(gold, out);
    }
    auto pred_in = open_in(pred_path);
    auto pred = weak::read_labels_jsonl(pred_in);
    auto report = do_evaluate(pred, gold);
    report.dataset_id = manifest.name;
    report.model_id = voter;
    eval::print_report(report, std::cout);
    auto out = open_out((fs::path(out_dir) / "report.json").string());
    out << eval::report_json(report) << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Table region detection in PDF documents"};
  app.require_subcommand(1);
  app.set_config("--config")->envname("TABLESCOUT_CONFIG");

  // extract
  auto* extract = app.add_subcommand(
      "extract", "PDFs or char JSONL to lines JSONL");
  std::vector<std::string> extract_inputs;
  std::string extract_out;
  layout::LayoutConfig layout_cfg;
  int jobs = 1;
  extract->add_option("inputs", extract_inputs, "Input files")->required();
  extract->add_option("--out", extract_out, "Output lines JSONL")->required();
  extract->add_option("--word-gap", layout_cfg.word_gap,
                      "Word break gap as a fraction of font size");
  extract->add_option("--line-tolerance", layout_cfg.line_tolerance,
                      "Baseline merge tolerance as a fraction of font size");
  extract->add_option("--jobs", jobs, "Parallel documents");

  // weaklabel
  auto* weaklabel =
      app.add_subcommand("weaklabel", "Heuristically label lines");
  std::string wl_lines, wl_out;
  weak::WeakLabelConfig weak_cfg;
  weaklabel->add_option("lines", wl_lines, "Lines JSONL")->required();
  weaklabel->add_option("--out", wl_out, "Output labels JSONL")->required();
  weaklabel->add_option("--k", weak_cfg.k, "Context window in lines")
      ->check(CLI::PositiveNumber);
  weaklabel
      ->add_option("--min-group", weak_cfg.min_group_size,
                   "Minimum context group size")
      ->check(CLI::PositiveNumber);

  // featurize
  auto* featurize =
      app.add_subcommand("featurize", "Lines JSONL to feature vectors");
  std::string fz_lines, fz_out, fz_annotations;
  bool fz_labeled = false;
  GazFlags fz_gaz;
  featurize->add_option("lines", fz_lines, "Lines or labels JSONL")
      ->required();
  featurize->add_option("--out", fz_out, "Output features JSONL")->required();
  featurize->add_flag("--labeled", fz_labeled,
                      "Input is labeled-lines JSONL");
  featurize->add_option("--annotations", fz_annotations,
                        "Pre-tagged POS/NE annotations JSONL");
  add_gaz_flags(featurize, fz_gaz);

  // train
  auto* train = app.add_subcommand("train", "Train the voting ensemble");
  std::string tr_labels, tr_model, tr_annotations;
  HyperFlags hyper;
  GazFlags tr_gaz;
  train->add_option("labels", tr_labels, "Labeled lines JSONL")->required();
  train->add_option("--out", tr_model, "Output model JSON")->required();
  train->add_option("--annotations", tr_annotations,
                    "Pre-tagged POS/NE annotations JSONL");
  add_hyper_flags(train, hyper);
  add_gaz_flags(train, tr_gaz);

  // predict
  auto* predict = app.add_subcommand("predict", "Label lines with a model");
  std::string pr_model, pr_lines, pr_out, pr_annotations;
  std::string pr_voter = "ensemble";
  GazFlags pr_gaz;
  predict->add_option("lines", pr_lines, "Lines JSONL")->required();
  predict->add_option("--model", pr_model, "Model JSON");
  predict->add_option("--out", pr_out, "Output labels JSONL")->required();
  predict->add_option("--voter", pr_voter,
                      "ensemble | lr | svm | nb | baseline");
  predict->add_option("--annotations", pr_annotations,
                      "Pre-tagged POS/NE annotations JSONL");
  add_gaz_flags(predict, pr_gaz);

  // evaluate
  auto* evaluate =
      app.add_subcommand("evaluate", "Score predictions against gold");
  std::string ev_pred, ev_gold, ev_report;
  evaluate->add_option("pred", ev_pred, "Predicted labels JSONL")->required();
  evaluate->add_option("gold", ev_gold, "Gold labels JSONL")->required();
  evaluate->add_option("--report", ev_report, "Report JSON output");

  // synth
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic labeled corpus");
  synth::SynthConfig synth_cfg;
  std::string synth_out;
  synth_cmd->add_option("out", synth_out, "Output corpus directory")
      ->required();
  synth_cmd->add_option("--docs", synth_cfg.docs, "Number of documents")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--seed", synth_cfg.seed, "Generator seed");
  synth_cmd->add_option("--table-gap", synth_cfg.table_gap,
                        "Inter-word gap in table lines");
  synth_cmd->add_option("--prose-gap", synth_cfg.prose_gap,
                        "Inter-word gap in prose lines");
  synth_cmd->add_option("--noise", synth_cfg.layout_noise,
                        "Fraction of lines with a swapped gap style");
  synth_cmd->add_option("--split", synth_cfg.split_ratio,
                        "Train fraction for the manifest");

  // pipeline
  auto* pipeline = app.add_subcommand(
      "pipeline", "weaklabel -> train -> predict -> evaluate over a corpus");
  std::string pl_corpus, pl_out;
  std::string pl_voter = "ensemble";
  double pl_split = 0.75;
  std::uint64_t pl_seed = 0;
  HyperFlags pl_hyper;
  weak::WeakLabelConfig pl_weak_cfg;
  pipeline->add_option("corpus", pl_corpus, "Corpus root directory")
      ->required();
  pipeline->add_option("--out", pl_out, "Output directory")->required();
  pipeline->add_option("--k", pl_weak_cfg.k, "Context window in lines")
      ->check(CLI::PositiveNumber);
  pipeline
      ->add_option("--min-group", pl_weak_cfg.min_group_size,
                   "Minimum context group size")
      ->check(CLI::PositiveNumber);
  pipeline->add_option("--voter", pl_voter, "ensemble | lr | svm | nb");
  pipeline->add_option("--split", pl_split,
                       "Train fraction when no manifest exists");
  pipeline->add_option("--seed", pl_seed, "Split seed");
  add_hyper_flags(pipeline, pl_hyper);

  // Let app-level options (notably --config) appear after subcommand flags.
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (*extract) return cmd_extract(extract_inputs, extract_out, layout_cfg, jobs);
    if (*weaklabel) return cmd_weaklabel(wl_lines, wl_out, weak_cfg);
    if (*featurize) {
      return cmd_featurize(fz_lines, fz_out, fz_labeled, fz_annotations,
                           fz_gaz);
    }
    if (*train) {
      return cmd_train(tr_labels, tr_model, hyper, tr_annotations, tr_gaz);
    }
    if (*predict) {
      return cmd_predict(pr_model, pr_lines, pr_out, pr_voter, pr_annotations,
                         pr_gaz);
    }
    if (*evaluate) return cmd_evaluate(ev_pred, ev_gold, ev_report);
    if (*synth_cmd) return cmd_synth(synth_cfg, synth_out);
    if (*pipeline) {
      return cmd_pipeline(pl_corpus, pl_out, pl_weak_cfg, pl_hyper, pl_voter,
                          pl_split, pl_seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace tablescout::cli
