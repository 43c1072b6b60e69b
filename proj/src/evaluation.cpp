#include "tablescout/evaluation.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tablescout/errors.hpp"

namespace tablescout::eval {

ConfusionCounts count_confusion(std::span<const int> pred,
                                std::span<const int> gold) {
  if (pred.size() != gold.size()) {
    throw AlignmentError("prediction count " + std::to_string(pred.size()) +
                         " does not match gold count " +
                         std::to_string(gold.size()));
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] == +1) {
      (gold[i] == +1 ? c.tp : c.fp)++;
    } else {
      (gold[i] == +1 ? c.fn : c.tn)++;
    }
  }
  return c;
}

MetricsReport compute_metrics(const ConfusionCounts& counts) {
  if (counts.total() == 0) throw EmptyCounts();
  MetricsReport r;
  r.counts = counts;
  r.accuracy = static_cast<double>(counts.tp + counts.tn) /
               static_cast<double>(counts.total());
  if (counts.tp + counts.fp > 0) {
    r.precision = static_cast<double>(counts.tp) /
                  static_cast<double>(counts.tp + counts.fp);
  }
  if (counts.tp + counts.fn > 0) {
    r.recall = static_cast<double>(counts.tp) /
               static_cast<double>(counts.tp + counts.fn);
  }
  if (r.precision && r.recall && (*r.precision + *r.recall) > 0.0) {
    r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
  }
  return r;
}

namespace {

std::string fmt(const std::optional<double>& v) {
  if (!v) return "n/a";
  std::ostringstream os;
  os << std::fixed << std::setprecision(4) << *v;
  return os.str();
}

}  // namespace

void print_report(const MetricsReport& r, std::ostream& out) {
  out << "Dataset: " << r.dataset_id << "  Model: " << r.model_id << "\n";
  out << "Counts: TP=" << r.counts.tp << " FP=" << r.counts.fp
      << " FN=" << r.counts.fn << " TN=" << r.counts.tn << "\n";
  out << "Accuracy Precision Recall F1-measure\n";
  out << fmt(r.accuracy) << " " << fmt(r.precision) << " " << fmt(r.recall)
      << " " << fmt(r.f1) << "\n";
}

std::string report_json(const MetricsReport& r) {
  nlohmann::json j{{"dataset", r.dataset_id},
                   {"model", r.model_id},
                   {"counts",
                    {{"tp", r.counts.tp},
                     {"fp", r.counts.fp},
                     {"fn", r.counts.fn},
                     {"tn", r.counts.tn}}},
                   {"accuracy", r.accuracy}};
  j["precision"] = r.precision ? nlohmann::json(*r.precision)
                               : nlohmann::json("n/a");
  j["recall"] = r.recall ? nlohmann::json(*r.recall) : nlohmann::json("n/a");
  j["f1"] = r.f1 ? nlohmann::json(*r.f1) : nlohmann::json("n/a");
  return j.dump();
}

}  // namespace tablescout::eval
