#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

namespace tablescout::eval {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  bool operator==(const ConfusionCounts&) const = default;
};

struct MetricsReport {
  double accuracy = 0.0;
  std::optional<double> precision;  // undefined when tp + fp == 0
  std::optional<double> recall;     // undefined when tp + fn == 0
  std::optional<double> f1;
  ConfusionCounts counts;
  std::string dataset_id;
  std::string model_id;
};

// Labels are +1/-1, aligned index by index. Throws AlignmentError on
// length mismatch.
ConfusionCounts count_confusion(std::span<const int> pred,
                                std::span<const int> gold);

// Accuracy, precision, recall, F1. Undefined metrics stay unset, never
// coerced to 0. Throws EmptyCounts when total == 0.
MetricsReport compute_metrics(const ConfusionCounts& counts);

// Four-column table row plus counts, and the machine-readable form.
void print_report(const MetricsReport& r, std::ostream& out);
std::string report_json(const MetricsReport& r);

}  // namespace tablescout::eval
