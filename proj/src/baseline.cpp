#include "tablescout/baseline.hpp"

#include <algorithm>

#include "tablescout/weak_labeler.hpp"

namespace tablescout::baseline {

DocumentStats compute_document_stats(
    const std::vector<std::vector<layout::Line>>& doc_pages) {
  DocumentStats stats;
  double width_sum = 0.0;
  std::size_t line_count = 0;
  double gap_sum = 0.0;
  std::size_t gap_count = 0;
  for (const auto& page : doc_pages) {
    for (const auto& line : page) {
      if (line.words.empty()) continue;
      width_sum += line.words.back().x1 - line.words.front().x0;
      ++line_count;
      for (double g : layout::word_margins(line)) {
        gap_sum += g;
        ++gap_count;
      }
    }
  }
  if (line_count > 0) {
    stats.avg_line_width = width_sum / static_cast<double>(line_count);
  }
  if (gap_count > 0) {
    stats.avg_word_gap = gap_sum / static_cast<double>(gap_count);
  }
  return stats;
}

bool is_sparse_line(const layout::Line& line, const DocumentStats& stats) {
  if (line.words.empty()) return false;
  double width = line.words.back().x1 - line.words.front().x0;
  if (width < (2.0 / 3.0) * stats.avg_line_width) return true;
  for (double g : layout::word_margins(line)) {
    if (g > 2.0 * stats.avg_word_gap) return true;
  }
  return false;
}

std::vector<std::vector<int>> heuristic_predict(
    const std::vector<std::vector<layout::Line>>& doc_pages) {
  DocumentStats stats = compute_document_stats(doc_pages);

  std::vector<std::vector<int>> labels;
  labels.reserve(doc_pages.size());
  for (const auto& page : doc_pages) {
    std::vector<int> page_labels;
    page_labels.reserve(page.size());
    for (const auto& line : page) {
      page_labels.push_back(is_sparse_line(line, stats) ? +1 : -1);
    }

    // Demote isolated sparse runs (< 2 lines) unless a caption line sits
    // directly above or below the run.
    auto captions = weak::find_caption_lines(page);
    auto is_caption = [&](int idx) {
      return idx >= 0 && idx < static_cast<int>(page.size()) &&
             std::find(captions.begin(), captions.end(), idx) !=
                 captions.end();
    };
    int n = static_cast<int>(page_labels.size());
    for (int i = 0; i < n;) {
      if (page_labels[i] != +1) {
        ++i;
        continue;
      }
      int j = i;
      while (j < n && page_labels[j] == +1) ++j;
      if (j - i < 2 && !is_caption(i - 1) && !is_caption(j)) {
        for (int k = i; k < j; ++k) page_labels[k] = -1;
      }
      i = j;
    }
    labels.push_back(std::move(page_labels));
  }
  return labels;
}

}  // namespace tablescout::baseline
