#pragma once

#include <vector>

#include "tablescout/layout.hpp"

namespace tablescout::baseline {

struct DocumentStats {
  double avg_line_width = 0.0;  // mean of (last x1 - first x0) over lines
  double avg_word_gap = 0.0;    // mean of all word margins, 0 if none
};

DocumentStats compute_document_stats(
    const std::vector<std::vector<layout::Line>>& doc_pages);

// Sparse iff width < 2/3 of the average line width or any word gap
// exceeds twice the average word gap.
bool is_sparse_line(const layout::Line& line, const DocumentStats& stats);

// Sparse lines -> +1, others -1; then isolated +1 runs shorter than 2
// that are not adjacent to a caption line are demoted to -1. One label
// vector per page, aligned with the input lines.
std::vector<std::vector<int>> heuristic_predict(
    const std::vector<std::vector<layout::Line>>& doc_pages);

}  // namespace tablescout::baseline
