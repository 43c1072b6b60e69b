#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tablescout/layout.hpp"

namespace tablescout::weak {

struct WeakLabelConfig {
  int k = 8;               // context window size in lines, >= 1
  int min_group_size = 2;  // >= 1
};

struct LabeledLine {
  layout::Line line;
  int label = -1;                 // +1 table, -1 non-table
  std::string source = "weak";    // weak | gold | baseline | pred
  // (page, line_idx) of the triggering caption, when source == weak.
  std::optional<std::pair<int, int>> caption;

  bool operator==(const LabeledLine&) const = default;
};

// Indices of lines whose first word is "Table" or "Tab." (case
// sensitive), either alone or followed by a word starting with a digit
// or Roman numeral. Ascending, no duplicates.
std::vector<int> find_caption_lines(const std::vector<layout::Line>& page_lines);

// The min(k, available) lines directly above / below the caption, both
// in top-to-bottom order; the caption belongs to neither group.
std::pair<std::vector<layout::Line>, std::vector<layout::Line>>
extract_context_groups(const std::vector<layout::Line>& page_lines,
                       int caption_idx, const WeakLabelConfig& cfg);

// Compares the mean NAM of the two groups (computed against page_lines)
// and labels the larger-margin group +1, the other -1. Undersized groups
// or an exact tie skip the caption and yield nothing.
std::vector<LabeledLine> label_groups(const std::vector<layout::Line>& up_group,
                                      const std::vector<layout::Line>& down_group,
                                      const std::vector<layout::Line>& page_lines,
                                      const WeakLabelConfig& cfg,
                                      std::pair<int, int> source_caption);

struct WeakLabelStats {
  std::size_t captions_found = 0;
  std::size_t captions_used = 0;
  std::size_t lines_emitted = 0;
};

// Runs the three-step heuristic over every page of a document's lines.
std::vector<LabeledLine> weak_label_document(
    const std::vector<std::vector<layout::Line>>& doc_pages,
    const WeakLabelConfig& cfg, WeakLabelStats* stats = nullptr);

// Labeled-lines JSONL: the lines record plus label/source/caption.
std::vector<LabeledLine> read_labels_jsonl(std::istream& in);
void write_labels_jsonl(const std::vector<LabeledLine>& lines,
                        std::ostream& out);

}  // namespace tablescout::weak
