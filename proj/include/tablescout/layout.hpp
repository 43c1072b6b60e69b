#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tablescout/document.hpp"

namespace tablescout::layout {

struct Word {
  std::string text;  // non-empty, no whitespace
  double x0 = 0.0;
  double x1 = 0.0;

  bool operator==(const Word&) const = default;
};

// A horizontal group of words sharing a baseline; the unit of
// classification.
struct Line {
  std::string doc_id;
  int page = 0;
  int line_idx = 0;  // 0-based, top to bottom within the page
  double y = 0.0;
  std::vector<Word> words;  // left to right, strictly ascending x0
  double dominant_font_size = 0.0;

  bool operator==(const Line&) const = default;
};

struct LayoutConfig {
  // Two glyphs share a line iff |dy| <= line_tolerance * max(font sizes).
  double line_tolerance = 0.4;
  // A new word starts when the gap from the previous glyph's right edge
  // exceeds word_gap * dominant font size.
  double word_gap = 0.3;
  // Estimated glyph advance as a fraction of font size (RichChar carries
  // no advance).
  double glyph_advance = 0.5;
};

// Groups RichChars into words and lines in reading order. Lines are
// sorted by descending y, words by ascending x0; line_idx is contiguous
// from 0 per page. Result has one entry per page.
std::vector<std::vector<Line>> assemble_lines(const PdfDocument& doc,
                                              const LayoutConfig& cfg = {});

// Horizontal gaps between consecutive words, clamped at 0. Empty for
// single-word lines.
std::vector<double> word_margins(const Line& line);

// Lines JSONL: one record per line.
std::vector<Line> read_lines_jsonl(std::istream& in);
void write_lines_jsonl(const std::vector<Line>& lines, std::ostream& out);

}  // namespace tablescout::layout
