#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tablescout {

// One extracted glyph with page coordinates (PDF user space, origin
// bottom-left) and font metadata.
struct RichChar {
  char32_t codepoint = 0;
  int page = 0;
  double x = 0.0;
  double y = 0.0;
  std::string font_name;
  double font_size = 0.0;

  bool operator==(const RichChar&) const = default;
};

struct PageDims {
  double width = 0.0;
  double height = 0.0;

  bool operator==(const PageDims&) const = default;
};

struct PdfDocument {
  std::string doc_id;
  std::vector<PageDims> pages;
  // chars[p] holds the RichChars of page p in content-stream order.
  std::vector<std::vector<RichChar>> chars;

  bool operator==(const PdfDocument&) const = default;
};

}  // namespace tablescout
