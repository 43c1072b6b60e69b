#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <vector>

#include "tablescout/layout.hpp"

namespace test_helpers {

// A line whose words are laid out from x0 = 100 with the given uniform gap.
inline tablescout::layout::Line make_line(
    std::initializer_list<const char*> tokens, double gap, int line_idx = 0,
    int page = 0, double y = 700.0, const std::string& doc_id = "doc",
    double font_size = 10.0, double char_width = 6.0) {
  tablescout::layout::Line line;
  line.doc_id = doc_id;
  line.page = page;
  line.line_idx = line_idx;
  line.y = y;
  line.dominant_font_size = font_size;
  double x = 100.0;
  for (const char* t : tokens) {
    tablescout::layout::Word w;
    w.text = t;
    w.x0 = x;
    w.x1 = x + char_width * static_cast<double>(w.text.size());
    line.words.push_back(w);
    x = w.x1 + gap;
  }
  return line;
}

// A page of `n` lines built by a callback (idx) -> Line.
template <typename F>
std::vector<tablescout::layout::Line> make_page(int n, F&& f) {
  std::vector<tablescout::layout::Line> page;
  for (int i = 0; i < n; ++i) page.push_back(f(i));
  return page;
}

// Scratch directory unique to the test binary run.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tablescout_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

// ---- PDF fixture builder ----------------------------------------------------

// Builds a one-page PDF around the given content stream. `extra_stream_dict`
// is spliced into the content stream dictionary (e.g. a /Filter entry).
inline std::string build_pdf(const std::string& content,
                             const std::string& extra_stream_dict = "",
                             const std::string& font_dict =
                                 "<< /Type /Font /Subtype /Type1 "
                                 "/BaseFont /Helvetica >>",
                             const std::string& trailer_extra = "") {
  std::string pdf = "%PDF-1.4\n";
  pdf += "1 0 obj << /Type /Catalog /Pages 2 0 R >> endobj\n";
  pdf += "2 0 obj << /Type /Pages /Kids [3 0 R] /Count 1 >> endobj\n";
  pdf +=
      "3 0 obj << /Type /Page /Parent 2 0 R /MediaBox [0 0 612 792] "
      "/Resources << /Font << /F1 5 0 R >> >> /Contents 4 0 R >> endobj\n";
  pdf += "4 0 obj << /Length " + std::to_string(content.size()) +
         extra_stream_dict + " >> stream\n" + content + "\nendstream endobj\n";
  pdf += "5 0 obj " + font_dict + " endobj\n";
  pdf += "trailer << /Root 1 0 R /Size 6 " + trailer_extra + ">>\n%%EOF\n";
  return pdf;
}

}  // namespace test_helpers
