#include "tablescout/layout.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "tablescout/errors.hpp"
#include "tablescout/pdf_ingest.hpp"

namespace tablescout::layout {

namespace {

using nlohmann::json;

bool is_whitespace_cp(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v' || cp == U'\u00A0';
}

double dominant_size(const std::vector<RichChar>& chars) {
  // Mode of member font sizes; ties go to the larger size.
  std::map<double, int> counts;
  for (const auto& c : chars) counts[c.font_size]++;
  double best = 0.0;
  int best_count = 0;
  for (const auto& [size, count] : counts) {
    if (count >= best_count) {
      best = size;
      best_count = count;
    }
  }
  return best;
}

std::vector<Line> assemble_page(const std::string& doc_id, int page,
                                const std::vector<RichChar>& chars,
                                const LayoutConfig& cfg) {
  // Cluster glyphs into baselines with a sweep over descending y.
  std::vector<RichChar> sorted = chars;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RichChar& a, const RichChar& b) {
                     if (a.y != b.y) return a.y > b.y;
                     return a.x < b.x;
                   });

  std::vector<std::vector<RichChar>> clusters;
  double seed_y = 0.0;
  double seed_size = 0.0;
  for (const auto& c : sorted) {
    bool joins = !clusters.empty() &&
                 std::abs(c.y - seed_y) <=
                     cfg.line_tolerance * std::max(seed_size, c.font_size);
    if (!joins) {
      clusters.emplace_back();
      seed_y = c.y;
      seed_size = c.font_size;
    }
    clusters.back().push_back(c);
  }

  std::vector<Line> lines;
  for (auto& cluster : clusters) {
    std::stable_sort(cluster.begin(), cluster.end(),
                     [](const RichChar& a, const RichChar& b) {
                       return a.x < b.x;
                     });
    double dom = dominant_size(cluster);

    Line line;
    line.doc_id = doc_id;
    line.page = page;
    line.y = cluster.front().y;
    line.dominant_font_size = dom;

    Word word;
    double prev_right = 0.0;
    bool in_word = false;
    for (const auto& c : cluster) {
      double advance = cfg.glyph_advance * c.font_size;
      if (is_whitespace_cp(c.codepoint)) {
        if (in_word) {
          line.words.push_back(word);
          word = Word{};
          in_word = false;
        }
        continue;
      }
      bool breaks = in_word && (c.x - prev_right > cfg.word_gap * dom);
      if (breaks) {
        line.words.push_back(word);
        word = Word{};
        in_word = false;
      }
      if (!in_word) {
        word.x0 = c.x;
        word.x1 = c.x + advance;
        in_word = true;
      } else {
        word.x1 = std::max(word.x1, c.x + advance);
      }
      word.text += pdf::encode_utf8(c.codepoint);
      prev_right = c.x + advance;
    }
    if (in_word) line.words.push_back(word);

    if (!line.words.empty()) lines.push_back(std::move(line));
  }

  for (std::size_t i = 0; i < lines.size(); ++i) {
    lines[i].line_idx = static_cast<int>(i);
  }
  return lines;
}

}  // namespace

std::vector<std::vector<Line>> assemble_lines(const PdfDocument& doc,
                                              const LayoutConfig& cfg) {
  std::vector<std::vector<Line>> result;
  result.reserve(doc.chars.size());
  for (std::size_t p = 0; p < doc.chars.size(); ++p) {
    result.push_back(
        assemble_page(doc.doc_id, static_cast<int>(p), doc.chars[p], cfg));
  }
  return result;
}

std::vector<double> word_margins(const Line& line) {
  std::vector<double> gaps;
  for (std::size_t i = 0; i + 1 < line.words.size(); ++i) {
    gaps.push_back(std::max(0.0, line.words[i + 1].x0 - line.words[i].x1));
  }
  return gaps;
}

std::vector<Line> read_lines_jsonl(std::istream& in) {
  std::vector<Line> lines;
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
      Line l;
      l.doc_id = j.at("doc_id").get<std::string>();
      l.page = j.at("page").get<int>();
      l.line_idx = j.at("line_idx").get<int>();
      l.y = j.at("y").get<double>();
      l.dominant_font_size = j.at("font_size").get<double>();
      for (const auto& w : j.at("words")) {
        Word word;
        word.text = w.at("t").get<std::string>();
        word.x0 = w.at("x0").get<double>();
        word.x1 = w.at("x1").get<double>();
        l.words.push_back(std::move(word));
      }
      lines.push_back(std::move(l));
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), lineno);
    }
  }
  return lines;
}

void write_lines_jsonl(const std::vector<Line>& lines, std::ostream& out) {
  for (const auto& l : lines) {
    json words = json::array();
    for (const auto& w : l.words) {
      words.push_back({{"t", w.text}, {"x0", w.x0}, {"x1", w.x1}});
    }
    json j{{"doc_id", l.doc_id},        {"page", l.page},
           {"line_idx", l.line_idx},    {"y", l.y},
           {"font_size", l.dominant_font_size}, {"words", words}};
    out << j.dump() << '\n';
  }
}

}  // namespace tablescout::layout
