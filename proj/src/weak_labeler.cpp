#include "tablescout/weak_labeler.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "tablescout/errors.hpp"
#include "tablescout/features.hpp"

namespace tablescout::weak {

namespace {

using nlohmann::json;

bool is_roman_char(char c) {
  switch (c) {
    case 'I': case 'V': case 'X': case 'L': case 'C': case 'D': case 'M':
      return true;
    default:
      return false;
  }
}

// Starts with a digit, or its leading run is made of Roman numeral
// letters ("IV", "XII.", ...).
bool numeral_like(const std::string& word) {
  if (word.empty()) return false;
  if (std::isdigit(static_cast<unsigned char>(word[0]))) return true;
  if (!is_roman_char(word[0])) return false;
  for (char c : word) {
    if (is_roman_char(c)) continue;
    return !std::isalnum(static_cast<unsigned char>(c));
  }
  return true;
}

double mean_nam(const std::vector<layout::Line>& group,
                const std::vector<layout::Line>& page_lines) {
  double sum = 0.0;
  for (const auto& l : group) sum += features::compute_nam(l, page_lines);
  return sum / static_cast<double>(group.size());
}

}  // namespace

std::vector<int> find_caption_lines(
    const std::vector<layout::Line>& page_lines) {
  std::vector<int> indices;
  for (const auto& line : page_lines) {
    if (line.words.empty()) continue;
    const std::string& first = line.words.front().text;
    if (first != "Table" && first != "Tab.") continue;
    if (line.words.size() >= 2 && !numeral_like(line.words[1].text)) continue;
    indices.push_back(line.line_idx);
  }
  return indices;
}

std::pair<std::vector<layout::Line>, std::vector<layout::Line>>
extract_context_groups(const std::vector<layout::Line>& page_lines,
                       int caption_idx, const WeakLabelConfig& cfg) {
  std::vector<layout::Line> up, down;
  int n = static_cast<int>(page_lines.size());
  int lo = std::max(0, caption_idx - cfg.k);
  for (int i = lo; i < caption_idx; ++i) up.push_back(page_lines[i]);
  int hi = std::min(n, caption_idx + 1 + cfg.k);
  for (int i = caption_idx + 1; i < hi; ++i) down.push_back(page_lines[i]);
  return {std::move(up), std::move(down)};
}

std::vector<LabeledLine> label_groups(
    const std::vector<layout::Line>& up_group,
    const std::vector<layout::Line>& down_group,
    const std::vector<layout::Line>& page_lines, const WeakLabelConfig& cfg,
    std::pair<int, int> source_caption) {
  std::vector<LabeledLine> out;
  if (static_cast<int>(up_group.size()) < cfg.min_group_size ||
      static_cast<int>(down_group.size()) < cfg.min_group_size) {
    return out;
  }
  double up_mean = mean_nam(up_group, page_lines);
  double down_mean = mean_nam(down_group, page_lines);
  if (up_mean == down_mean) return out;  // ambiguous caption, skip

  int up_label = up_mean > down_mean ? +1 : -1;
  for (const auto& l : up_group) {
    out.push_back({l, up_label, "weak", source_caption});
  }
  for (const auto& l : down_group) {
    out.push_back({l, -up_label, "weak", source_caption});
  }
  return out;
}

std::vector<LabeledLine> weak_label_document(
    const std::vector<std::vector<layout::Line>>& doc_pages,
    const WeakLabelConfig& cfg, WeakLabelStats* stats) {
  std::vector<LabeledLine> out;
  for (const auto& page_lines : doc_pages) {
    if (page_lines.empty()) continue;
    int page = page_lines.front().page;
    for (int caption_idx : find_caption_lines(page_lines)) {
      if (stats) stats->captions_found++;
      auto [up, down] = extract_context_groups(page_lines, caption_idx, cfg);
      auto labeled =
          label_groups(up, down, page_lines, cfg, {page, caption_idx});
      if (!labeled.empty() && stats) {
        stats->captions_used++;
        stats->lines_emitted += labeled.size();
      }
      out.insert(out.end(), labeled.begin(), labeled.end());
    }
  }
  return out;
}

std::vector<LabeledLine> read_labels_jsonl(std::istream& in) {
  std::vector<LabeledLine> out;
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
      LabeledLine ll;
      ll.line.doc_id = j.at("doc_id").get<std::string>();
      ll.line.page = j.at("page").get<int>();
      ll.line.line_idx = j.at("line_idx").get<int>();
      ll.line.y = j.at("y").get<double>();
      ll.line.dominant_font_size = j.at("font_size").get<double>();
      for (const auto& w : j.at("words")) {
        layout::Word word;
        word.text = w.at("t").get<std::string>();
        word.x0 = w.at("x0").get<double>();
        word.x1 = w.at("x1").get<double>();
        ll.line.words.push_back(std::move(word));
      }
      ll.label = j.at("label").get<int>();
      if (ll.label != 1 && ll.label != -1) {
        throw SchemaError("label must be 1 or -1", lineno);
      }
      ll.source = j.at("source").get<std::string>();
      if (!j.at("caption").is_null()) {
        auto& c = j.at("caption");
        ll.caption = {c.at(0).get<int>(), c.at(1).get<int>()};
      }
      out.push_back(std::move(ll));
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), lineno);
    }
  }
  return out;
}

void write_labels_jsonl(const std::vector<LabeledLine>& lines,
                        std::ostream& out) {
  for (const auto& ll : lines) {
    json words = json::array();
    for (const auto& w : ll.line.words) {
      words.push_back({{"t", w.text}, {"x0", w.x0}, {"x1", w.x1}});
    }
    json caption;
    if (ll.caption) caption = {ll.caption->first, ll.caption->second};
    json j{{"doc_id", ll.line.doc_id},
           {"page", ll.line.page},
           {"line_idx", ll.line.line_idx},
           {"y", ll.line.y},
           {"font_size", ll.line.dominant_font_size},
           {"words", words},
           {"label", ll.label},
           {"source", ll.source},
           {"caption", caption}};
    out << j.dump() << '\n';
  }
}

}  // namespace tablescout::weak
