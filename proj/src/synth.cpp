#include "tablescout/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "lexicon.hpp"
#include "tablescout/corpus.hpp"
#include "tablescout/errors.hpp"

namespace tablescout::synth {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> sorted_vec(
    const std::unordered_set<std::string>& set) {
  std::vector<std::string> v(set.begin(), set.end());
  std::sort(v.begin(), v.end());
  return v;
}

struct Pools {
  std::vector<std::string> nouns = sorted_vec(features::lexicon::nouns());
  std::vector<std::string> verbs = sorted_vec(features::lexicon::verbs());
  std::vector<std::string> adjectives =
      sorted_vec(features::lexicon::adjectives());
  std::vector<std::string> adverbs =
      sorted_vec(features::lexicon::adverbs());
  std::vector<std::string> functions =
      sorted_vec(features::lexicon::function_words());
  std::vector<std::string> orgs =
      sorted_vec(features::lexicon::organization_names());
};

const Pools& pools() {
  static const Pools p;
  return p;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Uniform in [0, 1); resolution is plenty for gap jitter.
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }
  std::size_t index(std::size_t n) { return gen_() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(gen_() % (hi - lo + 1));
  }

 private:
  std::mt19937_64 gen_;
};

std::string pick(const std::vector<std::string>& v, Rng& rng) {
  return v[rng.index(v.size())];
}

std::string prose_token(Rng& rng) {
  int r = rng.range(0, 99);
  if (r < 35) return pick(pools().functions, rng);
  if (r < 60) return pick(pools().nouns, rng);
  if (r < 75) return pick(pools().verbs, rng);
  if (r < 90) return pick(pools().adjectives, rng);
  return pick(pools().adverbs, rng);
}

std::string table_token(Rng& rng) {
  int r = rng.range(0, 99);
  char buf[32];
  if (r < 45) {
    std::snprintf(buf, sizeof buf, "%d.%04d", rng.range(0, 9),
                  rng.range(0, 9999));
    return buf;
  }
  if (r < 65) {
    return std::to_string(rng.range(1, 9999));
  }
  if (r < 75) {
    std::snprintf(buf, sizeof buf, "%d.%d%%", rng.range(0, 99),
                  rng.range(0, 9));
    return buf;
  }
  if (r < 85) {
    return std::to_string(rng.range(1990, 2015));  // year -> TIME
  }
  if (r < 93) {
    return pick(pools().orgs, rng);  // row label
  }
  return pick(pools().nouns, rng);  // header-ish word
}

layout::Line make_line(const std::string& doc_id, int page, int line_idx,
                       double y, const std::vector<std::string>& tokens,
                       double gap, Rng& rng) {
  layout::Line line;
  line.doc_id = doc_id;
  line.page = page;
  line.line_idx = line_idx;
  line.y = y;
  line.dominant_font_size = 10.0;
  double x = 72.0;
  for (const auto& t : tokens) {
    layout::Word w;
    w.text = t;
    w.x0 = x;
    w.x1 = x + 5.0 * static_cast<double>(t.size());
    line.words.push_back(w);
    x = w.x1 + gap * (0.8 + 0.4 * rng.uniform());
  }
  return line;
}

}  // namespace

std::vector<SynthDocument> generate(const SynthConfig& cfg) {
  if (cfg.docs < 1) throw Error("docs must be >= 1");
  if (cfg.table_gap <= 0 || cfg.prose_gap <= 0) {
    throw Error("gaps must be positive");
  }

  std::vector<SynthDocument> docs;
  docs.reserve(static_cast<std::size_t>(cfg.docs));
  for (int d = 0; d < cfg.docs; ++d) {
    Rng rng(cfg.seed * 1000003ULL + static_cast<std::uint64_t>(d));
    SynthDocument doc;
    char id[32];
    std::snprintf(id, sizeof id, "synth-%04d", d);
    doc.doc_id = id;

    int pages = rng.range(1, 2);
    for (int p = 0; p < pages; ++p) {
      std::vector<layout::Line> page_lines;
      std::vector<int> page_gold;
      double y = 760.0;
      int idx = 0;
      int table_no = p + 1;

      auto emit = [&](const std::vector<std::string>& tokens, bool table_gap_style,
                      int role) {
        // layout_noise swaps only the gap style, never role or tokens.
        bool flip = rng.uniform() < cfg.layout_noise;
        double gap = (table_gap_style != flip) ? cfg.table_gap : cfg.prose_gap;
        page_lines.push_back(
            make_line(doc.doc_id, p, idx, y, tokens, gap, rng));
        page_gold.push_back(role);
        ++idx;
        y -= 14.0;
      };

      auto emit_prose = [&] {
        int n = rng.range(8, 12);
        std::vector<std::string> tokens;
        tokens.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) tokens.push_back(prose_token(rng));
        emit(tokens, false, -1);
      };

      for (int i = 0; i < cfg.prose_above; ++i) emit_prose();

      std::vector<std::string> caption{"Table",
                                       std::to_string(table_no) + ":"};
      for (int i = 0; i < 4; ++i) caption.push_back(prose_token(rng));
      emit(caption, false, -1);

      for (int i = 0; i < cfg.table_body; ++i) {
        int n = rng.range(4, 7);
        std::vector<std::string> tokens;
        tokens.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) tokens.push_back(table_token(rng));
        emit(tokens, true, +1);
      }

      for (int i = 0; i < cfg.prose_below; ++i) emit_prose();

      doc.pages.push_back(std::move(page_lines));
      doc.gold.push_back(std::move(page_gold));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

void write_corpus(const std::vector<SynthDocument>& docs,
                  const SynthConfig& cfg, const std::string& out_dir) {
  fs::create_directories(fs::path(out_dir) / "lines");
  fs::create_directories(fs::path(out_dir) / "labels");

  for (const auto& doc : docs) {
    std::ofstream lines_out(fs::path(out_dir) / "lines" /
                            (doc.doc_id + ".jsonl"));
    std::ofstream labels_out(fs::path(out_dir) / "labels" /
                             (doc.doc_id + ".jsonl"));
    if (!lines_out || !labels_out) {
      throw Error("cannot write corpus files under " + out_dir);
    }
    std::vector<weak::LabeledLine> gold;
    for (std::size_t p = 0; p < doc.pages.size(); ++p) {
      layout::write_lines_jsonl(doc.pages[p], lines_out);
      for (std::size_t i = 0; i < doc.pages[p].size(); ++i) {
        gold.push_back(
            {doc.pages[p][i], doc.gold[p][i], "gold", std::nullopt});
      }
    }
    weak::write_labels_jsonl(gold, labels_out);
  }

  auto manifest =
      corpus::build_manifest(out_dir, cfg.split_ratio, cfg.seed);
  corpus::save_manifest(manifest,
                        (fs::path(out_dir) / "manifest.json").string());
}

}  // namespace tablescout::synth
