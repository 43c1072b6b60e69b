#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tablescout/weak_labeler.hpp"

namespace tablescout::synth {

struct SynthConfig {
  int docs = 10;
  std::uint64_t seed = 7;
  double table_gap = 8.0;   // inter-word gap inside table lines
  double prose_gap = 2.0;   // inter-word gap inside prose lines
  double layout_noise = 0.0;  // fraction of lines with swapped gap style
  double split_ratio = 0.75;
  int prose_above = 10;  // prose lines before each caption
  int table_body = 10;   // table lines after each caption
  int prose_below = 5;   // trailing prose lines
};

struct SynthDocument {
  std::string doc_id;
  std::vector<std::vector<layout::Line>> pages;
  // Gold role per line, aligned with pages: +1 table body, -1 otherwise.
  std::vector<std::vector<int>> gold;
};

// Deterministic generator: prose lines carry word-like tokens with small
// gaps, table lines numeric tokens with wide gaps, each page one interior
// "Table N" caption. layout_noise swaps the gap style of a line without
// changing its role or tokens.
std::vector<SynthDocument> generate(const SynthConfig& cfg);

// Writes <out>/lines/<doc>.jsonl, <out>/labels/<doc>.jsonl (gold) and
// <out>/manifest.json with a deterministic train/test split.
void write_corpus(const std::vector<SynthDocument>& docs,
                  const SynthConfig& cfg, const std::string& out_dir);

}  // namespace tablescout::synth
