#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tablescout/layout.hpp"

namespace tablescout::features {

inline constexpr std::size_t kDims = 11;

enum class PosTag { NN, VB, JJ, RB, OTHERS };
enum class NeTag { PERSON, LOCATION, ORGANIZATION, NUMBER, TIME, NONE };

const char* to_string(PosTag t);
const char* to_string(NeTag t);
std::optional<PosTag> pos_from_string(const std::string& s);
std::optional<NeTag> ne_from_string(const std::string& s);

struct TokenAnnotation {
  std::string token;
  PosTag pos = PosTag::OTHERS;
  NeTag ne = NeTag::NONE;
};

// 1 NAM + 5 PTD (NN, VB, JJ, RB, OTHERS) + 5 NEP (PERSON, LOCATION,
// ORGANIZATION, NUMBER, TIME).
struct FeatureVector {
  double nam = 0.0;
  std::array<double, 5> ptd{0, 0, 0, 0, 0};
  std::array<double, 5> nep{0, 0, 0, 0, 0};

  std::array<double, kDims> to_array() const;
  static FeatureVector from_array(const std::array<double, kDims>& a);

  bool operator==(const FeatureVector&) const = default;
};

// Gazetteers for the capitalized NE classes. Defaults are bundled;
// entries loaded from files (one UTF-8 name per line) replace them.
struct Gazetteers {
  std::unordered_set<std::string> persons;
  std::unordered_set<std::string> locations;
  std::unordered_set<std::string> organizations;

  static Gazetteers bundled();
  static std::unordered_set<std::string> load_file(const std::string& path);
};

// Mean inter-word gap of the line divided by the page maximum over
// multi-word lines; 0 for single-word lines or when the page maximum
// is 0. Result in [0, 1].
double compute_nam(const layout::Line& line,
                   const std::vector<layout::Line>& page_lines);

// Coarse rule-based POS tagger over {NN, VB, JJ, RB, OTHERS}.
std::vector<PosTag> tag_pos(const std::vector<std::string>& tokens);

// Rule + gazetteer named-entity tagger. NUMBER covers integers, decimals,
// percentages and signed values; TIME covers clock times, years
// 1900-2099 and month names.
std::vector<NeTag> tag_ne(const std::vector<std::string>& tokens,
                          const Gazetteers& gaz);
std::vector<NeTag> tag_ne(const std::vector<std::string>& tokens);

// Per-tag frequencies. Empty input maps to (0,0,0,0,1) with OTHERS = 1.
std::array<double, 5> pos_distribution(const std::vector<PosTag>& tags);

// Per-class fractions; NONE contributes nowhere. Empty input -> zeros.
std::array<double, 5> ne_percentage(const std::vector<NeTag>& tags);

// NAM + PTD + NEP for one line. Tokens are the line's word texts. When
// annotations are supplied they bypass the built-in taggers; their length
// must equal the token count (AnnotationLengthMismatch otherwise).
FeatureVector featurize(
    const layout::Line& line, const std::vector<layout::Line>& page_lines,
    const std::vector<TokenAnnotation>* annotations = nullptr,
    const Gazetteers* gaz = nullptr);

}  // namespace tablescout::features
