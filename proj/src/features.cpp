#include "tablescout/features.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>

#include "lexicon.hpp"
#include "tablescout/errors.hpp"

namespace tablescout::features {

namespace {

bool is_ascii_alpha(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0;
}

bool is_ascii_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

// Strips trailing ASCII punctuation (.,:;!?()'"]) for tagging.
std::string strip_trailing_punct(const std::string& token) {
  std::size_t end = token.size();
  while (end > 0) {
    char c = token[end - 1];
    if (is_ascii_alpha(c) || is_ascii_digit(c) || c == '%') break;
    --end;
  }
  return token.substr(0, end);
}

bool has_alpha(const std::string& s) {
  return std::any_of(s.begin(), s.end(), is_ascii_alpha);
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool is_capitalized(const std::string& s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

// Integers, decimals, percentages, signed values, thousands commas.
bool is_number_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '+' || s[i] == '-') ++i;
  if (i == s.size()) return false;
  bool digit_seen = false;
  bool dot_seen = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (is_ascii_digit(c)) {
      digit_seen = true;
    } else if (c == '.' && !dot_seen) {
      dot_seen = true;
    } else if (c == ',') {
      // thousands separator
    } else if (c == '%' && i == s.size() - 1) {
      // trailing percent sign
    } else {
      return false;
    }
  }
  return digit_seen;
}

bool is_clock_time(const std::string& s) {
  std::size_t colon = s.find(':');
  if (colon == 0 || colon == std::string::npos) return false;
  if (colon > 2) return false;
  std::size_t i = 0;
  for (; i < colon; ++i)
    if (!is_ascii_digit(s[i])) return false;
  std::size_t digits = 0;
  bool expect_colon = false;
  for (i = colon + 1; i < s.size(); ++i) {
    if (s[i] == ':') {
      if (digits != 2) return false;
      digits = 0;
      expect_colon = false;
    } else if (is_ascii_digit(s[i])) {
      ++digits;
      if (digits > 2) return false;
    } else {
      return false;
    }
  }
  (void)expect_colon;
  return digits == 2;
}

bool is_year(const std::string& s) {
  if (s.size() != 4) return false;
  for (char c : s)
    if (!is_ascii_digit(c)) return false;
  int v = std::stoi(s);
  return v >= 1900 && v <= 2099;
}

double raw_margin(const layout::Line& line) {
  auto gaps = layout::word_margins(line);
  if (gaps.empty()) return 0.0;
  double sum = 0.0;
  for (double g : gaps) sum += g;
  return sum / static_cast<double>(gaps.size());
}

}  // namespace

const char* to_string(PosTag t) {
  switch (t) {
    case PosTag::NN: return "NN";
    case PosTag::VB: return "VB";
    case PosTag::JJ: return "JJ";
    case PosTag::RB: return "RB";
    case PosTag::OTHERS: return "OTHERS";
  }
  return "OTHERS";
}

const char* to_string(NeTag t) {
  switch (t) {
    case NeTag::PERSON: return "PERSON";
    case NeTag::LOCATION: return "LOCATION";
    case NeTag::ORGANIZATION: return "ORGANIZATION";
    case NeTag::NUMBER: return "NUMBER";
    case NeTag::TIME: return "TIME";
    case NeTag::NONE: return "NONE";
  }
  return "NONE";
}

std::optional<PosTag> pos_from_string(const std::string& s) {
  if (s == "NN") return PosTag::NN;
  if (s == "VB") return PosTag::VB;
  if (s == "JJ") return PosTag::JJ;
  if (s == "RB") return PosTag::RB;
  if (s == "OTHERS") return PosTag::OTHERS;
  return std::nullopt;
}

std::optional<NeTag> ne_from_string(const std::string& s) {
  if (s == "PERSON") return NeTag::PERSON;
  if (s == "LOCATION") return NeTag::LOCATION;
  if (s == "ORGANIZATION") return NeTag::ORGANIZATION;
  if (s == "NUMBER") return NeTag::NUMBER;
  if (s == "TIME") return NeTag::TIME;
  if (s == "NONE") return NeTag::NONE;
  return std::nullopt;
}

std::array<double, kDims> FeatureVector::to_array() const {
  std::array<double, kDims> a;
  a[0] = nam;
  for (std::size_t i = 0; i < 5; ++i) a[1 + i] = ptd[i];
  for (std::size_t i = 0; i < 5; ++i) a[6 + i] = nep[i];
  return a;
}

FeatureVector FeatureVector::from_array(const std::array<double, kDims>& a) {
  FeatureVector fv;
  fv.nam = a[0];
  for (std::size_t i = 0; i < 5; ++i) fv.ptd[i] = a[1 + i];
  for (std::size_t i = 0; i < 5; ++i) fv.nep[i] = a[6 + i];
  return fv;
}

Gazetteers Gazetteers::bundled() {
  Gazetteers g;
  g.persons = lexicon::person_names();
  g.locations = lexicon::location_names();
  g.organizations = lexicon::organization_names();
  return g;
}

std::unordered_set<std::string> Gazetteers::load_file(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open gazetteer file: " + path);
  std::unordered_set<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    if (!line.empty()) entries.insert(line);
  }
  return entries;
}

double compute_nam(const layout::Line& line,
                   const std::vector<layout::Line>& page_lines) {
  double raw = raw_margin(line);
  double page_max = 0.0;
  for (const auto& l : page_lines) {
    if (l.words.size() > 1) page_max = std::max(page_max, raw_margin(l));
  }
  if (page_max <= 0.0) return 0.0;
  return std::clamp(raw / page_max, 0.0, 1.0);
}

std::vector<PosTag> tag_pos(const std::vector<std::string>& tokens) {
  std::vector<PosTag> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::string core = strip_trailing_punct(token);
    if (core.empty() || !has_alpha(core)) {
      tags.push_back(PosTag::OTHERS);
      continue;
    }
    std::string lo = lower(core);
    if (lexicon::function_words().count(lo)) {
      tags.push_back(PosTag::OTHERS);
    } else if (lexicon::adverbs().count(lo)) {
      tags.push_back(PosTag::RB);
    } else if (lexicon::adjectives().count(lo)) {
      tags.push_back(PosTag::JJ);
    } else if (lexicon::verbs().count(lo)) {
      tags.push_back(PosTag::VB);
    } else if (lexicon::nouns().count(lo)) {
      tags.push_back(PosTag::NN);
    } else if (ends_with(lo, "ly")) {
      tags.push_back(PosTag::RB);
    } else if (ends_with(lo, "ous") || ends_with(lo, "ful") ||
               ends_with(lo, "ive") || ends_with(lo, "al") ||
               ends_with(lo, "able") || ends_with(lo, "ible")) {
      tags.push_back(PosTag::JJ);
    } else if (ends_with(lo, "ize") || ends_with(lo, "ise")) {
      tags.push_back(PosTag::VB);
    } else if (ends_with(lo, "ing") && lo.size() > 4 &&
               (lexicon::verbs().count(lo.substr(0, lo.size() - 3)) ||
                lexicon::verbs().count(lo.substr(0, lo.size() - 3) + "e"))) {
      tags.push_back(PosTag::VB);
    } else if (ends_with(lo, "ed") && lo.size() > 3 &&
               (lexicon::verbs().count(lo.substr(0, lo.size() - 2)) ||
                lexicon::verbs().count(lo.substr(0, lo.size() - 1)))) {
      tags.push_back(PosTag::VB);
    } else {
      tags.push_back(PosTag::NN);
    }
  }
  return tags;
}

std::vector<NeTag> tag_ne(const std::vector<std::string>& tokens,
                          const Gazetteers& gaz) {
  std::vector<NeTag> tags;
  tags.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::string core = strip_trailing_punct(token);
    if (core.empty()) {
      tags.push_back(NeTag::NONE);
      continue;
    }
    if (is_clock_time(core) || is_year(core) ||
        (is_capitalized(core) && lexicon::month_names().count(lower(core)))) {
      tags.push_back(NeTag::TIME);
    } else if (is_number_token(core)) {
      tags.push_back(NeTag::NUMBER);
    } else if (is_capitalized(core) && gaz.persons.count(core)) {
      tags.push_back(NeTag::PERSON);
    } else if (is_capitalized(core) && gaz.locations.count(core)) {
      tags.push_back(NeTag::LOCATION);
    } else if (is_capitalized(core) && gaz.organizations.count(core)) {
      tags.push_back(NeTag::ORGANIZATION);
    } else {
      tags.push_back(NeTag::NONE);
    }
  }
  return tags;
}

std::vector<NeTag> tag_ne(const std::vector<std::string>& tokens) {
  static const Gazetteers bundled = Gazetteers::bundled();
  return tag_ne(tokens, bundled);
}

std::array<double, 5> pos_distribution(const std::vector<PosTag>& tags) {
  std::array<double, 5> dist{0, 0, 0, 0, 0};
  if (tags.empty()) {
    dist[4] = 1.0;  // all-OTHERS convention
    return dist;
  }
  for (PosTag t : tags) dist[static_cast<std::size_t>(t)] += 1.0;
  for (double& v : dist) v /= static_cast<double>(tags.size());
  return dist;
}

std::array<double, 5> ne_percentage(const std::vector<NeTag>& tags) {
  std::array<double, 5> dist{0, 0, 0, 0, 0};
  if (tags.empty()) return dist;
  for (NeTag t : tags) {
    if (t != NeTag::NONE) dist[static_cast<std::size_t>(t)] += 1.0;
  }
  for (double& v : dist) v /= static_cast<double>(tags.size());
  return dist;
}

FeatureVector featurize(const layout::Line& line,
                        const std::vector<layout::Line>& page_lines,
                        const std::vector<TokenAnnotation>* annotations,
                        const Gazetteers* gaz) {
  std::vector<std::string> tokens;
  tokens.reserve(line.words.size());
  for (const auto& w : line.words) tokens.push_back(w.text);

  FeatureVector fv;
  fv.nam = compute_nam(line, page_lines);
  if (annotations) {
    if (annotations->size() != tokens.size()) {
      throw AnnotationLengthMismatch(tokens.size(), annotations->size());
    }
    std::vector<PosTag> pos;
    std::vector<NeTag> ne;
    for (const auto& a : *annotations) {
      pos.push_back(a.pos);
      ne.push_back(a.ne);
    }
    fv.ptd = pos_distribution(pos);
    fv.nep = ne_percentage(ne);
  } else {
    fv.ptd = pos_distribution(tag_pos(tokens));
    fv.nep = ne_percentage(gaz ? tag_ne(tokens, *gaz) : tag_ne(tokens));
  }
  return fv;
}

}  // namespace tablescout::features
