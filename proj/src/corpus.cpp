#include "tablescout/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include <json.hpp>

#include "tablescout/errors.hpp"

namespace tablescout::corpus {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const char* role_name(Role r) { return r == Role::Train ? "train" : "test"; }

Role role_from(const std::string& s) {
  if (s == "train") return Role::Train;
  if (s == "test") return Role::Test;
  throw Error("unknown role: " + s);
}

// Fisher-Yates with mt19937_64; std::shuffle is not reproducible across
// standard library implementations.
template <typename T>
void seeded_shuffle(std::vector<T>& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace

CorpusManifest build_manifest(const std::string& root_dir, double split_ratio,
                              std::uint64_t seed) {
  fs::path lines_dir = fs::path(root_dir) / "lines";
  std::vector<std::pair<std::string, std::string>> docs;  // (id, path)
  if (fs::is_directory(lines_dir)) {
    for (const auto& entry : fs::directory_iterator(lines_dir)) {
      if (entry.path().extension() == ".jsonl") {
        docs.push_back({entry.path().stem().string(), entry.path().string()});
      }
    }
  }
  if (docs.size() < 2) throw InsufficientDocuments(docs.size());
  std::sort(docs.begin(), docs.end());
  seeded_shuffle(docs, seed);

  auto n = docs.size();
  auto n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * split_ratio));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

  CorpusManifest m;
  m.name = fs::path(root_dir).filename().string();
  for (std::size_t i = 0; i < n; ++i) {
    m.documents.push_back(
        {docs[i].first, docs[i].second,
         i < n_train ? Role::Train : Role::Test});
  }
  return m;
}

CorpusManifest load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw SchemaError(e.what(), 0);
  }
  CorpusManifest m;
  try {
    m.name = j.at("name").get<std::string>();
    for (const auto& d : j.at("documents")) {
      DocEntry e;
      e.doc_id = d.at("doc_id").get<std::string>();
      e.path = d.at("path").get<std::string>();
      e.role = role_from(d.at("role").get<std::string>());
      m.documents.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw SchemaError(e.what(), 0);
  }
  // Relative paths resolve against the manifest's directory.
  fs::path base = fs::path(path).parent_path();
  for (auto& d : m.documents) {
    if (fs::path(d.path).is_relative()) {
      d.path = (base / d.path).string();
    }
  }
  return m;
}

void save_manifest(const CorpusManifest& m, const std::string& path) {
  json docs = json::array();
  fs::path base = fs::path(path).parent_path();
  for (const auto& d : m.documents) {
    std::string p = d.path;
    // Store paths relative to the manifest when possible, so the corpus
    // directory stays relocatable.
    std::error_code ec;
    fs::path rel = fs::relative(d.path, base, ec);
    if (!ec && !rel.empty() && rel.native()[0] != '.') p = rel.string();
    docs.push_back(
        {{"doc_id", d.doc_id}, {"path", p}, {"role", role_name(d.role)}});
  }
  json j{{"name", m.name}, {"documents", docs}};
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest: " + path);
  out << j.dump(2) << '\n';
}

LineStream::LineStream(const CorpusManifest& manifest, Role role) {
  for (const auto& d : manifest.documents) {
    if (d.role == role) docs_.push_back(d);
  }
}

std::optional<std::vector<std::vector<layout::Line>>>
LineStream::next_document() {
  while (pos_ < docs_.size()) {
    const DocEntry& d = docs_[pos_++];
    std::ifstream in(d.path);
    if (!in) {
      errors_.push_back({d.doc_id, "cannot open " + d.path});
      continue;
    }
    try {
      return group_pages(layout::read_lines_jsonl(in));
    } catch (const Error& e) {
      errors_.push_back({d.doc_id, e.what()});
    }
  }
  return std::nullopt;
}

std::vector<std::vector<layout::Line>> group_pages(
    std::vector<layout::Line> lines) {
  std::sort(lines.begin(), lines.end(),
            [](const layout::Line& a, const layout::Line& b) {
              if (a.page != b.page) return a.page < b.page;
              return a.line_idx < b.line_idx;
            });
  std::vector<std::vector<layout::Line>> pages;
  for (auto& l : lines) {
    if (pages.empty() || pages.back().front().page != l.page) {
      pages.emplace_back();
    }
    pages.back().push_back(std::move(l));
  }
  return pages;
}

}  // namespace tablescout::corpus
