#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tablescout/layout.hpp"

namespace tablescout::corpus {

enum class Role { Train, Test };

struct DocEntry {
  std::string doc_id;
  std::string path;  // lines JSONL for this document
  Role role = Role::Train;
};

struct CorpusManifest {
  std::string name;
  std::vector<DocEntry> documents;
};

// Scans <root>/lines/*.jsonl, shuffles deterministically by seed and
// splits at the ratio; both roles end up non-empty. Throws
// InsufficientDocuments when fewer than 2 documents are found.
CorpusManifest build_manifest(const std::string& root_dir, double split_ratio,
                              std::uint64_t seed);

CorpusManifest load_manifest(const std::string& path);
void save_manifest(const CorpusManifest& m, const std::string& path);

struct StreamError {
  std::string doc_id;
  std::string message;
};

// Streams lines document by document in manifest order (constant memory
// in corpus size). Per-file failures are recorded and skipped.
class LineStream {
 public:
  LineStream(const CorpusManifest& manifest, Role role);

  // Next document's lines grouped by page; nullopt at end of stream.
  std::optional<std::vector<std::vector<layout::Line>>> next_document();

  const std::vector<StreamError>& errors() const { return errors_; }

 private:
  std::vector<DocEntry> docs_;
  std::size_t pos_ = 0;
  std::vector<StreamError> errors_;
};

// Regroups a flat line list into per-page vectors (pages ordered, lines
// by line_idx).
std::vector<std::vector<layout::Line>> group_pages(
    std::vector<layout::Line> lines);

}  // namespace tablescout::corpus
