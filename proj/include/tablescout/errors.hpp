#pragma once

#include <stdexcept>
#include <string>

namespace tablescout {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedPdfFeature : Error {
  explicit UnsupportedPdfFeature(const std::string& feature)
      : Error("unsupported PDF feature: " + feature), feature(feature) {}
  std::string feature;
};

struct MalformedPdf : Error {
  MalformedPdf(const std::string& msg, std::size_t offset)
      : Error("malformed PDF at byte " + std::to_string(offset) + ": " + msg),
        offset(offset) {}
  std::size_t offset;
};

struct EncryptedPdf : Error {
  EncryptedPdf() : Error("encrypted PDF documents are not supported") {}
};

struct SchemaError : Error {
  SchemaError(const std::string& msg, std::size_t line)
      : Error("schema error on line " + std::to_string(line) + ": " + msg),
        line(line) {}
  std::size_t line;
};

struct DegenerateData : Error {
  explicit DegenerateData(const std::string& msg) : Error(msg) {}
};

struct AnnotationLengthMismatch : Error {
  AnnotationLengthMismatch(std::size_t tokens, std::size_t tags)
      : Error("annotation length " + std::to_string(tags) +
              " does not match token count " + std::to_string(tokens)) {}
};

struct AlignmentError : Error {
  explicit AlignmentError(const std::string& msg) : Error(msg) {}
};

struct EmptyCounts : Error {
  EmptyCounts() : Error("confusion counts are empty") {}
};

struct InsufficientDocuments : Error {
  explicit InsufficientDocuments(std::size_t found)
      : Error("need at least 2 ingestible documents, found " +
              std::to_string(found)) {}
};

}  // namespace tablescout
