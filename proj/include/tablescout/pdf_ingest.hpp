#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "tablescout/document.hpp"

namespace tablescout::pdf {

// Parses a constrained subset of PDF 1.x and returns one RichChar per
// rendered glyph, baseline origin as (x, y), in content-stream order.
// Supported: text operators Tf/Td/TD/Tm/T*/TL/Tc/Tw/Tj/TJ/'/", Flate or
// identity content filters, simple fonts with /Widths tables (0.5 * size
// advance fallback), WinAnsi/MacRoman/ToUnicode decoding.
// Throws UnsupportedPdfFeature, MalformedPdf, EncryptedPdf.
PdfDocument parse_pdf(std::span<const unsigned char> bytes,
                      const std::string& doc_id = "");

PdfDocument parse_pdf_file(const std::string& path);

// Rich-character JSONL interchange. First record carries doc_id and page
// dimensions, each following record one glyph. read(write(d)) == d.
PdfDocument read_richchar_jsonl(std::istream& in);
void write_richchar_jsonl(const PdfDocument& doc, std::ostream& out);

// UTF-8 helpers shared by the JSONL readers/writers.
std::string encode_utf8(char32_t cp);
char32_t decode_utf8_single(const std::string& s);

}  // namespace tablescout::pdf
