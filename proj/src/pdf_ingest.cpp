#include "tablescout/pdf_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <variant>

#include <zlib.h>

#include <json.hpp>

#include "tablescout/errors.hpp"

namespace tablescout::pdf {

namespace {

using nlohmann::json;

// ---- UTF-8 ---------------------------------------------------------------

}  // namespace

std::string encode_utf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
  return out;
}

char32_t decode_utf8_single(const std::string& s) {
  if (s.empty()) return 0;
  unsigned char c0 = static_cast<unsigned char>(s[0]);
  if (c0 < 0x80) return c0;
  int extra;
  char32_t cp;
  if ((c0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = c0 & 0x1F;
  } else if ((c0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = c0 & 0x0F;
  } else if ((c0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = c0 & 0x07;
  } else {
    return 0xFFFD;
  }
  if (static_cast<int>(s.size()) < 1 + extra) return 0xFFFD;
  for (int i = 1; i <= extra; ++i) {
    cp = (cp << 6) | (static_cast<unsigned char>(s[i]) & 0x3F);
  }
  return cp;
}

namespace {

// ---- Encoding tables --------------------------------------------------------

char32_t winansi_to_unicode(unsigned char code) {
  static const char32_t high[32] = {
      0x20AC, 0x0081, 0x201A, 0x0192, 0x201E, 0x2026, 0x2020, 0x2021,
      0x02C6, 0x2030, 0x0160, 0x2039, 0x0152, 0x008D, 0x017D, 0x008F,
      0x0090, 0x2018, 0x2019, 0x201C, 0x201D, 0x2022, 0x2013, 0x2014,
      0x02DC, 0x2122, 0x0161, 0x203A, 0x0153, 0x009D, 0x017E, 0x0178};
  if (code >= 0x80 && code <= 0x9F) return high[code - 0x80];
  return code;
}

char32_t macroman_to_unicode(unsigned char code) {
  static const char32_t high[128] = {
      0x00C4, 0x00C5, 0x00C7, 0x00C9, 0x00D1, 0x00D6, 0x00DC, 0x00E1,
      0x00E0, 0x00E2, 0x00E4, 0x00E3, 0x00E5, 0x00E7, 0x00E9, 0x00E8,
      0x00EA, 0x00EB, 0x00ED, 0x00EC, 0x00EE, 0x00EF, 0x00F1, 0x00F3,
      0x00F2, 0x00F4, 0x00F6, 0x00F5, 0x00FA, 0x00F9, 0x00FB, 0x00FC,
      0x2020, 0x00B0, 0x00A2, 0x00A3, 0x00A7, 0x2022, 0x00B6, 0x00DF,
      0x00AE, 0x00A9, 0x2122, 0x00B4, 0x00A8, 0x2260, 0x00C6, 0x00D8,
      0x221E, 0x00B1, 0x2264, 0x2265, 0x00A5, 0x00B5, 0x2202, 0x2211,
      0x220F, 0x03C0, 0x222B, 0x00AA, 0x00BA, 0x03A9, 0x00E6, 0x00F8,
      0x00BF, 0x00A1, 0x00AC, 0x221A, 0x0192, 0x2248, 0x2206, 0x00AB,
      0x00BB, 0x2026, 0x00A0, 0x00C0, 0x00C3, 0x00D5, 0x0152, 0x0153,
      0x2013, 0x2014, 0x201C, 0x201D, 0x2018, 0x2019, 0x00F7, 0x25CA,
      0x00FF, 0x0178, 0x2044, 0x20AC, 0x2039, 0x203A, 0xFB01, 0xFB02,
      0x2021, 0x00B7, 0x201A, 0x201E, 0x2030, 0x00C2, 0x00CA, 0x00C1,
      0x00CB, 0x00C8, 0x00CD, 0x00CE, 0x00CF, 0x00CC, 0x00D3, 0x00D4,
      0xF8FF, 0x00D2, 0x00DA, 0x00DB, 0x00D9, 0x0131, 0x02C6, 0x02DC,
      0x00AF, 0x02D8, 0x02D9, 0x02DA, 0x00B8, 0x02DD, 0x02DB, 0x02C7};
  if (code >= 0x80) return high[code - 0x80];
  return code;
}

// ---- Object model ----------------------------------------------------------

struct Value;
using ValuePtr = std::shared_ptr<Value>;
using Dict = std::map<std::string, ValuePtr>;
using Array = std::vector<ValuePtr>;

struct Ref {
  int num = 0;
  int gen = 0;
};

struct NameStr {
  std::string s;
};

struct Value {
  std::variant<std::monostate, bool, double, std::string, NameStr, Array,
               Dict, Ref>
      v;

  bool is_number() const { return std::holds_alternative<double>(v); }
  bool is_dict() const { return std::holds_alternative<Dict>(v); }
  bool is_array() const { return std::holds_alternative<Array>(v); }
  bool is_ref() const { return std::holds_alternative<Ref>(v); }
  bool is_string() const { return std::holds_alternative<std::string>(v); }
  bool is_name() const { return std::holds_alternative<NameStr>(v); }
  const std::string& name() const { return std::get<NameStr>(v).s; }
};

ValuePtr make_number(double d) {
  auto p = std::make_shared<Value>();
  p->v = d;
  return p;
}

ValuePtr make_name(std::string s) {
  auto p = std::make_shared<Value>();
  p->v = NameStr{std::move(s)};
  return p;
}

struct StoredObject {
  ValuePtr value;
  std::string stream;  // raw, still encoded
  bool has_stream = false;
};

// ---- Tokenizer ---------------------------------------------------------------

bool is_pdf_ws(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\0';
}

bool is_delim(unsigned char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' ||
         c == ']' || c == '{' || c == '}' || c == '/' || c == '%';
}

struct Token {
  enum Kind {
    Number,
    Name,
    String,
    DictOpen,
    DictClose,
    ArrayOpen,
    ArrayClose,
    Keyword,
    End
  };
  Kind kind = End;
  std::string text;   // name (without /), keyword, or string payload
  double number = 0;
  std::size_t offset = 0;
};

class Lexer {
 public:
  Lexer(const unsigned char* data, std::size_t size, std::size_t pos = 0)
      : data_(data), size_(size), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  const unsigned char* data() const { return data_; }
  std::size_t size() const { return size_; }

  Token next() {
    skip_ws();
    Token t;
    t.offset = pos_;
    if (pos_ >= size_) return t;
    unsigned char c = data_[pos_];
    if (c == '/') {
      ++pos_;
      t.kind = Token::Name;
      t.text = read_name();
      return t;
    }
    if (c == '(') {
      ++pos_;
      t.kind = Token::String;
      t.text = read_literal_string();
      return t;
    }
    if (c == '<') {
      if (pos_ + 1 < size_ && data_[pos_ + 1] == '<') {
        pos_ += 2;
        t.kind = Token::DictOpen;
        return t;
      }
      ++pos_;
      t.kind = Token::String;
      t.text = read_hex_string();
      return t;
    }
    if (c == '>') {
      if (pos_ + 1 < size_ && data_[pos_ + 1] == '>') {
        pos_ += 2;
        t.kind = Token::DictClose;
        return t;
      }
      throw MalformedPdf("stray '>'", pos_);
    }
    if (c == '[') {
      ++pos_;
      t.kind = Token::ArrayOpen;
      return t;
    }
    if (c == ']') {
      ++pos_;
      t.kind = Token::ArrayClose;
      return t;
    }
    if (c == '{' || c == '}') {
      ++pos_;
      t.kind = Token::Keyword;
      t.text = static_cast<char>(c);
      return t;
    }
    if (std::isdigit(c) || c == '+' || c == '-' || c == '.') {
      t.kind = Token::Number;
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < size_ &&
             (std::isdigit(data_[pos_]) || data_[pos_] == '.')) {
        ++pos_;
      }
      std::string num(reinterpret_cast<const char*>(data_ + start),
                      pos_ - start);
      try {
        t.number = std::stod(num);
      } catch (...) {
        throw MalformedPdf("bad number '" + num + "'", start);
      }
      t.text = num;
      return t;
    }
    // Keyword: run of regular characters (includes ' and ").
    t.kind = Token::Keyword;
    std::size_t start = pos_;
    if (c == '\'' || c == '"') {
      ++pos_;
      t.text = static_cast<char>(c);
      return t;
    }
    while (pos_ < size_ && !is_pdf_ws(data_[pos_]) && !is_delim(data_[pos_]) &&
           data_[pos_] != '\'' && data_[pos_] != '"') {
      ++pos_;
    }
    if (pos_ == start) {
      throw MalformedPdf("unexpected byte", pos_);
    }
    t.text.assign(reinterpret_cast<const char*>(data_ + start), pos_ - start);
    return t;
  }

  void skip_ws() {
    while (pos_ < size_) {
      unsigned char c = data_[pos_];
      if (is_pdf_ws(c)) {
        ++pos_;
      } else if (c == '%') {
        while (pos_ < size_ && data_[pos_] != '\n' && data_[pos_] != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

 private:
  std::string read_name() {
    std::string out;
    while (pos_ < size_ && !is_pdf_ws(data_[pos_]) && !is_delim(data_[pos_])) {
      unsigned char c = data_[pos_++];
      if (c == '#' && pos_ + 1 < size_) {
        auto hex = [&](unsigned char h) -> int {
          if (h >= '0' && h <= '9') return h - '0';
          if (h >= 'a' && h <= 'f') return h - 'a' + 10;
          if (h >= 'A' && h <= 'F') return h - 'A' + 10;
          return -1;
        };
        int hi = hex(data_[pos_]), lo = hex(data_[pos_ + 1]);
        if (hi >= 0 && lo >= 0) {
          out.push_back(static_cast<char>(hi * 16 + lo));
          pos_ += 2;
          continue;
        }
      }
      out.push_back(static_cast<char>(c));
    }
    return out;
  }

  std::string read_literal_string() {
    std::string out;
    int depth = 1;
    while (pos_ < size_) {
      unsigned char c = data_[pos_++];
      if (c == '\\') {
        if (pos_ >= size_) break;
        unsigned char e = data_[pos_++];
        switch (e) {
          case 'n': out.push_back('\n'); break;
          case 'r': out.push_back('\r'); break;
          case 't': out.push_back('\t'); break;
          case 'b': out.push_back('\b'); break;
          case 'f': out.push_back('\f'); break;
          case '(': out.push_back('('); break;
          case ')': out.push_back(')'); break;
          case '\\': out.push_back('\\'); break;
          case '\r':
            if (pos_ < size_ && data_[pos_] == '\n') ++pos_;
            break;  // line continuation
          case '\n': break;
          default:
            if (e >= '0' && e <= '7') {
              int v = e - '0';
              for (int i = 0; i < 2 && pos_ < size_ && data_[pos_] >= '0' &&
                              data_[pos_] <= '7';
                   ++i) {
                v = v * 8 + (data_[pos_++] - '0');
              }
              out.push_back(static_cast<char>(v & 0xFF));
            } else {
              out.push_back(static_cast<char>(e));
            }
        }
      } else if (c == '(') {
        ++depth;
        out.push_back('(');
      } else if (c == ')') {
        if (--depth == 0) return out;
        out.push_back(')');
      } else {
        out.push_back(static_cast<char>(c));
      }
    }
    throw MalformedPdf("unterminated string", pos_);
  }

  std::string read_hex_string() {
    std::string out;
    int hi = -1;
    while (pos_ < size_) {
      unsigned char c = data_[pos_++];
      if (c == '>') {
        if (hi >= 0) out.push_back(static_cast<char>(hi * 16));
        return out;
      }
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else continue;
      if (hi < 0) {
        hi = v;
      } else {
        out.push_back(static_cast<char>(hi * 16 + v));
        hi = -1;
      }
    }
    throw MalformedPdf("unterminated hex string", pos_);
  }

  const unsigned char* data_;
  std::size_t size_;
  std::size_t pos_;
};

// ---- Object parser ------------------------------------------------------------

ValuePtr parse_value(Lexer& lex);

ValuePtr parse_after_token(Lexer& lex, const Token& t) {
  auto val = std::make_shared<Value>();
  switch (t.kind) {
    case Token::Number: {
      // Lookahead for "num gen R".
      std::size_t save = lex.pos();
      Token t2 = lex.next();
      if (t2.kind == Token::Number) {
        Token t3 = lex.next();
        if (t3.kind == Token::Keyword && t3.text == "R") {
          val->v = Ref{static_cast<int>(t.number), static_cast<int>(t2.number)};
          return val;
        }
      }
      lex.seek(save);
      val->v = t.number;
      return val;
    }
    case Token::Name:
      val->v = NameStr{t.text};
      return val;
    case Token::String:
      val->v = t.text;
      return val;
    case Token::ArrayOpen: {
      Array arr;
      for (;;) {
        Token n = lex.next();
        if (n.kind == Token::ArrayClose) break;
        if (n.kind == Token::End) throw MalformedPdf("unterminated array", n.offset);
        arr.push_back(parse_after_token(lex, n));
      }
      val->v = std::move(arr);
      return val;
    }
    case Token::DictOpen: {
      Dict d;
      for (;;) {
        Token n = lex.next();
        if (n.kind == Token::DictClose) break;
        if (n.kind != Token::Name) {
          throw MalformedPdf("expected name key in dictionary", n.offset);
        }
        d[n.text] = parse_value(lex);
      }
      val->v = std::move(d);
      return val;
    }
    case Token::Keyword:
      if (t.text == "true") {
        val->v = true;
        return val;
      }
      if (t.text == "false") {
        val->v = false;
        return val;
      }
      if (t.text == "null") return val;
      throw MalformedPdf("unexpected keyword '" + t.text + "'", t.offset);
    default:
      throw MalformedPdf("unexpected token", t.offset);
  }
}

ValuePtr parse_value(Lexer& lex) {
  Token t = lex.next();
  return parse_after_token(lex, t);
}

// ---- Filters ---------------------------------------------------------------------

std::string inflate_bytes(const std::string& in, std::size_t offset) {
  z_stream zs{};
  if (inflateInit(&zs) != Z_OK) {
    throw MalformedPdf("zlib init failed", offset);
  }
  std::string out;
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  char buf[16384];
  int rc;
  do {
    zs.next_out = reinterpret_cast<Bytef*>(buf);
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw MalformedPdf("FlateDecode failed", offset);
    }
    out.append(buf, sizeof buf - zs.avail_out);
  } while (rc != Z_STREAM_END && zs.avail_in > 0);
  inflateEnd(&zs);
  return out;
}

// ---- Document structure ----------------------------------------------------------

struct FontInfo {
  int first_char = 0;
  std::vector<double> widths;  // glyph-space units (1/1000 text space)
  enum class Base { Latin1, WinAnsi, MacRoman } base = Base::Latin1;
  std::map<int, char32_t> to_unicode;  // from ToUnicode CMap

  char32_t decode(unsigned char code) const {
    auto it = to_unicode.find(code);
    if (it != to_unicode.end()) return it->second;
    switch (base) {
      case Base::WinAnsi: return winansi_to_unicode(code);
      case Base::MacRoman: return macroman_to_unicode(code);
      case Base::Latin1: return code;
    }
    return code;
  }

  // Text-space advance for one glyph at the given size; 0.5 * size when no
  // width table covers the code.
  double advance(unsigned char code, double size) const {
    int idx = static_cast<int>(code) - first_char;
    if (idx >= 0 && idx < static_cast<int>(widths.size())) {
      return widths[static_cast<std::size_t>(idx)] / 1000.0 * size;
    }
    return 0.5 * size;
  }
};

class Parser {
 public:
  Parser(std::span<const unsigned char> bytes, std::string doc_id)
      : bytes_(bytes), doc_(), doc_id_(std::move(doc_id)) {}

  PdfDocument run() {
    if (bytes_.size() < 5 ||
        std::memcmp(bytes_.data(), "%PDF-", 5) != 0) {
      throw MalformedPdf("missing %PDF header", 0);
    }
    scan_objects();
    Dict trailer = find_trailer();
    if (trailer.count("Encrypt")) throw EncryptedPdf();

    Dict catalog = resolve_dict(trailer.at("Root"), "catalog");
    doc_.doc_id = doc_id_;
    Dict inherited;
    walk_pages(catalog.at("Pages"), inherited);
    return std::move(doc_);
  }

 private:
  void scan_objects() {
    // Scans for "N G obj" markers; the xref table is ignored, which also
    // tolerates fixtures with hand-written offsets.
    const unsigned char* d = bytes_.data();
    std::size_t n = bytes_.size();
    for (std::size_t i = 0; i + 3 < n; ++i) {
      if (d[i] != 'o' || d[i + 1] != 'b' || d[i + 2] != 'j') continue;
      if (i + 3 < n && !is_pdf_ws(d[i + 3]) && !is_delim(d[i + 3])) continue;
      // Walk backwards over "N G ".
      std::size_t j = i;
      while (j > 0 && is_pdf_ws(d[j - 1])) --j;
      std::size_t gen_end = j;
      while (j > 0 && std::isdigit(d[j - 1])) --j;
      std::size_t gen_start = j;
      if (gen_start == gen_end) continue;
      while (j > 0 && is_pdf_ws(d[j - 1])) --j;
      std::size_t num_end = j;
      while (j > 0 && std::isdigit(d[j - 1])) --j;
      std::size_t num_start = j;
      if (num_start == num_end) continue;
      if (num_start > 0 && !is_pdf_ws(d[num_start - 1]) &&
          !is_delim(d[num_start - 1])) {
        continue;
      }
      int num = std::stoi(std::string(
          reinterpret_cast<const char*>(d + num_start), num_end - num_start));
      parse_object_at(num, i + 3);
    }
    if (objects_.empty()) throw MalformedPdf("no objects found", 0);
  }

  void parse_object_at(int num, std::size_t body_pos) {
    Lexer lex(bytes_.data(), bytes_.size(), body_pos);
    StoredObject obj;
    obj.value = parse_value(lex);
    lex.skip_ws();
    std::size_t after = lex.pos();
    Token t = lex.next();
    if (t.kind == Token::Keyword && t.text == "stream") {
      std::size_t p = lex.pos();
      if (p < bytes_.size() && bytes_[p] == '\r') ++p;
      if (p < bytes_.size() && bytes_[p] == '\n') ++p;
      obj.stream = extract_stream(*obj.value, p);
      obj.has_stream = true;
    } else {
      lex.seek(after);
    }
    objects_[num] = std::move(obj);
  }

  std::string extract_stream(const Value& dict_val, std::size_t start) {
    std::size_t len = 0;
    bool have_len = false;
    if (dict_val.is_dict()) {
      const Dict& d = std::get<Dict>(dict_val.v);
      auto it = d.find("Length");
      if (it != d.end() && it->second->is_number()) {
        len = static_cast<std::size_t>(std::get<double>(it->second->v));
        have_len = true;
      }
    }
    auto find_endstream = [&](std::size_t from) -> std::size_t {
      static const char kw[] = "endstream";
      const char* hay = reinterpret_cast<const char*>(bytes_.data());
      const char* found = static_cast<const char*>(memmem(
          hay + from, bytes_.size() - from, kw, sizeof kw - 1));
      if (!found) throw MalformedPdf("missing endstream", from);
      return static_cast<std::size_t>(found - hay);
    };
    std::size_t end;
    if (have_len && start + len <= bytes_.size()) {
      end = start + len;
      // Sanity: endstream should follow shortly after the declared length.
      std::size_t probe = end;
      while (probe < bytes_.size() && is_pdf_ws(bytes_[probe])) ++probe;
      if (probe + 9 > bytes_.size() ||
          std::memcmp(bytes_.data() + probe, "endstream", 9) != 0) {
        end = find_endstream(start);
      }
    } else {
      end = find_endstream(start);
    }
    std::string data(reinterpret_cast<const char*>(bytes_.data() + start),
                     end - start);
    if (!have_len) {
      while (!data.empty() && (data.back() == '\n' || data.back() == '\r')) {
        data.pop_back();
      }
    }
    return data;
  }

  Dict find_trailer() {
    // The last trailer dictionary wins; fall back to any /Type /Catalog
    // object for files without a classic trailer.
    const char* hay = reinterpret_cast<const char*>(bytes_.data());
    std::size_t n = bytes_.size();
    std::optional<Dict> trailer;
    std::size_t from = 0;
    for (;;) {
      const char* found = static_cast<const char*>(
          memmem(hay + from, n - from, "trailer", 7));
      if (!found) break;
      std::size_t pos = static_cast<std::size_t>(found - hay) + 7;
      Lexer lex(bytes_.data(), n, pos);
      try {
        ValuePtr v = parse_value(lex);
        if (v->is_dict()) {
          Dict d = std::get<Dict>(v->v);
          if (!trailer) trailer = d;
          // Merge later trailers over earlier ones.
          for (auto& [k, val] : d) (*trailer)[k] = val;
        }
      } catch (const MalformedPdf&) {
      }
      from = pos;
    }
    if (trailer && trailer->count("Root")) return *trailer;

    for (auto& [num, obj] : objects_) {
      if (!obj.value->is_dict()) continue;
      const Dict& d = std::get<Dict>(obj.value->v);
      auto it = d.find("Type");
      if (it != d.end() && it->second->is_name() && it->second->name() == "Catalog") {
        Dict t;
        auto root = std::make_shared<Value>();
        root->v = Ref{num, 0};
        t["Root"] = root;
        if (trailer && trailer->count("Encrypt")) t["Encrypt"] = (*trailer)["Encrypt"];
        return t;
      }
    }
    throw MalformedPdf("no trailer or catalog found", 0);
  }

  ValuePtr resolve(ValuePtr v) {
    int guard = 0;
    while (v && v->is_ref()) {
      if (++guard > 32) throw MalformedPdf("reference cycle", 0);
      Ref r = std::get<Ref>(v->v);
      auto it = objects_.find(r.num);
      if (it == objects_.end()) {
        throw MalformedPdf("dangling reference to object " +
                               std::to_string(r.num),
                           0);
      }
      v = it->second.value;
    }
    return v;
  }

  Dict resolve_dict(ValuePtr v, const std::string& what) {
    v = resolve(std::move(v));
    if (!v || !v->is_dict()) throw MalformedPdf("expected dictionary for " + what, 0);
    return std::get<Dict>(v->v);
  }

  const StoredObject* stream_object(ValuePtr v) {
    int guard = 0;
    while (v && v->is_ref()) {
      if (++guard > 32) throw MalformedPdf("reference cycle", 0);
      Ref r = std::get<Ref>(v->v);
      auto it = objects_.find(r.num);
      if (it == objects_.end()) return nullptr;
      if (it->second.has_stream) return &it->second;
      v = it->second.value;
    }
    return nullptr;
  }

  std::string decode_stream(const StoredObject& obj) {
    const Dict& d = std::get<Dict>(obj.value->v);
    std::vector<std::string> filters;
    auto it = d.find("Filter");
    if (it != d.end()) {
      ValuePtr f = resolve(it->second);
      if (f->is_name()) {
        filters.push_back(f->name());
      } else if (f->is_array()) {
        for (auto& e : std::get<Array>(f->v)) {
          ValuePtr r = resolve(e);
          if (r->is_name()) filters.push_back(r->name());
        }
      }
    }
    std::string data = obj.stream;
    for (const auto& f : filters) {
      if (f == "FlateDecode" || f == "Fl") {
        data = inflate_bytes(data, 0);
      } else {
        throw UnsupportedPdfFeature("filter " + f);
      }
    }
    return data;
  }

  void walk_pages(ValuePtr node_ref, Dict inherited) {
    Dict node = resolve_dict(node_ref, "page tree node");
    // Inheritable attributes.
    for (const char* key : {"Resources", "MediaBox"}) {
      if (node.count(key)) inherited[key] = node[key];
    }
    std::string type;
    if (node.count("Type")) {
      ValuePtr t = resolve(node["Type"]);
      if (t->is_name()) type = t->name();
    }
    if (type == "Pages" || (type.empty() && node.count("Kids"))) {
      ValuePtr kids = resolve(node.at("Kids"));
      if (!kids->is_array()) throw MalformedPdf("Kids is not an array", 0);
      for (auto& kid : std::get<Array>(kids->v)) {
        walk_pages(kid, inherited);
      }
      return;
    }
    process_page(node, inherited);
  }

  void process_page(const Dict& page, const Dict& inherited) {
    PageDims dims{612.0, 792.0};
    auto mb = page.count("MediaBox")
                  ? page.at("MediaBox")
                  : (inherited.count("MediaBox") ? inherited.at("MediaBox")
                                                 : nullptr);
    if (mb) {
      ValuePtr box = resolve(mb);
      if (box->is_array() && std::get<Array>(box->v).size() == 4) {
        const Array& a = std::get<Array>(box->v);
        double x0 = std::get<double>(resolve(a[0])->v);
        double y0 = std::get<double>(resolve(a[1])->v);
        double x1 = std::get<double>(resolve(a[2])->v);
        double y1 = std::get<double>(resolve(a[3])->v);
        dims.width = x1 - x0;
        dims.height = y1 - y0;
      }
    }
    if (dims.width <= 0 || dims.height <= 0) {
      throw MalformedPdf("non-positive page dimensions", 0);
    }

    std::map<std::string, FontInfo> fonts = load_fonts(page, inherited);

    std::string content;
    if (page.count("Contents")) {
      ValuePtr c = page.at("Contents");
      ValuePtr rc = resolve(c);
      if (rc->is_array()) {
        for (auto& part : std::get<Array>(rc->v)) {
          if (const StoredObject* so = stream_object(part)) {
            content += decode_stream(*so);
            content += '\n';
          }
        }
      } else if (const StoredObject* so = stream_object(c)) {
        content = decode_stream(*so);
      }
    }

    int page_idx = static_cast<int>(doc_.pages.size());
    doc_.pages.push_back(dims);
    doc_.chars.emplace_back();
    interpret_content(content, fonts, page_idx);
  }

  std::map<std::string, FontInfo> load_fonts(const Dict& page,
                                             const Dict& inherited) {
    std::map<std::string, FontInfo> fonts;
    ValuePtr res_ref = page.count("Resources")
                           ? page.at("Resources")
                           : (inherited.count("Resources")
                                  ? inherited.at("Resources")
                                  : nullptr);
    if (!res_ref) return fonts;
    Dict res = resolve_dict(res_ref, "resources");
    if (!res.count("Font")) return fonts;
    Dict font_dict = resolve_dict(res.at("Font"), "font resources");
    for (auto& [name, ref] : font_dict) {
      fonts[name] = load_font(ref);
    }
    return fonts;
  }

  FontInfo load_font(ValuePtr ref) {
    FontInfo info;
    Dict f = resolve_dict(ref, "font");
    if (f.count("Subtype")) {
      ValuePtr st = resolve(f.at("Subtype"));
      if (st->is_name() && st->name() == "Type0") {
        throw UnsupportedPdfFeature("Type0 (composite) font");
      }
    }
    if (f.count("FirstChar")) {
      ValuePtr fc = resolve(f.at("FirstChar"));
      if (fc->is_number()) info.first_char = static_cast<int>(std::get<double>(fc->v));
    }
    if (f.count("Widths")) {
      ValuePtr w = resolve(f.at("Widths"));
      if (w->is_array()) {
        for (auto& e : std::get<Array>(w->v)) {
          ValuePtr r = resolve(e);
          if (r->is_number()) info.widths.push_back(std::get<double>(r->v));
        }
      }
    }
    if (f.count("Encoding")) {
      ValuePtr enc = resolve(f.at("Encoding"));
      std::string enc_name;
      if (enc->is_name()) {
        enc_name = enc->name();
      } else if (enc->is_dict()) {
        const Dict& ed = std::get<Dict>(enc->v);
        auto it = ed.find("BaseEncoding");
        if (it != ed.end()) {
          ValuePtr be = resolve(it->second);
          if (be->is_name()) enc_name = be->name();
        }
      }
      if (enc_name == "WinAnsiEncoding") info.base = FontInfo::Base::WinAnsi;
      else if (enc_name == "MacRomanEncoding") info.base = FontInfo::Base::MacRoman;
    }
    if (f.count("ToUnicode")) {
      if (const StoredObject* so = stream_object(f.at("ToUnicode"))) {
        parse_tounicode(decode_stream(*so), info.to_unicode);
      }
    }
    return info;
  }

  static void parse_tounicode(const std::string& cmap,
                              std::map<int, char32_t>& out) {
    // Minimal bfchar/bfrange reader for 1-2 byte codes.
    Lexer lex(reinterpret_cast<const unsigned char*>(cmap.data()),
              cmap.size());
    auto hex_value = [](const std::string& s) -> std::uint32_t {
      std::uint32_t v = 0;
      for (unsigned char c : s) v = (v << 8) | c;
      return v;
    };
    std::vector<Token> window;
    for (;;) {
      Token t;
      try {
        t = lex.next();
      } catch (const MalformedPdf&) {
        break;
      }
      if (t.kind == Token::End) break;
      if (t.kind == Token::Keyword && t.text == "endbfchar") {
        for (std::size_t i = 0; i + 1 < window.size(); i += 2) {
          if (window[i].kind == Token::String &&
              window[i + 1].kind == Token::String) {
            out[static_cast<int>(hex_value(window[i].text))] =
                static_cast<char32_t>(hex_value(window[i + 1].text));
          }
        }
        window.clear();
      } else if (t.kind == Token::Keyword && t.text == "endbfrange") {
        for (std::size_t i = 0; i + 2 < window.size(); i += 3) {
          if (window[i].kind == Token::String &&
              window[i + 1].kind == Token::String &&
              window[i + 2].kind == Token::String) {
            std::uint32_t lo = hex_value(window[i].text);
            std::uint32_t hi = hex_value(window[i + 1].text);
            std::uint32_t dst = hex_value(window[i + 2].text);
            for (std::uint32_t c = lo; c <= hi && c - lo < 65536; ++c) {
              out[static_cast<int>(c)] = static_cast<char32_t>(dst + (c - lo));
            }
          }
        }
        window.clear();
      } else if (t.kind == Token::Keyword &&
                 (t.text == "beginbfchar" || t.text == "beginbfrange")) {
        window.clear();
      } else {
        window.push_back(t);
        if (window.size() > 3072) window.clear();
      }
    }
  }

  void interpret_content(const std::string& content,
                         const std::map<std::string, FontInfo>& fonts,
                         int page_idx) {
    Lexer lex(reinterpret_cast<const unsigned char*>(content.data()),
              content.size());
    std::vector<Token> stack;

    const FontInfo* font = nullptr;
    std::string font_name;
    double font_size = 0.0;
    double leading = 0.0;
    double char_spacing = 0.0;
    double word_spacing = 0.0;
    // Text line matrix restricted to [a 0 0 d e f]; u is the horizontal
    // offset from the line origin in text space.
    double ma = 1.0, md = 1.0, me = 0.0, mf = 0.0;
    double u = 0.0;

    auto num = [&](std::size_t back_idx) -> double {
      if (stack.size() <= back_idx) return 0.0;
      const Token& t = stack[stack.size() - 1 - back_idx];
      return t.kind == Token::Number ? t.number : 0.0;
    };

    auto show_string = [&](const std::string& s, std::size_t offset) {
      if (!font && !fonts.empty()) {
        throw MalformedPdf("text shown before Tf", offset);
      }
      for (unsigned char code : s) {
        char32_t cp = font ? font->decode(code) : code;
        double adv = font ? font->advance(code, font_size) : 0.5 * font_size;
        RichChar rc;
        rc.codepoint = cp;
        rc.page = page_idx;
        rc.x = me + ma * u;
        rc.y = mf;
        rc.font_name = font_name;
        rc.font_size = font_size * ma;
        if (rc.font_size <= 0) rc.font_size = font_size;
        doc_.chars[static_cast<std::size_t>(page_idx)].push_back(std::move(rc));
        u += adv + char_spacing + (code == ' ' ? word_spacing : 0.0);
      }
    };

    auto newline = [&] {
      mf -= md * leading;
      u = 0.0;
    };

    for (;;) {
      Token t = lex.next();
      if (t.kind == Token::End) break;
      if (t.kind != Token::Keyword) {
        if (t.kind == Token::DictOpen) {
          // Inline dictionaries (e.g. BDC property lists): parse and drop.
          parse_after_token(lex, t);
          continue;
        }
        if (t.kind == Token::ArrayOpen) {
          // Keep arrays (needed by TJ) as a flattened token window
          // delimited below; easiest is to collect tokens until close.
          std::vector<Token> arr;
          int depth = 1;
          while (depth > 0) {
            Token n = lex.next();
            if (n.kind == Token::End) {
              throw MalformedPdf("unterminated array in content", t.offset);
            }
            if (n.kind == Token::ArrayOpen) ++depth;
            else if (n.kind == Token::ArrayClose) { --depth; continue; }
            if (depth >= 1) arr.push_back(n);
          }
          Token marker;
          marker.kind = Token::ArrayOpen;
          marker.offset = t.offset;
          stack.push_back(marker);
          arrays_.push_back(std::move(arr));
          continue;
        }
        stack.push_back(t);
        continue;
      }

      const std::string& op = t.text;
      if (op == "BT") {
        ma = md = 1.0;
        me = mf = 0.0;
        u = 0.0;
      } else if (op == "ET") {
        // nothing to do
      } else if (op == "Tf") {
        font_size = num(0);
        if (stack.size() >= 2 &&
            stack[stack.size() - 2].kind == Token::Name) {
          font_name = stack[stack.size() - 2].text;
          auto it = fonts.find(font_name);
          font = it != fonts.end() ? &it->second : nullptr;
        }
      } else if (op == "TL") {
        leading = num(0);
      } else if (op == "Tc") {
        char_spacing = num(0);
      } else if (op == "Tw") {
        word_spacing = num(0);
      } else if (op == "Td") {
        me += ma * num(1);
        mf += md * num(0);
        u = 0.0;
      } else if (op == "TD") {
        leading = -num(0);
        me += ma * num(1);
        mf += md * num(0);
        u = 0.0;
      } else if (op == "Tm") {
        double a = num(5), b = num(4), c = num(3), d = num(2);
        if (b != 0.0 || c != 0.0 || a <= 0.0 || d <= 0.0) {
          throw UnsupportedPdfFeature("rotated or skewed text matrix (Tm)");
        }
        ma = a;
        md = d;
        me = num(1);
        mf = num(0);
        u = 0.0;
      } else if (op == "T*") {
        newline();
      } else if (op == "Tj") {
        if (!stack.empty() && stack.back().kind == Token::String) {
          show_string(stack.back().text, t.offset);
        }
      } else if (op == "'") {
        newline();
        if (!stack.empty() && stack.back().kind == Token::String) {
          show_string(stack.back().text, t.offset);
        }
      } else if (op == "\"") {
        word_spacing = num(2);
        char_spacing = num(1);
        newline();
        if (!stack.empty() && stack.back().kind == Token::String) {
          show_string(stack.back().text, t.offset);
        }
      } else if (op == "TJ") {
        if (!stack.empty() && stack.back().kind == Token::ArrayOpen &&
            !arrays_.empty()) {
          for (const Token& e : arrays_.back()) {
            if (e.kind == Token::String) {
              show_string(e.text, e.offset);
            } else if (e.kind == Token::Number) {
              u -= e.number / 1000.0 * font_size;
            }
          }
        }
      }
      // Operands consumed (or the operator was outside the text subset
      // and is ignored); clear for the next operator.
      if (!stack.empty() && stack.back().kind == Token::ArrayOpen &&
          !arrays_.empty()) {
        arrays_.pop_back();
      }
      stack.clear();
    }
  }

  std::span<const unsigned char> bytes_;
  PdfDocument doc_;
  std::string doc_id_;
  std::map<int, StoredObject> objects_;
  std::vector<std::vector<Token>> arrays_;
};

}  // namespace

PdfDocument parse_pdf(std::span<const unsigned char> bytes,
                      const std::string& doc_id) {
  Parser parser(bytes, doc_id);
  return parser.run();
}

PdfDocument parse_pdf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open PDF file: " + path);
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  std::string stem = path;
  if (auto slash = stem.find_last_of('/'); slash != std::string::npos) {
    stem = stem.substr(slash + 1);
  }
  if (auto dot = stem.find_last_of('.'); dot != std::string::npos) {
    stem = stem.substr(0, dot);
  }
  return parse_pdf(
      {reinterpret_cast<const unsigned char*>(data.data()), data.size()},
      stem);
}

PdfDocument read_richchar_jsonl(std::istream& in) {
  PdfDocument doc;
  std::string raw;
  std::size_t lineno = 0;
  bool header_seen = false;
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
      if (!header_seen) {
        doc.doc_id = j.at("doc_id").get<std::string>();
        for (const auto& p : j.at("pages")) {
          PageDims dims;
          dims.width = p.at("w").get<double>();
          dims.height = p.at("h").get<double>();
          if (dims.width <= 0 || dims.height <= 0) {
            throw SchemaError("page dimensions must be positive", lineno);
          }
          doc.pages.push_back(dims);
        }
        doc.chars.resize(doc.pages.size());
        header_seen = true;
        continue;
      }
      RichChar rc;
      rc.page = j.at("page").get<int>();
      rc.codepoint = decode_utf8_single(j.at("char").get<std::string>());
      rc.x = j.at("x").get<double>();
      rc.y = j.at("y").get<double>();
      rc.font_name = j.at("font").get<std::string>();
      rc.font_size = j.at("size").get<double>();
      if (rc.font_size <= 0) {
        throw SchemaError("size must be positive", lineno);
      }
      if (rc.page < 0 || rc.page >= static_cast<int>(doc.pages.size())) {
        throw SchemaError("page index out of range", lineno);
      }
      doc.chars[static_cast<std::size_t>(rc.page)].push_back(std::move(rc));
    } catch (const json::exception& e) {
      throw SchemaError(e.what(), lineno);
    }
  }
  if (!header_seen) throw SchemaError("missing header record", 1);
  return doc;
}

void write_richchar_jsonl(const PdfDocument& doc, std::ostream& out) {
  json pages = json::array();
  for (const auto& p : doc.pages) {
    pages.push_back({{"w", p.width}, {"h", p.height}});
  }
  out << json{{"doc_id", doc.doc_id}, {"pages", pages}}.dump() << '\n';
  for (const auto& page : doc.chars) {
    for (const auto& rc : page) {
      json j{{"page", rc.page},       {"char", encode_utf8(rc.codepoint)},
             {"x", rc.x},             {"y", rc.y},
             {"font", rc.font_name},  {"size", rc.font_size}};
      out << j.dump() << '\n';
    }
  }
}

}  // namespace tablescout::pdf
