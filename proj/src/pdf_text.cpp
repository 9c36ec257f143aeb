#include "greyscreen/pdf_text.hpp"

#include <zlib.h>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace greyscreen::pdf {

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\0';
}

bool is_delim(char c) {
  return c == '(' || c == ')' || c == '<' || c == '>' || c == '[' || c == ']' ||
         c == '{' || c == '}' || c == '/' || c == '%';
}

bool is_regular(char c) { return !is_ws(c) && !is_delim(c); }

// ---------------------------------------------------------------------
// Object model
// ---------------------------------------------------------------------

struct Object {
  enum class Kind { Null, Bool, Number, String, Name, Array, Dict, Ref, Stream };
  Kind kind = Kind::Null;
  bool boolean = false;
  double number = 0.0;
  std::string text;  // String bytes or Name value
  std::vector<Object> array;
  std::vector<std::pair<std::string, Object>> dict;
  int ref_num = 0;
  int ref_gen = 0;
  std::string stream_data;  // raw, undecoded

  const Object* find(std::string_view key) const {
    for (const auto& [k, v] : dict) {
      if (k == key) return &v;
    }
    return nullptr;
  }
  bool is_name(std::string_view value) const {
    return kind == Kind::Name && text == value;
  }
  int as_int() const { return static_cast<int>(number); }
};

// ---------------------------------------------------------------------
// Tokenizer / object parser
// ---------------------------------------------------------------------

class Lexer {
 public:
  Lexer(std::string_view data, std::size_t pos) : s_(data), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t p) { pos_ = p; }
  bool eof() const { return pos_ >= s_.size(); }

  void skip_ws() {
    while (pos_ < s_.size()) {
      char c = s_[pos_];
      if (is_ws(c)) {
        ++pos_;
      } else if (c == '%') {  // comment to end of line
        while (pos_ < s_.size() && s_[pos_] != '\n' && s_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  // Bare keyword (operator, true/false/null, obj/endobj...).
  std::string keyword() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && is_regular(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (s_.compare(pos_, kw.size(), kw) == 0) {
      std::size_t after = pos_ + kw.size();
      if (after >= s_.size() || !is_regular(s_[after])) {
        pos_ = after;
        return true;
      }
    }
    return false;
  }

  Object parse_object(int depth = 0);

 private:
  Object parse_name();
  Object parse_literal_string();
  Object parse_hex_string();
  Object parse_number_or_ref();

  std::string_view s_;
  std::size_t pos_ = 0;
};

Object Lexer::parse_name() {
  ++pos_;  // '/'
  std::string name;
  while (pos_ < s_.size() && is_regular(s_[pos_])) {
    char c = s_[pos_];
    if (c == '#' && pos_ + 2 < s_.size() && std::isxdigit((unsigned char)s_[pos_ + 1]) &&
        std::isxdigit((unsigned char)s_[pos_ + 2])) {
      auto hex = [](char h) {
        if (h >= '0' && h <= '9') return h - '0';
        return (std::tolower((unsigned char)h) - 'a') + 10;
      };
      name.push_back(static_cast<char>(hex(s_[pos_ + 1]) * 16 + hex(s_[pos_ + 2])));
      pos_ += 3;
    } else {
      name.push_back(c);
      ++pos_;
    }
  }
  Object o;
  o.kind = Object::Kind::Name;
  o.text = std::move(name);
  return o;
}

Object Lexer::parse_literal_string() {
  ++pos_;  // '('
  std::string out;
  int depth = 1;
  while (pos_ < s_.size() && depth > 0) {
    char c = s_[pos_++];
    if (c == '\\') {
      if (pos_ >= s_.size()) break;
      char e = s_[pos_++];
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
          if (pos_ < s_.size() && s_[pos_] == '\n') ++pos_;
          break;  // line continuation
        case '\n': break;
        default:
          if (e >= '0' && e <= '7') {
            int v = e - '0';
            for (int i = 0; i < 2 && pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '7'; ++i) {
              v = v * 8 + (s_[pos_++] - '0');
            }
            out.push_back(static_cast<char>(v & 0xFF));
          } else {
            out.push_back(e);
          }
      }
    } else if (c == '(') {
      ++depth;
      out.push_back(c);
    } else if (c == ')') {
      --depth;
      if (depth > 0) out.push_back(c);
    } else {
      out.push_back(c);
    }
  }
  Object o;
  o.kind = Object::Kind::String;
  o.text = std::move(out);
  return o;
}

Object Lexer::parse_hex_string() {
  ++pos_;  // '<'
  std::string out;
  int hi = -1;
  auto hexval = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    char l = static_cast<char>(std::tolower((unsigned char)c));
    if (l >= 'a' && l <= 'f') return l - 'a' + 10;
    return -1;
  };
  while (pos_ < s_.size() && s_[pos_] != '>') {
    int v = hexval(s_[pos_++]);
    if (v < 0) continue;
    if (hi < 0) {
      hi = v;
    } else {
      out.push_back(static_cast<char>(hi * 16 + v));
      hi = -1;
    }
  }
  if (hi >= 0) out.push_back(static_cast<char>(hi * 16));  // odd digit padded with 0
  if (pos_ < s_.size()) ++pos_;                            // '>'
  Object o;
  o.kind = Object::Kind::String;
  o.text = std::move(out);
  return o;
}

Object Lexer::parse_number_or_ref() {
  std::size_t start = pos_;
  if (peek() == '+' || peek() == '-') ++pos_;
  bool integral = true;
  while (pos_ < s_.size() && (std::isdigit((unsigned char)s_[pos_]) || s_[pos_] == '.')) {
    if (s_[pos_] == '.') integral = false;
    ++pos_;
  }
  double value = 0.0;
  try {
    value = std::stod(std::string(s_.substr(start, pos_ - start)));
  } catch (...) {
    value = 0.0;
  }

  // "n g R" forms an indirect reference.
  if (integral && value >= 0) {
    std::size_t save = pos_;
    skip_ws();
    std::size_t gen_start = pos_;
    while (pos_ < s_.size() && std::isdigit((unsigned char)s_[pos_])) ++pos_;
    if (pos_ > gen_start) {
      std::size_t gen_end = pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == 'R' &&
          (pos_ + 1 >= s_.size() || !is_regular(s_[pos_ + 1]))) {
        ++pos_;
        Object o;
        o.kind = Object::Kind::Ref;
        o.ref_num = static_cast<int>(value);
        o.ref_gen = std::stoi(std::string(s_.substr(gen_start, gen_end - gen_start)));
        return o;
      }
    }
    pos_ = save;
  }

  Object o;
  o.kind = Object::Kind::Number;
  o.number = value;
  return o;
}

Object Lexer::parse_object(int depth) {
  if (depth > 64) throw PdfError("object nesting too deep");
  skip_ws();
  if (eof()) throw PdfError("unexpected end of data");
  char c = peek();

  if (c == '/') return parse_name();
  if (c == '(') return parse_literal_string();
  if (c == '[') {
    ++pos_;
    Object o;
    o.kind = Object::Kind::Array;
    while (true) {
      skip_ws();
      if (eof()) throw PdfError("unterminated array");
      if (peek() == ']') {
        ++pos_;
        break;
      }
      o.array.push_back(parse_object(depth + 1));
    }
    return o;
  }
  if (c == '<') {
    if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '<') {
      pos_ += 2;
      Object o;
      o.kind = Object::Kind::Dict;
      while (true) {
        skip_ws();
        if (eof()) throw PdfError("unterminated dictionary");
        if (peek() == '>') {
          if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
            pos_ += 2;
            break;
          }
          throw PdfError("malformed dictionary close");
        }
        if (peek() != '/') throw PdfError("dictionary key is not a name");
        Object key = parse_name();
        Object value = parse_object(depth + 1);
        o.dict.emplace_back(std::move(key.text), std::move(value));
      }
      return o;
    }
    return parse_hex_string();
  }
  if (c == '+' || c == '-' || c == '.' || std::isdigit((unsigned char)c)) {
    return parse_number_or_ref();
  }

  std::string kw = keyword();
  if (kw == "true" || kw == "false") {
    Object o;
    o.kind = Object::Kind::Bool;
    o.boolean = (kw == "true");
    return o;
  }
  if (kw == "null") return Object{};
  if (kw.empty()) throw PdfError("unparseable object");
  // A bare keyword at object position: surface it as a name-like token so
  // content-stream parsing can treat it as an operator.
  Object o;
  o.kind = Object::Kind::Name;
  o.text = kw;
  return o;
}

// ---------------------------------------------------------------------
// Inflate
// ---------------------------------------------------------------------

std::optional<std::string> inflate(std::string_view in, int window_bits) {
  z_stream zs{};
  if (inflateInit2(&zs, window_bits) != Z_OK) return std::nullopt;
  std::string out;
  char buffer[1 << 15];
  zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  int rc = Z_OK;
  while (rc == Z_OK) {
    zs.next_out = reinterpret_cast<Bytef*>(buffer);
    zs.avail_out = sizeof(buffer);
    rc = ::inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      return std::nullopt;
    }
    out.append(buffer, sizeof(buffer) - zs.avail_out);
    if (rc == Z_STREAM_END) break;
    if (zs.avail_in == 0 && zs.avail_out != 0) break;  // truncated input
    if (out.size() > (std::size_t{1} << 28)) {          // 256 MB safety cap
      inflateEnd(&zs);
      return std::nullopt;
    }
  }
  inflateEnd(&zs);
  return out;
}

std::optional<std::string> flate_decode(std::string_view in) {
  auto out = inflate(in, 15);  // zlib-wrapped (normal for PDF)
  if (!out) out = inflate(in, -15);  // tolerate raw deflate
  return out;
}

// ---------------------------------------------------------------------
// String decoding: UTF-16BE with BOM, otherwise Latin-1-ish bytes.
// ---------------------------------------------------------------------

void append_utf8(std::string& out, std::uint32_t cp) {
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
}

std::string decode_text_string(std::string_view bytes) {
  std::string out;
  if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[0]) == 0xFE &&
      static_cast<unsigned char>(bytes[1]) == 0xFF) {
    for (std::size_t i = 2; i + 1 < bytes.size(); i += 2) {
      std::uint32_t unit = (static_cast<unsigned char>(bytes[i]) << 8) |
                           static_cast<unsigned char>(bytes[i + 1]);
      if (unit >= 0xD800 && unit <= 0xDBFF && i + 3 < bytes.size()) {
        std::uint32_t low = (static_cast<unsigned char>(bytes[i + 2]) << 8) |
                            static_cast<unsigned char>(bytes[i + 3]);
        if (low >= 0xDC00 && low <= 0xDFFF) {
          append_utf8(out, 0x10000 + ((unit - 0xD800) << 10) + (low - 0xDC00));
          i += 2;
          continue;
        }
      }
      append_utf8(out, unit);
    }
    return out;
  }
  for (unsigned char c : bytes) {
    append_utf8(out, c);  // treat single bytes as Latin-1
  }
  return out;
}

// ---------------------------------------------------------------------
// File-level parsing
// ---------------------------------------------------------------------

class File {
 public:
  explicit File(std::string_view data) : data_(data) {
    scan_objects();
    scan_trailers();
    load_object_streams();
  }

  bool encrypted() const { return encrypted_; }

  const Object* get(int num) {
    auto cached = cache_.find(num);
    if (cached != cache_.end()) return &cached->second;
    auto at = offsets_.find(num);
    if (at != offsets_.end()) {
      try {
        return &cache_.emplace(num, parse_indirect(at->second)).first->second;
      } catch (const PdfError&) {
        // fall through to a packed copy, if any
      }
    }
    auto packed = packed_.find(num);
    if (packed != packed_.end()) {
      return &cache_.emplace(num, packed->second).first->second;
    }
    return nullptr;
  }

  const Object* resolve(const Object* o, int depth = 0) {
    while (o && o->kind == Object::Kind::Ref) {
      if (++depth > 32) throw PdfError("reference cycle");
      o = get(o->ref_num);
    }
    return o;
  }

  std::string decoded_stream(const Object& stream) {
    if (stream.kind != Object::Kind::Stream) return {};
    const Object* filter = stream.find("Filter");
    std::vector<std::string> filters;
    if (filter) {
      const Object* f = resolve(filter);
      if (f && f->kind == Object::Kind::Name) {
        filters.push_back(f->text);
      } else if (f && f->kind == Object::Kind::Array) {
        for (const auto& e : f->array) {
          const Object* fe = resolve(&e);
          if (fe && fe->kind == Object::Kind::Name) filters.push_back(fe->text);
        }
      }
    }
    std::string data = stream.stream_data;
    for (const auto& name : filters) {
      if (name == "FlateDecode" || name == "Fl") {
        auto out = flate_decode(data);
        if (!out) return {};
        data = std::move(*out);
      } else {
        return {};  // unsupported filter (images etc.) carries no text
      }
    }
    return data;
  }

  std::vector<int> page_object_numbers() {
    std::vector<int> pages;
    std::set<int> visited;
    const Object* root = resolve(root_ref());
    if (root && root->kind == Object::Kind::Dict) {
      const Object* tree = resolve(root->find("Pages"));
      if (tree) collect_pages(tree, pages, visited, 0);
    }
    if (!pages.empty()) return pages;

    // Fallback: any object typed /Page, in object-number order.
    for (const auto& [num, _] : offsets_) {
      const Object* obj = get(num);
      if (obj && obj->kind == Object::Kind::Dict) {
        const Object* type = obj->find("Type");
        if (type && type->is_name("Page")) pages.push_back(num);
      }
    }
    for (const auto& [num, _] : packed_) {
      if (visited.count(num)) continue;
      if (offsets_.count(num)) continue;
      const Object* obj = get(num);
      if (obj && obj->kind == Object::Kind::Dict) {
        const Object* type = obj->find("Type");
        if (type && type->is_name("Page")) pages.push_back(num);
      }
    }
    return pages;
  }

 private:
  const Object* root_ref() {
    if (root_.kind == Object::Kind::Ref) return &root_;
    // Fallback: scan for a catalog object.
    for (const auto& [num, _] : offsets_) {
      const Object* obj = get(num);
      if (obj && obj->kind == Object::Kind::Dict) {
        const Object* type = obj->find("Type");
        if (type && type->is_name("Catalog")) {
          root_.kind = Object::Kind::Ref;
          root_.ref_num = num;
          root_.ref_gen = 0;
          return &root_;
        }
      }
    }
    return nullptr;
  }

  void collect_pages(const Object* node, std::vector<int>& pages, std::set<int>& visited,
                     int depth) {
    if (!node || node->kind != Object::Kind::Dict || depth > 64) return;
    const Object* type = node->find("Type");
    if (type && type->is_name("Page")) {
      return;  // leaf handled by caller via reference number
    }
    const Object* kids = resolve(node->find("Kids"));
    if (!kids || kids->kind != Object::Kind::Array) return;
    for (const auto& kid : kids->array) {
      if (kid.kind != Object::Kind::Ref) continue;
      if (!visited.insert(kid.ref_num).second) continue;
      const Object* child = get(kid.ref_num);
      if (!child || child->kind != Object::Kind::Dict) continue;
      const Object* child_type = child->find("Type");
      if (child_type && child_type->is_name("Page")) {
        pages.push_back(kid.ref_num);
      } else {
        collect_pages(child, pages, visited, depth + 1);
      }
    }
  }

  Object parse_indirect(std::size_t body_offset) {
    Lexer lex(data_, body_offset);
    Object obj = lex.parse_object();
    if (obj.kind == Object::Kind::Dict && lex.try_keyword("stream")) {
      std::size_t p = lex.pos();
      if (p < data_.size() && data_[p] == '\r') ++p;
      if (p < data_.size() && data_[p] == '\n') ++p;

      std::size_t end = std::string_view::npos;
      double declared = -1.0;
      if (const Object* length = obj.find("Length")) {
        if (length->kind == Object::Kind::Number) {
          declared = length->number;
        } else if (length->kind == Object::Kind::Ref) {
          auto at = offsets_.find(length->ref_num);
          if (at != offsets_.end()) {
            try {
              Lexer inner(data_, at->second);
              Object v = inner.parse_object();
              if (v.kind == Object::Kind::Number) declared = v.number;
            } catch (const PdfError&) {
            }
          }
        }
      }
      if (declared >= 0 && p + static_cast<std::size_t>(declared) <= data_.size()) {
        std::size_t candidate = p + static_cast<std::size_t>(declared);
        // Sanity: endstream should follow shortly after the declared length.
        std::size_t probe = data_.find("endstream", candidate);
        if (probe != std::string_view::npos && probe - candidate <= 4) end = candidate;
      }
      if (end == std::string_view::npos) {
        std::size_t probe = data_.find("endstream", p);
        if (probe == std::string_view::npos) throw PdfError("unterminated stream");
        end = probe;
        // A single EOL before the keyword is framing, not data.
        if (end > p && data_[end - 1] == '\n') --end;
        if (end > p && data_[end - 1] == '\r') --end;
      }
      obj.stream_data.assign(data_.substr(p, end - p));
      obj.kind = Object::Kind::Stream;
    }
    return obj;
  }

  // Builds the object table by scanning for "N G obj" headers. Robust to
  // damaged or absent cross-reference tables; later definitions win, as
  // with incremental updates.
  void scan_objects() {
    std::size_t pos = 0;
    while ((pos = data_.find("obj", pos)) != std::string_view::npos) {
      std::size_t after = pos + 3;
      if (after < data_.size() && is_regular(data_[after])) {
        pos = after;
        continue;
      }
      // Backtrack: ws, generation digits, ws, object digits.
      std::size_t i = pos;
      auto skip_back_ws = [&] {
        while (i > 0 && (data_[i - 1] == ' ' || data_[i - 1] == '\r' || data_[i - 1] == '\n' ||
                         data_[i - 1] == '\t')) {
          --i;
        }
      };
      skip_back_ws();
      std::size_t gen_end = i;
      while (i > 0 && std::isdigit((unsigned char)data_[i - 1])) --i;
      std::size_t gen_start = i;
      if (gen_start == gen_end) {
        pos = after;
        continue;
      }
      skip_back_ws();
      std::size_t num_end = i;
      while (i > 0 && std::isdigit((unsigned char)data_[i - 1])) --i;
      std::size_t num_start = i;
      if (num_start == num_end || num_end == gen_start) {
        pos = after;
        continue;
      }
      if (num_end - num_start > 9) {
        pos = after;
        continue;
      }
      int num = std::stoi(std::string(data_.substr(num_start, num_end - num_start)));
      offsets_[num] = after;  // last definition wins
      pos = after;
    }
    if (offsets_.empty()) throw PdfError("no objects found");
  }

  void scan_trailers() {
    // Classic trailers.
    std::size_t pos = 0;
    while ((pos = data_.find("trailer", pos)) != std::string_view::npos) {
      std::size_t after = pos + 7;
      pos = after;
      try {
        Lexer lex(data_, after);
        Object dict = lex.parse_object();
        if (dict.kind != Object::Kind::Dict) continue;
        absorb_trailer(dict);
      } catch (const PdfError&) {
        continue;
      }
    }
    // Cross-reference streams double as trailers.
    for (const auto& [num, _] : offsets_) {
      const Object* obj = get(num);
      if (obj && obj->kind == Object::Kind::Stream) {
        const Object* type = obj->find("Type");
        if (type && type->is_name("XRef")) absorb_trailer(*obj);
      }
    }
  }

  void absorb_trailer(const Object& dict) {
    if (dict.find("Encrypt")) encrypted_ = true;
    const Object* root = dict.find("Root");
    if (root && root->kind == Object::Kind::Ref) root_ = *root;
  }

  // Unpacks /Type /ObjStm containers so objects stored inside compressed
  // streams are reachable too.
  void load_object_streams() {
    std::vector<int> container_numbers;
    for (const auto& [num, _] : offsets_) container_numbers.push_back(num);
    for (int num : container_numbers) {
      const Object* obj = get(num);
      if (!obj || obj->kind != Object::Kind::Stream) continue;
      const Object* type = obj->find("Type");
      if (!type || !type->is_name("ObjStm")) continue;
      const Object* n_obj = resolve(obj->find("N"));
      const Object* first_obj = resolve(obj->find("First"));
      if (!n_obj || !first_obj) continue;
      std::string data = decoded_stream(*obj);
      if (data.empty()) continue;
      int count = n_obj->as_int();
      std::size_t first = static_cast<std::size_t>(first_obj->as_int());
      Lexer header(data, 0);
      std::vector<std::pair<int, std::size_t>> entries;
      bool ok = true;
      for (int i = 0; i < count; ++i) {
        try {
          Object id = header.parse_object();
          Object off = header.parse_object();
          if (id.kind != Object::Kind::Number || off.kind != Object::Kind::Number) {
            ok = false;
            break;
          }
          entries.emplace_back(id.as_int(), first + static_cast<std::size_t>(off.number));
        } catch (const PdfError&) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (const auto& [id, off] : entries) {
        if (off >= data.size()) continue;
        try {
          Lexer lex(data, off);
          packed_[id] = lex.parse_object();
        } catch (const PdfError&) {
          continue;
        }
      }
    }
  }

  std::string_view data_;
  std::map<int, std::size_t> offsets_;  // object number -> body offset
  std::map<int, Object> packed_;        // objects unpacked from ObjStm
  std::map<int, Object> cache_;
  Object root_;
  bool encrypted_ = false;
};

// ---------------------------------------------------------------------
// Content-stream text extraction
// ---------------------------------------------------------------------

class TextAssembler {
 public:
  void separator(char c) {
    if (!out_.empty() && out_.back() != ' ' && out_.back() != '\n') out_.push_back(c);
  }
  void show(std::string_view raw) { out_ += decode_text_string(raw); }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

std::string extract_content_text(std::string_view content) {
  TextAssembler text;
  Lexer lex(content, 0);
  std::vector<Object> stack;
  bool in_text = false;

  while (true) {
    lex.skip_ws();
    if (lex.eof()) break;
    char c = lex.peek();
    Object obj;
    try {
      obj = lex.parse_object();
    } catch (const PdfError&) {
      break;  // damaged tail; keep what we have
    }
    bool operand = (c == '(' || c == '<' || c == '[' || c == '/' || c == '+' || c == '-' ||
                    c == '.' || std::isdigit((unsigned char)c));
    if (operand || obj.kind != Object::Kind::Name) {
      stack.push_back(std::move(obj));
      continue;
    }

    const std::string& op = obj.text;
    if (op == "BT") {
      in_text = true;
    } else if (op == "ET") {
      in_text = false;
      text.separator('\n');
    } else if (op == "BI") {
      // Inline image: skip binary payload through to EI.
      std::size_t p = content.find("EI", lex.pos());
      if (p == std::string_view::npos) break;
      lex.seek(p + 2);
    } else if (in_text) {
      if (op == "Tj" && !stack.empty() && stack.back().kind == Object::Kind::String) {
        text.show(stack.back().text);
      } else if (op == "'" && !stack.empty() && stack.back().kind == Object::Kind::String) {
        text.separator('\n');
        text.show(stack.back().text);
      } else if (op == "\"" && !stack.empty() && stack.back().kind == Object::Kind::String) {
        text.separator('\n');
        text.show(stack.back().text);
      } else if (op == "TJ" && !stack.empty() && stack.back().kind == Object::Kind::Array) {
        for (const auto& e : stack.back().array) {
          if (e.kind == Object::Kind::String) {
            text.show(e.text);
          } else if (e.kind == Object::Kind::Number && e.number <= -180.0) {
            text.separator(' ');  // large negative kern reads as a gap
          }
        }
      } else if (op == "Td" || op == "TD") {
        bool moved_down = stack.size() >= 1 && stack.back().kind == Object::Kind::Number &&
                          stack.back().number != 0.0;
        text.separator(moved_down ? '\n' : ' ');
      } else if (op == "T*" || op == "Tm") {
        text.separator('\n');
      }
    }
    stack.clear();
  }
  return text.take();
}

}  // namespace

bool looks_like_pdf(std::string_view bytes) {
  return bytes.size() >= 5 && bytes.substr(0, 5) == "%PDF-";
}

std::vector<std::string> page_texts(std::string_view bytes) {
  if (!looks_like_pdf(bytes)) throw PdfError("missing %PDF header");
  File file(bytes);
  if (file.encrypted()) throw PdfError("encrypted PDF");

  std::vector<std::string> texts;
  for (int page_num : file.page_object_numbers()) {
    const Object* page = file.get(page_num);
    std::string content;
    if (page) {
      const Object* contents = file.resolve(page->find("Contents"));
      if (contents) {
        if (contents->kind == Object::Kind::Stream) {
          content = file.decoded_stream(*contents);
        } else if (contents->kind == Object::Kind::Array) {
          for (const auto& part : contents->array) {
            const Object* stream = file.resolve(&part);
            if (stream && stream->kind == Object::Kind::Stream) {
              if (!content.empty()) content += '\n';
              content += file.decoded_stream(*stream);
            }
          }
        }
      }
    }
    texts.push_back(content.empty() ? std::string() : extract_content_text(content));
  }
  if (texts.empty()) throw PdfError("no pages found");
  return texts;
}

std::vector<std::string> page_texts(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw PdfError("cannot open file: " + file.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return page_texts(bytes);
}

}  // namespace greyscreen::pdf
