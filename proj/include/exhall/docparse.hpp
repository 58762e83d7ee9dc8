#pragma once

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "exhall/errors.hpp"

namespace exhall {

// Minimal structured-document reader used for quiver files, valuation files and
// alias maps. Grammar:
//
//   value  := map | list | atom
//   map    := '{' [ key ':' value { ',' key ':' value } ] '}'
//   list   := '[' [ value { ',' value } ] ']'
//   atom   := bare token (no whitespace or {}[]:,#) or a "double-quoted" string
//
// '#' starts a comment running to end of line. Map entries keep insertion order.
// This is deliberately not JSON: bare atoms like 1.1.0 or I2 are first-class.

struct DocValue {
  enum class Kind { Atom, List, Map } kind = Kind::Atom;
  std::string atom;
  std::vector<DocValue> list;
  std::vector<std::pair<std::string, DocValue>> map;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_list() const { return kind == Kind::List; }
  bool is_map() const { return kind == Kind::Map; }

  const DocValue* find(const std::string& key) const {
    for (const auto& [k, v] : map)
      if (k == key) return &v;
    return nullptr;
  }
};

namespace detail {

struct DocParser {
  const std::string& s;
  size_t i = 0;

  explicit DocParser(const std::string& text) : s(text) {}

  [[noreturn]] void fail(const std::string& what) const {
    size_t line = 1, col = 1;
    for (size_t j = 0; j < i && j < s.size(); ++j) {
      if (s[j] == '\n') { ++line; col = 1; } else ++col;
    }
    throw InputError("malformed document at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + what);
  }

  void skip_ws() {
    while (i < s.size()) {
      if (std::isspace((unsigned char)s[i])) { ++i; continue; }
      if (s[i] == '#') {
        while (i < s.size() && s[i] != '\n') ++i;
        continue;
      }
      break;
    }
  }

  bool is_delim(char c) const {
    return c == '{' || c == '}' || c == '[' || c == ']' || c == ':' || c == ',' || c == '#';
  }

  std::string parse_atom() {
    skip_ws();
    if (i >= s.size()) fail("expected a token");
    if (s[i] == '"') {
      ++i;
      std::string out;
      while (i < s.size() && s[i] != '"') out += s[i++];
      if (i >= s.size()) fail("unterminated string");
      ++i;
      return out;
    }
    std::string out;
    while (i < s.size() && !std::isspace((unsigned char)s[i]) && !is_delim(s[i])) out += s[i++];
    if (out.empty()) fail("expected a token");
    return out;
  }

  DocValue parse_value() {
    skip_ws();
    if (i >= s.size()) fail("expected a value");
    DocValue v;
    if (s[i] == '{') {
      ++i;
      v.kind = DocValue::Kind::Map;
      skip_ws();
      if (i < s.size() && s[i] == '}') { ++i; return v; }
      for (;;) {
        std::string key = parse_atom();
        skip_ws();
        if (i >= s.size() || s[i] != ':') fail("expected ':' after key '" + key + "'");
        ++i;
        v.map.emplace_back(std::move(key), parse_value());
        skip_ws();
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == '}') { ++i; return v; }
        fail("expected ',' or '}' in map");
      }
    }
    if (s[i] == '[') {
      ++i;
      v.kind = DocValue::Kind::List;
      skip_ws();
      if (i < s.size() && s[i] == ']') { ++i; return v; }
      for (;;) {
        v.list.push_back(parse_value());
        skip_ws();
        if (i < s.size() && s[i] == ',') { ++i; continue; }
        if (i < s.size() && s[i] == ']') { ++i; return v; }
        fail("expected ',' or ']' in list");
      }
    }
    if (s[i] == '}' || s[i] == ']' || s[i] == ':' || s[i] == ',') fail("unexpected delimiter");
    v.kind = DocValue::Kind::Atom;
    v.atom = parse_atom();
    return v;
  }
};

}  // namespace detail

// Parse a whole document. The outer braces are optional when the document is a
// map, so `vertices: [1,2], arrows: [[1,2]]` works as well as the braced form.
inline DocValue parse_document(const std::string& text) {
  detail::DocParser p(text);
  p.skip_ws();
  DocValue v;
  if (p.i < text.size() && (text[p.i] == '{' || text[p.i] == '[')) {
    v = p.parse_value();
  } else {
    // brace-less map
    v.kind = DocValue::Kind::Map;
    p.skip_ws();
    while (p.i < text.size()) {
      std::string key = p.parse_atom();
      p.skip_ws();
      if (p.i >= text.size() || text[p.i] != ':') p.fail("expected ':' after key '" + key + "'");
      ++p.i;
      v.map.emplace_back(std::move(key), p.parse_value());
      p.skip_ws();
      if (p.i < text.size() && text[p.i] == ',') { ++p.i; p.skip_ws(); }
    }
  }
  p.skip_ws();
  if (p.i != text.size()) p.fail("trailing content");
  return v;
}

}  // namespace exhall
