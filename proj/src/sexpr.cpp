#include "hol/sexpr.hpp"

#include <cctype>

#include "hol/errors.hpp"

namespace hol {

namespace {

bool plain_atom(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' ||
        c == ')' || c == '"' || c == ';')
      return false;
  return true;
}

void write_rec(const SExpr& e, std::string& out, int indent) {
  if (e.is_atom) {
    if (plain_atom(e.text)) {
      out += e.text;
      return;
    }
    out += '"';
    for (char c : e.text) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    out += '"';
    return;
  }
  out += '(';
  bool block = false;
  for (const SExpr& item : e.items)
    if (!item.is_atom && !item.items.empty()) block = true;
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i > 0) {
      if (block) {
        out += '\n';
        out.append(static_cast<std::size_t>(indent + 1), ' ');
      } else {
        out += ' ';
      }
    }
    write_rec(e.items[i], out, indent + 1);
  }
  out += ')';
}

struct Reader {
  const std::string& src;
  std::size_t at = 0;

  void skip() {
    while (at < src.size()) {
      char c = src[at];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++at;
      } else if (c == ';') {
        while (at < src.size() && src[at] != '\n') ++at;
      } else {
        break;
      }
    }
  }

  SExpr value() {
    skip();
    if (at >= src.size()) throw SyntaxError(at, "unexpected end of input");
    char c = src[at];
    if (c == '(') {
      ++at;
      std::vector<SExpr> items;
      while (true) {
        skip();
        if (at >= src.size()) throw SyntaxError(at, "missing ')'");
        if (src[at] == ')') {
          ++at;
          return SExpr::list(std::move(items));
        }
        items.push_back(value());
      }
    }
    if (c == ')') throw SyntaxError(at, "unexpected ')'");
    if (c == '"') {
      ++at;
      std::string s;
      while (at < src.size() && src[at] != '"') {
        if (src[at] == '\\' && at + 1 < src.size()) ++at;
        s += src[at++];
      }
      if (at >= src.size()) throw SyntaxError(at, "unterminated string");
      ++at;
      return SExpr::atom(std::move(s));
    }
    std::size_t start = at;
    while (at < src.size() && plain_atom(std::string(1, src[at]))) ++at;
    if (at == start) throw SyntaxError(at, "unexpected character");
    return SExpr::atom(src.substr(start, at - start));
  }
};

}  // namespace

std::string write_sexpr(const SExpr& e) {
  std::string out;
  write_rec(e, out, 0);
  out += '\n';
  return out;
}

SExpr parse_sexpr(const std::string& text) {
  Reader r{text};
  SExpr e = r.value();
  r.skip();
  if (r.at < text.size())
    throw SyntaxError(r.at, "trailing input after expression");
  return e;
}

}  // namespace hol
