#include "hol/parse.hpp"

#include <cctype>
#include <vector>

#include "hol/errors.hpp"

namespace hol {

namespace {

enum class Tok : unsigned char {
  Ident, LParen, RParen, LBracket, RBracket, Backslash, Colon, Dot,
  TypeArrow, Imp, Iff, AndOp, OrOp, Tilde, Equals, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

struct Lexer {
  const std::string& src;
  std::size_t at = 0;
  std::vector<Token> tokens;

  explicit Lexer(const std::string& s) : src(s) { run(); }

  void run() {
    while (at < src.size()) {
      char c = src[at];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++at;
        continue;
      }
      std::size_t start = at;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t end = at;
        while (end < src.size() &&
               (std::isalnum(static_cast<unsigned char>(src[end])) ||
                src[end] == '_' || src[end] == '\''))
          ++end;
        tokens.push_back({Tok::Ident, src.substr(at, end - at), start});
        at = end;
        continue;
      }
      auto two = [&](char a, char b) {
        return c == a && at + 1 < src.size() && src[at + 1] == b;
      };
      auto three = [&](const char* s3) {
        return at + 2 < src.size() && src[at] == s3[0] &&
               src[at + 1] == s3[1] && src[at + 2] == s3[2];
      };
      if (three("<=>")) {
        tokens.push_back({Tok::Iff, "<=>", start});
        at += 3;
      } else if (two('-', '>')) {
        tokens.push_back({Tok::TypeArrow, "->", start});
        at += 2;
      } else if (two('=', '>')) {
        tokens.push_back({Tok::Imp, "=>", start});
        at += 2;
      } else if (two('/', '\\')) {
        tokens.push_back({Tok::AndOp, "/\\", start});
        at += 2;
      } else if (two('\\', '/')) {
        tokens.push_back({Tok::OrOp, "\\/", start});
        at += 2;
      } else {
        switch (c) {
          case '(': tokens.push_back({Tok::LParen, "(", start}); break;
          case ')': tokens.push_back({Tok::RParen, ")", start}); break;
          case '[': tokens.push_back({Tok::LBracket, "[", start}); break;
          case ']': tokens.push_back({Tok::RBracket, "]", start}); break;
          case '\\': tokens.push_back({Tok::Backslash, "\\", start}); break;
          case ':': tokens.push_back({Tok::Colon, ":", start}); break;
          case '.': tokens.push_back({Tok::Dot, ".", start}); break;
          case '~': tokens.push_back({Tok::Tilde, "~", start}); break;
          case '=': tokens.push_back({Tok::Equals, "=", start}); break;
          default:
            throw SyntaxError(start, std::string("unexpected character '") +
                                         c + "'");
        }
        ++at;
      }
    }
    tokens.push_back({Tok::End, "", src.size()});
  }
};

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;
  const Signature& sig;
  const ParseOptions& opts;
  std::vector<std::pair<std::string, Type>> scope;

  Parser(const std::string& text, const Signature& s, const ParseOptions& o)
      : toks(Lexer(text).tokens), sig(s), opts(o) {}

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = at + ahead;
    return i < toks.size() ? toks[i] : toks.back();
  }
  Token next() { return toks[at < toks.size() - 1 ? at++ : at]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at;
    return true;
  }
  Token expect(Tok k, const char* what) {
    if (peek().kind != k)
      throw SyntaxError(peek().pos, std::string("expected ") + what);
    return next();
  }

  // --- types ---

  Type type() {
    Type lhs = atomic_type();
    if (accept(Tok::TypeArrow)) return Type::arrow(lhs, type());
    return lhs;
  }

  Type atomic_type() {
    if (accept(Tok::LParen)) {
      Type t = type();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token t = expect(Tok::Ident, "a type (i, o or parenthesized arrow)");
    if (t.text == "i") return Type::iota();
    if (t.text == "o") return Type::omicron();
    throw SyntaxError(t.pos, "unknown type '" + t.text + "'");
  }

  // --- terms ---

  Term term() { return iff_level(); }

  Term iff_level() {
    Term lhs = imp_level();
    if (accept(Tok::Iff)) return iff(lhs, iff_level());
    return lhs;
  }

  Term imp_level() {
    Term lhs = or_level();
    if (accept(Tok::Imp)) return imp(lhs, imp_level());
    return lhs;
  }

  Term or_level() {
    Term lhs = and_level();
    while (accept(Tok::OrOp)) lhs = disj(lhs, and_level());
    return lhs;
  }

  Term and_level() {
    Term lhs = unary();
    while (accept(Tok::AndOp)) lhs = conj(lhs, unary());
    return lhs;
  }

  bool at_binder() const {
    if (peek().kind == Tok::Backslash) return true;
    return peek().kind == Tok::Ident &&
           (peek().text == "forall" || peek().text == "exists") &&
           peek(1).kind == Tok::Ident;
  }

  Term unary() {
    if (accept(Tok::Tilde)) return neg(unary());
    if (at_binder()) return binder();
    return cmp_level();
  }

  Term binder() {
    if (accept(Tok::Backslash)) {
      auto [name, ty] = binding();
      Term body = term();
      scope.pop_back();
      return Term::lam(name, ty, body);
    }
    Token kw = next();  // forall or exists
    auto [name, ty] = binding();
    Term body = term();
    scope.pop_back();
    if (kw.text == "forall") return forall(name, ty, body);
    return exists(name, ty, body);
  }

  std::pair<std::string, Type> binding() {
    Token name = expect(Tok::Ident, "a bound variable name");
    check_name(name);
    expect(Tok::Colon, "':' and a type annotation");
    Type ty = type();
    expect(Tok::Dot, "'.' after the binder");
    scope.emplace_back(name.text, ty);
    return {name.text, ty};
  }

  void check_name(const Token& name) const {
    if (is_keyword(name.text))
      throw SyntaxError(name.pos, "'" + name.text + "' is a reserved word");
    if (!opts.allow_reserved && is_reserved_name(name.text))
      throw SyntaxError(name.pos,
                        "names starting with '_' are reserved: " + name.text);
  }

  Term cmp_level() {
    Term lhs = app_level();
    if (accept(Tok::Equals)) {
      Term rhs = app_level();
      return eq(lhs, rhs);
    }
    return lhs;
  }

  bool at_atom() const {
    switch (peek().kind) {
      case Tok::Ident:
        // A quantifier keyword here is a binder, not an atom, unless it
        // names the constant itself: forall[T].
        if (peek().text == "forall" || peek().text == "exists")
          return peek(1).kind == Tok::LBracket;
        return true;
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  Term app_level() {
    Term t = atom();
    while (at_atom()) t = Term::app(t, atom());
    return t;
  }

  Term indexed_constant(const std::string& word) {
    expect(Tok::LBracket, "'[' and a type index");
    Type ty = type();
    expect(Tok::RBracket, "']'");
    if (word == "forall") return Term::constant(Constant::forall(ty));
    if (word == "exists") return Term::constant(Constant::exists(ty));
    return Term::constant(Constant::equality(ty));
  }

  Term atom() {
    if (accept(Tok::LParen)) {
      Term t = term();
      expect(Tok::RParen, "')'");
      return t;
    }
    Token t = expect(Tok::Ident, "a term");
    const std::string& w = t.text;
    if (w == "top") return truth();
    if (w == "bot") return falsity();
    if (w == "not") return Term::constant(Constant::negation());
    if (w == "and") return Term::constant(Constant::conjunction());
    if (w == "or") return Term::constant(Constant::disjunction());
    if (w == "imp") return Term::constant(Constant::implication());
    if (w == "forall" || w == "exists" || w == "eq")
      return indexed_constant(w);
    // Binders shadow free variables shadow constants.
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->first == w) return Term::var(w, it->second);
    if (auto found = opts.free_variables.find(w);
        found != opts.free_variables.end())
      return Term::var(w, found->second);
    if (auto found = sig.find(w); found != sig.end())
      return Term::constant(Constant::user(w, found->second));
    if (!opts.allow_reserved && is_reserved_name(w))
      throw SyntaxError(t.pos,
                        "names starting with '_' are reserved: " + w);
    throw UnknownConstant(w);
  }
};

}  // namespace

bool is_keyword(const std::string& word) {
  static const char* const kWords[] = {"forall", "exists", "top", "bot",
                                       "not",    "and",    "or",  "imp",
                                       "eq",     "i",      "o"};
  for (const char* k : kWords)
    if (word == k) return true;
  return false;
}

Type parse_type(const std::string& text) {
  ParseOptions opts;
  Signature sig;
  Parser p(text, sig, opts);
  Type t = p.type();
  if (p.peek().kind != Tok::End)
    throw SyntaxError(p.peek().pos, "trailing input after type");
  return t;
}

Term parse_term(const std::string& text, const Signature& sig,
                const ParseOptions& opts) {
  Parser p(text, sig, opts);
  Term t = p.term();
  if (p.peek().kind != Tok::End)
    throw SyntaxError(p.peek().pos, "trailing input after term");
  return t;
}

Term parse_term(const std::string& text, const Signature& sig) {
  return parse_term(text, sig, ParseOptions{});
}

Signature parse_signature(const std::string& text) {
  Signature sig;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string::npos) line_end = text.size();
    std::string line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    std::size_t colon = line.find(':');
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) {
      if (colon == std::string::npos)
        throw SyntaxError(line_start, "expected 'name : type'");
      std::string name = line.substr(0, colon);
      auto trim = [](std::string& s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        std::size_t e = s.find_last_not_of(" \t\r");
        s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
      };
      trim(name);
      if (name.empty())
        throw SyntaxError(line_start, "empty constant name");
      if (is_keyword(name) || is_reserved_name(name))
        throw SyntaxError(line_start, "'" + name + "' cannot be declared");
      for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' &&
            ch != '\'')
          throw SyntaxError(line_start, "bad constant name '" + name + "'");
      Type ty = parse_type(line.substr(colon + 1));
      if (auto it = sig.find(name); it != sig.end() && it->second != ty)
        throw SyntaxError(line_start, "conflicting declaration of " + name);
      sig.emplace(name, ty);
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return sig;
}

}  // namespace hol
