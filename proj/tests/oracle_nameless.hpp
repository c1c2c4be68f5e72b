// Independent de Bruijn oracle for alpha-equality and capture-avoiding
// substitution. Deliberately shares no code with the kernel paths it
// checks.

#ifndef HOL_TESTS_ORACLE_NAMELESS_HPP
#define HOL_TESTS_ORACLE_NAMELESS_HPP

#include <string>
#include <vector>

#include "hol/print.hpp"
#include "hol/term.hpp"

namespace holtest {

struct NT {
  enum K { Bound, Free, Cst, Lam, App } k = Cst;
  std::size_t idx = 0;        // Bound
  std::string name;           // Free / Cst key
  std::string annot;          // Free type / Lam binder type
  std::vector<NT> kids;

  bool operator==(const NT& o) const {
    return k == o.k && idx == o.idx && name == o.name && annot == o.annot &&
           kids == o.kids;
  }
};

inline std::string const_key(const hol::Constant& c) {
  using hol::ConstKind;
  switch (c.kind()) {
    case ConstKind::Top: return "top";
    case ConstKind::Bot: return "bot";
    case ConstKind::Not: return "not";
    case ConstKind::Imp: return "imp";
    case ConstKind::And: return "and";
    case ConstKind::Or: return "or";
    case ConstKind::Forall: return "forall@" + c.index().to_string();
    case ConstKind::Exists: return "exists@" + c.index().to_string();
    case ConstKind::Eq: return "eq@" + c.index().to_string();
    case ConstKind::User: return "user:" + c.name();
  }
  return "?";
}

inline NT to_nameless(const hol::Term& t, std::vector<std::string>& stack) {
  using K = hol::Term::Kind;
  switch (t.kind()) {
    case K::Var: {
      for (std::size_t i = stack.size(); i-- > 0;)
        if (stack[i] == t.var_name())
          return {NT::Bound, stack.size() - 1 - i, {}, {}, {}};
      return {NT::Free, 0, t.var_name(), t.type().to_string(), {}};
    }
    case K::Const:
      return {NT::Cst, 0, const_key(t.as_const()), {}, {}};
    case K::Lam: {
      stack.push_back(t.binder());
      NT body = to_nameless(t.body(), stack);
      stack.pop_back();
      return {NT::Lam, 0, {}, t.binder_type().to_string(), {std::move(body)}};
    }
    case K::App: {
      NT f = to_nameless(t.fun(), stack);
      NT a = to_nameless(t.arg(), stack);
      return {NT::App, 0, {}, {}, {std::move(f), std::move(a)}};
    }
  }
  return {};
}

inline NT to_nameless(const hol::Term& t) {
  std::vector<std::string> stack;
  return to_nameless(t, stack);
}

// Raise every bound index >= cutoff by `by`.
inline NT shift(const NT& t, std::size_t by, std::size_t cutoff) {
  switch (t.k) {
    case NT::Bound:
      return t.idx >= cutoff ? NT{NT::Bound, t.idx + by, {}, {}, {}} : t;
    case NT::Free:
    case NT::Cst:
      return t;
    case NT::Lam:
      return {NT::Lam, 0, {}, t.annot, {shift(t.kids[0], by, cutoff + 1)}};
    case NT::App:
      return {NT::App, 0, {}, {},
              {shift(t.kids[0], by, cutoff), shift(t.kids[1], by, cutoff)}};
  }
  return t;
}

// Substitute the free name x by u (closed w.r.t. the outer scope),
// shifting u under binders.
inline NT nsubst(const NT& t, const std::string& x, const NT& u,
                 std::size_t depth) {
  switch (t.k) {
    case NT::Bound:
    case NT::Cst:
      return t;
    case NT::Free:
      return t.name == x ? shift(u, depth, 0) : t;
    case NT::Lam:
      return {NT::Lam, 0, {}, t.annot, {nsubst(t.kids[0], x, u, depth + 1)}};
    case NT::App:
      return {NT::App, 0, {}, {},
              {nsubst(t.kids[0], x, u, depth),
               nsubst(t.kids[1], x, u, depth)}};
  }
  return t;
}

inline NT nsubst(const NT& t, const std::string& x, const NT& u) {
  return nsubst(t, x, u, 0);
}

}  // namespace holtest

#endif
