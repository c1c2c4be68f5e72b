#include "hol/print.hpp"

#include <set>

#include "hol/kernel.hpp"
#include "hol/parse.hpp"

namespace hol {

namespace {

// Binding tightness levels, loosest first. Binders print at the lowest
// level and get parentheses in any tighter position.
constexpr int kBinder = 0;
constexpr int kImp = 1;
constexpr int kOr = 2;
constexpr int kAnd = 3;
constexpr int kNot = 4;
constexpr int kEq = 5;
constexpr int kApp = 6;
constexpr int kAtom = 7;

void collect_const_names(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return;
    case Term::Kind::Const:
      if (t.as_const().is(ConstKind::User)) out.insert(t.as_const().name());
      return;
    case Term::Kind::Lam:
      collect_const_names(t.body(), out);
      return;
    case Term::Kind::App:
      collect_const_names(t.fun(), out);
      collect_const_names(t.arg(), out);
      return;
  }
}

// A binder name is unprintable when it is reserved, a keyword, or would
// swallow a constant referenced in the body.
bool needs_rename(const std::string& binder, const Term& body) {
  if (is_reserved_name(binder) || is_keyword(binder)) return true;
  std::set<std::string> consts;
  collect_const_names(body, consts);
  return consts.count(binder) > 0;
}

std::pair<std::string, Term> printable_binding(const Term& lam) {
  if (!needs_rename(lam.binder(), lam.body()))
    return {lam.binder(), lam.body()};
  std::set<std::string> avoid = free_var_names(lam.body());
  collect_const_names(lam.body(), avoid);
  std::string fresh;
  for (int i = 1;; ++i) {
    fresh = "x" + std::to_string(i);
    if (!avoid.count(fresh)) break;
  }
  Term body = substitute(lam.body(), lam.binder(),
                         Term::var(fresh, lam.binder_type()));
  return {fresh, body};
}

std::string const_atom(const Constant& c) {
  switch (c.kind()) {
    case ConstKind::Top: return "top";
    case ConstKind::Bot: return "bot";
    case ConstKind::Not: return "not";
    case ConstKind::Imp: return "imp";
    case ConstKind::And: return "and";
    case ConstKind::Or: return "or";
    case ConstKind::Forall: return "forall[" + c.index().to_string() + "]";
    case ConstKind::Exists: return "exists[" + c.index().to_string() + "]";
    case ConstKind::Eq: return "eq[" + c.index().to_string() + "]";
    case ConstKind::User: return c.name();
  }
  return "?";
}

std::string print_at(const Term& t, int level);

std::string wrap(std::string s, int own, int level) {
  if (own < level) return "(" + std::move(s) + ")";
  return s;
}

std::string print_binder(const char* keyword, const Term& lam, int level) {
  auto [name, body] = printable_binding(lam);
  std::string s = std::string(keyword) + name + ":" +
                  print_type(lam.binder_type()) + ". " +
                  print_at(body, kBinder);
  return wrap(std::move(s), kBinder, level);
}

std::string print_at(const Term& t, int level) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_name();
    case Term::Kind::Const:
      return const_atom(t.as_const());
    case Term::Kind::Lam:
      return print_binder("\\", t, level);
    case Term::Kind::App: {
      if (auto body = match_not(t)) {
        // Parenthesize anything but a variable, constant or another
        // negation under ~, the way the formulas are usually written.
        int operand = match_not(*body) ? kNot : kAtom;
        return wrap("~" + print_at(*body, operand), kNot, level);
      }
      if (auto split = match_imp(t))
        return wrap(print_at(split->lhs, kImp + 1) + " => " +
                        print_at(split->rhs, kImp),
                    kImp, level);
      if (auto split = match_and(t))
        return wrap(print_at(split->lhs, kAnd) + " /\\ " +
                        print_at(split->rhs, kAnd + 1),
                    kAnd, level);
      if (auto split = match_or(t))
        return wrap(print_at(split->lhs, kOr) + " \\/ " +
                        print_at(split->rhs, kOr + 1),
                    kOr, level);
      if (auto split = match_eq(t))
        return wrap(print_at(split->lhs, kEq + 1) + " = " +
                        print_at(split->rhs, kEq + 1),
                    kEq, level);
      if (auto p = match_forall(t); p && p->is_lam())
        return print_binder("forall ", *p, level);
      if (auto p = match_exists(t); p && p->is_lam())
        return print_binder("exists ", *p, level);
      return wrap(print_at(t.fun(), kApp) + " " + print_at(t.arg(), kAtom),
                  kApp, level);
    }
  }
  return "?";
}

}  // namespace

std::string print_type(const Type& t) { return t.to_string(); }

std::string print_term(const Term& t) { return print_at(t, kBinder); }

}  // namespace hol
