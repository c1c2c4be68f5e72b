#include "hol/kuroda.hpp"

#include "hol/errors.hpp"
#include "hol/kernel.hpp"

namespace hol {

namespace {

// \p. forall(\x. ~~(p x)) at the quantified type; closed, so inserting it
// for the constant can never capture.
Term forall_replacement(const Type& index) {
  Type pt = Type::arrow(index, Type::omicron());
  Term p = Term::var("p", pt);
  Term x = Term::var("x", index);
  Term body = neg(neg(Term::app(p, x)));
  return Term::lam("p", pt,
                   Term::app(Term::constant(Constant::forall(index)),
                             Term::lam("x", index, std::move(body))));
}

}  // namespace

Term kuroda_term(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t;
    case Term::Kind::Const:
      if (t.as_const().is(ConstKind::Forall))
        return forall_replacement(t.as_const().index());
      return t;
    case Term::Kind::Lam: {
      Term body = kuroda_term(t.body());
      if (body.same_node(t.body())) return t;
      return Term::lam(t.binder(), t.binder_type(), std::move(body));
    }
    case Term::Kind::App: {
      Term f = kuroda_term(t.fun());
      Term a = kuroda_term(t.arg());
      if (f.same_node(t.fun()) && a.same_node(t.arg())) return t;
      return Term::app(std::move(f), std::move(a));
    }
  }
  return t;
}

Term kuroda_formula(const Term& a) {
  if (!is_formula(a))
    throw TypeError("Kuroda translation of a non-formula of type " +
                    a.type().to_string());
  return neg(neg(kuroda_term(a)));
}

std::vector<Term> kuroda_context(const std::vector<Term>& gamma) {
  std::vector<Term> out;
  out.reserve(gamma.size());
  for (const Term& f : gamma) {
    if (!is_formula(f))
      throw TypeError("context entry of type " + f.type().to_string());
    out.push_back(kuroda_term(f));
  }
  return out;
}

Term kuroda_formula_normalized(const Term& a) {
  return beta_normalize(kuroda_formula(a));
}

TranslationResult kuroda(const Term& t) {
  Term inner = kuroda_term(t);
  if (is_formula(t)) return {inner, neg(neg(inner))};
  return {std::move(inner), std::nullopt};
}

}  // namespace hol
