#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/kuroda.hpp"

using namespace hol;
using holtest::Gen;

namespace {
const Type I = Type::iota();
const Type O = Type::omicron();

Term uc(const std::string& name, Type ty) {
  return Term::constant(Constant::user(name, std::move(ty)));
}

Term forall_replacement_expected(const Type& at) {
  Type pt = Type::arrow(at, O);
  Term p = Term::var("p", pt);
  Term x = Term::var("x", at);
  return Term::lam("p", pt,
                   forall("x", at, neg(neg(Term::app(p, x)))));
}
}  // namespace

TEST_CASE("kuroda_term on the base cases") {
  Term x = Term::var("x", I);
  CHECK(kuroda_term(x).same_node(x));
  Term c = uc("c", I);
  CHECK(kuroda_term(c).same_node(c));
  Term top = truth();
  CHECK(kuroda_term(top).same_node(top));
  // The universal quantifier becomes \p. forall x. ~~(p x).
  Term fa = Term::constant(Constant::forall(I));
  CHECK(alpha_equal(kuroda_term(fa), forall_replacement_expected(I)));
  CHECK(kuroda_term(fa).type() == fa.type());
  // The existential quantifier is untouched.
  Term ex = Term::constant(Constant::exists(I));
  CHECK(kuroda_term(ex).same_node(ex));
  Term eqc = Term::constant(Constant::equality(I));
  CHECK(kuroda_term(eqc).same_node(eqc));
}

TEST_CASE("kuroda_term is homomorphic and keeps redexes") {
  Term p = uc("P", Type::arrow(I, O));
  Term pabs = Term::lam("y", I, Term::app(p, Term::var("y", I)));
  Term applied = forall_pred(pabs);
  Term translated = kuroda_term(applied);
  // Still an application of the replaced constant, not normalized.
  CHECK(translated.is_app());
  CHECK(alpha_equal(translated.fun(), forall_replacement_expected(I)));
  CHECK(alpha_equal(translated.arg(), pabs));
  CHECK(has_beta_redex(translated));
  // Its normal form inserts the double negation under the quantifier.
  Term expected = forall("y", I, neg(neg(Term::app(p, Term::var("y", I)))));
  CHECK(alpha_equal(beta_normalize(translated), expected));
}

TEST_CASE("kuroda_formula wraps a double negation") {
  CHECK(alpha_equal(kuroda_formula(falsity()), neg(neg(falsity()))));
  Term p = uc("P", Type::arrow(I, O));
  Term ex = exists("x", I, Term::app(p, Term::var("x", I)));
  CHECK(alpha_equal(kuroda_formula(ex), neg(neg(ex))));
  Term fa = forall("x", I, Term::app(p, Term::var("x", I)));
  Term expected =
      neg(neg(forall("x", I, neg(neg(Term::app(p, Term::var("x", I)))))));
  CHECK(alpha_equal(kuroda_formula_normalized(fa), expected));
  CHECK_THROWS_AS(kuroda_formula(uc("c", I)), TypeError);
}

TEST_CASE("kuroda_context maps pointwise without the outer negation") {
  CHECK(kuroda_context({}).empty());
  std::vector<Term> single = kuroda_context({truth()});
  CHECK(single.size() == 1);
  CHECK(alpha_equal(single[0], truth()));
  Term p = uc("P", Type::arrow(I, O));
  Term fa = forall("x", I, Term::app(p, Term::var("x", I)));
  std::vector<Term> got = kuroda_context({fa});
  CHECK(alpha_equal(got[0], kuroda_term(fa)));
  CHECK(!alpha_equal(got[0], kuroda_formula(fa)));
}

TEST_CASE("kuroda() bundles inner and outer") {
  Term q = uc("Q", O);
  TranslationResult r = kuroda(q);
  CHECK(alpha_equal(r.inner, q));
  REQUIRE(r.outer.has_value());
  CHECK(alpha_equal(*r.outer, neg(neg(q))));
  TranslationResult rt = kuroda(uc("c", I));
  CHECK(!rt.outer.has_value());
}

TEST_CASE("property: translation preserves types") {
  Gen gen(21);
  for (int i = 0; i < 500; ++i) {
    Term t = gen.closed_term(gen.random_type(2), 5);
    CHECK(kuroda_term(t).type() == t.type());
  }
}

TEST_CASE("property: substitution commutes with translation") {
  Gen gen(22);
  for (int i = 0; i < 400; ++i) {
    Type vt = gen.random_type(1);
    Term t = gen.open_term(O, 4, "z", vt);
    Term w = gen.closed_term(vt, 3);
    Term lhs = kuroda_term(substitute(t, "z", w));
    Term rhs = substitute(kuroda_term(t), "z", kuroda_term(w));
    CHECK(alpha_equal(lhs, rhs));
    // Formula-level corollary.
    Term flhs = kuroda_formula(substitute(t, "z", w));
    Term frhs = substitute(kuroda_formula(t), "z", kuroda_term(w));
    CHECK(alpha_equal(flhs, frhs));
  }
}

TEST_CASE("property: beta steps survive translation") {
  Gen gen(23);
  int exercised = 0;
  for (int i = 0; i < 400 && exercised < 200; ++i) {
    Term t = gen.closed_formula(5);
    Term u = t;
    bool stepped = false;
    for (int s = 0; s < 3; ++s)
      if (auto next = gen.step(u)) {
        u = *next;
        stepped = true;
      }
    if (!stepped) continue;
    ++exercised;
    CHECK(alpha_beta_equiv(kuroda_term(t), kuroda_term(u)));
    CHECK(alpha_beta_equiv(kuroda_formula(t), kuroda_formula(u)));
  }
  CHECK(exercised >= 100);
}

// The first-order table, written independently: structural recursion on
// sugar-shaped formulas.
namespace {
Term fo_inner(const Term& a) {
  if (auto b = match_not(a)) return neg(fo_inner(*b));
  if (auto s = match_imp(a)) return imp(fo_inner(s->lhs), fo_inner(s->rhs));
  if (auto s = match_and(a)) return conj(fo_inner(s->lhs), fo_inner(s->rhs));
  if (auto s = match_or(a)) return disj(fo_inner(s->lhs), fo_inner(s->rhs));
  if (auto p = match_forall(a))
    return forall(p->binder(), p->binder_type(), neg(neg(fo_inner(p->body()))));
  if (auto p = match_exists(a))
    return exists(p->binder(), p->binder_type(), fo_inner(p->body()));
  return a;  // atomic
}

// First-order formulas: atoms over i, connectives, quantifiers over i.
Term fo_formula(Gen& gen, std::vector<std::string>& vars, int depth) {
  const Type I2 = Type::iota();
  const Type O2 = Type::omicron();
  if (depth <= 0 || gen.pick(4) == 0) {
    switch (gen.pick(vars.empty() ? 3 : 4)) {
      case 0: return truth();
      case 1: return falsity();
      case 2: {
        Term c = Term::constant(Constant::user("Q", O2));
        return c;
      }
      default: {
        Term p = Term::constant(Constant::user("P", Type::arrow(I2, O2)));
        return Term::app(p, Term::var(vars[gen.pick(vars.size())], I2));
      }
    }
  }
  switch (gen.pick(6)) {
    case 0: return neg(fo_formula(gen, vars, depth - 1));
    case 1:
      return imp(fo_formula(gen, vars, depth - 1),
                 fo_formula(gen, vars, depth - 1));
    case 2:
      return conj(fo_formula(gen, vars, depth - 1),
                  fo_formula(gen, vars, depth - 1));
    case 3:
      return disj(fo_formula(gen, vars, depth - 1),
                  fo_formula(gen, vars, depth - 1));
    default: {
      std::string x = "u" + std::to_string(vars.size());
      vars.push_back(x);
      Term body = fo_formula(gen, vars, depth - 1);
      vars.pop_back();
      return gen.coin() ? forall(x, I2, body) : exists(x, I2, body);
    }
  }
}
}  // namespace

TEST_CASE("first-order fragment agrees with the textbook table") {
  Gen gen(24);
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> vars;
    Term a = fo_formula(gen, vars, 4);
    Term expected = neg(neg(fo_inner(a)));
    CHECK(alpha_equal(beta_normalize(kuroda_formula(a)), expected));
  }
}
