#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "hol/checker.hpp"
#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/lemmas.hpp"

using namespace hol;
using holtest::Gen;

namespace {
const Type I = Type::iota();
const Type O = Type::omicron();
const CheckSettings kIntu{Flavor::Intuitionistic, ExtFlags::none()};

Term uc(const std::string& name, Type ty) {
  return Term::constant(Constant::user(name, std::move(ty)));
}

void check_pure(const DerivPtr& d) {
  CHECK(check(d, kIntu).ok);
  CHECK(!d->uses_rule(RuleId::PEM));
  CHECK(!d->uses_rule(RuleId::EqI));
  CHECK(!d->uses_rule(RuleId::EqE));
  CHECK(!d->uses_rule(RuleId::FunExt));
  CHECK(!d->uses_rule(RuleId::PropExt));
}
}  // namespace

TEST_CASE("the fixed items 1 and 2") {
  DerivPtr d1 = dn_lemma(1, {}, {});
  CHECK(alpha_equal(d1->conclusion().goal, imp(neg(neg(falsity())), falsity())));
  check_pure(d1);
  DerivPtr d2 = dn_lemma(2, {}, {});
  CHECK(alpha_equal(d2->conclusion().goal, imp(neg(neg(truth())), truth())));
  check_pure(d2);
}

TEST_CASE("items 3, 4 and 10 on fixed arguments") {
  DerivPtr d4 = dn_lemma(4, {falsity()}, {});
  CHECK(alpha_equal(d4->conclusion().goal, imp(falsity(), neg(neg(falsity())))));
  check_pure(d4);

  DerivPtr d3 = dn_lemma(3, {truth()}, {});
  CHECK(alpha_equal(d3->conclusion().goal,
                    neg(neg(disj(truth(), neg(truth()))))));
  check_pure(d3);

  // Item 10 instantiated at \x:i. Q x needs Conv nodes for the redexes.
  Term q = uc("Q1", Type::arrow(I, O));
  Term pred = Term::lam("x", I, Term::app(q, Term::var("x", I)));
  DerivPtr d10 = dn_lemma(10, {pred}, {});
  check_pure(d10);
  CHECK(d10->uses_rule(RuleId::Conv));
  Term stated = iff(neg(exists_pred(pred)),
                    forall("x", I, neg(Term::app(q, Term::var("x", I)))));
  CHECK(alpha_beta_equiv(d10->conclusion().goal, stated));
}

TEST_CASE("lemmas build inside a nonempty context") {
  std::vector<Term> ctx{uc("H1", O), uc("H2", O)};
  Term a = uc("Q", O);
  for (int id : {3, 4, 5}) {
    DerivPtr d = dn_lemma(id, {a}, ctx);
    CHECK(context_alpha_equal(d->conclusion().context, ctx));
    check_pure(d);
  }
}

TEST_CASE("malformed arguments are rejected") {
  CHECK_THROWS_AS(dn_lemma(4, {}, {}), TypeError);
  CHECK_THROWS_AS(dn_lemma(4, {uc("c", I)}, {}), TypeError);
  CHECK_THROWS_AS(dn_lemma(9, {uc("Q", O)}, {}), TypeError);
  CHECK_THROWS_AS(dn_lemma(0, {}, {}), TypeError);
  CHECK_THROWS_AS(dn_lemma(11, {}, {}), TypeError);
}

TEST_CASE("property: all ten items over random arguments") {
  Gen gen(31);
  for (int round = 0; round < 40; ++round) {
    std::vector<Term> ctx;
    if (gen.coin()) ctx.push_back(gen.closed_formula(2));
    for (int id = 1; id <= 10; ++id) {
      std::vector<Term> args;
      if (id >= 3 && id <= 5) args = {gen.closed_formula(4)};
      if (id >= 6 && id <= 8)
        args = {gen.closed_formula(4), gen.closed_formula(4)};
      if (id >= 9) {
        Type at = gen.coin() ? I : O;
        std::string x = "x";
        Term body = gen.closed_formula(3);
        args = {Term::lam(x, at, body)};
        if (gen.coin())
          args = {gen.closed_term(Type::arrow(at, O), 2)};
      }
      DerivPtr d = dn_lemma(id, args, ctx);
      CHECK(context_alpha_equal(d->conclusion().context, ctx));
      CHECK(alpha_equal(d->conclusion().goal, dn_lemma_statement(id, args)));
      check_pure(d);
    }
  }
}

TEST_CASE("modus ponens: examples and error paths") {
  // (|- top => top, |- top) gives |- top.
  std::vector<Term> none;
  DerivPtr dimp = rules::imp_i(rules::assume({truth()}, kIntu));
  DerivPtr dtop = rules::top_i(none, kIntu);
  DerivPtr mp = modus_ponens(dimp, dtop);
  CHECK(alpha_equal(mp->conclusion().goal, truth()));
  CHECK(check(mp, kIntu).ok);

  // dn_lemma(4) against a hypothesis: [A] |- ~~A.
  Term a = uc("Q", O);
  DerivPtr fact = dn_lemma(4, {a}, {a});
  DerivPtr hyp = rules::ax({a}, 0, kIntu);
  DerivPtr dn = modus_ponens(fact, hyp);
  CHECK(alpha_equal(dn->conclusion().goal, neg(neg(a))));
  CHECK(check(dn, kIntu).ok);

  // Context mismatch and shape mismatch.
  DerivPtr other = rules::top_i({a}, kIntu);
  CHECK_THROWS_AS(modus_ponens(dimp, other), ContextMismatch);
  CHECK_THROWS_AS(modus_ponens(dtop, dtop), ShapeMismatch);
}

TEST_CASE("cut: examples and error paths") {
  DerivPtr lemma = rules::top_i({}, kIntu);
  DerivPtr use = rules::assume({truth()}, kIntu);
  DerivPtr d = cut(lemma, use);
  CHECK(alpha_equal(d->conclusion().goal, truth()));
  CHECK(d->conclusion().context.empty());
  CHECK(check(d, kIntu).ok);

  // Cutting item 5 into a use of its statement.
  Term a = uc("Q", O);
  Term stmt = dn_lemma_statement(5, {a});
  DerivPtr fact = dn_lemma(5, {a}, {});
  DerivPtr use5 = rules::and_el(rules::assume({stmt}, kIntu));
  DerivPtr d5 = cut(fact, use5);
  CHECK(alpha_equal(d5->conclusion().goal, imp(neg(neg(neg(a))), neg(a))));
  CHECK(check(d5, kIntu).ok);

  // The use must actually end with the lemma as its last hypothesis.
  DerivPtr wrong = rules::top_i({}, kIntu);
  CHECK_THROWS_AS(cut(lemma, wrong), ContextMismatch);
}

TEST_CASE("combinators preserve acceptance") {
  Gen gen(32);
  for (int i = 0; i < 100; ++i) {
    std::vector<Term> ctx{gen.closed_formula(2)};
    DerivPtr d = rules::ax(ctx, 0, kIntu);
    DerivPtr dn = double_neg_intro(d);
    CHECK(check(dn, kIntu).ok);
    CHECK(alpha_equal(dn->conclusion().goal, neg(neg(ctx[0]))));

    DerivPtr dne = double_neg_elim_classical(dn);
    CHECK(check(dne, {Flavor::Classical, ExtFlags::none()}).ok);
    CHECK(alpha_equal(dne->conclusion().goal, ctx[0]));
    CHECK(dne->uses_rule(RuleId::PEM));

    Term u = gen.closed_term(I, 2);
    Term v = u;
    CheckSettings eqmode{Flavor::Intuitionistic, ExtFlags::e()};
    DerivPtr sym = eq_symmetry(rules::eq_i(ctx, u, eqmode));
    CHECK(check(sym, eqmode).ok);
    CHECK(alpha_equal(sym->conclusion().goal, eq(v, u)));
  }
}

TEST_CASE("mp under double negation") {
  Term a = uc("Q", O);
  Term b = uc("R0", O);
  std::vector<Term> ctx{neg(neg(imp(a, b))), neg(neg(a))};
  DerivPtr dimp = rules::ax(ctx, 0, kIntu);
  DerivPtr darg = rules::ax(ctx, 1, kIntu);
  DerivPtr out = mp_under_double_neg(dimp, darg);
  CHECK(alpha_equal(out->conclusion().goal, neg(neg(b))));
  CHECK(check(out, kIntu).ok);
}
