#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <atomic>
#include <thread>

#include "gen.hpp"
#include "hol/checker.hpp"
#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/kuroda.hpp"
#include "hol/lemmas.hpp"
#include "hol/transform.hpp"

using namespace hol;
using holtest::Gen;

namespace {
const Type I = Type::iota();
const Type O = Type::omicron();

Term uc(const std::string& name, Type ty) {
  return Term::constant(Constant::user(name, std::move(ty)));
}

// Conclusion must be the translated judgment, with any weak-funext prefix.
void check_translation_shape(const DerivPtr& input, const DerivPtr& output) {
  const Judgment& in = input->conclusion();
  const Judgment& out = output->conclusion();
  std::vector<Term> gku = kuroda_context(in.context);
  std::size_t np = out.context.size() - gku.size();
  CHECK((np > 0) == input->uses_rule(RuleId::FunExt));
  for (std::size_t i = 0; i < gku.size(); ++i)
    CHECK(alpha_equal(out.context[np + i], gku[i]));
  CHECK(alpha_equal(out.goal, kuroda_formula(in.goal)));
  CHECK(!output->uses_rule(RuleId::PEM));
}
}  // namespace

TEST_CASE("translating a lone PEM node") {
  Term a = uc("Q", O);
  DerivPtr d = rules::pem({}, a, {Flavor::Classical, ExtFlags::none()});
  DerivPtr t = soundness_translate(d);
  CHECK(check(t, {Flavor::Intuitionistic, ExtFlags::none()}).ok);
  check_translation_shape(d, t);
  CHECK(alpha_equal(t->conclusion().goal, neg(neg(disj(a, neg(a))))));
  // The output claims the right logic.
  CHECK(t->conclusion().flavor == Flavor::Intuitionistic);
  CHECK(t->conclusion().flags == ExtFlags::none());
  CHECK(check(t).ok);
}

TEST_CASE("outputs are tagged with the logic they claim") {
  DerivPtr lemma = dn_lemma(4, {uc("Q", O)}, {});
  CHECK(lemma->conclusion().flavor == Flavor::Intuitionistic);
  CHECK(lemma->conclusion().flags == ExtFlags::none());

  DerivPtr dns = dns_implies_weak_funext(I, O);
  CHECK(dns->conclusion().flavor == Flavor::Intuitionistic);
  CHECK(dns->conclusion().flags == ExtFlags::ef());

  DerivPtr dne = dne_eq_collapse(uc("Q", O));
  CHECK(dne->conclusion().flavor == Flavor::Intuitionistic);
  CHECK(dne->conclusion().flags == ExtFlags::ep());

  DerivPtr te = term_equality_derivation(truth());
  CHECK(te->conclusion().flavor == Flavor::Classical);
  CHECK(te->conclusion().flags == ExtFlags::efp());

  DerivPtr ch = characterization_derivation(truth());
  CHECK(ch->conclusion().flavor == Flavor::Classical);
  CHECK(ch->conclusion().flags == ExtFlags::efp());
  // Each checks under its own claim.
  for (const DerivPtr& d : {lemma, dns, dne, te, ch}) CHECK(check(d).ok);
}

TEST_CASE("translating an axiom node") {
  Term p = uc("P", Type::arrow(I, O));
  Term a = forall("x", I, Term::app(p, Term::var("x", I)));
  DerivPtr d = rules::ax({a}, 0, {Flavor::Classical, ExtFlags::none()});
  DerivPtr t = soundness_translate(d);
  CHECK(check(t, {Flavor::Intuitionistic, ExtFlags::none()}).ok);
  check_translation_shape(d, t);
  // Context carries the inner translation only.
  CHECK(alpha_equal(t->conclusion().context[0], kuroda_term(a)));
}

TEST_CASE("translating All-I over PEM") {
  Term p = uc("P", Type::arrow(I, O));
  Term px = Term::app(p, Term::var("x", I));
  DerivPtr split = rules::pem({}, px, {Flavor::Classical, ExtFlags::none()});
  Term pred = Term::lam("y", I,
                        disj(Term::app(p, Term::var("y", I)),
                             neg(Term::app(p, Term::var("y", I)))));
  DerivPtr at_x = rules::conv(split, Term::app(pred, Term::var("x", I)));
  DerivPtr d = rules::all_i(at_x, "x");
  REQUIRE(check(d, {Flavor::Classical, ExtFlags::none()}).ok);
  DerivPtr t = soundness_translate(d);
  CHECK(check(t, {Flavor::Intuitionistic, ExtFlags::none()}).ok);
  check_translation_shape(d, t);
  // All-I then double-negation introduction: the goal normalizes to ~~forall x. ~~(P x \/ ~(P x)).
  Term expected_shape = neg(neg(forall("x", I, neg(neg(disj(px, neg(px)))))));
  CHECK(alpha_beta_equiv(t->conclusion().goal, expected_shape));
}

TEST_CASE("an input that fails the checker is refused") {
  // PEM lies about its conclusion; the transformer must not touch it.
  Term q = uc("Q", O);
  DerivPtr bogus = Derivation::make(
      RuleId::PEM, {}, {},
      Judgment(Flavor::Classical, ExtFlags::none(), {}, q));
  CHECK_THROWS_AS(soundness_translate(bogus), InputDoesNotCheck);
  DerivPtr bogus_i = Derivation::make(
      RuleId::TopI, {}, {},
      Judgment(Flavor::Intuitionistic, ExtFlags::none(), {},
               kuroda_formula(falsity())));
  CHECK_THROWS_AS(reverse_translate({}, falsity(), bogus_i),
                  InputDoesNotCheck);
}

TEST_CASE("soundness over every flag set, fuzzed") {
  Gen gen(41);
  const ExtFlags flag_sets[] = {ExtFlags::none(), ExtFlags::e(),
                                ExtFlags::ep(), ExtFlags::ef(),
                                ExtFlags::efp()};
  for (const ExtFlags& flags : flag_sets) {
    for (int i = 0; i < 40; ++i) {
      Gen::DerivConfig cfg;
      cfg.flavor = Flavor::Classical;
      cfg.flags = flags;
      cfg.depth = 6;
      DerivPtr d = gen.random_derivation(cfg);
      REQUIRE(check(d, {Flavor::Classical, flags}).ok);
      DerivPtr t = soundness_translate(d);
      CHECK(check(t, {Flavor::Intuitionistic, flags}).ok);
      check_translation_shape(d, t);
    }
  }
}

TEST_CASE("funext at two arrow types yields two weak-funext hypotheses") {
  CheckSettings ef{Flavor::Classical, ExtFlags::ef()};
  auto funext_refl = [&](Type dom, Type cod, const char* cname) {
    Term f = uc(cname, Type::arrow(dom, cod));
    std::string x = fresh_name();
    Term xv = Term::var(x, dom);
    DerivPtr d = rules::eq_i({}, Term::app(f, xv), ef);
    return rules::funext(d, x);
  };
  DerivPtr left = funext_refl(I, I, "g1");
  DerivPtr right = funext_refl(I, O, "g2");
  DerivPtr d = rules::and_i(left, right);
  REQUIRE(check(d, ef).ok);
  DerivPtr t = soundness_translate(d);
  CHECK(check(t, {Flavor::Intuitionistic, ExtFlags::ef()}).ok);
  REQUIRE(t->conclusion().context.size() == 2);
  CHECK(alpha_equal(t->conclusion().context[0], WeakFunExt{I, I}.formula()));
  CHECK(alpha_equal(t->conclusion().context[1], WeakFunExt{I, O}.formula()));
  CHECK(alpha_equal(t->conclusion().goal,
                    kuroda_formula(d->conclusion().goal)));
  // Reverse translation discharges both hypotheses.
  DerivPtr back = reverse_translate({}, d->conclusion().goal, t);
  CHECK(check(back, {Flavor::Classical, ExtFlags::efp()}).ok);
  CHECK(alpha_equal(back->conclusion().goal, d->conclusion().goal));
}

TEST_CASE("the outer-context wrapper doubles every hypothesis") {
  Gen gen(42);
  for (int i = 0; i < 25; ++i) {
    Gen::DerivConfig cfg;
    cfg.flavor = Flavor::Classical;
    cfg.flags = ExtFlags::efp();
    cfg.depth = 4;
    DerivPtr d = gen.random_derivation(cfg);
    REQUIRE(check(d, {Flavor::Classical, cfg.flags}).ok);
    DerivPtr t = soundness_translate_outer(d);
    CHECK(check(t, {Flavor::Intuitionistic, cfg.flags}).ok);
    const Judgment& in = d->conclusion();
    const Judgment& out = t->conclusion();
    std::size_t np = out.context.size() - in.context.size();
    for (std::size_t k = 0; k < in.context.size(); ++k)
      CHECK(alpha_equal(out.context[np + k],
                        kuroda_formula(in.context[k])));
    CHECK(alpha_equal(out.goal, kuroda_formula(in.goal)));
  }
}

TEST_CASE("dns implies weak funext at every small type pair") {
  const Type types[] = {I, O, Type::arrow(I, O)};
  for (const Type& dom : types) {
    for (const Type& cod : types) {
      DerivPtr d = dns_implies_weak_funext(dom, cod);
      CHECK(check(d, {Flavor::Intuitionistic, ExtFlags::ef()}).ok);
      CHECK(d->uses_rule(RuleId::FunExt));
      CHECK(!d->uses_rule(RuleId::PEM));
      REQUIRE(d->conclusion().context.size() == 1);
      CHECK(alpha_equal(d->conclusion().context[0],
                        DnsInstance{dom}.formula()));
      CHECK(alpha_equal(d->conclusion().goal,
                        WeakFunExt{dom, cod}.formula()));
    }
  }
}

TEST_CASE("dne on equality collapses the double negation") {
  Gen gen(43);
  std::vector<Term> props{truth(), uc("Q", O)};
  for (int i = 0; i < 10; ++i) props.push_back(gen.closed_formula(3));
  for (const Term& p : props) {
    DerivPtr d = dne_eq_collapse(p);
    CHECK(check(d, {Flavor::Intuitionistic, ExtFlags::ep()}).ok);
    CHECK(!d->uses_rule(RuleId::PEM));
    CHECK(!d->uses_rule(RuleId::FunExt));
    REQUIRE(d->conclusion().context.size() == 1);
    CHECK(alpha_equal(d->conclusion().context[0],
                      DneEqInstance{O}.formula()));
    CHECK(alpha_equal(d->conclusion().goal, imp(neg(neg(p)), p)));
  }
  CHECK_THROWS_AS(dne_eq_collapse(uc("c", I)), TypeError);
}

TEST_CASE("term equality: constants, the quantifier, applications") {
  CheckSettings efp{Flavor::Classical, ExtFlags::efp()};
  // Plain constant: one Eq-I node.
  Term c = uc("c", I);
  DerivPtr dc = term_equality_derivation(c);
  CHECK(check(dc, efp).ok);
  CHECK(dc->rule() == RuleId::EqI);
  CHECK(alpha_equal(dc->conclusion().goal, eq(c, c)));

  // The universal quantifier: the interesting case, ends in FunExt.
  Term fa = Term::constant(Constant::forall(I));
  DerivPtr dfa = term_equality_derivation(fa);
  CHECK(check(dfa, efp).ok);
  CHECK(dfa->rule() == RuleId::FunExt);
  CHECK(alpha_equal(dfa->conclusion().goal, eq(kuroda_term(fa), fa)));

  // An applied quantifier chains Eq-E.
  Term p = uc("P", Type::arrow(I, O));
  Term applied = forall("x", I, Term::app(p, Term::var("x", I)));
  DerivPtr dap = term_equality_derivation(applied);
  CHECK(check(dap, efp).ok);
  CHECK(dap->uses_rule(RuleId::EqE));
  CHECK(alpha_equal(dap->conclusion().goal, eq(kuroda_term(applied), applied)));

  CHECK_THROWS_AS(term_equality_derivation(Term::var("x", I)), TypeError);
}

TEST_CASE("property: term equality on random closed terms") {
  Gen gen(44);
  CheckSettings efp{Flavor::Classical, ExtFlags::efp()};
  for (int i = 0; i < 60; ++i) {
    Term t = gen.closed_term(gen.coin() ? O : gen.random_type(2), 4);
    DerivPtr d = term_equality_derivation(t);
    CHECK(check(d, efp).ok);
    CHECK(alpha_equal(d->conclusion().goal, eq(kuroda_term(t), t)));
  }
}

TEST_CASE("characterization on the named examples") {
  CheckSettings efp{Flavor::Classical, ExtFlags::efp()};
  Term p = uc("P", Type::arrow(I, O));
  std::vector<Term> cases{
      truth(),
      forall("x", I, Term::app(p, Term::var("x", I))),
      exists("x", I, Term::app(p, Term::var("x", I))),
  };
  for (const Term& a : cases) {
    DerivPtr d = characterization_derivation(a);
    CHECK(check(d, efp).ok);
    CHECK(d->conclusion().context.empty());
    CHECK(alpha_equal(d->conclusion().goal,
                      iff(kuroda_formula(a), a)));
  }
}

TEST_CASE("property: characterization on random closed formulas") {
  Gen gen(45);
  CheckSettings efp{Flavor::Classical, ExtFlags::efp()};
  for (int i = 0; i < 40; ++i) {
    Term a = gen.closed_formula(4);
    DerivPtr d = characterization_derivation(a);
    CHECK(check(d, efp).ok);
    CHECK(alpha_equal(d->conclusion().goal, iff(kuroda_formula(a), a)));
  }
}

TEST_CASE("characterization via the oracle interface") {
  KurodaEquivOracle refuse = [](const Term&) { return std::nullopt; };
  // Constants need no oracle.
  DerivPtr d1 = characterization_from_oracle(falsity(), refuse);
  CHECK(check(d1, {Flavor::Classical, ExtFlags::none()}).ok);
  CHECK(alpha_equal(d1->conclusion().goal,
                    iff(kuroda_formula(falsity()), falsity())));

  // (\x. Q x) c normalizes to the atom Q c; the oracle supplies its
  // Kuroda-equivalence (here trivial, as Q c contains no quantifier).
  Term q = uc("Q1", Type::arrow(I, O));
  Term c = uc("c", I);
  Term a = Term::app(Term::lam("x", I, Term::app(q, Term::var("x", I))), c);
  KurodaEquivOracle supply = [&](const Term& atom) -> std::optional<DerivPtr> {
    return iff_refl({}, atom, {Flavor::Classical, ExtFlags::none()});
  };
  DerivPtr d2 = characterization_from_oracle(a, supply);
  CHECK(check(d2, {Flavor::Classical, ExtFlags::none()}).ok);
  CHECK(d2->uses_rule(RuleId::Conv));
  CHECK(alpha_equal(d2->conclusion().goal, iff(kuroda_formula(a), a)));

  // A genuinely opaque head with a refusing oracle.
  Term r = uc("R1", Type::arrow(O, O));
  Term hard = Term::app(r, forall("x", I, Term::app(q, Term::var("x", I))));
  CHECK_THROWS_AS(characterization_from_oracle(hard, refuse), OracleRefused);

  // Oracle output that does not check is rejected.
  KurodaEquivOracle liar = [&](const Term&) -> std::optional<DerivPtr> {
    return Derivation::make(
        RuleId::TopI, {}, {},
        Judgment(Flavor::Classical, ExtFlags::none(), {},
                 iff(kuroda_term(beta_normalize(hard)),
                     beta_normalize(hard))));
  };
  CHECK_THROWS_AS(characterization_from_oracle(hard, liar),
                  OracleOutputInvalid);
}

TEST_CASE("reverse translation of the trivial judgment") {
  DerivPtr di = double_neg_intro(
      rules::top_i({}, {Flavor::Intuitionistic, ExtFlags::none()}));
  DerivPtr d = reverse_translate({}, truth(), di);
  CHECK(check(d, {Flavor::Classical, ExtFlags::efp()}).ok);
  CHECK(d->conclusion().context.empty());
  CHECK(alpha_equal(d->conclusion().goal, truth()));

  CHECK_THROWS_AS(reverse_translate({}, falsity(), di), ConclusionMismatch);
}

TEST_CASE("property: reverse round-trip over fuzzed classical proofs") {
  Gen gen(46);
  const ExtFlags flag_sets[] = {ExtFlags::none(), ExtFlags::e(),
                                ExtFlags::efp()};
  for (const ExtFlags& flags : flag_sets) {
    for (int i = 0; i < 12; ++i) {
      Gen::DerivConfig cfg;
      cfg.flavor = Flavor::Classical;
      cfg.flags = flags;
      cfg.depth = 5;
      DerivPtr d = gen.random_derivation(cfg);
      REQUIRE(check(d, {Flavor::Classical, flags}).ok);
      DerivPtr t = soundness_translate(d);
      DerivPtr back = reverse_translate(d->conclusion().context,
                                        d->conclusion().goal, t);
      CHECK(check(back, {Flavor::Classical, ExtFlags::efp()}).ok);
      CHECK(context_alpha_equal(back->conclusion().context,
                                d->conclusion().context));
      CHECK(alpha_equal(back->conclusion().goal, d->conclusion().goal));
    }
  }
}

TEST_CASE("transformers are safe to run concurrently") {
  // Shared inputs, parallel translation and checking; the fresh-name
  // counter is the only shared state.
  Gen gen(47);
  std::vector<DerivPtr> inputs;
  for (int i = 0; i < 8; ++i) {
    Gen::DerivConfig cfg;
    cfg.flavor = Flavor::Classical;
    cfg.flags = ExtFlags::efp();
    cfg.depth = 5;
    inputs.push_back(gen.random_derivation(cfg));
  }
  std::atomic<int> ok{0};
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < inputs.size(); i += 4) {
        DerivPtr t = soundness_translate(inputs[i]);
        if (check(t, {Flavor::Intuitionistic, ExtFlags::efp()}).ok)
          ok.fetch_add(1);
      }
    });
  }
  for (auto& th : workers) th.join();
  CHECK(ok.load() == static_cast<int>(inputs.size()));
}

TEST_CASE("the reverse counter-example witness") {
  ReverseCounterexample ce = reverse_counterexample();
  CHECK(check(ce.derivation,
              {Flavor::Intuitionistic, ExtFlags::none()}).ok);
  // Conclusion matches the translated judgment.
  CHECK(context_alpha_equal(ce.derivation->conclusion().context,
                            kuroda_context(ce.gamma)));
  CHECK(alpha_equal(ce.derivation->conclusion().goal,
                    kuroda_formula(ce.goal)));
  // The displayed beta-normal forms from the construction.
  Term p = uc("P", Type::arrow(I, O));
  Term p2 = uc("P'", Type::arrow(I, O));
  Term r = uc("R", Type::arrow(O, Type::arrow(O, O)));
  Term dn_p = forall("x", I, neg(neg(Term::app(p, Term::var("x", I)))));
  Term dn_p2 = forall("x", I, neg(neg(Term::app(p2, Term::var("x", I)))));
  Term displayed = neg(neg(Term::app(Term::app(r, dn_p), dn_p2)));
  CHECK(alpha_beta_equiv(ce.derivation->conclusion().goal, displayed));
  CHECK(!ce.note.empty());
}

TEST_CASE("the characterization counter-example statement") {
  CharacterizationCounterexample ce = characterization_counterexample();
  CHECK(ce.predicate.type() == Type::arrow(O, O));
  REQUIRE(ce.formula.is_app());
  CHECK(ce.formula.fun().same_node(ce.predicate));
  CHECK(alpha_equal(ce.translation, kuroda_formula(ce.formula)));
  // The translation dives under P: ~~(P A_Ku).
  Term inner = *match_not(*match_not(ce.translation));
  CHECK(inner.is_app());
  CHECK(alpha_equal(inner.arg(), kuroda_term(ce.formula.arg())));
  CHECK(ce.note.find("intensional") != std::string::npos);
}
