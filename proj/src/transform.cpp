#include "hol/transform.hpp"

#include "hol/checker.hpp"
#include "hol/errors.hpp"
#include "hol/kernel.hpp"
#include "hol/kuroda.hpp"
#include "hol/lemmas.hpp"

namespace hol {

using rules::Context;
using namespace rules;

namespace {

Context push(Context ctx, Term f) {
  ctx.push_back(std::move(f));
  return ctx;
}

Term not_body(const Term& t) {
  auto b = match_not(t);
  if (!b) throw ShapeMismatch("expected a negation");
  return *b;
}

}  // namespace

Term WeakFunExt::formula() const {
  Type ft = Type::arrow(domain, codomain);
  Term f = Term::var("f", ft);
  Term g = Term::var("g", ft);
  Term x = Term::var("x", domain);
  Term ante =
      forall("x", domain, neg(neg(eq(Term::app(f, x), Term::app(g, x)))));
  Term body = imp(std::move(ante), neg(neg(eq(f, g))));
  return forall("f", ft, forall("g", ft, std::move(body)));
}

Term DnsInstance::formula() const {
  Type pt = Type::arrow(domain, Type::omicron());
  Term p = Term::var("p", pt);
  Term x = Term::var("x", domain);
  Term ante = forall("x", domain, neg(neg(Term::app(p, x))));
  Term cons = neg(neg(forall("x", domain, Term::app(p, x))));
  return forall("p", pt, imp(std::move(ante), std::move(cons)));
}

Term DneEqInstance::formula() const {
  Term x = Term::var("x", at);
  Term y = Term::var("y", at);
  Term body = imp(neg(neg(eq(x, y))), eq(x, y));
  return forall("x", at, forall("y", at, std::move(body)));
}

std::vector<WeakFunExt> funext_instances(const DerivPtr& d) {
  std::vector<WeakFunExt> out;
  auto walk = [&](auto&& self, const DerivPtr& node) -> void {
    if (node->rule() == RuleId::FunExt) {
      if (auto split = match_eq(node->conclusion().goal)) {
        const Type& ft = split->lhs.type();
        if (ft.is_arrow()) {
          bool seen = false;
          for (const WeakFunExt& w : out)
            if (Type::arrow(w.domain, w.codomain) == ft) seen = true;
          if (!seen) out.push_back({ft.domain(), ft.codomain()});
        }
      }
    }
    for (const DerivPtr& p : node->premises()) self(self, p);
  };
  walk(walk, d);
  return out;
}

// ---------------------------------------------------------------------
// Soundness translation
// ---------------------------------------------------------------------

namespace {

// From G |- A => ~~B derive G |- ~~(A => B). This is the implication
// introduction case: the naive Imp-I only yields A_Ku => ~~B_Ku.
DerivPtr imp_intro_under_dn(DerivPtr d) {
  const Judgment& c = d->conclusion();
  auto split = match_imp(c.goal);
  if (!split) throw ShapeMismatch("expected A => ~~B");
  const Term a = split->lhs;
  const Term b = not_body(not_body(split->rhs));
  Term f = imp(a, b);
  CheckSettings m = c.settings();
  std::size_t n = c.context.size();
  Context c2 = push(c.context, neg(f));
  // c2 |- ~B: a proof of B would give A => B.
  Context c3 = push(c2, b);
  Context c4 = push(c3, a);
  DerivPtr f_const = imp_i(ax(c4, n + 1, m));
  DerivPtr dn_b = not_i(not_e(ax(c3, n, m), f_const));
  // c2 |- ~~A: from ~A we would get A => B by explosion.
  Context c5 = push(c2, neg(a));
  Context c6 = push(c5, a);
  DerivPtr boom = not_e(ax(c6, n + 1, m), ax(c6, n + 2, m));
  DerivPtr f_explode = imp_i(bot_e(boom, b));
  DerivPtr dnn_a = not_i(not_e(ax(c5, n, m), f_explode));
  // c2 |- ~A: an A would give ~~B against ~B.
  Context c7 = push(c2, a);
  DerivPtr d7 = append_hyps(append_hyps(d, {neg(f)}), {a});
  DerivPtr dnn_b7 = imp_e(d7, ax(c7, n + 1, m));
  DerivPtr dn_b7 = append_hyps(dn_b, {a});
  DerivPtr dn_a = not_i(not_e(dnn_b7, dn_b7));
  return not_i(not_e(dnn_a, dn_a));
}

struct Translator {
  std::vector<WeakFunExt> instances;
  std::vector<Term> prefix;
  CheckSettings mode;

  Context tctx(const std::vector<Term>& gamma) const {
    Context out = prefix;
    for (const Term& f : gamma) out.push_back(kuroda_term(f));
    return out;
  }

  DerivPtr translate(const DerivPtr& d) const {
    const Judgment& c = d->conclusion();
    Context ctx = tctx(c.context);
    Term goal_ku = kuroda_term(c.goal);
    const CheckSettings& m = mode;
    auto ih = [&](std::size_t i) { return translate(d->premises()[i]); };

    switch (d->rule()) {
      case RuleId::Ax:
        return double_neg_intro(
            ax(ctx, *d->inst().index + prefix.size(), m));
      case RuleId::TopI:
        return double_neg_intro(top_i(ctx, m));
      case RuleId::PEM: {
        auto split = match_or(c.goal);
        return dn_lemma(3, {kuroda_term(split->lhs)}, ctx);
      }
      case RuleId::BotE: {
        DerivPtr bot = modus_ponens(dn_lemma(1, {}, ctx), ih(0));
        return bot_e(bot, neg(neg(goal_ku)));
      }
      case RuleId::ImpI:
        return imp_intro_under_dn(imp_i(ih(0)));
      case RuleId::ImpE:
        return mp_under_double_neg(ih(0), ih(1));
      case RuleId::AndI: {
        auto split = match_and(c.goal);
        DerivPtr fact =
            dn_lemma(7, {kuroda_term(split->lhs), kuroda_term(split->rhs)}, ctx);
        return modus_ponens(and_er(fact), and_i(ih(0), ih(1)));
      }
      case RuleId::AndEL:
      case RuleId::AndER: {
        auto split = match_and(d->premises()[0]->conclusion().goal);
        DerivPtr fact =
            dn_lemma(7, {kuroda_term(split->lhs), kuroda_term(split->rhs)}, ctx);
        DerivPtr both = modus_ponens(and_el(fact), ih(0));
        return d->rule() == RuleId::AndEL ? and_el(both) : and_er(both);
      }
      case RuleId::OrIL:
      case RuleId::OrIR: {
        auto split = match_or(c.goal);
        Term a = kuroda_term(split->lhs);
        Term b = kuroda_term(split->rhs);
        Term dd = disj(a, b);
        std::size_t n = ctx.size();
        Context c1 = push(ctx, neg(dd));
        DerivPtr fact = dn_lemma(8, {a, b}, c1);
        DerivPtr pair = modus_ponens(and_el(fact), ax(c1, n, m));
        bool left = d->rule() == RuleId::OrIL;
        DerivPtr dn_shown = left ? and_el(pair) : and_er(pair);
        DerivPtr lifted = append_hyps(ih(0), {neg(dd)});
        return not_i(not_e(lifted, dn_shown));
      }
      case RuleId::OrE: {
        auto split = match_or(d->premises()[0]->conclusion().goal);
        Term a = kuroda_term(split->lhs);
        Term b = kuroda_term(split->rhs);
        Term dd = disj(a, b);
        Term goal_dn = neg(goal_ku);
        std::size_t n = ctx.size();
        Context c1 = push(ctx, goal_dn);
        auto branch = [&](const Term& hyp, DerivPtr ihb) {
          Context c2 = push(c1, hyp);
          DerivPtr lifted = insert_hyps(ihb, n, {goal_dn});
          return not_i(not_e(lifted, ax(c2, n, m)));
        };
        DerivPtr dn_a = branch(a, ih(1));
        DerivPtr dn_b = branch(b, ih(2));
        DerivPtr pair = and_i(dn_a, dn_b);
        Term np = conj(neg(a), neg(b));
        Context c3 = push(c1, np);
        DerivPtr fact = dn_lemma(8, {a, b}, c3);
        DerivPtr not_dd = modus_ponens(and_er(fact), ax(c3, n + 1, m));
        DerivPtr dd_dn =
            append_hyps(append_hyps(ih(0), {goal_dn}), {np});
        DerivPtr not_pair = not_i(not_e(dd_dn, not_dd));
        return not_i(not_e(not_pair, pair));
      }
      case RuleId::NotI: {
        Term hyp_ku =
            kuroda_term(d->premises()[0]->conclusion().context.back());
        DerivPtr bot = modus_ponens(dn_lemma(1, {}, push(ctx, hyp_ku)), ih(0));
        return double_neg_intro(not_i(bot));
      }
      case RuleId::NotE: {
        Term a =
            kuroda_term(*match_not(d->premises()[0]->conclusion().goal));
        DerivPtr fact = dn_lemma(5, {a}, ctx);
        DerivPtr dn_a = modus_ponens(and_el(fact), ih(0));
        return double_neg_intro(not_e(ih(1), dn_a));
      }
      case RuleId::Conv:
        return conv(ih(0), neg(neg(goal_ku)));
      case RuleId::AllI: {
        const Eigen& x = *d->inst().eigen;
        Term xv = Term::var(x.name, x.type);
        Term pred_ku =
            kuroda_term(d->premises()[0]->conclusion().goal.fun());
        Term q = dn_instance_pred(pred_ku);
        DerivPtr at_x = conv(ih(0), Term::app(q, xv));
        DerivPtr all = all_i(at_x, x.name);
        return conv(double_neg_intro(all), neg(neg(goal_ku)));
      }
      case RuleId::AllE: {
        Term pred_ku = kuroda_term(*d->inst().pred);
        Term arg_ku = kuroda_term(*d->inst().arg);
        Term q = dn_instance_pred(pred_ku);
        DerivPtr s1 = conv(ih(0), neg(neg(forall_pred(q))));
        DerivPtr s2 = modus_ponens(dn_lemma(9, {q}, ctx), s1);
        DerivPtr s3 = all_e(s2, dn_instance_pred(q), arg_ku);
        Term app = Term::app(pred_ku, arg_ku);
        DerivPtr s4 = conv(s3, neg(neg(neg(neg(app)))));
        DerivPtr fact = dn_lemma(5, {neg(app)}, ctx);
        return modus_ponens(and_el(fact), s4);
      }
      case RuleId::ExI: {
        Term pred_ku = kuroda_term(*d->inst().pred);
        Term arg_ku = kuroda_term(*d->inst().arg);
        Term r = neg_instance_pred(pred_ku);
        Term fa = forall_pred(r);
        std::size_t n = ctx.size();
        Context cd = push(ctx, fa);
        DerivPtr s1 = all_e(ax(cd, n, m), r, arg_ku);
        DerivPtr s2 = conv(s1, neg(Term::app(pred_ku, arg_ku)));
        DerivPtr not_fa = not_i(not_e(append_hyps(ih(0), {fa}), s2));
        Term ex = exists_pred(pred_ku);
        Context c2 = push(ctx, neg(ex));
        DerivPtr fact = dn_lemma(10, {pred_ku}, c2);
        DerivPtr d_fa = modus_ponens(and_el(fact), ax(c2, n, m));
        return not_i(not_e(append_hyps(not_fa, {neg(ex)}), d_fa));
      }
      case RuleId::ExE: {
        const Eigen& x = *d->inst().eigen;
        Term xv = Term::var(x.name, x.type);
        Term pred_ku =
            kuroda_term(*match_exists(d->premises()[0]->conclusion().goal));
        Term r = neg_instance_pred(pred_ku);
        Term fa = forall_pred(r);
        Term goal_dn = neg(goal_ku);
        std::size_t n = ctx.size();
        Context c1 = push(ctx, goal_dn);
        // c1 |- ~~forall x. ~(P x), generalizing the minor premise.
        Context c2 = push(c1, Term::app(pred_ku, xv));
        DerivPtr minor = insert_hyps(ih(1), n, {goal_dn});
        DerivPtr not_px = not_i(not_e(minor, ax(c2, n, m)));
        DerivPtr all = all_i(conv(not_px, Term::app(r, xv)), x.name);
        DerivPtr dnn_fa = double_neg_intro(all);
        // c1 |- ~forall x. ~(P x), from the major premise via item 10.
        Context c3 = push(c1, fa);
        DerivPtr fact = dn_lemma(10, {pred_ku}, c3);
        DerivPtr not_ex = modus_ponens(and_er(fact), ax(c3, n + 1, m));
        DerivPtr major =
            append_hyps(append_hyps(ih(0), {goal_dn}), {fa});
        DerivPtr not_fa = not_i(not_e(major, not_ex));
        return not_i(not_e(dnn_fa, not_fa));
      }
      case RuleId::EqI: {
        auto split = match_eq(c.goal);
        return double_neg_intro(eq_i(ctx, kuroda_term(split->lhs), m));
      }
      case RuleId::EqE: {
        Term motive_ku = kuroda_term(*d->inst().pred);
        auto split =
            match_eq(d->premises()[1]->conclusion().goal);
        Term u_ku = kuroda_term(split->lhs);
        Term v_ku = kuroda_term(split->rhs);
        Term pu = Term::app(motive_ku, u_ku);
        Term uv = eq(u_ku, v_ku);
        std::size_t n = ctx.size();
        Context c1 = push(ctx, pu);
        Context c2 = push(c1, uv);
        DerivPtr inner =
            eq_e(ax(c2, n, m), ax(c2, n + 1, m), motive_ku);
        DerivPtr chain = double_neg_intro(imp_i(imp_i(inner)));
        return mp_under_double_neg(mp_under_double_neg(chain, ih(0)), ih(1));
      }
      case RuleId::PropExt: {
        auto split = match_eq(c.goal);
        Term a = kuroda_term(split->lhs);
        Term b = kuroda_term(split->rhs);
        Context c1 = push(ctx, iff(a, b));
        DerivPtr step = imp_i(propext(assume(c1, m)));
        return mp_under_double_neg(double_neg_intro(step), ih(0));
      }
      case RuleId::FunExt: {
        const Eigen& x = *d->inst().eigen;
        Term xv = Term::var(x.name, x.type);
        auto split = match_eq(c.goal);
        Term f_ku = kuroda_term(split->lhs);
        Term g_ku = kuroda_term(split->rhs);
        const Type& ft = split->lhs.type();
        // forall x. ~~(f x = g x), generalizing the premise.
        std::string zb = fresh_name();
        Term zv = Term::var(zb, x.type);
        Term wpred = Term::lam(
            zb, x.type, neg(neg(eq(Term::app(f_ku, zv), Term::app(g_ku, zv)))));
        DerivPtr all = all_i(conv(ih(0), Term::app(wpred, xv)), x.name);
        // The weak funext hypothesis at this arrow type.
        std::size_t k = prefix.size();
        for (std::size_t j = 0; j < instances.size(); ++j)
          if (Type::arrow(instances[j].domain, instances[j].codomain) == ft)
            k = j;
        if (k == prefix.size())
          throw ProofError("missing weak funext hypothesis");
        DerivPtr hyp = ax(ctx, k, m);
        Term p1 = *match_forall(prefix[k]);
        Term inner1 = substitute(p1.body(), p1.binder(), f_ku);
        DerivPtr s1 = conv(all_e(hyp, p1, f_ku), inner1);
        Term p2 = *match_forall(inner1);
        Term inner2 = substitute(p2.body(), p2.binder(), g_ku);
        DerivPtr s2 = conv(all_e(s1, p2, g_ku), inner2);
        return modus_ponens(s2, all);
      }
    }
    throw ProofError("unknown rule in soundness translation");
  }
};

}  // namespace

DerivPtr soundness_translate(const DerivPtr& d) {
  const Judgment& root = d->conclusion();
  CheckSettings in{Flavor::Classical, root.flags};
  if (CheckResult r = check(d, in); !r) throw InputDoesNotCheck(r.describe());
  Translator tr;
  tr.instances = funext_instances(d);
  for (const WeakFunExt& w : tr.instances)
    tr.prefix.push_back(w.formula());
  tr.mode = {Flavor::Intuitionistic, root.flags};
  DerivPtr out = tr.translate(d);
  return retag(out, Flavor::Intuitionistic, root.flags);
}

namespace {

// Given d : G1, G, G2 |- ~X, produce G1, ~~G, G2 |- ~X; the doubly
// negated hypothesis suffices because the goal is itself a negation.
DerivPtr dn_hypothesis(const DerivPtr& d, std::size_t pos) {
  const Judgment& c = d->conclusion();
  Term x = not_body(c.goal);
  Term g = c.context[pos];
  CheckSettings m = c.settings();
  std::size_t k = c.context.size();
  std::vector<std::size_t> perm(k);
  for (std::size_t i = 0; i < k; ++i)
    perm[i] = i < pos ? i : (i == pos ? k - 1 : i - 1);
  DerivPtr moved = permute_front(d, perm);           // G1, G2, G |- ~X
  DerivPtr with_dn = insert_hyps(moved, pos, {neg(neg(g))});
  DerivPtr with_x = insert_hyps(with_dn, k, {x});    // G1,~~G,G2,X,G |- ~X
  const Context& c2 = with_x->conclusion().context;
  DerivPtr bot2 = not_e(with_x, ax(c2, k, m));
  DerivPtr not_g = not_i(bot2);                      // G1,~~G,G2,X |- ~G
  const Context& c1 = not_g->conclusion().context;
  DerivPtr bot1 = not_e(ax(c1, pos, m), not_g);
  return not_i(bot1);                                // G1,~~G,G2 |- ~X
}

}  // namespace

DerivPtr soundness_translate_outer(const DerivPtr& d) {
  DerivPtr t = soundness_translate(d);
  std::size_t np =
      t->conclusion().context.size() - d->conclusion().context.size();
  DerivPtr cur = t;
  for (std::size_t i = np; i < t->conclusion().context.size(); ++i)
    cur = dn_hypothesis(cur, i);
  return cur;
}

// ---------------------------------------------------------------------
// Extensionality auxiliaries
// ---------------------------------------------------------------------

DerivPtr dns_implies_weak_funext(Type domain, Type codomain) {
  const CheckSettings m{Flavor::Intuitionistic, ExtFlags::ef()};
  Type ft = Type::arrow(domain, codomain);
  Term dns = DnsInstance{domain}.formula();
  Term delta = WeakFunExt{domain, codomain}.formula();
  Context base = {dns};

  Term p1 = *match_forall(delta);
  Term fv = fresh_var(ft);
  Term inner1 = substitute(p1.body(), p1.binder(), fv);
  Term p2 = *match_forall(inner1);
  Term gv = fresh_var(ft);
  Term inner2 = substitute(p2.body(), p2.binder(), gv);
  auto split = match_imp(inner2);
  Context c1 = push(base, split->lhs);  // DNS at 0, hypothesis at 1

  // Instantiate DNS at \x. f x = g x.
  std::string xb = fresh_name();
  Term xv = Term::var(xb, domain);
  Term e = Term::lam(xb, domain, eq(Term::app(fv, xv), Term::app(gv, xv)));
  Term p_dns = *match_forall(dns);
  Term shifted =
      imp(forall_pred(dn_instance_pred(e)), neg(neg(forall_pred(e))));
  DerivPtr s1 = conv(all_e(ax(c1, 0, m), p_dns, e), shifted);
  // The hypothesis is alpha-convertible to the instantiated antecedent
  // only up to beta, so route it through Conv.
  DerivPtr hyp = conv(ax(c1, 1, m), forall_pred(dn_instance_pred(e)));
  DerivPtr s2 = modus_ponens(s1, hyp);  // c1 |- ~~forall x. f x = g x

  // (forall x. f x = g x) => f = g, by FunExt.
  Term all_eq = forall_pred(e);
  Context c2 = push(c1, all_eq);
  std::string y = fresh_name();
  Term yv = Term::var(y, domain);
  DerivPtr at_y = conv(all_e(ax(c2, 2, m), e, yv),
                       eq(Term::app(fv, yv), Term::app(gv, yv)));
  DerivPtr fe = imp_i(funext(at_y, y));
  DerivPtr s3 = mp_under_double_neg(double_neg_intro(fe), s2);

  DerivPtr s4 = imp_i(s3);  // base |- antecedent => ~~(f = g)
  DerivPtr s5 = all_i(conv(s4, Term::app(p2, gv)), gv.var_name());
  DerivPtr s6 = all_i(conv(s5, Term::app(p1, fv)), fv.var_name());
  return retag(s6, Flavor::Intuitionistic, ExtFlags::ef());
}

DerivPtr dne_eq_collapse(const Term& p) {
  if (!is_formula(p))
    throw TypeError("double-negation collapse needs a proposition, got " +
                    p.type().to_string());
  const CheckSettings m{Flavor::Intuitionistic, ExtFlags::ep()};
  Term dne = DneEqInstance{Type::omicron()}.formula();
  Context c = {dne};
  Context c1 = push(c, neg(neg(p)));  // DNE at 0, ~~p at 1

  // c1 |- ~~(p = top), lifting p => (p = top) by PropExt.
  Context c2 = push(c1, p);
  DerivPtr fwd = imp_i(top_i(push(c2, p), m));
  DerivPtr bwd = imp_i(ax(push(c2, truth()), 2, m));
  DerivPtr to_eq = imp_i(propext(and_i(fwd, bwd)));  // c1 |- p => (p = top)
  DerivPtr dnn_eq =
      mp_under_double_neg(double_neg_intro(to_eq), ax(c1, 1, m));

  // Instantiate the assumption at (p, top).
  Term p_dne = *match_forall(dne);
  Term inner1 = substitute(p_dne.body(), p_dne.binder(), p);
  DerivPtr s1 = conv(all_e(ax(c1, 0, m), p_dne, p), inner1);
  Term p2 = *match_forall(inner1);
  Term inner2 = substitute(p2.body(), p2.binder(), truth());
  DerivPtr s2 = conv(all_e(s1, p2, truth()), inner2);
  DerivPtr eq_top = modus_ponens(s2, dnn_eq);  // c1 |- p = top

  // c1 |- p via top = p and the identity motive.
  DerivPtr sym = eq_symmetry(eq_top);
  std::string z = fresh_name();
  Term motive = Term::lam(z, Type::omicron(), Term::var(z, Type::omicron()));
  DerivPtr refl_top = conv(top_i(c1, m), Term::app(motive, truth()));
  DerivPtr got_p = conv(eq_e(refl_top, sym, motive), p);
  return retag(imp_i(got_p), Flavor::Intuitionistic, ExtFlags::ep());
}

// ---------------------------------------------------------------------
// Characterization
// ---------------------------------------------------------------------

namespace {

const CheckSettings kEfp{Flavor::Classical, ExtFlags::efp()};

// |- t_Ku = t in the given context; recursion keeps the context so the
// reverse translation can run it under Gamma.
DerivPtr term_eq_rec(const Term& t, const Context& ctx) {
  const CheckSettings& m = kEfp;
  switch (t.kind()) {
    case Term::Kind::Var:
      return eq_i(ctx, t, m);
    case Term::Kind::Const: {
      if (!t.as_const().is(ConstKind::Forall)) return eq_i(ctx, t, m);
      const Type& dom = t.as_const().index();
      Type pt = Type::arrow(dom, Type::omicron());
      Term t_ku = kuroda_term(t);  // \p. forall(\x. ~~(p x))
      Term qv = fresh_var(pt);
      Term yv = fresh_var(dom);
      Term qy = Term::app(qv, yv);
      // |- q y = ~~(q y), classically via PropExt.
      DerivPtr diff = iff_double_neg_classical(ctx, qy, m);
      DerivPtr s1 = propext(diff);
      Term qn = dn_instance_pred(qv);  // \x. ~~(q x)
      DerivPtr s2 = conv(s1, eq(qy, Term::app(qn, yv)));
      DerivPtr s3 = funext(s2, yv.var_name());  // |- q = \x. ~~(q x)
      // Rewrite inside forall q = forall q.
      Term all_q = Term::app(t, qv);
      DerivPtr s4 = eq_i(ctx, all_q, m);
      std::string h = fresh_name();
      Term motive =
          Term::lam(h, pt, eq(Term::app(t, Term::var(h, pt)), all_q));
      DerivPtr s5 = conv(s4, Term::app(motive, qv));
      DerivPtr s6 = eq_e(s5, s3, motive);
      DerivPtr s7 = conv(s6, eq(Term::app(t, qn), all_q));
      // Close over q.
      DerivPtr s8 = conv(s7, eq(Term::app(t_ku, qv), Term::app(t, qv)));
      return funext(s8, qv.var_name());
    }
    case Term::Kind::Lam: {
      std::set<std::string> avoid;
      for (const Term& f : ctx) avoid.merge(free_var_names(f));
      Term lam = t;
      if (avoid.count(t.binder()) || is_reserved_name(t.binder())) {
        std::string renamed = fresh_name();
        lam = Term::lam(renamed, t.binder_type(),
                        substitute(t.body(), t.binder(),
                                   Term::var(renamed, t.binder_type())));
      }
      DerivPtr body = term_eq_rec(lam.body(), ctx);
      Term lam_ku = kuroda_term(lam);
      Term xv = Term::var(lam.binder(), lam.binder_type());
      DerivPtr s =
          conv(body, eq(Term::app(lam_ku, xv), Term::app(lam, xv)));
      return funext(s, lam.binder());
    }
    case Term::Kind::App: {
      DerivPtr df = term_eq_rec(t.fun(), ctx);
      DerivPtr da = term_eq_rec(t.arg(), ctx);
      auto fs = match_eq(df->conclusion().goal);
      auto as = match_eq(da->conclusion().goal);
      Term f_ku = fs->lhs, f_orig = fs->rhs;
      Term a_ku = as->lhs, a_orig = as->rhs;
      Term lhs = Term::app(f_ku, a_ku);
      DerivPtr e0 = eq_i(ctx, lhs, m);
      std::string h = fresh_name();
      Term m1 = Term::lam(h, t.fun().type(),
                          eq(lhs, Term::app(Term::var(h, t.fun().type()),
                                            a_ku)));
      DerivPtr e1 = eq_e(conv(e0, Term::app(m1, f_ku)), df, m1);
      DerivPtr c1 = conv(e1, eq(lhs, Term::app(f_orig, a_ku)));
      std::string z = fresh_name();
      Term m2 = Term::lam(z, t.arg().type(),
                          eq(lhs, Term::app(f_orig,
                                            Term::var(z, t.arg().type()))));
      DerivPtr e2 = eq_e(conv(c1, Term::app(m2, a_ku)), da, m2);
      return conv(e2, eq(lhs, Term::app(f_orig, a_orig)));
    }
  }
  throw ProofError("malformed term");
}

// From |- A_Ku <=> A derive |- ~~A_Ku <=> A, classically.
DerivPtr lift_iff_outer(DerivPtr inner, const Term& a_ku, const Term& a,
                        const CheckSettings& m) {
  const Context& ctx = inner->conclusion().context;
  DerivPtr fwd_in = and_el(inner);  // A_Ku => A
  DerivPtr bwd_in = and_er(inner);  // A => A_Ku
  Context cf = push(ctx, neg(neg(a_ku)));
  DerivPtr fwd = imp_i(modus_ponens(
      append_hyps(fwd_in, {neg(neg(a_ku))}),
      double_neg_elim_classical(assume(cf, m))));
  Context cb = push(ctx, a);
  DerivPtr bwd = imp_i(double_neg_intro(
      modus_ponens(append_hyps(bwd_in, {a}), assume(cb, m))));
  return and_i(fwd, bwd);
}

}  // namespace

DerivPtr term_equality_derivation(const Term& t) {
  if (!is_closed(t))
    throw TypeError("term equality needs a closed term; free: " +
                    free_vars(t).front().first);
  return retag(term_eq_rec(t, {}), Flavor::Classical, ExtFlags::efp());
}

DerivPtr characterization_derivation(const Term& a) {
  if (!is_formula(a))
    throw TypeError("characterization needs a formula, got " +
                    a.type().to_string());
  if (!is_closed(a))
    throw TypeError("characterization needs a closed formula; free: " +
                    free_vars(a).front().first);
  const CheckSettings& m = kEfp;
  DerivPtr deq = term_eq_rec(a, {});
  auto sides = match_eq(deq->conclusion().goal);
  Term a_ku = sides->lhs, a_orig = sides->rhs;
  DerivPtr sym = eq_symmetry(deq);  // |- A = A_Ku
  DerivPtr taut = iff_refl({}, a_orig, m);
  std::string z = fresh_name();
  Term motive = Term::lam(
      z, Type::omicron(),
      conj(imp(Term::var(z, Type::omicron()), a_orig),
           imp(a_orig, Term::var(z, Type::omicron()))));
  DerivPtr e1 = eq_e(conv(taut, Term::app(motive, a_orig)), sym, motive);
  DerivPtr inner = conv(e1, iff(a_ku, a_orig));  // |- A_Ku <=> A
  DerivPtr out = lift_iff_outer(inner, a_ku, a_orig, m);
  return retag(out, Flavor::Classical, ExtFlags::efp());
}

DerivPtr characterization_from_oracle(const Term& a,
                                      const KurodaEquivOracle& oracle) {
  if (!is_formula(a))
    throw TypeError("characterization needs a formula, got " +
                    a.type().to_string());
  Term ab = beta_normalize(a);
  Term a_ku = kuroda_term(a);
  DerivPtr inner;
  CheckSettings m{Flavor::Classical, ExtFlags::none()};
  if (ab.is_var() || ab.is_const()) {
    // (A_beta)_Ku is A_beta itself, so A_Ku and A are convertible.
    DerivPtr taut = iff_refl({}, a, m);
    inner = conv(taut, iff(a_ku, a));
  } else {
    auto supplied = oracle(ab);
    if (!supplied)
      throw OracleRefused("no Kuroda-equivalence for the normal form");
    const Judgment& c = (*supplied)->conclusion();
    m.flags = c.flags;
    if (!c.context.empty())
      throw OracleOutputInvalid("nonempty context");
    if (!alpha_equal(c.goal, iff(kuroda_term(ab), ab)))
      throw OracleOutputInvalid("wrong statement");
    if (CheckResult r = check(*supplied, {Flavor::Classical, c.flags}); !r)
      throw OracleOutputInvalid(r.describe());
    inner = conv(retag(*supplied, Flavor::Classical, c.flags),
                 iff(a_ku, a));
  }
  DerivPtr out = lift_iff_outer(inner, a_ku, a, m);
  return retag(out, Flavor::Classical, m.flags);
}

// ---------------------------------------------------------------------
// Reverse translation
// ---------------------------------------------------------------------

DerivPtr weak_funext_classical(Type domain, Type codomain) {
  const CheckSettings m{Flavor::Classical, ExtFlags::ef()};
  Type ft = Type::arrow(domain, codomain);
  Term delta = WeakFunExt{domain, codomain}.formula();
  Term p1 = *match_forall(delta);
  Term fv = fresh_var(ft);
  Term inner1 = substitute(p1.body(), p1.binder(), fv);
  Term p2 = *match_forall(inner1);
  Term gv = fresh_var(ft);
  Term inner2 = substitute(p2.body(), p2.binder(), gv);
  auto split = match_imp(inner2);
  Context c1 = {split->lhs};
  Term ph = *match_forall(split->lhs);
  Term yv = fresh_var(domain);
  DerivPtr s1 = conv(all_e(ax(c1, 0, m), ph, yv),
                     neg(neg(eq(Term::app(fv, yv), Term::app(gv, yv)))));
  DerivPtr s2 = double_neg_elim_classical(s1);
  DerivPtr s3 = double_neg_intro(funext(s2, yv.var_name()));
  DerivPtr s4 = imp_i(s3);
  DerivPtr s5 = all_i(conv(s4, Term::app(p2, gv)), gv.var_name());
  DerivPtr s6 = all_i(conv(s5, Term::app(p1, fv)), fv.var_name());
  return retag(s6, Flavor::Classical, ExtFlags::ef());
}

DerivPtr reverse_translate(const std::vector<Term>& gamma, const Term& a,
                           const DerivPtr& di) {
  const Judgment& c = di->conclusion();
  if (!is_formula(a))
    throw TypeError("goal must be a formula, got " + a.type().to_string());
  if (!alpha_equal(c.goal, kuroda_formula(a)))
    throw ConclusionMismatch("derivation goal is not the translated goal");
  std::vector<Term> g_ku = kuroda_context(gamma);
  if (c.context.size() < g_ku.size())
    throw ConclusionMismatch("derivation context is too short");
  std::size_t np = c.context.size() - g_ku.size();
  for (std::size_t i = 0; i < g_ku.size(); ++i)
    if (!alpha_equal(c.context[np + i], g_ku[i]))
      throw ConclusionMismatch("derivation context is not the translated one");
  // Any prefix entries must be weak funext hypotheses.
  std::vector<WeakFunExt> prefix_types;
  for (std::size_t i = 0; i < np; ++i) {
    std::optional<Term> p = match_forall(c.context[i]);
    if (!p || !p->is_lam() || !p->binder_type().is_arrow())
      throw ConclusionMismatch("context prefix is not a weak funext formula");
    WeakFunExt w{p->binder_type().domain(), p->binder_type().codomain()};
    if (!alpha_equal(c.context[i], w.formula()))
      throw ConclusionMismatch("context prefix is not a weak funext formula");
    prefix_types.push_back(w);
  }
  if (CheckResult r = check(di, {Flavor::Intuitionistic, ExtFlags::efp()}); !r)
    throw InputDoesNotCheck(r.describe());

  const CheckSettings m = kEfp;
  DerivPtr cur = retag(di, Flavor::Classical, ExtFlags::efp());
  std::vector<Term> entries = c.context;
  while (!cur->conclusion().context.empty()) cur = imp_i(cur);
  cur = weaken(cur, gamma);

  // Discharge the weak funext prefix classically.
  for (const WeakFunExt& w : prefix_types) {
    DerivPtr lemma = weaken(weak_funext_classical(w.domain, w.codomain),
                            gamma);
    cur = modus_ponens(cur, retag(lemma, Flavor::Classical, ExtFlags::efp()));
  }
  // Feed each translated hypothesis, converted from the original one.
  std::string z = fresh_name();
  Term motive = Term::lam(z, Type::omicron(), Term::var(z, Type::omicron()));
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    DerivPtr orig = ax(gamma, i, m);
    DerivPtr sym = eq_symmetry(term_eq_rec(gamma[i], gamma));
    DerivPtr shifted = eq_e(conv(orig, Term::app(motive, gamma[i])), sym,
                            motive);
    DerivPtr entry = conv(shifted, entries[np + i]);
    cur = modus_ponens(cur, entry);
  }
  // Strip the double negation and rewrite A_Ku back to A.
  DerivPtr stripped = double_neg_elim_classical(cur);
  DerivPtr deq = term_eq_rec(a, gamma);
  auto sides = match_eq(deq->conclusion().goal);
  DerivPtr at_ku = conv(stripped, Term::app(motive, sides->lhs));
  DerivPtr swapped = eq_e(at_ku, deq, motive);
  return retag(conv(swapped, a), Flavor::Classical, ExtFlags::efp());
}

// ---------------------------------------------------------------------
// Counter-examples
// ---------------------------------------------------------------------

ReverseCounterexample reverse_counterexample() {
  const Type i = Type::iota();
  const Type o = Type::omicron();
  Term r = Term::constant(Constant::user("R", Type::arrow(o, Type::arrow(o, o))));
  Term p = Term::constant(Constant::user("P", Type::arrow(i, o)));
  Term p2 = Term::constant(Constant::user("P'", Type::arrow(i, o)));
  auto dn_of = [&](const Term& pred) {
    Term xv = Term::var("x", i);
    return Term::lam("x", i, neg(neg(Term::app(pred, xv))));
  };
  Type qt = Type::arrow(Type::arrow(i, o), o);
  Term qv = Term::var("q", qt);
  Term gamma_body = Term::app(Term::app(r, Term::app(qv, dn_of(p))),
                              Term::app(qv, dn_of(p2)));
  Term gamma = forall("q", qt, gamma_body);
  auto plain = [&](const Term& pred) {
    Term xv = Term::var("x", i);
    return forall("x", i, Term::app(pred, xv));
  };
  Term goal = Term::app(Term::app(r, plain(p)), plain(p2));

  const CheckSettings m{Flavor::Intuitionistic, ExtFlags::none()};
  std::vector<Term> ctx = kuroda_context({gamma});
  DerivPtr d1 = ax(ctx, 0, m);
  Term normal = beta_normalize(ctx[0]);
  DerivPtr d2 = conv(d1, normal);
  Term pn = *match_forall(normal);
  DerivPtr d3 = all_e(d2, pn, Term::constant(Constant::forall(i)));
  DerivPtr d4 = conv(d3, kuroda_formula(goal));
  std::string note =
      "The translated judgment is intuitionistically derivable by "
      "instantiating q with the universal quantifier, but the original "
      "judgment is not classically derivable: the double negations inside "
      "the arguments of R cannot be removed without extensionality.";
  return {{gamma}, goal, d4, note};
}

CharacterizationCounterexample characterization_counterexample() {
  const Type i = Type::iota();
  const Type o = Type::omicron();
  Term p = Term::constant(Constant::user("P", Type::arrow(o, o)));
  Term q = Term::constant(Constant::user("Q", Type::arrow(i, o)));
  Term a = forall("x", i, Term::app(q, Term::var("x", i)));
  Term formula = Term::app(p, a);
  Term translation = kuroda_formula(formula);
  std::string note =
      "P A and P A_Ku cannot be proved equivalent without extensionality, "
      "even though A and A_Ku are: in the intensional models of "
      "higher-order logic (V-complexes), the denotation of a proposition "
      "carries a syntactic component, so P may distinguish A from A_Ku. "
      "The same models separate P top from P (top /\\ top).";
  return {p, formula, translation, note};
}

}  // namespace hol
