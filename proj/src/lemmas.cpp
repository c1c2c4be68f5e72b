#include "hol/lemmas.hpp"

#include "hol/errors.hpp"
#include "hol/kernel.hpp"

namespace hol {

using rules::Context;
using namespace rules;

namespace {

const CheckSettings kIntu{Flavor::Intuitionistic, ExtFlags::none()};

Context push(Context ctx, Term f) {
  ctx.push_back(std::move(f));
  return ctx;
}

CheckSettings mode_of(const DerivPtr& d) {
  return d->conclusion().settings();
}

std::string safe_binder(const std::string& preferred, const Term& avoid) {
  if (!free_var_names(avoid).count(preferred)) return preferred;
  return fresh_name();
}

void require_args(int id, const std::vector<Term>& args, std::size_t n) {
  if (args.size() != n)
    throw TypeError("lemma " + std::to_string(id) + " takes " +
                    std::to_string(n) + " argument(s), got " +
                    std::to_string(args.size()));
  for (const Term& arg : args) {
    if (id >= 9) {
      const Type& t = arg.type();
      if (!t.is_arrow() || !t.codomain().is_omicron())
        throw TypeError("lemma " + std::to_string(id) +
                        " needs a predicate of type t -> o, got " +
                        t.to_string());
    } else if (!is_formula(arg)) {
      throw TypeError("lemma " + std::to_string(id) +
                      " needs a formula, got type " + arg.type().to_string());
    }
  }
}

DerivPtr lemma1(const Context& ctx) {
  Term a = falsity();
  Context c1 = push(ctx, neg(neg(a)));
  Context c2 = push(c1, a);
  DerivPtr dnbot = not_i(assume(c2, kIntu));        // c1 |- ~bot
  DerivPtr bot = not_e(assume(c1, kIntu), dnbot);   // c1 |- bot
  return imp_i(bot);
}

DerivPtr lemma2(const Context& ctx) {
  Context c1 = push(ctx, neg(neg(truth())));
  return imp_i(top_i(c1, kIntu));
}

DerivPtr lemma3(const Context& ctx, const Term& a) {
  Term d = disj(a, neg(a));
  std::size_t n = ctx.size();
  Context c1 = push(ctx, neg(d));
  Context c2 = push(c1, a);
  DerivPtr bot2 =
      not_e(ax(c2, n, kIntu), or_il(assume(c2, kIntu), neg(a)));
  DerivPtr dnot_a = not_i(bot2);                    // c1 |- ~A
  DerivPtr bot1 = not_e(assume(c1, kIntu), or_ir(a, dnot_a));
  return not_i(bot1);                               // |- ~~(A \/ ~A)
}

DerivPtr lemma4(const Context& ctx, const Term& a) {
  Context c1 = push(ctx, a);
  return imp_i(double_neg_intro(assume(c1, kIntu)));
}

DerivPtr lemma5(const Context& ctx, const Term& a) {
  std::size_t n = ctx.size();
  Context c1 = push(ctx, neg(neg(neg(a))));
  Context c2 = push(c1, a);
  DerivPtr bot2 =
      not_e(ax(c2, n, kIntu), double_neg_intro(assume(c2, kIntu)));
  DerivPtr fwd = imp_i(not_i(bot2));                // ~~~A => ~A
  Context c3 = push(ctx, neg(a));
  DerivPtr bwd = imp_i(double_neg_intro(assume(c3, kIntu)));
  return and_i(fwd, bwd);
}

DerivPtr lemma6(const Context& ctx, const Term& a, const Term& b) {
  std::size_t n = ctx.size();
  Term f = imp(a, b);
  // Forward: from ~~(A => B), ~~A and ~B a contradiction follows.
  Context c1 = push(ctx, neg(neg(f)));
  Context c2 = push(c1, neg(neg(a)));
  Context c3 = push(c2, neg(b));
  Context c4 = push(c3, f);
  Context c5 = push(c4, a);
  DerivPtr bot5 = not_e(ax(c5, n + 2, kIntu),
                        imp_e(ax(c5, n + 3, kIntu), ax(c5, n + 4, kIntu)));
  DerivPtr bot4 = not_e(ax(c4, n + 1, kIntu), not_i(bot5));
  DerivPtr bot3 = not_e(ax(c3, n, kIntu), not_i(bot4));
  DerivPtr fwd = imp_i(imp_i(not_i(bot3)));
  // Backward: ~(A => B) yields both ~~A and ~B.
  Context c1b = push(ctx, imp(neg(neg(a)), neg(neg(b))));
  Context c2b = push(c1b, neg(f));
  Context c3b = push(c2b, neg(a));
  Context c4b = push(c3b, a);
  DerivPtr bot4b = not_e(ax(c4b, n + 2, kIntu), ax(c4b, n + 3, kIntu));
  DerivPtr f_from_nota = imp_i(bot_e(bot4b, b));    // c3b |- A => B
  DerivPtr bot3b = not_e(ax(c3b, n + 1, kIntu), f_from_nota);
  DerivPtr dnn_a = not_i(bot3b);                    // c2b |- ~~A
  DerivPtr dnn_b = imp_e(ax(c2b, n, kIntu), dnn_a); // c2b |- ~~B
  Context c5b = push(c2b, b);
  Context c6b = push(c5b, a);
  DerivPtr f_from_b = imp_i(ax(c6b, n + 2, kIntu)); // c5b |- A => B
  DerivPtr bot5b = not_e(ax(c5b, n + 1, kIntu), f_from_b);
  DerivPtr dn_b = not_i(bot5b);                     // c2b |- ~B
  DerivPtr bwd = imp_i(not_i(not_e(dnn_b, dn_b)));
  return and_i(fwd, bwd);
}

DerivPtr lemma7(const Context& ctx, const Term& a, const Term& b) {
  std::size_t n = ctx.size();
  Term c = conj(a, b);
  Context c1 = push(ctx, neg(neg(c)));
  auto half = [&](bool left) {
    Context c2 = push(c1, neg(left ? a : b));
    Context c3 = push(c2, c);
    DerivPtr proj = left ? and_el(ax(c3, n + 2, kIntu))
                         : and_er(ax(c3, n + 2, kIntu));
    DerivPtr bot3 = not_e(ax(c3, n + 1, kIntu), proj);
    DerivPtr bot2 = not_e(ax(c2, n, kIntu), not_i(bot3));
    return not_i(bot2);                             // c1 |- ~~A (or ~~B)
  };
  DerivPtr fwd = imp_i(and_i(half(true), half(false)));
  Context c1b = push(ctx, conj(neg(neg(a)), neg(neg(b))));
  Context c2b = push(c1b, neg(c));
  Context c3b = push(c2b, a);
  Context c4b = push(c3b, b);
  DerivPtr bot4 = not_e(ax(c4b, n + 1, kIntu),
                        and_i(ax(c4b, n + 2, kIntu), ax(c4b, n + 3, kIntu)));
  DerivPtr bot3 = not_e(and_er(ax(c3b, n, kIntu)), not_i(bot4));
  DerivPtr bot2 = not_e(and_el(ax(c2b, n, kIntu)), not_i(bot3));
  DerivPtr bwd = imp_i(not_i(bot2));
  return and_i(fwd, bwd);
}

DerivPtr lemma8(const Context& ctx, const Term& a, const Term& b) {
  std::size_t n = ctx.size();
  Term d = disj(a, b);
  Context c1 = push(ctx, neg(d));
  Context ca = push(c1, a);
  DerivPtr dna = not_i(not_e(ax(ca, n, kIntu), or_il(assume(ca, kIntu), b)));
  Context cb = push(c1, b);
  DerivPtr dnb = not_i(not_e(ax(cb, n, kIntu), or_ir(a, assume(cb, kIntu))));
  DerivPtr fwd = imp_i(and_i(dna, dnb));
  Context c1b = push(ctx, conj(neg(a), neg(b)));
  Context c2b = push(c1b, d);
  Context cab = push(c2b, a);
  DerivPtr bota = not_e(and_el(ax(cab, n, kIntu)), assume(cab, kIntu));
  Context cbb = push(c2b, b);
  DerivPtr botb = not_e(and_er(ax(cbb, n, kIntu)), assume(cbb, kIntu));
  DerivPtr bot2 = or_e(assume(c2b, kIntu), bota, botb);
  DerivPtr bwd = imp_i(not_i(bot2));
  return and_i(fwd, bwd);
}

DerivPtr lemma9(const Context& ctx, const Term& p) {
  std::size_t n = ctx.size();
  const Type& dom = p.type().domain();
  Term fa = forall_pred(p);
  Term q = dn_instance_pred(p);                     // \x. ~~(P x)
  Context c1 = push(ctx, neg(neg(fa)));
  std::string y = fresh_name();
  Term yv = Term::var(y, dom);
  Context c2 = push(c1, neg(Term::app(p, yv)));
  Context c3 = push(c2, fa);
  DerivPtr bot3 =
      not_e(ax(c3, n + 1, kIntu), all_e(ax(c3, n + 2, kIntu), p, yv));
  DerivPtr bot2 = not_e(ax(c2, n, kIntu), not_i(bot3));
  DerivPtr dnn_py = not_i(bot2);                    // c1 |- ~~(P y)
  DerivPtr at_y = conv(dnn_py, Term::app(q, yv));
  return imp_i(all_i(at_y, y));
}

DerivPtr lemma10(const Context& ctx, const Term& p) {
  std::size_t n = ctx.size();
  const Type& dom = p.type().domain();
  Term ex = exists_pred(p);
  Term r = neg_instance_pred(p);                    // \x. ~(P x)
  // Forward: ~exists P => forall x. ~(P x).
  Context c1 = push(ctx, neg(ex));
  std::string y = fresh_name();
  Term yv = Term::var(y, dom);
  Context c2 = push(c1, Term::app(p, yv));
  DerivPtr dex = ex_i(assume(c2, kIntu), p, yv);
  DerivPtr bot2 = not_e(ax(c2, n, kIntu), dex);
  DerivPtr dn_py = not_i(bot2);                     // c1 |- ~(P y)
  DerivPtr fwd = imp_i(all_i(conv(dn_py, Term::app(r, yv)), y));
  // Backward: forall x. ~(P x) => ~exists P.
  Context c1b = push(ctx, forall_pred(r));
  Context c2b = push(c1b, ex);
  std::string z = fresh_name();
  Term zv = Term::var(z, dom);
  Context c3b = push(c2b, Term::app(p, zv));
  DerivPtr dn_pz = conv(all_e(ax(c3b, n, kIntu), r, zv), neg(Term::app(p, zv)));
  DerivPtr bot3 = not_e(dn_pz, ax(c3b, n + 2, kIntu));
  DerivPtr dexe = ex_e(ax(c2b, n + 1, kIntu), Eigen{z, dom}, bot3);
  DerivPtr bwd = imp_i(not_i(dexe));
  return and_i(fwd, bwd);
}

}  // namespace

Term dn_instance_pred(const Term& p) {
  std::string x = safe_binder("x", p);
  Term xv = Term::var(x, p.type().domain());
  return Term::lam(x, p.type().domain(), neg(neg(Term::app(p, xv))));
}

Term neg_instance_pred(const Term& p) {
  std::string x = safe_binder("x", p);
  Term xv = Term::var(x, p.type().domain());
  return Term::lam(x, p.type().domain(), neg(Term::app(p, xv)));
}

Term dn_lemma_statement(int id, const std::vector<Term>& args) {
  switch (id) {
    case 1: return imp(neg(neg(falsity())), falsity());
    case 2: return imp(neg(neg(truth())), truth());
    case 3: {
      require_args(id, args, 1);
      return neg(neg(disj(args[0], neg(args[0]))));
    }
    case 4: {
      require_args(id, args, 1);
      return imp(args[0], neg(neg(args[0])));
    }
    case 5: {
      require_args(id, args, 1);
      return iff(neg(neg(neg(args[0]))), neg(args[0]));
    }
    case 6: {
      require_args(id, args, 2);
      return iff(neg(neg(imp(args[0], args[1]))),
                 imp(neg(neg(args[0])), neg(neg(args[1]))));
    }
    case 7: {
      require_args(id, args, 2);
      return iff(neg(neg(conj(args[0], args[1]))),
                 conj(neg(neg(args[0])), neg(neg(args[1]))));
    }
    case 8: {
      require_args(id, args, 2);
      return iff(neg(disj(args[0], args[1])),
                 conj(neg(args[0]), neg(args[1])));
    }
    case 9: {
      require_args(id, args, 1);
      return imp(neg(neg(forall_pred(args[0]))),
                 forall_pred(dn_instance_pred(args[0])));
    }
    case 10: {
      require_args(id, args, 1);
      return iff(neg(exists_pred(args[0])),
                 forall_pred(neg_instance_pred(args[0])));
    }
    default:
      throw TypeError("lemma id must be 1..10, got " + std::to_string(id));
  }
}

DerivPtr dn_lemma(int id, const std::vector<Term>& args,
                const std::vector<Term>& context) {
  switch (id) {
    case 1: require_args(id, args, 0); return lemma1(context);
    case 2: require_args(id, args, 0); return lemma2(context);
    case 3: require_args(id, args, 1); return lemma3(context, args[0]);
    case 4: require_args(id, args, 1); return lemma4(context, args[0]);
    case 5: require_args(id, args, 1); return lemma5(context, args[0]);
    case 6: require_args(id, args, 2); return lemma6(context, args[0], args[1]);
    case 7: require_args(id, args, 2); return lemma7(context, args[0], args[1]);
    case 8: require_args(id, args, 2); return lemma8(context, args[0], args[1]);
    case 9: require_args(id, args, 1); return lemma9(context, args[0]);
    case 10: require_args(id, args, 1); return lemma10(context, args[0]);
    default:
      throw TypeError("lemma id must be 1..10, got " + std::to_string(id));
  }
}

DerivPtr modus_ponens(DerivPtr dimp, DerivPtr darg) {
  if (!context_alpha_equal(dimp->conclusion().context,
                           darg->conclusion().context))
    throw ContextMismatch("modus ponens premises live in different contexts");
  if (!match_imp(dimp->conclusion().goal))
    throw ShapeMismatch("modus ponens major premise is not an implication");
  return imp_e(std::move(dimp), std::move(darg));
}

DerivPtr cut(DerivPtr dlemma, DerivPtr duse) {
  const auto& use_ctx = duse->conclusion().context;
  if (use_ctx.empty() ||
      !alpha_equal(use_ctx.back(), dlemma->conclusion().goal))
    throw ContextMismatch("cut: last hypothesis does not match the lemma");
  if (use_ctx.size() != dlemma->conclusion().context.size() + 1)
    throw ContextMismatch("cut: contexts do not line up");
  return imp_e(imp_i(std::move(duse)), std::move(dlemma));
}

DerivPtr double_neg_intro(DerivPtr d) {
  const Judgment& c = d->conclusion();
  CheckSettings mode = mode_of(d);
  Context c1 = push(c.context, neg(c.goal));
  DerivPtr lifted = append_hyps(d, {neg(c.goal)});
  return not_i(not_e(assume(c1, mode), lifted));
}

DerivPtr double_neg_elim_classical(DerivPtr d) {
  const Judgment& c = d->conclusion();
  auto outer = match_not(c.goal);
  std::optional<Term> inner;
  if (outer) inner = match_not(*outer);
  if (!inner) throw ShapeMismatch("double negation elimination needs ~~A");
  const Term& a = *inner;
  CheckSettings mode{Flavor::Classical, c.flags};
  DerivPtr split = pem(c.context, a, mode);
  Context cl = push(c.context, a);
  DerivPtr left = assume(cl, mode);
  Context cr = push(c.context, neg(a));
  DerivPtr bot = not_e(append_hyps(d, {neg(a)}), assume(cr, mode));
  DerivPtr right = bot_e(bot, a);
  return or_e(split, left, right);
}

DerivPtr mp_under_double_neg(DerivPtr dimp, DerivPtr darg) {
  const Judgment& c = dimp->conclusion();
  auto outer = match_not(c.goal);
  std::optional<Term> inner;
  if (outer) inner = match_not(*outer);
  std::optional<BinSplit> split;
  if (inner) split = match_imp(*inner);
  if (!split)
    throw ShapeMismatch("expected ~~(A => B) as the major premise");
  DerivPtr fact = dn_lemma(6, {split->lhs, split->rhs}, c.context);
  return modus_ponens(modus_ponens(and_el(fact), std::move(dimp)),
                      std::move(darg));
}

DerivPtr eq_symmetry(DerivPtr d) {
  auto split = match_eq(d->conclusion().goal);
  if (!split) throw ShapeMismatch("symmetry needs an equality");
  const Term& u = split->lhs;
  const Term& v = split->rhs;
  CheckSettings mode = mode_of(d);
  const Context& ctx = d->conclusion().context;
  std::string z = fresh_name();
  Term motive = Term::lam(z, u.type(), eq(Term::var(z, u.type()), u));
  DerivPtr refl = conv(eq_i(ctx, u, mode), Term::app(motive, u));
  return conv(eq_e(refl, std::move(d), motive), eq(v, u));
}

DerivPtr iff_refl(const std::vector<Term>& context, const Term& a,
                  CheckSettings mode) {
  Context c1 = push(context, a);
  return and_i(imp_i(assume(c1, mode)), imp_i(assume(c1, mode)));
}

DerivPtr iff_double_neg_classical(const std::vector<Term>& context,
                                  const Term& a, CheckSettings mode) {
  if (mode.flavor != Flavor::Classical)
    throw ProofError("the double-negation equivalence is classical");
  Context cf = push(context, a);
  DerivPtr fwd = imp_i(double_neg_intro(assume(cf, mode)));
  Context cb = push(context, neg(neg(a)));
  DerivPtr bwd = imp_i(double_neg_elim_classical(assume(cb, mode)));
  return and_i(fwd, bwd);
}

}  // namespace hol
