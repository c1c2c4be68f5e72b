#include "hol/derivation.hpp"

#include <array>

#include "hol/errors.hpp"
#include "hol/kernel.hpp"

namespace hol {

namespace {

constexpr std::array<const char*, 23> kRuleNames = {
    "Imp-I", "Imp-E", "And-I", "And-EL", "And-ER", "Or-IL", "Or-IR", "Or-E",
    "Not-I", "Not-E", "Bot-E", "Top-I", "All-I", "All-E", "Ex-I", "Ex-E",
    "Ax", "Conv", "PEM", "Eq-I", "Eq-E", "FunExt", "PropExt"};

}  // namespace

const char* rule_name(RuleId r) {
  return kRuleNames[static_cast<std::size_t>(r)];
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kRuleNames.size(); ++i)
    if (name == kRuleNames[i]) return static_cast<RuleId>(i);
  return std::nullopt;
}

Derivation::Derivation(RuleId rule, std::vector<DerivPtr> premises,
                       Instantiation inst, Judgment conclusion)
    : rule_(rule), premises_(std::move(premises)), inst_(std::move(inst)),
      conclusion_(std::move(conclusion)) {
  for (const DerivPtr& p : premises_)
    if (!p) throw ProofError("null premise");
}

std::size_t Derivation::node_count() const {
  std::size_t n = 1;
  for (const DerivPtr& p : premises_) n += p->node_count();
  return n;
}

bool Derivation::uses_rule(RuleId r) const {
  if (rule_ == r) return true;
  for (const DerivPtr& p : premises_)
    if (p->uses_rule(r)) return true;
  return false;
}

DerivPtr Derivation::make(RuleId rule, std::vector<DerivPtr> premises,
                          Instantiation inst, Judgment conclusion) {
  return std::make_shared<const Derivation>(
      rule, std::move(premises), std::move(inst), std::move(conclusion));
}

namespace rules {

namespace {

CheckSettings inherit(std::initializer_list<DerivPtr> premises) {
  Flavor flavor = Flavor::Intuitionistic;
  ExtFlags flags;
  for (const DerivPtr& p : premises) {
    if (p->conclusion().flavor == Flavor::Classical)
      flavor = Flavor::Classical;
    flags = flags.united(p->conclusion().flags);
  }
  return {flavor, flags};
}

Judgment conclude(CheckSettings mode, Context ctx, Term goal) {
  return Judgment(mode.flavor, mode.flags, std::move(ctx), std::move(goal));
}

void require_same_context(const DerivPtr& a, const DerivPtr& b,
                          const char* rule) {
  if (!context_alpha_equal(a->conclusion().context, b->conclusion().context))
    throw ContextMismatch(std::string(rule) + " premises disagree");
}

// Premise context must be base + [extra].
void require_extended_context(const DerivPtr& premise,
                              const Context& base, const Term& extra,
                              const char* rule) {
  const Context& pc = premise->conclusion().context;
  if (pc.size() != base.size() + 1 || !alpha_equal(pc.back(), extra))
    throw ContextMismatch(std::string(rule) + " local hypothesis missing");
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!alpha_equal(pc[i], base[i]))
      throw ContextMismatch(std::string(rule) + " contexts disagree");
}

std::set<std::string> context_free_names(const Context& ctx) {
  std::set<std::string> out;
  for (const Term& f : ctx) out.merge(free_var_names(f));
  return out;
}

}  // namespace

DerivPtr ax(const Context& ctx, std::size_t index, CheckSettings mode) {
  if (index >= ctx.size()) throw ShapeMismatch("Ax index out of range");
  return Derivation::make(RuleId::Ax, {}, Instantiation::of_index(index),
                          conclude(mode, ctx, ctx[index]));
}

DerivPtr assume(const Context& ctx, CheckSettings mode) {
  if (ctx.empty()) throw ShapeMismatch("assume on empty context");
  return ax(ctx, ctx.size() - 1, mode);
}

DerivPtr top_i(const Context& ctx, CheckSettings mode) {
  return Derivation::make(RuleId::TopI, {}, {}, conclude(mode, ctx, truth()));
}

DerivPtr pem(const Context& ctx, const Term& a, CheckSettings mode) {
  return Derivation::make(RuleId::PEM, {}, {},
                          conclude(mode, ctx, disj(a, neg(a))));
}

DerivPtr eq_i(const Context& ctx, const Term& u, CheckSettings mode) {
  return Derivation::make(RuleId::EqI, {}, {}, conclude(mode, ctx, eq(u, u)));
}

DerivPtr imp_i(DerivPtr premise) {
  const Judgment& c = premise->conclusion();
  if (c.context.empty()) throw ShapeMismatch("Imp-I needs a hypothesis");
  Context ctx(c.context.begin(), c.context.end() - 1);
  Term goal = imp(c.context.back(), c.goal);
  CheckSettings mode = inherit({premise});
  return Derivation::make(RuleId::ImpI, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr imp_e(DerivPtr dimp, DerivPtr darg) {
  auto split = match_imp(dimp->conclusion().goal);
  if (!split) throw ShapeMismatch("Imp-E major premise is not an implication");
  require_same_context(dimp, darg, "Imp-E");
  if (!alpha_equal(split->lhs, darg->conclusion().goal))
    throw ShapeMismatch("Imp-E argument does not match the antecedent");
  CheckSettings mode = inherit({dimp, darg});
  Context ctx = dimp->conclusion().context;
  return Derivation::make(RuleId::ImpE, {std::move(dimp), std::move(darg)},
                          {}, conclude(mode, std::move(ctx), split->rhs));
}

DerivPtr and_i(DerivPtr left, DerivPtr right) {
  require_same_context(left, right, "And-I");
  CheckSettings mode = inherit({left, right});
  Context ctx = left->conclusion().context;
  Term goal = conj(left->conclusion().goal, right->conclusion().goal);
  return Derivation::make(RuleId::AndI, {std::move(left), std::move(right)},
                          {}, conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr and_el(DerivPtr premise) {
  auto split = match_and(premise->conclusion().goal);
  if (!split) throw ShapeMismatch("And-EL premise is not a conjunction");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  return Derivation::make(RuleId::AndEL, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), split->lhs));
}

DerivPtr and_er(DerivPtr premise) {
  auto split = match_and(premise->conclusion().goal);
  if (!split) throw ShapeMismatch("And-ER premise is not a conjunction");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  return Derivation::make(RuleId::AndER, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), split->rhs));
}

DerivPtr or_il(DerivPtr premise, const Term& right) {
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = disj(premise->conclusion().goal, right);
  return Derivation::make(RuleId::OrIL, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr or_ir(const Term& left, DerivPtr premise) {
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = disj(left, premise->conclusion().goal);
  return Derivation::make(RuleId::OrIR, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr or_e(DerivPtr ddisj, DerivPtr dleft, DerivPtr dright) {
  auto split = match_or(ddisj->conclusion().goal);
  if (!split) throw ShapeMismatch("Or-E major premise is not a disjunction");
  const Context& ctx = ddisj->conclusion().context;
  require_extended_context(dleft, ctx, split->lhs, "Or-E");
  require_extended_context(dright, ctx, split->rhs, "Or-E");
  if (!alpha_equal(dleft->conclusion().goal, dright->conclusion().goal))
    throw ShapeMismatch("Or-E branches conclude different formulas");
  CheckSettings mode = inherit({ddisj, dleft, dright});
  Term goal = dleft->conclusion().goal;
  Context cctx = ctx;
  return Derivation::make(
      RuleId::OrE, {std::move(ddisj), std::move(dleft), std::move(dright)},
      {}, conclude(mode, std::move(cctx), std::move(goal)));
}

DerivPtr not_i(DerivPtr premise) {
  const Judgment& c = premise->conclusion();
  if (c.context.empty()) throw ShapeMismatch("Not-I needs a hypothesis");
  if (!c.goal.is_const(ConstKind::Bot))
    throw ShapeMismatch("Not-I premise must conclude bot");
  Context ctx(c.context.begin(), c.context.end() - 1);
  Term goal = neg(c.context.back());
  CheckSettings mode = inherit({premise});
  return Derivation::make(RuleId::NotI, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr not_e(DerivPtr dneg, DerivPtr darg) {
  auto body = match_not(dneg->conclusion().goal);
  if (!body) throw ShapeMismatch("Not-E major premise is not a negation");
  require_same_context(dneg, darg, "Not-E");
  if (!alpha_equal(*body, darg->conclusion().goal))
    throw ShapeMismatch("Not-E argument does not match the negand");
  CheckSettings mode = inherit({dneg, darg});
  Context ctx = dneg->conclusion().context;
  return Derivation::make(RuleId::NotE, {std::move(dneg), std::move(darg)},
                          {}, conclude(mode, std::move(ctx), falsity()));
}

DerivPtr bot_e(DerivPtr premise, const Term& goal) {
  if (!premise->conclusion().goal.is_const(ConstKind::Bot))
    throw ShapeMismatch("Bot-E premise must conclude bot");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  return Derivation::make(RuleId::BotE, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), goal));
}

DerivPtr all_i(DerivPtr premise, const std::string& eigen) {
  const Judgment& c = premise->conclusion();
  if (!c.goal.is_app() || !c.goal.arg().is_var() ||
      c.goal.arg().var_name() != eigen)
    throw ShapeMismatch("All-I premise must conclude P x for the eigenvariable");
  Term pred = c.goal.fun();
  Type vt = c.goal.arg().type();
  std::set<std::string> avoid = context_free_names(c.context);
  avoid.merge(free_var_names(pred));
  if (avoid.count(eigen))
    throw ShapeMismatch("All-I eigenvariable " + eigen + " is not fresh");
  CheckSettings mode = inherit({premise});
  Context ctx = c.context;
  Term goal = Term::app(Term::constant(Constant::forall(vt)), pred);
  return Derivation::make(RuleId::AllI, {std::move(premise)},
                          Instantiation::of_eigen(Eigen{eigen, vt}),
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr all_e(DerivPtr premise, const Term& pred, const Term& arg) {
  auto p = match_forall(premise->conclusion().goal);
  if (!p) throw ShapeMismatch("All-E premise is not a universal");
  if (!alpha_equal(*p, pred))
    throw ShapeMismatch("All-E predicate does not match the premise");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = Term::app(pred, arg);  // also validates arg's type
  return Derivation::make(RuleId::AllE, {std::move(premise)},
                          Instantiation::of_pred_arg(pred, arg),
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr ex_i(DerivPtr premise, const Term& pred, const Term& witness) {
  Term expected = Term::app(pred, witness);
  if (!alpha_equal(premise->conclusion().goal, expected))
    throw ShapeMismatch("Ex-I premise must conclude P t for the witness");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = exists_pred(pred);
  return Derivation::make(RuleId::ExI, {std::move(premise)},
                          Instantiation::of_pred_arg(pred, witness),
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr ex_e(DerivPtr dexists, const Eigen& eigen, DerivPtr dbody) {
  auto p = match_exists(dexists->conclusion().goal);
  if (!p) throw ShapeMismatch("Ex-E major premise is not an existential");
  const Context& ctx = dexists->conclusion().context;
  Term hyp = Term::app(*p, Term::var(eigen.name, eigen.type));
  require_extended_context(dbody, ctx, hyp, "Ex-E");
  const Term& goal = dbody->conclusion().goal;
  std::set<std::string> avoid = context_free_names(ctx);
  avoid.merge(free_var_names(*p));
  avoid.merge(free_var_names(goal));
  if (avoid.count(eigen.name))
    throw ShapeMismatch("Ex-E eigenvariable " + eigen.name + " is not fresh");
  CheckSettings mode = inherit({dexists, dbody});
  Context cctx = ctx;
  Term cgoal = goal;
  return Derivation::make(RuleId::ExE, {std::move(dexists), std::move(dbody)},
                          Instantiation::of_eigen(eigen),
                          conclude(mode, std::move(cctx), std::move(cgoal)));
}

DerivPtr conv(DerivPtr premise, const Term& target) {
  if (!alpha_beta_equiv(premise->conclusion().goal, target))
    throw ShapeMismatch("Conv target is not beta-equivalent to the premise");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  return Derivation::make(RuleId::Conv, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), target));
}

DerivPtr eq_e(DerivPtr dmaj, DerivPtr deq, const Term& motive) {
  auto split = match_eq(deq->conclusion().goal);
  if (!split) throw ShapeMismatch("Eq-E second premise is not an equality");
  require_same_context(dmaj, deq, "Eq-E");
  if (!alpha_equal(dmaj->conclusion().goal, Term::app(motive, split->lhs)))
    throw ShapeMismatch("Eq-E first premise must conclude P u");
  CheckSettings mode = inherit({dmaj, deq});
  Context ctx = dmaj->conclusion().context;
  Term goal = Term::app(motive, split->rhs);
  return Derivation::make(RuleId::EqE, {std::move(dmaj), std::move(deq)},
                          Instantiation::of_pred(motive),
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr funext(DerivPtr premise, const std::string& eigen) {
  auto split = match_eq(premise->conclusion().goal);
  if (!split) throw ShapeMismatch("FunExt premise is not an equality");
  const Term& lhs = split->lhs;
  const Term& rhs = split->rhs;
  if (!lhs.is_app() || !rhs.is_app() || !lhs.arg().is_var() ||
      !rhs.arg().is_var() || lhs.arg().var_name() != eigen ||
      rhs.arg().var_name() != eigen)
    throw ShapeMismatch("FunExt premise must conclude f x = g x");
  Term f = lhs.fun();
  Term g = rhs.fun();
  if (f.type() != g.type())
    throw ShapeMismatch("FunExt sides have different function types");
  Type vt = lhs.arg().type();
  std::set<std::string> avoid =
      context_free_names(premise->conclusion().context);
  avoid.merge(free_var_names(f));
  avoid.merge(free_var_names(g));
  if (avoid.count(eigen))
    throw ShapeMismatch("FunExt eigenvariable " + eigen + " is not fresh");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = eq(f, g);
  return Derivation::make(RuleId::FunExt, {std::move(premise)},
                          Instantiation::of_eigen(Eigen{eigen, vt}),
                          conclude(mode, std::move(ctx), std::move(goal)));
}

DerivPtr propext(DerivPtr premise) {
  auto split = match_and(premise->conclusion().goal);
  if (!split) throw ShapeMismatch("PropExt premise is not a biconditional");
  auto fwd = match_imp(split->lhs);
  auto bwd = match_imp(split->rhs);
  if (!fwd || !bwd || !alpha_equal(fwd->lhs, bwd->rhs) ||
      !alpha_equal(fwd->rhs, bwd->lhs))
    throw ShapeMismatch("PropExt premise is not a biconditional");
  CheckSettings mode = inherit({premise});
  Context ctx = premise->conclusion().context;
  Term goal = eq(fwd->lhs, fwd->rhs);
  return Derivation::make(RuleId::PropExt, {std::move(premise)}, {},
                          conclude(mode, std::move(ctx), std::move(goal)));
}

}  // namespace rules

namespace {

DerivPtr insert_rec(const DerivPtr& d, std::size_t pos,
                    const std::vector<Term>& extras,
                    const std::set<std::string>& fv_extras) {
  if (d->inst().eigen && fv_extras.count(d->inst().eigen->name)) {
    Term replacement = fresh_var(d->inst().eigen->type);
    DerivPtr renamed =
        substitute_derivation(d, d->inst().eigen->name, replacement);
    return insert_rec(renamed, pos, extras, fv_extras);
  }
  const Judgment& c = d->conclusion();
  if (pos > c.context.size())
    throw ContextMismatch("weakening position beyond context");
  std::vector<Term> ctx(c.context.begin(),
                        c.context.begin() + static_cast<long>(pos));
  ctx.insert(ctx.end(), extras.begin(), extras.end());
  ctx.insert(ctx.end(), c.context.begin() + static_cast<long>(pos),
             c.context.end());
  Instantiation inst = d->inst();
  if (inst.index && *inst.index >= pos) *inst.index += extras.size();
  std::vector<DerivPtr> premises;
  premises.reserve(d->premises().size());
  for (const DerivPtr& p : d->premises())
    premises.push_back(insert_rec(p, pos, extras, fv_extras));
  return Derivation::make(
      d->rule(), std::move(premises), std::move(inst),
      Judgment(c.flavor, c.flags, std::move(ctx), c.goal));
}

}  // namespace

DerivPtr insert_hyps(const DerivPtr& d, std::size_t pos,
                     const std::vector<Term>& extras) {
  if (extras.empty()) return d;
  for (const Term& f : extras)
    if (!is_formula(f))
      throw TypeError("weakening by non-formula of type " +
                      f.type().to_string());
  std::set<std::string> fv;
  for (const Term& f : extras) fv.merge(free_var_names(f));
  return insert_rec(d, pos, extras, fv);
}

DerivPtr weaken(const DerivPtr& d, const std::vector<Term>& extras) {
  return insert_hyps(d, 0, extras);
}

DerivPtr append_hyps(const DerivPtr& d, const std::vector<Term>& extras) {
  return insert_hyps(d, d->conclusion().context.size(), extras);
}

DerivPtr permute_front(const DerivPtr& d,
                       const std::vector<std::size_t>& perm) {
  const std::size_t k = perm.size();
  const Judgment& c = d->conclusion();
  if (k > c.context.size())
    throw ContextMismatch("permutation wider than context");
  std::vector<Term> ctx = c.context;
  for (std::size_t i = 0; i < k; ++i) ctx[perm[i]] = c.context[i];
  Instantiation inst = d->inst();
  if (inst.index && *inst.index < k) *inst.index = perm[*inst.index];
  std::vector<DerivPtr> premises;
  premises.reserve(d->premises().size());
  for (const DerivPtr& p : d->premises())
    premises.push_back(permute_front(p, perm));
  return Derivation::make(
      d->rule(), std::move(premises), std::move(inst),
      Judgment(c.flavor, c.flags, std::move(ctx), c.goal));
}

DerivPtr substitute_derivation(const DerivPtr& d, const std::string& x,
                               const Term& replacement) {
  const Judgment& c = d->conclusion();
  std::vector<Term> ctx;
  ctx.reserve(c.context.size());
  for (const Term& f : c.context) ctx.push_back(substitute(f, x, replacement));
  Term goal = substitute(c.goal, x, replacement);
  Instantiation inst = d->inst();
  if (inst.pred) inst.pred = substitute(*inst.pred, x, replacement);
  if (inst.arg) inst.arg = substitute(*inst.arg, x, replacement);
  if (inst.eigen && inst.eigen->name == x) {
    if (!replacement.is_var())
      throw ProofError("an eigenvariable can only be renamed to a variable");
    inst.eigen->name = replacement.var_name();
  }
  std::vector<DerivPtr> premises;
  premises.reserve(d->premises().size());
  for (const DerivPtr& p : d->premises())
    premises.push_back(substitute_derivation(p, x, replacement));
  return Derivation::make(
      d->rule(), std::move(premises), std::move(inst),
      Judgment(c.flavor, c.flags, std::move(ctx), std::move(goal)));
}

DerivPtr retag(const DerivPtr& d, Flavor flavor, ExtFlags flags) {
  const Judgment& c = d->conclusion();
  std::vector<DerivPtr> premises;
  premises.reserve(d->premises().size());
  for (const DerivPtr& p : d->premises())
    premises.push_back(retag(p, flavor, flags));
  return Derivation::make(d->rule(), std::move(premises), d->inst(),
                          Judgment(flavor, flags, c.context, c.goal));
}

}  // namespace hol
