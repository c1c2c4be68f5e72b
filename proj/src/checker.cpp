#include "hol/checker.hpp"

#include "hol/kernel.hpp"

namespace hol {

namespace {

struct Rejection {
  Reason reason;
  std::string detail;
};

using Ctx = std::vector<Term>;

std::optional<Rejection> admitted(RuleId rule, const CheckSettings& s) {
  switch (rule) {
    case RuleId::PEM:
      if (s.flavor != Flavor::Classical)
        return Rejection{Reason::RuleNotAdmitted, "PEM-not-admitted"};
      return std::nullopt;
    case RuleId::EqI:
    case RuleId::EqE:
      if (!s.flags.eq)
        return Rejection{Reason::RuleNotAdmitted,
                         std::string(rule_name(rule)) + "-not-admitted"};
      return std::nullopt;
    case RuleId::FunExt:
      if (!s.flags.funext)
        return Rejection{Reason::RuleNotAdmitted, "FunExt-not-admitted"};
      return std::nullopt;
    case RuleId::PropExt:
      if (!s.flags.propext)
        return Rejection{Reason::RuleNotAdmitted, "PropExt-not-admitted"};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::size_t expected_premises(RuleId rule) {
  switch (rule) {
    case RuleId::TopI:
    case RuleId::Ax:
    case RuleId::PEM:
    case RuleId::EqI:
      return 0;
    case RuleId::ImpE:
    case RuleId::AndI:
    case RuleId::NotE:
    case RuleId::ExE:
    case RuleId::EqE:
      return 2;
    case RuleId::OrE:
      return 3;
    default:
      return 1;
  }
}

bool same_ctx(const Ctx& a, const Ctx& b) { return context_alpha_equal(a, b); }

bool extends_ctx(const Ctx& premise, const Ctx& base, const Term& extra) {
  if (premise.size() != base.size() + 1) return false;
  if (!alpha_equal(premise.back(), extra)) return false;
  for (std::size_t i = 0; i < base.size(); ++i)
    if (!alpha_equal(premise[i], base[i])) return false;
  return true;
}

std::set<std::string> free_names_of(const Ctx& ctx) {
  std::set<std::string> out;
  for (const Term& f : ctx) out.merge(free_var_names(f));
  return out;
}

#define REJECT(r, msg) return Rejection{(r), (msg)}

// Verifies one node against its rule, premises assumed already checked.
std::optional<Rejection> check_node(const Derivation& d,
                                    const CheckSettings& s) {
  if (auto bad = admitted(d.rule(), s)) return bad;
  if (d.premises().size() != expected_premises(d.rule()))
    REJECT(Reason::PremiseCount,
           std::string(rule_name(d.rule())) + " premise count");

  const Judgment& c = d.conclusion();
  const Ctx& ctx = c.context;
  auto premise = [&](std::size_t i) -> const Judgment& {
    return d.premises()[i]->conclusion();
  };

  switch (d.rule()) {
    case RuleId::ImpI: {
      auto split = match_imp(c.goal);
      if (!split) REJECT(Reason::BadConclusion, "Imp-I goal not A => B");
      if (!extends_ctx(premise(0).context, ctx, split->lhs))
        REJECT(Reason::ContextMismatch, "Imp-I premise context");
      if (!alpha_equal(premise(0).goal, split->rhs))
        REJECT(Reason::PremiseMismatch, "Imp-I premise goal");
      return std::nullopt;
    }
    case RuleId::ImpE: {
      auto split = match_imp(premise(0).goal);
      if (!split) REJECT(Reason::PremiseMismatch, "Imp-E major premise");
      if (!same_ctx(premise(0).context, ctx) ||
          !same_ctx(premise(1).context, ctx))
        REJECT(Reason::ContextMismatch, "Imp-E premise contexts");
      if (!alpha_equal(premise(1).goal, split->lhs))
        REJECT(Reason::PremiseMismatch, "Imp-E argument premise");
      if (!alpha_equal(c.goal, split->rhs))
        REJECT(Reason::BadConclusion, "Imp-E conclusion");
      return std::nullopt;
    }
    case RuleId::AndI: {
      auto split = match_and(c.goal);
      if (!split) REJECT(Reason::BadConclusion, "And-I goal not A /\\ B");
      if (!same_ctx(premise(0).context, ctx) ||
          !same_ctx(premise(1).context, ctx))
        REJECT(Reason::ContextMismatch, "And-I premise contexts");
      if (!alpha_equal(premise(0).goal, split->lhs) ||
          !alpha_equal(premise(1).goal, split->rhs))
        REJECT(Reason::PremiseMismatch, "And-I premise goals");
      return std::nullopt;
    }
    case RuleId::AndEL:
    case RuleId::AndER: {
      auto split = match_and(premise(0).goal);
      if (!split) REJECT(Reason::PremiseMismatch, "And-E premise");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "And-E premise context");
      const Term& kept = d.rule() == RuleId::AndEL ? split->lhs : split->rhs;
      if (!alpha_equal(c.goal, kept))
        REJECT(Reason::BadConclusion, "And-E conclusion");
      return std::nullopt;
    }
    case RuleId::OrIL:
    case RuleId::OrIR: {
      auto split = match_or(c.goal);
      if (!split) REJECT(Reason::BadConclusion, "Or-I goal not A \\/ B");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Or-I premise context");
      const Term& shown = d.rule() == RuleId::OrIL ? split->lhs : split->rhs;
      if (!alpha_equal(premise(0).goal, shown))
        REJECT(Reason::PremiseMismatch, "Or-I premise goal");
      return std::nullopt;
    }
    case RuleId::OrE: {
      auto split = match_or(premise(0).goal);
      if (!split) REJECT(Reason::PremiseMismatch, "Or-E major premise");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Or-E major premise context");
      if (!extends_ctx(premise(1).context, ctx, split->lhs) ||
          !extends_ctx(premise(2).context, ctx, split->rhs))
        REJECT(Reason::ContextMismatch, "Or-E branch contexts");
      if (!alpha_equal(premise(1).goal, c.goal) ||
          !alpha_equal(premise(2).goal, c.goal))
        REJECT(Reason::PremiseMismatch, "Or-E branch goals");
      return std::nullopt;
    }
    case RuleId::NotI: {
      auto body = match_not(c.goal);
      if (!body) REJECT(Reason::BadConclusion, "Not-I goal not ~A");
      if (!extends_ctx(premise(0).context, ctx, *body))
        REJECT(Reason::ContextMismatch, "Not-I premise context");
      if (!premise(0).goal.is_const(ConstKind::Bot))
        REJECT(Reason::PremiseMismatch, "Not-I premise must conclude bot");
      return std::nullopt;
    }
    case RuleId::NotE: {
      auto body = match_not(premise(0).goal);
      if (!body) REJECT(Reason::PremiseMismatch, "Not-E major premise");
      if (!same_ctx(premise(0).context, ctx) ||
          !same_ctx(premise(1).context, ctx))
        REJECT(Reason::ContextMismatch, "Not-E premise contexts");
      if (!alpha_equal(premise(1).goal, *body))
        REJECT(Reason::PremiseMismatch, "Not-E argument premise");
      if (!c.goal.is_const(ConstKind::Bot))
        REJECT(Reason::BadConclusion, "Not-E must conclude bot");
      return std::nullopt;
    }
    case RuleId::BotE: {
      if (!premise(0).goal.is_const(ConstKind::Bot))
        REJECT(Reason::PremiseMismatch, "Bot-E premise must conclude bot");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Bot-E premise context");
      return std::nullopt;
    }
    case RuleId::TopI: {
      if (!c.goal.is_const(ConstKind::Top))
        REJECT(Reason::BadConclusion, "Top-I must conclude top");
      return std::nullopt;
    }
    case RuleId::AllI: {
      if (!d.inst().eigen)
        REJECT(Reason::MissingInstantiation, "All-I eigenvariable");
      const Eigen& x = *d.inst().eigen;
      auto pred = match_forall(c.goal);
      if (!pred) REJECT(Reason::BadConclusion, "All-I goal not a universal");
      const Type& idx = c.goal.fun().as_const().index();
      if (x.type != idx)
        REJECT(Reason::IllTypedInstantiation, "All-I eigenvariable type");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "All-I premise context");
      Term expected = Term::app(*pred, Term::var(x.name, x.type));
      if (!alpha_equal(premise(0).goal, expected))
        REJECT(Reason::PremiseMismatch, "All-I premise must conclude P x");
      std::set<std::string> avoid = free_names_of(ctx);
      avoid.merge(free_var_names(*pred));
      if (avoid.count(x.name))
        REJECT(Reason::EigenvariableNotFresh, "All-I eigenvariable " + x.name);
      return std::nullopt;
    }
    case RuleId::AllE: {
      if (!d.inst().pred || !d.inst().arg)
        REJECT(Reason::MissingInstantiation, "All-E predicate and term");
      const Term& pred = *d.inst().pred;
      const Term& arg = *d.inst().arg;
      auto p = match_forall(premise(0).goal);
      if (!p) REJECT(Reason::PremiseMismatch, "All-E premise not a universal");
      if (!alpha_equal(*p, pred))
        REJECT(Reason::PremiseMismatch, "All-E predicate vs premise");
      const Type& idx = premise(0).goal.fun().as_const().index();
      if (!pred.type().is_arrow() || pred.type().domain() != idx ||
          arg.type() != idx)
        REJECT(Reason::IllTypedInstantiation, "All-E instantiation types");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "All-E premise context");
      if (!alpha_equal(c.goal, Term::app(pred, arg)))
        REJECT(Reason::BadConclusion, "All-E conclusion must be P t");
      return std::nullopt;
    }
    case RuleId::ExI: {
      if (!d.inst().pred || !d.inst().arg)
        REJECT(Reason::MissingInstantiation, "Ex-I predicate and witness");
      const Term& pred = *d.inst().pred;
      const Term& witness = *d.inst().arg;
      auto p = match_exists(c.goal);
      if (!p) REJECT(Reason::BadConclusion, "Ex-I goal not an existential");
      if (!alpha_equal(*p, pred))
        REJECT(Reason::BadConclusion, "Ex-I predicate vs conclusion");
      const Type& idx = c.goal.fun().as_const().index();
      if (!pred.type().is_arrow() || pred.type().domain() != idx ||
          witness.type() != idx)
        REJECT(Reason::IllTypedInstantiation, "Ex-I instantiation types");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Ex-I premise context");
      if (!alpha_equal(premise(0).goal, Term::app(pred, witness)))
        REJECT(Reason::PremiseMismatch, "Ex-I premise must conclude P t");
      return std::nullopt;
    }
    case RuleId::ExE: {
      if (!d.inst().eigen)
        REJECT(Reason::MissingInstantiation, "Ex-E eigenvariable");
      const Eigen& x = *d.inst().eigen;
      auto p = match_exists(premise(0).goal);
      if (!p) REJECT(Reason::PremiseMismatch, "Ex-E premise not an existential");
      const Type& idx = premise(0).goal.fun().as_const().index();
      if (x.type != idx)
        REJECT(Reason::IllTypedInstantiation, "Ex-E eigenvariable type");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Ex-E major premise context");
      Term hyp = Term::app(*p, Term::var(x.name, x.type));
      if (!extends_ctx(premise(1).context, ctx, hyp))
        REJECT(Reason::ContextMismatch, "Ex-E minor premise context");
      if (!alpha_equal(premise(1).goal, c.goal))
        REJECT(Reason::PremiseMismatch, "Ex-E minor premise goal");
      std::set<std::string> avoid = free_names_of(ctx);
      avoid.merge(free_var_names(*p));
      avoid.merge(free_var_names(c.goal));
      if (avoid.count(x.name))
        REJECT(Reason::EigenvariableNotFresh, "Ex-E eigenvariable " + x.name);
      return std::nullopt;
    }
    case RuleId::Ax: {
      if (!d.inst().index) REJECT(Reason::MissingInstantiation, "Ax index");
      std::size_t i = *d.inst().index;
      if (i >= ctx.size()) REJECT(Reason::AxOutOfRange, "Ax index");
      if (!alpha_equal(ctx[i], c.goal))
        REJECT(Reason::AxMismatch, "Ax formula vs context entry");
      return std::nullopt;
    }
    case RuleId::Conv: {
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "Conv premise context");
      if (!alpha_beta_equiv(premise(0).goal, c.goal))
        REJECT(Reason::NotBetaEquivalent, "Conv formulas not beta-equivalent");
      return std::nullopt;
    }
    case RuleId::PEM: {
      auto split = match_or(c.goal);
      if (!split) REJECT(Reason::BadConclusion, "PEM goal not A \\/ ~A");
      auto negand = match_not(split->rhs);
      if (!negand || !alpha_equal(split->lhs, *negand))
        REJECT(Reason::BadConclusion, "PEM goal not A \\/ ~A");
      return std::nullopt;
    }
    case RuleId::EqI: {
      auto split = match_eq(c.goal);
      if (!split) REJECT(Reason::BadConclusion, "Eq-I goal not u = u");
      if (!alpha_equal(split->lhs, split->rhs))
        REJECT(Reason::BadConclusion, "Eq-I sides differ");
      return std::nullopt;
    }
    case RuleId::EqE: {
      if (!d.inst().pred) REJECT(Reason::MissingInstantiation, "Eq-E motive");
      const Term& motive = *d.inst().pred;
      auto split = match_eq(premise(1).goal);
      if (!split) REJECT(Reason::PremiseMismatch, "Eq-E premise not u = v");
      const Type& idx = premise(1).goal.fun().fun().as_const().index();
      if (!motive.type().is_arrow() || motive.type().domain() != idx ||
          !motive.type().codomain().is_omicron())
        REJECT(Reason::IllTypedInstantiation, "Eq-E motive type");
      if (!same_ctx(premise(0).context, ctx) ||
          !same_ctx(premise(1).context, ctx))
        REJECT(Reason::ContextMismatch, "Eq-E premise contexts");
      if (!alpha_equal(premise(0).goal, Term::app(motive, split->lhs)))
        REJECT(Reason::PremiseMismatch, "Eq-E first premise must be P u");
      if (!alpha_equal(c.goal, Term::app(motive, split->rhs)))
        REJECT(Reason::BadConclusion, "Eq-E conclusion must be P v");
      return std::nullopt;
    }
    case RuleId::FunExt: {
      if (!d.inst().eigen)
        REJECT(Reason::MissingInstantiation, "FunExt eigenvariable");
      const Eigen& x = *d.inst().eigen;
      auto cs = match_eq(c.goal);
      if (!cs) REJECT(Reason::BadConclusion, "FunExt goal not f = g");
      const Term& f = cs->lhs;
      const Term& g = cs->rhs;
      if (!f.type().is_arrow())
        REJECT(Reason::BadConclusion, "FunExt goal not at a function type");
      if (x.type != f.type().domain())
        REJECT(Reason::IllTypedInstantiation, "FunExt eigenvariable type");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "FunExt premise context");
      Term xv = Term::var(x.name, x.type);
      Term expected = eq(Term::app(f, xv), Term::app(g, xv));
      if (!alpha_equal(premise(0).goal, expected))
        REJECT(Reason::PremiseMismatch, "FunExt premise must be f x = g x");
      std::set<std::string> avoid = free_names_of(ctx);
      avoid.merge(free_var_names(f));
      avoid.merge(free_var_names(g));
      if (avoid.count(x.name))
        REJECT(Reason::EigenvariableNotFresh,
               "FunExt eigenvariable " + x.name);
      return std::nullopt;
    }
    case RuleId::PropExt: {
      auto cs = match_eq(c.goal);
      if (!cs) REJECT(Reason::BadConclusion, "PropExt goal not A = B");
      if (!cs->lhs.type().is_omicron())
        REJECT(Reason::BadConclusion, "PropExt equality not at type o");
      if (!same_ctx(premise(0).context, ctx))
        REJECT(Reason::ContextMismatch, "PropExt premise context");
      if (!alpha_equal(premise(0).goal, iff(cs->lhs, cs->rhs)))
        REJECT(Reason::PremiseMismatch, "PropExt premise must be A <=> B");
      return std::nullopt;
    }
  }
  REJECT(Reason::BadConclusion, "unknown rule");
}

#undef REJECT

std::optional<CheckResult> check_rec(const Derivation& d,
                                     const CheckSettings& s,
                                     std::vector<std::size_t>& path) {
  if (auto bad = check_node(d, s))
    return CheckResult::reject(path, bad->reason, std::move(bad->detail));
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    path.push_back(i);
    if (auto r = check_rec(*d.premises()[i], s, path)) return r;
    path.pop_back();
  }
  return std::nullopt;
}

}  // namespace

const char* reason_name(Reason r) {
  switch (r) {
    case Reason::None: return "none";
    case Reason::RuleNotAdmitted: return "rule-not-admitted";
    case Reason::PremiseCount: return "premise-count";
    case Reason::BadConclusion: return "bad-conclusion";
    case Reason::PremiseMismatch: return "premise-mismatch";
    case Reason::ContextMismatch: return "context-mismatch";
    case Reason::AxOutOfRange: return "ax-out-of-range";
    case Reason::AxMismatch: return "ax-mismatch";
    case Reason::EigenvariableNotFresh: return "eigenvariable-not-fresh";
    case Reason::NotBetaEquivalent: return "not-beta-equivalent";
    case Reason::IllTypedInstantiation: return "ill-typed-instantiation";
    case Reason::MissingInstantiation: return "missing-instantiation";
  }
  return "unknown";
}

std::string CheckResult::describe() const {
  if (ok) return "accepted";
  std::string where = "[";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) where += ".";
    where += std::to_string(path[i]);
  }
  where += "]";
  return "rejected at " + where + " (" + reason_name(reason) + "): " + detail;
}

CheckResult check(const Derivation& d, const CheckSettings& settings) {
  std::vector<std::size_t> path;
  if (auto r = check_rec(d, settings, path)) return *r;
  return CheckResult::accept();
}

CheckResult check(const DerivPtr& d, const CheckSettings& settings) {
  return check(*d, settings);
}

CheckResult check(const DerivPtr& d) {
  return check(*d, d->conclusion().settings());
}

}  // namespace hol
