#ifndef HOL_DERIVATION_HPP
#define HOL_DERIVATION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hol/judgment.hpp"

namespace hol {

// Rule names of the two natural-deduction figures (core rules and
// equality rules), plus the axiom, conversion and excluded-middle rules.
enum class RuleId : unsigned char {
  ImpI, ImpE, AndI, AndEL, AndER, OrIL, OrIR, OrE, NotI, NotE, BotE, TopI,
  AllI, AllE, ExI, ExE, Ax, Conv, PEM, EqI, EqE, FunExt, PropExt
};

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

// Eigenvariable payload of All-I, Ex-E and FunExt.
struct Eigen {
  std::string name;
  Type type;
};

// Rule-specific instantiation data. Only the fields a rule needs are set:
//   Ax            index
//   All-E         pred (the predicate P), arg (the instantiating term t)
//   Ex-I          pred, arg (the witness)
//   Eq-E          pred (the motive P)
//   All-I, Ex-E, FunExt   eigen
struct Instantiation {
  std::optional<std::size_t> index;
  std::optional<Term> pred;
  std::optional<Term> arg;
  std::optional<Eigen> eigen;

  static Instantiation of_index(std::size_t i) {
    Instantiation inst;
    inst.index = i;
    return inst;
  }
  static Instantiation of_eigen(Eigen e) {
    Instantiation inst;
    inst.eigen = std::move(e);
    return inst;
  }
  static Instantiation of_pred(Term p) {
    Instantiation inst;
    inst.pred = std::move(p);
    return inst;
  }
  static Instantiation of_pred_arg(Term p, Term a) {
    Instantiation inst;
    inst.pred = std::move(p);
    inst.arg = std::move(a);
    return inst;
  }
};

class Derivation;
using DerivPtr = std::shared_ptr<const Derivation>;

// One node of a derivation tree. Nodes are immutable and shared freely.
// The constructor validates only that the conclusion is a well-formed
// judgment; whether the node instantiates its rule correctly is the
// checker's business.
class Derivation {
 public:
  Derivation(RuleId rule, std::vector<DerivPtr> premises, Instantiation inst,
             Judgment conclusion);

  RuleId rule() const { return rule_; }
  const std::vector<DerivPtr>& premises() const { return premises_; }
  const Instantiation& inst() const { return inst_; }
  const Judgment& conclusion() const { return conclusion_; }

  std::size_t node_count() const;
  bool uses_rule(RuleId r) const;

  static DerivPtr make(RuleId rule, std::vector<DerivPtr> premises,
                       Instantiation inst, Judgment conclusion);

 private:
  RuleId rule_;
  std::vector<DerivPtr> premises_;
  Instantiation inst_;
  Judgment conclusion_;
};

// Forward rule application. Each builder computes the node's conclusion
// from the premises and payload and throws ShapeMismatch/ContextMismatch
// when the rule does not apply; anything a builder returns passes the
// checker. Leaf rules take the target context plus the logic tag; inner
// rules inherit the tag from their premises (classical wins, flags
// united).
namespace rules {

using Context = std::vector<Term>;

DerivPtr ax(const Context& ctx, std::size_t index, CheckSettings mode);
// Ax on the last hypothesis.
DerivPtr assume(const Context& ctx, CheckSettings mode);
DerivPtr top_i(const Context& ctx, CheckSettings mode);
DerivPtr pem(const Context& ctx, const Term& a, CheckSettings mode);
DerivPtr eq_i(const Context& ctx, const Term& u, CheckSettings mode);

DerivPtr imp_i(DerivPtr premise);
DerivPtr imp_e(DerivPtr dimp, DerivPtr darg);
DerivPtr and_i(DerivPtr left, DerivPtr right);
DerivPtr and_el(DerivPtr premise);
DerivPtr and_er(DerivPtr premise);
DerivPtr or_il(DerivPtr premise, const Term& right);
DerivPtr or_ir(const Term& left, DerivPtr premise);
DerivPtr or_e(DerivPtr ddisj, DerivPtr dleft, DerivPtr dright);
DerivPtr not_i(DerivPtr premise);
DerivPtr not_e(DerivPtr dneg, DerivPtr darg);
DerivPtr bot_e(DerivPtr premise, const Term& goal);
// Premise concludes App(P, Var x); conclusion is forall applied to P.
DerivPtr all_i(DerivPtr premise, const std::string& eigen);
DerivPtr all_e(DerivPtr premise, const Term& pred, const Term& arg);
DerivPtr ex_i(DerivPtr premise, const Term& pred, const Term& witness);
DerivPtr ex_e(DerivPtr dexists, const Eigen& eigen, DerivPtr dbody);
DerivPtr conv(DerivPtr premise, const Term& target);
DerivPtr eq_e(DerivPtr dmaj, DerivPtr deq, const Term& motive);
// Premise concludes f x = g x for the eigenvariable x.
DerivPtr funext(DerivPtr premise, const std::string& eigen);
DerivPtr propext(DerivPtr premise);

}  // namespace rules

// Inserts extra hypotheses at position pos (counted in the root context)
// of every judgment of d, shifting Ax indices and renaming eigenvariables
// that clash with the free variables of the extras. Pre: d is locally
// well-formed (contexts of inner nodes extend the root context on the
// right, as in any derivation that checks).
DerivPtr insert_hyps(const DerivPtr& d, std::size_t pos,
                     const std::vector<Term>& extras);

// Admissible weakening: extra hypotheses prepended to every context.
DerivPtr weaken(const DerivPtr& d, const std::vector<Term>& extras);

// Weakening that puts the extras right after the root context, before any
// local hypotheses of inner nodes; Ax indices into the root context stay.
DerivPtr append_hyps(const DerivPtr& d, const std::vector<Term>& extras);

// Applies a permutation to the first perm.size() entries of every context
// (exchange). perm maps old positions to new ones and must be a bijection
// on 0..k-1 with k <= root context size.
DerivPtr permute_front(const DerivPtr& d, const std::vector<std::size_t>& perm);

// Capture-avoiding substitution of a variable through a whole derivation:
// every judgment formula, payload term, and matching eigenvariable name.
// Used for eigenvariable renaming; replacement must be a fresh variable
// when eigenvariables are in play.
DerivPtr substitute_derivation(const DerivPtr& d, const std::string& x,
                               const Term& replacement);

// Rebuilds d with every judgment tagged with the given logic.
DerivPtr retag(const DerivPtr& d, Flavor flavor, ExtFlags flags);

}  // namespace hol

#endif
