#ifndef HOL_TRANSFORM_HPP
#define HOL_TRANSFORM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hol/derivation.hpp"

namespace hol {

// Weak functional extensionality at one arrow type:
//   forall f g. (forall x. ~~(f x = g x)) => ~~(f = g)
struct WeakFunExt {
  Type domain;
  Type codomain;
  Term formula() const;
};

// Double-negation shift specialized to one domain:
//   forall p : domain -> o. (forall x. ~~(p x)) => ~~(forall x. p x)
struct DnsInstance {
  Type domain;
  Term formula() const;
};

// Double-negation elimination on equality at one type:
//   forall x y. ~~(x = y) => x = y
struct DneEqInstance {
  Type at;
  Term formula() const;
};

// Soundness: from a classical derivation of G |- A (any flag set), an
// intuitionistic derivation of G_Ku |- ~~A_Ku with the same flags. When
// the input uses FunExt, the output context is prefixed with one
// WeakFunExt hypothesis per arrow type FunExt was applied at, in first-use
// order. Throws InputDoesNotCheck if the input fails the checker.
DerivPtr soundness_translate(const DerivPtr& d);

// Same conclusion but with the fully translated context G^Ku (each entry
// doubly negated) instead of G_Ku.
DerivPtr soundness_translate_outer(const DerivPtr& d);

// The arrow types of the FunExt nodes of d, in first-use order, deduped.
std::vector<WeakFunExt> funext_instances(const DerivPtr& d);

// [DnsInstance(domain)] |- WeakFunExt(domain, codomain), intuitionistic
// with flags {eq, funext}; uses FunExt and never PEM.
DerivPtr dns_implies_weak_funext(Type domain, Type codomain);

// [DneEqInstance(o)] |- ~~p => p, intuitionistic with flags {eq, propext}.
DerivPtr dne_eq_collapse(const Formula& p);

// |- t_Ku = t, classical with flags {eq, funext, propext}. Requires a
// closed term; the induction generalizes internally.
DerivPtr term_equality_derivation(const Term& t);

// |- A^Ku <=> A, classical with flags {eq, funext, propext}; a is a
// closed formula.
DerivPtr characterization_derivation(const Formula& a);

// Supplies, for a beta-normal head-atomic formula (head a variable or a
// constant), a classical derivation of |- (t u1...un)_Ku <=> t u1...un
// from the empty context; nullopt to refuse.
using KurodaEquivOracle =
    std::function<std::optional<DerivPtr>(const Term& head_atomic)>;

// |- A^Ku <=> A via the Kuroda-equivalence route: handled directly when
// the beta-normal form of a is a variable or constant, otherwise the
// oracle must supply the head-atomic equivalence. Throws OracleRefused /
// OracleOutputInvalid.
DerivPtr characterization_from_oracle(const Formula& a,
                                      const KurodaEquivOracle& oracle);

// Reverse translation: from an intuitionistic derivation of
// G_Ku |- A^Ku (optionally prefixed by WeakFunExt hypotheses), a
// classical derivation of G |- A with flags {eq, funext, propext}.
DerivPtr reverse_translate(const std::vector<Term>& gamma, const Term& a,
                           const DerivPtr& di);

// |- WeakFunExt(domain, codomain) classically with flags {eq, funext}.
DerivPtr weak_funext_classical(Type domain, Type codomain);

// The fixed judgment showing that reverse translation fails in general:
// gamma and goal are not classically derivable (documented, not
// mechanized), yet `derivation` proves gamma_Ku |- goal^Ku
// intuitionistically with no extensionality rules.
struct ReverseCounterexample {
  std::vector<Term> gamma;
  Term goal;
  DerivPtr derivation;
  std::string note;
};
ReverseCounterexample reverse_counterexample();

// The P A instance showing the characterization property can fail:
// no derivation exists, so only the statement and its translation are
// returned.
struct CharacterizationCounterexample {
  Term predicate;
  Term formula;
  Term translation;
  std::string note;
};
CharacterizationCounterexample characterization_counterexample();

}  // namespace hol

#endif
